// placeholder; the CLI is assembled once the verification suites exist
int main() { return 0; }
