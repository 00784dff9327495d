#include "qre/classical.hpp"

#include "qre/errors.hpp"

namespace qre::classical {

void SphereFn::add(const std::array<int, 3>& m, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = terms.emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms.erase(it);
    }
}

SphereFn SphereFn::operator+(const SphereFn& o) const {
    SphereFn r = *this;
    for (auto& [m, v] : o.terms) r.add(m, v);
    return r;
}
SphereFn SphereFn::operator-(const SphereFn& o) const {
    SphereFn r = *this;
    for (auto& [m, v] : o.terms) r.add(m, -v);
    return r;
}
SphereFn SphereFn::operator-() const {
    SphereFn r;
    for (auto& [m, v] : terms) r.terms.emplace(m, -v);
    return r;
}

SphereFn fn_const(const Rat& v) {
    SphereFn f;
    f.add({0, 0, 0}, v);
    return f;
}

SphereFn fn_gen(int which) {
    SphereFn f;
    std::array<int, 3> m{0, 0, 0};
    m[size_t(which)] = 1;
    f.add(m, Rat(1));
    return f;
}

SphereFn fn_mul(const SphereFn& x, const SphereFn& y, const Rat& c0) {
    SphereFn raw;
    for (auto& [m1, v1] : x.terms)
        for (auto& [m2, v2] : y.terms)
            raw.add({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, v1 * v2);
    // reduce a^2 -> -(b c) - c0
    SphereFn out;
    std::map<std::array<int, 3>, Rat> work = std::move(raw.terms);
    while (!work.empty()) {
        auto it = work.begin();
        auto [m, v] = *it;
        work.erase(it);
        if (v == 0) continue;
        if (m[0] >= 2) {
            std::array<int, 3> mbc{m[0] - 2, m[1] + 1, m[2] + 1};
            std::array<int, 3> mc{m[0] - 2, m[1], m[2]};
            auto push = [&](const std::array<int, 3>& mm, const Rat& vv) {
                auto [jt, fresh] = work.emplace(mm, vv);
                if (!fresh) {
                    jt->second += vv;
                    if (jt->second == 0) work.erase(jt);
                }
            };
            push(mbc, -v);
            push(mc, -v * c0);
        } else {
            out.add(m, v);
        }
    }
    return out;
}

std::vector<std::array<int, 3>> monomials_upto(int d) {
    std::vector<std::array<int, 3>> out;
    for (int total = 0; total <= d; ++total)
        for (int ea = 0; ea <= std::min(1, total); ++ea)
            for (int eb = 0; eb + ea <= total; ++eb)
                out.push_back({ea, eb, total - ea - eb});
    return out;
}

long filtration_dim(int d) { return long(monomials_upto(d).size()); }

FnMatrix classical_L() {
    FnMatrix L;
    L[0][0] = fn_gen(0);
    L[0][1] = fn_gen(1);
    L[1][0] = fn_gen(2);
    L[1][1] = -fn_gen(0);
    return L;
}

namespace {

// minimal exact row elimination over Q, columns ordered high degree first
struct RatEchelon {
    size_t width;
    std::vector<std::vector<Rat>> rows;
    std::vector<size_t> pivots;

    explicit RatEchelon(size_t w) : width(w) {}

    bool insert(std::vector<Rat> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat c = v[pivots[r]];
            if (c == 0) continue;
            for (size_t j = 0; j < width; ++j) v[j] -= c * rows[r][j];
        }
        size_t piv = width;
        for (size_t j = 0; j < width; ++j)
            if (v[j] != 0) { piv = j; break; }
        if (piv == width) return false;
        Rat inv = 1 / v[piv];
        for (size_t j = 0; j < width; ++j) v[j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat c = rows[r][piv];
            if (c == 0) continue;
            for (size_t j = 0; j < width; ++j) rows[r][j] -= c * v[j];
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

} // namespace

std::vector<long> module_quotient_dims(const Rat& c0, const Rat& nu, int level, int slack) {
    int top = level + slack;
    auto monos = monomials_upto(top);
    size_t dim = monos.size();
    std::map<std::array<int, 3>, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[monos[i]] = i;
    auto mono_degree = [&](size_t i) { return monos[i][0] + monos[i][1] + monos[i][2]; };

    // vector coordinate (component j, monomial i) -> column, high degree first
    auto col_of = [&](size_t j, size_t i) { return 2 * (dim - 1 - i) + j; };
    auto degree_of_col = [&](size_t col) { return mono_degree(dim - 1 - col / 2); };

    FnMatrix L = classical_L();
    RatEchelon ech(2 * dim);
    auto monos_low = monomials_upto(top - 1);
    for (size_t k = 0; k < 2; ++k)
        for (auto& m : monos_low) {
            SphereFn mono;
            mono.add(m, Rat(1));
            std::vector<Rat> vec(2 * dim, Rat(0));
            for (size_t j = 0; j < 2; ++j) {
                SphereFn entry = L[k][j];
                if (j == k) entry = entry - fn_const(nu);
                SphereFn prod = fn_mul(entry, mono, c0);
                for (auto& [mm, v] : prod.terms) vec[col_of(j, index.at(mm))] = v;
            }
            ech.insert(std::move(vec));
        }

    std::vector<long> dims;
    for (int d = 0; d <= level; ++d) {
        long free_dim = 2 * filtration_dim(d);
        long inside = 0;
        for (size_t r = 0; r < ech.rows.size(); ++r)
            if (degree_of_col(ech.pivots[r]) <= d) ++inside;
        dims.push_back(free_dim - inside);
    }
    return dims;
}

namespace {

using Mat4 = std::array<std::array<SphereFn, 4>, 4>;

Mat4 project_sym(const Mat4& m) {
    // P = (flip + id)/2 acting on pair indices (x, y) -> (y, x)
    auto flip = [](size_t idx) { return (idx % 2) * 2 + idx / 2; };
    Mat4 out;
    Rat quarter(1, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            SphereFn acc = m[i][j] + m[flip(i)][j] + m[i][flip(j)] + m[flip(i)][flip(j)];
            SphereFn scaled;
            for (auto& [mm, v] : acc.terms) scaled.add(mm, v * quarter);
            out[i][j] = scaled;
        }
    return out;
}

} // namespace

std::optional<Rat> leibniz_factor(const Rat& c0) {
    FnMatrix L = classical_L();
    Mat4 L1{}, L2{};
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c) {
                L1[a * 2 + b][c * 2 + b] = L1[a * 2 + b][c * 2 + b] + L[a][c];
                L2[b * 2 + a][b * 2 + c] = L2[b * 2 + a][b * 2 + c] + L[a][c];
            }
    Mat4 leib{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) leib[i][j] = L1[i][j] + L2[i][j];
    Mat4 ext = project_sym(L1);
    Mat4 leib_sym = project_sym(leib);
    (void)c0;

    std::optional<Rat> lambda;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            if (ext[i][j].is_zero() && leib_sym[i][j].is_zero()) continue;
            if (ext[i][j].is_zero() || leib_sym[i][j].is_zero()) return std::nullopt;
            Rat ratio = leib_sym[i][j].terms.begin()->second / ext[i][j].terms.begin()->second;
            SphereFn scaled;
            for (auto& [m, v] : ext[i][j].terms) scaled.add(m, v * ratio);
            if (!(scaled == leib_sym[i][j])) return std::nullopt;
            if (!lambda)
                lambda = ratio;
            else if (*lambda != ratio)
                return std::nullopt;
        }
    return lambda;
}

bool projector_rank_one(const Rat& c0, const Rat& nu1, const Rat& nu2) {
    // point on the sphere: a = 0, b = 1, c = -c0 gives -a^2 - bc = c0
    Rat a(0), b(1), c = -c0;
    std::array<std::array<Rat, 2>, 2> L{{{a, b}, {c, -a}}};
    if (nu1 == nu2) return false;
    std::array<std::array<Rat, 2>, 2> P;
    Rat den = nu2 - nu1;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Rat v = L[i][j];
            if (i == j) v -= nu1;
            P[i][j] = v / den;
        }
    // idempotency and trace 1
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            Rat acc(0);
            for (size_t k = 0; k < 2; ++k) acc += P[i][k] * P[k][j];
            if (acc != P[i][j]) return false;
        }
    return P[0][0] + P[1][1] == 1;
}

} // namespace qre::classical
