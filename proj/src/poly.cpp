#include "qre/poly.hpp"

#include <algorithm>
#include <map>

namespace qre {

namespace {
struct MonoDescLess {
    bool operator()(const Mono& a, const Mono& b) const { return b < a; }
};
} // namespace

void Poly::add_term(const Mono& m, const Int& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& mm) { return mm < t.first; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {m, c});
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_ && !is_zero() && !o.is_zero())
        throw ParamMismatch("polynomial variable-count mismatch");
    Poly r(std::max(nvars_, o.nvars_));
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Int s = terms_[i].second + o.terms_[j].second;
            if (s != 0) r.terms_.push_back({terms_[i].first, s});
            ++i, ++j;
        } else if (o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_ && !is_zero() && !o.is_zero())
        throw ParamMismatch("polynomial variable-count mismatch");
    Poly r(std::max(nvars_, o.nvars_));
    if (is_zero() || o.is_zero()) return r;
    std::map<Mono, Int, MonoDescLess> acc;
    for (auto& t1 : terms_)
        for (auto& t2 : o.terms_) {
            Mono m = t1.first * t2.first;
            auto [it, fresh] = acc.emplace(std::move(m), Int(0));
            it->second += t1.second * t2.second;
        }
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::operator*(const Int& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

Int Poly::content() const {
    Int g = 0;
    for (auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divide_content(const Int& c) const {
    if (c == 0) throw DivisionByZero("divide_content by zero");
    Poly r(nvars_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw Error("divide_content: not divisible");
        t.second = q;
    }
    return r;
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = *this;
    Poly quot(nvars_);
    while (!rem.is_zero()) {
        if (!d.lead_mono().divides(rem.lead_mono())) return std::nullopt;
        Int qc, qr;
        mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rem.lead_coeff().get_mpz_t(),
                    d.lead_coeff().get_mpz_t());
        if (qr != 0) return std::nullopt;
        Mono qm = rem.lead_mono().quotient(d.lead_mono());
        Poly t(nvars_);
        t.terms_.push_back({qm, qc});
        quot = quot + t;
        rem = rem - d * t;
    }
    return quot;
}

Poly Poly::divide_exact(const Poly& d) const {
    auto q = try_divide(d);
    if (!q) throw Error("divide_exact: not divisible");
    return *q;
}

Poly Poly::derivative(size_t var) const {
    Poly r(nvars_);
    for (auto& t : terms_) {
        if (t.first.e[var] == 0) continue;
        Mono m = t.first;
        Int c = t.second * Int(m.e[var]);
        m.e[var] -= 1;
        r.add_term(m, c);
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    Rat acc = 0;
    for (auto& t : terms_) {
        Rat v(t.second);
        for (size_t i = 0; i < nvars_; ++i) {
            if (t.first.e[i] == 0) continue;
            Rat p = point.at(i);
            Rat pw = 1;
            for (int32_t k = 0; k < t.first.e[i]; ++k) pw *= p;
            v *= pw;
        }
        acc += v;
    }
    acc.canonicalize();
    return acc;
}

std::optional<Poly> Poly::try_sqrt() const {
    if (is_zero()) return Poly(nvars_);
    const Mono& lm = lead_mono();
    for (auto e : lm.e)
        if (e % 2 != 0) return std::nullopt;
    if (lead_coeff() < 0) return std::nullopt;
    Int lc_rt;
    mpz_sqrt(lc_rt.get_mpz_t(), lead_coeff().get_mpz_t());
    if (lc_rt * lc_rt != lead_coeff()) return std::nullopt;
    Mono half(lm.e.size());
    for (size_t i = 0; i < lm.e.size(); ++i) half.e[i] = lm.e[i] / 2;

    Poly root(nvars_);
    root.add_term(half, lc_rt);
    Poly two_lead(nvars_);
    two_lead.add_term(half, 2 * lc_rt);

    Poly rem = *this - root * root;
    while (!rem.is_zero()) {
        if (!two_lead.lead_mono().divides(rem.lead_mono())) return std::nullopt;
        Int qc, qr;
        mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), rem.lead_coeff().get_mpz_t(),
                    two_lead.lead_coeff().get_mpz_t());
        if (qr != 0) return std::nullopt;
        Mono qm = rem.lead_mono().quotient(two_lead.lead_mono());
        if (half < qm || half == qm) return std::nullopt;
        Poly t(nvars_);
        t.add_term(qm, qc);
        rem = rem - two_lead * t - t * t;
        root = root + t;
    }
    return root;
}

namespace {

std::vector<Poly> to_recursive(const Poly& p, size_t var) {
    std::vector<Poly> coeffs(size_t(std::max<int32_t>(p.degree_in(var), 0)) + 1, Poly(p.nvars()));
    for (auto& t : p.terms()) {
        Mono m = t.first;
        int32_t d = m.e[var];
        m.e[var] = 0;
        coeffs[size_t(d)].add_term(m, t.second);
    }
    return coeffs;
}

Poly from_recursive(const std::vector<Poly>& coeffs, size_t var, size_t nvars) {
    Poly r(nvars);
    for (size_t d = 0; d < coeffs.size(); ++d)
        for (auto& t : coeffs[d].terms()) {
            Mono m = t.first;
            m.e[var] += int32_t(d);
            r.add_term(m, t.second);
        }
    return r;
}

int rec_degree(const std::vector<Poly>& c) {
    for (int i = int(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

Poly rec_content(const std::vector<Poly>& c, size_t nvars) {
    Poly g(nvars);
    for (auto& p : c) {
        if (p.is_zero()) continue;
        g = poly_gcd(g, p);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of A by B in the main variable (both nonzero)
std::vector<Poly> rec_prem(std::vector<Poly> a, const std::vector<Poly>& b, size_t) {
    int db = rec_degree(b);
    const Poly& lb = b[size_t(db)];
    int da = rec_degree(a);
    while (da >= db) {
        Poly la = a[size_t(da)];
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i)
            a[size_t(da - db + i)] = a[size_t(da - db + i)] - la * b[size_t(i)];
        da = rec_degree(a);
    }
    if (da < 0) return {};
    a.resize(size_t(da) + 1);
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    auto sign_fix = [](Poly p) {
        if (!p.is_zero() && p.lead_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return sign_fix(b);
    if (b.is_zero()) return sign_fix(a);
    size_t nv = std::max(a.nvars(), b.nvars());

    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    Poly pa = a.divide_content(ca);
    Poly pb = b.divide_content(cb);

    if (pa.is_constant() || pb.is_constant()) return Poly::constant(nv, cg);

    int var = -1;
    for (int v = int(nv) - 1; v >= 0; --v)
        if (pa.degree_in(size_t(v)) > 0 || pb.degree_in(size_t(v)) > 0) { var = v; break; }
    if (var < 0) return Poly::constant(nv, cg);

    auto ra = to_recursive(pa, size_t(var));
    auto rb = to_recursive(pb, size_t(var));
    Poly conta = rec_content(ra, nv);
    Poly contb = rec_content(rb, nv);
    Poly contg = poly_gcd(conta, contb);
    for (auto& c : ra) c = c.divide_exact(conta);
    for (auto& c : rb) c = c.divide_exact(contb);

    std::vector<Poly>* A = &ra;
    std::vector<Poly>* B = &rb;
    if (rec_degree(*A) < rec_degree(*B)) std::swap(A, B);
    std::vector<Poly> R;
    Poly gpart(nv);
    while (true) {
        R = rec_prem(*A, *B, nv);
        if (R.empty()) { // B divides A in the fraction field: gcd is B
            gpart = from_recursive(*B, size_t(var), nv);
            break;
        }
        if (rec_degree(R) == 0) { // coprime in the main variable
            gpart = Poly::constant(nv, 1);
            break;
        }
        Poly ct = rec_content(R, nv);
        for (auto& c : R) c = c.divide_exact(ct);
        *A = std::move(*B);
        *B = std::move(R);
    }
    if (!gpart.is_constant()) {
        Int gc = gpart.content();
        gpart = gpart.divide_content(gc);
    } else if (!gpart.is_zero()) {
        gpart = Poly::constant(nv, 1);
    }
    Poly result = gpart * contg * cg;
    return sign_fix(result);
}

} // namespace qre
