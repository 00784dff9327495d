#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "qre/errors.hpp"

namespace qre {

using Int = mpz_class;
using Rat = mpq_class;

// Exponent vector of a monomial; one slot per parameter. Exponents are
// nonnegative here: Laurent behaviour lives in the fraction layer.
struct Mono {
    std::vector<int32_t> e;

    explicit Mono(size_t nvars = 0) : e(nvars, 0) {}

    int64_t degree() const {
        int64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    // graded lexicographic: total degree first, then exponent vector
    // (first parameter most significant)
    friend bool operator<(const Mono& a, const Mono& b) {
        int64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }

    Mono operator*(const Mono& o) const {
        Mono r(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            int64_t s = int64_t(e[i]) + int64_t(o.e[i]);
            if (s > INT32_MAX || s < INT32_MIN) throw ExponentOverflow("monomial exponent overflow");
            r.e[i] = static_cast<int32_t>(s);
        }
        return r;
    }

    bool divides(const Mono& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    Mono quotient(const Mono& o) const { // *this / o, assumes divisibility
        Mono r(e.size());
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
};

// Sparse multivariate polynomial over Z with a fixed number of variables.
// Terms are kept sorted in descending graded-lex order with nonzero
// coefficients; this makes equality structural.
class Poly {
  public:
    using Term = std::pair<Mono, Int>;

    Poly() : nvars_(0) {}
    explicit Poly(size_t nvars) : nvars_(nvars) {}

    static Poly constant(size_t nvars, const Int& c) {
        Poly p(nvars);
        if (c != 0) p.terms_.push_back({Mono(nvars), c});
        return p;
    }
    static Poly variable(size_t nvars, size_t idx, int32_t exp = 1) {
        Poly p(nvars);
        Mono m(nvars);
        m.e[idx] = exp;
        p.terms_.push_back({m, Int(1)});
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].second == 1 && terms_[0].first.degree() == 0;
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
    Int constant_value() const { return terms_.empty() ? Int(0) : terms_[0].second; }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Mono& lead_mono() const { return terms_.front().first; }
    const Int& lead_coeff() const { return terms_.front().second; }
    int64_t total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
    int32_t degree_in(size_t var) const {
        int32_t d = -1;
        for (auto& t : terms_) d = std::max(d, t.first.e[var]);
        return d;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& c) const;
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // gcd of all integer coefficients (nonnegative; 0 for the zero polynomial)
    Int content() const;
    // exact division by an integer
    Poly divide_content(const Int& c) const;
    // exact polynomial division; throws if not divisible
    Poly divide_exact(const Poly& d) const;
    std::optional<Poly> try_divide(const Poly& d) const;

    // derivative w.r.t. a variable
    Poly derivative(size_t var) const;

    // full evaluation at a rational point
    Rat eval(const std::vector<Rat>& point) const;

    // exact square root, if *this is a perfect square
    std::optional<Poly> try_sqrt() const;

    void add_term(const Mono& m, const Int& c); // accumulate, keeps canonical form

  private:
    size_t nvars_;
    std::vector<Term> terms_; // descending grlex, nonzero coefficients
    friend Poly poly_gcd(const Poly&, const Poly&);
};

// gcd in Z[x1..xk], normalized with positive leading coefficient
Poly poly_gcd(const Poly& a, const Poly& b);

} // namespace qre
