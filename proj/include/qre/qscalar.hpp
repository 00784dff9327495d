#pragma once

#include <map>
#include <optional>
#include <string>

#include "qre/params.hpp"
#include "qre/poly.hpp"

namespace qre {

// Exact rational function in the declared commuting parameters. Stored as a
// reduced fraction num/den of integer polynomials with den's leading
// coefficient positive, so equality is structural. Laurent expressions
// (negative powers of q) live in the denominator.
class QScalar {
  public:
    QScalar() = default; // unusable until bound to a parameter set

    static QScalar zero(const ParamSetPtr& ps) { return from_int(ps, 0); }
    static QScalar one(const ParamSetPtr& ps) { return from_int(ps, 1); }
    static QScalar from_int(const ParamSetPtr& ps, long v);
    static QScalar from_rat(const ParamSetPtr& ps, const Rat& v);
    static QScalar param(const ParamSetPtr& ps, const std::string& name, int32_t exp = 1);
    static QScalar q(const ParamSetPtr& ps, int32_t exp = 1) { return param(ps, "q", exp); }
    static QScalar from_fraction(const ParamSetPtr& ps, Poly num, Poly den);

    const ParamSetPtr& params() const { return ps_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }

    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar operator-() const;
    QScalar inv() const;
    QScalar pow(long e) const;
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        require_same_params(a.ps_, b.ps_);
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // Value at q = 1 with the remaining parameters bound to rationals.
    // Throws PoleAtOne if the (already reduced) denominator vanishes there.
    Rat classical_limit(const std::map<std::string, Rat>& others = {}) const;

    // Full evaluation at a rational point (every parameter bound).
    Rat eval(const std::map<std::string, Rat>& values) const;

    // Replace one parameter by a scalar over a target parameter set.
    QScalar substitute(const std::string& name, const QScalar& value) const;

    // Exact square root, when *this is a perfect square in the field.
    std::optional<QScalar> try_sqrt() const;

    std::string str() const; // canonical "num" or "(num)/(den)"

  private:
    QScalar(ParamSetPtr ps, Poly num, Poly den)
        : ps_(std::move(ps)), num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    ParamSetPtr ps_;
    Poly num_, den_;
};

// n_q = (q^n - q^-n)/(q - q^-1), a Laurent polynomial in q
QScalar q_number(const ParamSetPtr& ps, long n);

std::string poly_str(const Poly& p, const ParamSet& ps);

} // namespace qre
