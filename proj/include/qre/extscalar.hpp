#pragma once

#include "qre/qscalar.hpp"

namespace qre {

// Element u + v*nu of the quadratic extension defined by nu^2 = r over the
// QScalar field. Every element carries the discriminant so mismatched
// extensions cannot be mixed silently.
class ExtScalar {
  public:
    ExtScalar() = default;
    ExtScalar(QScalar u, QScalar v, QScalar r)
        : u_(std::move(u)), v_(std::move(v)), r_(std::move(r)) {}

    static ExtScalar embed(const QScalar& s, const QScalar& r) {
        return ExtScalar(s, QScalar::zero(s.params()), r);
    }
    static ExtScalar root(const QScalar& r) { // nu itself
        return ExtScalar(QScalar::zero(r.params()), QScalar::one(r.params()), r);
    }
    static ExtScalar zero_like(const ExtScalar& e) {
        return embed(QScalar::zero(e.u_.params()), e.r_);
    }

    const QScalar& base() const { return u_; }
    const QScalar& coeff() const { return v_; }
    const QScalar& disc() const { return r_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return u_.is_one() && v_.is_zero(); }
    bool in_base_field() const { return v_.is_zero(); }

    ExtScalar operator+(const ExtScalar& o) const {
        check(o);
        return ExtScalar(u_ + o.u_, v_ + o.v_, r_);
    }
    ExtScalar operator-(const ExtScalar& o) const {
        check(o);
        return ExtScalar(u_ - o.u_, v_ - o.v_, r_);
    }
    ExtScalar operator*(const ExtScalar& o) const {
        check(o);
        return ExtScalar(u_ * o.u_ + v_ * o.v_ * r_, u_ * o.v_ + v_ * o.u_, r_);
    }
    ExtScalar operator-() const { return ExtScalar(-u_, -v_, r_); }
    ExtScalar inv() const {
        // (u - v nu) / (u^2 - v^2 r); the norm vanishes only for zero
        // divisors, which cannot occur when r is a non-square
        QScalar nrm = u_ * u_ - v_ * v_ * r_;
        if (nrm.is_zero()) throw DivisionByZero("ExtScalar inverse: zero norm");
        return ExtScalar(u_ / nrm, -(v_ / nrm), r_);
    }
    ExtScalar operator/(const ExtScalar& o) const { return *this * o.inv(); }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        a.check(b);
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

    std::string str() const {
        if (v_.is_zero()) return u_.str();
        std::string s = u_.is_zero() ? "" : u_.str() + " + ";
        return s + "(" + v_.str() + ")*nu";
    }

  private:
    void check(const ExtScalar& o) const {
        require_same_params(u_.params(), o.u_.params());
        if (!(r_ == o.r_)) throw ParamMismatch("ExtScalar discriminant mismatch");
    }
    QScalar u_, v_, r_;
};

} // namespace qre
