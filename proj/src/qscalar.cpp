#include "qre/qscalar.hpp"

#include <sstream>

namespace qre {

QScalar QScalar::from_int(const ParamSetPtr& ps, long v) {
    return QScalar(ps, Poly::constant(ps->size(), Int(v)), Poly::constant(ps->size(), 1));
}

QScalar QScalar::from_rat(const ParamSetPtr& ps, const Rat& v) {
    QScalar r(ps, Poly::constant(ps->size(), Int(v.get_num())),
              Poly::constant(ps->size(), Int(v.get_den())));
    r.normalize();
    return r;
}

QScalar QScalar::param(const ParamSetPtr& ps, const std::string& name, int32_t exp) {
    int idx = ps->index_of(name);
    if (idx < 0) throw ParamMismatch("parameter not declared: " + name);
    if (exp >= 0)
        return QScalar(ps, Poly::variable(ps->size(), size_t(idx), exp),
                       Poly::constant(ps->size(), 1));
    return QScalar(ps, Poly::constant(ps->size(), 1),
                   Poly::variable(ps->size(), size_t(idx), -exp));
}

QScalar QScalar::from_fraction(const ParamSetPtr& ps, Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("QScalar with zero denominator");
    QScalar r(ps, std::move(num), std::move(den));
    r.normalize();
    return r;
}

void QScalar::normalize() {
    if (den_.is_zero()) throw DivisionByZero("QScalar with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(ps_->size(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    if (den_.lead_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::operator+(const QScalar& o) const {
    require_same_params(ps_, o.ps_);
    QScalar r(ps_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    r.normalize();
    return r;
}

QScalar QScalar::operator-(const QScalar& o) const {
    require_same_params(ps_, o.ps_);
    QScalar r(ps_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    r.normalize();
    return r;
}

QScalar QScalar::operator*(const QScalar& o) const {
    require_same_params(ps_, o.ps_);
    if (is_zero() || o.is_zero()) return zero(ps_);
    // cross-reduce before multiplying to curb intermediate growth
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_one() ? num_ : num_.divide_exact(g1);
    Poly d2 = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
    Poly n2 = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
    Poly d1 = g2.is_one() ? den_ : den_.divide_exact(g2);
    QScalar r(ps_, n1 * n2, d1 * d2);
    r.normalize();
    return r;
}

QScalar QScalar::operator/(const QScalar& o) const { return *this * o.inv(); }

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inv(0)");
    QScalar r(ps_, den_, num_);
    if (r.den_.lead_coeff() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QScalar QScalar::pow(long e) const {
    if (e == 0) return one(ps_);
    QScalar base = e < 0 ? inv() : *this;
    long n = e < 0 ? -e : e;
    QScalar acc = one(ps_);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Rat QScalar::classical_limit(const std::map<std::string, Rat>& others) const {
    std::map<std::string, Rat> vals = others;
    vals["q"] = Rat(1);
    // substitute non-q parameters first, then examine the reduced q-fraction
    QScalar cur = *this;
    for (size_t i = 1; i < ps_->size(); ++i) {
        auto it = vals.find(ps_->name(i));
        if (it == vals.end())
            throw ParamMismatch("classical_limit: no value supplied for parameter " +
                                ps_->name(i));
        cur = cur.substitute(ps_->name(i), QScalar::from_rat(ps_, it->second));
    }
    std::vector<Rat> point(ps_->size(), Rat(1));
    Rat dv = cur.den_.eval(point);
    if (dv == 0) throw PoleAtOne("expression has a pole at q = 1: " + str());
    Rat nv = cur.num_.eval(point);
    Rat res = nv / dv;
    res.canonicalize();
    return res;
}

Rat QScalar::eval(const std::map<std::string, Rat>& values) const {
    std::vector<Rat> point(ps_->size());
    for (size_t i = 0; i < ps_->size(); ++i) {
        auto it = values.find(ps_->name(i));
        if (it == values.end())
            throw ParamMismatch("eval: no value supplied for parameter " + ps_->name(i));
        point[i] = it->second;
    }
    Rat dv = den_.eval(point);
    if (dv == 0) throw DivisionByZero("eval: denominator vanishes at the given point");
    Rat r = num_.eval(point) / dv;
    r.canonicalize();
    return r;
}

QScalar QScalar::substitute(const std::string& name, const QScalar& value) const {
    const ParamSetPtr& target = value.params();
    int src_idx = ps_->index_of(name);
    if (src_idx < 0) throw ParamMismatch("substitute: parameter not declared: " + name);

    auto convert_poly = [&](const Poly& p) {
        QScalar acc = QScalar::zero(target);
        for (auto& t : p.terms()) {
            QScalar term = QScalar::from_rat(target, Rat(t.second));
            for (size_t i = 0; i < ps_->size(); ++i) {
                int32_t e = t.first.e[i];
                if (e == 0) continue;
                QScalar base = (int(i) == src_idx)
                                   ? value
                                   : QScalar::param(target, ps_->name(i));
                term = term * base.pow(e);
            }
            acc = acc + term;
        }
        return acc;
    };
    QScalar n = convert_poly(num_);
    QScalar d = convert_poly(den_);
    return n / d;
}

std::optional<QScalar> QScalar::try_sqrt() const {
    if (is_zero()) return zero(ps_);
    // s^2 = num/den  <=>  (s*den)^2 = num*den
    Poly prod = num_ * den_;
    auto rt = prod.try_sqrt();
    if (!rt) {
        Poly neg = -prod;
        auto rt2 = neg.try_sqrt();
        (void)rt2; // negative of a square is never a square over Q
        return std::nullopt;
    }
    QScalar s = QScalar::from_fraction(ps_, *rt, den_);
    if (s * s == *this) return s;
    return std::nullopt;
}

std::string poly_str(const Poly& p, const ParamSet& ps) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : p.terms()) {
        Int c = t.second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = t.first.degree() > 0;
        if (c != 1 || !has_var) {
            os << c.get_str();
            if (has_var) os << "*";
        }
        bool star = false;
        for (size_t i = 0; i < ps.size(); ++i) {
            int32_t e = t.first.e[i];
            if (e == 0) continue;
            if (star) os << "*";
            os << ps.name(i);
            if (e != 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

std::string QScalar::str() const {
    if (den_.is_one()) return poly_str(num_, *ps_);
    return "(" + poly_str(num_, *ps_) + ")/(" + poly_str(den_, *ps_) + ")";
}

QScalar q_number(const ParamSetPtr& ps, long n) {
    if (n < 0) throw Error("q_number: n must be nonnegative");
    // sum_{i=0}^{n-1} q^{n-1-2i} as a fraction (q^{2n-2}+...+1)/q^{n-1}
    QScalar acc = QScalar::zero(ps);
    QScalar qv = QScalar::q(ps);
    for (long i = 0; i < n; ++i) acc = acc + qv.pow(n - 1 - 2 * i);
    return acc;
}

} // namespace qre
