#pragma once

#include "qre/extscalar.hpp"
#include "qre/qscalar.hpp"

namespace qre {

// Uniform field interface for the two coefficient types used by the
// noncommutative layer. A FieldContext carries whatever is needed to mint
// constants (the parameter set, and the discriminant for extensions).
template <typename K> struct FieldOps;

template <> struct FieldOps<QScalar> {
    struct Context {
        ParamSetPtr ps;
        QScalar zero() const { return QScalar::zero(ps); }
        QScalar one() const { return QScalar::one(ps); }
        QScalar from_rat(const Rat& r) const { return QScalar::from_rat(ps, r); }
        bool operator==(const Context& o) const {
            return ps.get() == o.ps.get() || (ps && o.ps && ps->same_as(*o.ps));
        }
    };
    static Context context_of(const QScalar& s) { return Context{s.params()}; }
    static QScalar inv(const QScalar& s) { return s.inv(); }
    static std::string str(const QScalar& s) { return s.str(); }
};

template <> struct FieldOps<ExtScalar> {
    struct Context {
        ParamSetPtr ps;
        QScalar disc;
        ExtScalar zero() const { return ExtScalar::embed(QScalar::zero(ps), disc); }
        ExtScalar one() const { return ExtScalar::embed(QScalar::one(ps), disc); }
        ExtScalar from_rat(const Rat& r) const {
            return ExtScalar::embed(QScalar::from_rat(ps, r), disc);
        }
        bool operator==(const Context& o) const { return disc == o.disc; }
    };
    static Context context_of(const ExtScalar& s) {
        return Context{s.base().params(), s.disc()};
    }
    static ExtScalar inv(const ExtScalar& s) { return s.inv(); }
    static std::string str(const ExtScalar& s) { return s.str(); }
};

} // namespace qre
