#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qre::classical {

using Rat = mpq_class;

// Classical (q = 1) sphere coordinate ring: Q[a, b, c] modulo
// a^2 + b c + c0, reduced so that every monomial has a-exponent <= 1.
// Deliberately separate from the rewriting machinery: dense commutative
// arithmetic only, used as an independent oracle.
struct SphereFn {
    std::map<std::array<int, 3>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::array<int, 3>& m, const Rat& v);

    SphereFn operator+(const SphereFn& o) const;
    SphereFn operator-(const SphereFn& o) const;
    SphereFn operator-() const;
    friend bool operator==(const SphereFn& x, const SphereFn& y) { return x.terms == y.terms; }
};

SphereFn fn_const(const Rat& v);
SphereFn fn_gen(int which); // 0 = a, 1 = b, 2 = c
// product with reduction by a^2 -> -(b c) - c0
SphereFn fn_mul(const SphereFn& x, const SphereFn& y, const Rat& c0);

// reduced monomials of total degree <= d
std::vector<std::array<int, 3>> monomials_upto(int d);
long filtration_dim(int d);

// 2x2 matrix of sphere functions
using FnMatrix = std::array<std::array<SphereFn, 2>, 2>;
FnMatrix classical_L();

// dimensions of (V (x) A)/M_nu per filtration level, dense elimination
std::vector<long> module_quotient_dims(const Rat& c0, const Rat& nu, int level, int slack = 2);

// P_+(L (x) id + id (x) L)P_+ equals lambda * P_+(L (x) id)P_+ on the nose;
// returns lambda when a single exact scalar works
std::optional<Rat> leibniz_factor(const Rat& c0);

// classical eigenprojector at a rational point of the sphere: idempotent of
// trace (= rank) one
bool projector_rank_one(const Rat& c0, const Rat& nu1, const Rat& nu2);

} // namespace qre::classical
