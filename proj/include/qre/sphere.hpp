#pragma once

#include "qre/realg.hpp"

namespace qre {

// Orbit data for the quotient {sigma(1) = a, sigma(2) = b}: the numerical
// polynomial P(t) = t^2 - a t + b and its roots. On the sphere a = 0 and
// P(t) = t^2 + c2 with c2 = b.
struct OrbitSpec {
    QScalar a, b;
    QScalar c2;   // constant of the a = 0 form
    QScalar disc; // a^2 - 4b
    bool rational_roots = false;
    QScalar nu1, nu2; // set when rational_roots
};

// Quotient of an RE (or shifted RE) algebra by central constraints. Owns the
// quotient rewrite system; the ambient algebra and its CH data ride along.
class SphereAlgebra {
  public:
    SphereAlgebra(REAlgebra ambient, TraceForm tf, CHData ch,
                  std::unique_ptr<RewriteSystem<QScalar>> rs, QScalar a, QScalar b);
    SphereAlgebra(SphereAlgebra&&) = default;

    size_t n() const { return ambient_.n(); }
    const REAlgebra& ambient() const { return ambient_; }
    const RewriteSystem<QScalar>& system() const { return *rs_; }
    const AlgMatrix<QScalar>& L() const { return L_; }
    const TraceForm& trace_form() const { return tf_; }
    const CHData& ch() const { return ch_; }
    const QScalar& sigma1_value() const { return a_; }
    const QScalar& sigma2_value() const { return b_; }
    const ParamSetPtr& params() const { return ambient_.params(); }

  private:
    REAlgebra ambient_;
    TraceForm tf_;
    CHData ch_;
    std::unique_ptr<RewriteSystem<QScalar>> rs_;
    AlgMatrix<QScalar> L_;
    QScalar a_, b_;
};

// sphere: Tr_q(L) = 0 and sigma(2) = c, with c != 0
SphereAlgebra build_sphere(REAlgebra A, const QScalar& c, int degree = 6);
// generic orbit: sigma(1) = a0, sigma(2) = b0 (used with the shifted algebra)
SphereAlgebra build_orbit(REAlgebra A, const QScalar& a0, const QScalar& b0, int degree = 6);

// filtration dimensions against (d+1)^2
FlatnessReport sphere_flatness(const SphereAlgebra& S, int dmax);

OrbitSpec numeric_polynomial(const SphereAlgebra& S);

template <typename K> struct ProjectorPair {
    AlgMatrix<K> p1, p2;
    K nu1, nu2;
};

// rational-roots profile; verifies idempotency, complementarity,
// orthogonality and spectral completeness, with witnesses on failure
ProjectorPair<QScalar> projectors(const SphereAlgebra& S, const OrbitSpec& spec);

// quadratic-extension profile: the same construction over K = ExtScalar
struct ExtProjectors {
    std::unique_ptr<RewriteSystem<ExtScalar>> system;
    AlgMatrix<ExtScalar> L;
    ProjectorPair<ExtScalar> pair;
};
ExtProjectors projectors_ext(const SphereAlgebra& S, const OrbitSpec& spec);

// Dimensions of (V (x) A) / M_nu per filtration level, where M_nu is
// generated by the coordinates of v < L - nu v. The submodule span is
// saturated with `slack` extra degrees before truncating.
struct ModuleReport {
    std::vector<long> free_dims;
    std::vector<long> quotient_dims;
    bool nontrivial = false;
};
ModuleReport quotient_module(const SphereAlgebra& S, const QScalar& nu, int level,
                             int slack = 2);

// L_+^(k) = P_+^(k) L_1 P_+^(k) over the quotient
AlgMatrix<QScalar> extend_L_plus(const SphereAlgebra& S, int k);

// Cubic identity for L_+^(2). The verified form is the Vieta expansion of
// (t - nu1)(t - nu2)(t - a q^-1/2_q); the report also evaluates the variant
// with the sign of b flipped in the linear and constant coefficients.
struct ChPlusReport {
    bool vieta_ok = false;
    bool flipped_ok = false;
    bool q_independent = false; // coefficients free of q (a = 0 case)
    QScalar e1, e2, e3;         // L+^3 - e1 L+^2 + e2 L+ - e3 P+ = 0
};
ChPlusReport verify_ch_plus(const SphereAlgebra& S, const OrbitSpec& spec);

} // namespace qre
