#pragma once

#include <optional>

#include "qre/linalg.hpp"

namespace qre {

// Witness for a failed matrix identity: the first offending entry.
struct IdentityWitness {
    bool ok = true;
    size_t row = 0, col = 0;
    std::string value;
};

// A braid-form Hecke symmetry on V (x) V: a Yang-Baxter solution R with
// R^2 = id + (q - q^-1) R. Row/column indices are pairs (i,j) of indices
// into V, in lexicographic order.
class HeckeSymmetry {
  public:
    HeckeSymmetry(size_t n, ScalarMatrix m);

    size_t dim() const { return n_; }
    const ScalarMatrix& matrix() const { return m_; }
    const ParamSetPtr& params() const { return m_.ctx().ps; }
    bool braid_checked() const { return braid_ok_; }
    bool hecke_checked() const { return hecke_ok_; }

    // validated construction: throws VerificationFailed unless both hold
    static HeckeSymmetry validated(size_t n, ScalarMatrix m);

    // id^(i-1) (x) R (x) id^(k-i-1) acting on V^(x)k, 1 <= i <= k-1
    ScalarMatrix embed_at(size_t i, size_t k) const;

  private:
    size_t n_;
    ScalarMatrix m_;
    bool braid_ok_ = false, hecke_ok_ = false;
};

// the Drinfeld-Jimbo braid-form symmetry for U_q(sl(n))
HeckeSymmetry standard_r(size_t n, const ParamSetPtr& ps);

IdentityWitness check_braid(const ScalarMatrix& R, size_t n);
IdentityWitness check_hecke(const ScalarMatrix& R, size_t n);

// q-symmetrizer on V^(x)k: idempotent projecting onto the q-eigenspace part;
// normalization fixed by post-hoc rescaling to exact idempotency
ScalarMatrix symmetrizer(const HeckeSymmetry& R, int k);
// complementary family built from the -q^-1 eigenspace recursion
ScalarMatrix antisymmetrizer(const HeckeSymmetry& R, int k);

// ranks of the antisymmetrizers for k = 0..kmax
std::vector<long> poincare_minus(const HeckeSymmetry& R, int kmax);

// largest k with a nonzero antisymmetrizer
int hecke_rank(const HeckeSymmetry& R, int scan_limit = 8);

} // namespace qre
