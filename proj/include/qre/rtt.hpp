#pragma once

#include "qre/realg.hpp"

namespace qre {

// The RTT algebra on generators t^i_j with an adjoined central inverse of
// the quantum determinant. The plain (un-localized) t-subalgebra is kept
// alongside for dimension counting.
class RTTAlgebra {
  public:
    RTTAlgebra(HeckeSymmetry sym, std::unique_ptr<RewriteSystem<QScalar>> plain,
               std::unique_ptr<RewriteSystem<QScalar>> localized, NCPoly<QScalar> det,
               AlgMatrix<QScalar> T, AlgMatrix<QScalar> antipode);
    RTTAlgebra(RTTAlgebra&&) = default;

    size_t n() const { return sym_.dim(); }
    const HeckeSymmetry& symmetry() const { return sym_; }
    const RewriteSystem<QScalar>& plain() const { return *plain_; }
    const RewriteSystem<QScalar>& localized() const { return *loc_; }
    const NCPoly<QScalar>& det() const { return det_; }
    const AlgMatrix<QScalar>& T() const { return T_; }
    const AlgMatrix<QScalar>& antipode() const { return S_; }
    int dinv_index() const { return int(n() * n()); }

  private:
    HeckeSymmetry sym_;
    std::unique_ptr<RewriteSystem<QScalar>> plain_;
    std::unique_ptr<RewriteSystem<QScalar>> loc_;
    NCPoly<QScalar> det_;
    AlgMatrix<QScalar> T_;
    AlgMatrix<QScalar> S_;
};

// n = 2 in v1; the determinant and antipode are characterized by solved
// properties (centrality, S(T) T = T S(T) = id), not imported formulas
RTTAlgebra build_rtt(const HeckeSymmetry& R, int degree = 12);

// group-like property of the determinant: Delta(det) = det (x) det in the
// two-copy system with commuting copies
bool det_group_like(const RTTAlgebra& A);

// The tensor-product algebra T (x) L with elementwise-commuting factors,
// carrying the coaction delta(l^i_j) = t^j_p S(t^k_i) (x) l^p_k.
class CoactionSystem {
  public:
    CoactionSystem(const RTTAlgebra& rtt, const REAlgebra& re, int degree = 12);
    CoactionSystem(CoactionSystem&&) = default;

    const RewriteSystem<QScalar>& system() const { return *rs_; }
    size_t n() const { return n_; }

    // l-part letters are shifted past the t-part letters
    NCPoly<QScalar> embed_l(const NCPoly<QScalar>& p) const;
    NCPoly<QScalar> embed_t(const NCPoly<QScalar>& p) const;

    // coaction image of the generator l^i_j (and the S-omitted control)
    NCPoly<QScalar> coaction_image(size_t i, size_t j) const;
    NCPoly<QScalar> coaction_image_no_antipode(size_t i, size_t j) const;

    // delta extended multiplicatively to an l-side polynomial
    NCPoly<QScalar> coaction_apply(const NCPoly<QScalar>& re_poly) const;
    NCPoly<QScalar> coaction_apply_no_antipode(const NCPoly<QScalar>& re_poly) const;

    // every defining relation of the l-side maps into the ideal
    bool coaction_preserves_ideal() const;
    bool coaction_preserves_ideal_no_antipode() const; // negative control

    // delta((L^k)^i_j) = t^j_p S(t^m_i) (x) (L^k)^p_m in normal form
    bool power_equivariance(int k) const;

    // delta(Tr_q L) = 1 (x) Tr_q L
    bool trace_invariant(const NCPoly<QScalar>& trace) const;

  private:
    NCPoly<QScalar> image_impl(size_t i, size_t j, bool with_antipode) const;
    NCPoly<QScalar> apply_impl(const NCPoly<QScalar>& re_poly, bool with_antipode) const;

    const RTTAlgebra* rtt_;
    const REAlgebra* re_;
    size_t n_;
    size_t l_offset_; // = n^2 + 1 (t generators plus dinv)
    std::unique_ptr<RewriteSystem<QScalar>> rs_;
};

} // namespace qre
