#pragma once

#include <memory>

#include "qre/algmatrix.hpp"
#include "qre/freemat.hpp"
#include "qre/hecke.hpp"

namespace qre {

// The reflection-equation algebra on n^2 generators l^i_j, or its
// quadratic-linear shift. Owns the completed rewrite system; matrices over
// the algebra reference it by address, so the object is move-only.
class REAlgebra {
  public:
    REAlgebra(HeckeSymmetry sym, std::unique_ptr<RewriteSystem<QScalar>> rs,
              std::optional<QScalar> hbar);
    REAlgebra(REAlgebra&&) = default;
    REAlgebra& operator=(REAlgebra&&) = default;

    size_t n() const { return sym_.dim(); }
    const HeckeSymmetry& symmetry() const { return sym_; }
    const RewriteSystem<QScalar>& system() const { return *rs_; }
    const Presentation<QScalar>& presentation() const { return rs_->source(); }
    const AlgMatrix<QScalar>& L() const { return L_; }
    bool shifted() const { return hbar_.has_value(); }
    const QScalar& hbar() const { return *hbar_; }
    const ParamSetPtr& params() const { return sym_.params(); }

    int generator_of(size_t i, size_t j) const { return int(i * n() + j); }
    NCPoly<QScalar> gen_poly(size_t i, size_t j) const {
        return NCPoly<QScalar>::generator(rs_->ctx(), generator_of(i, j), rs_->ctx().one());
    }

  private:
    HeckeSymmetry sym_;
    std::unique_ptr<RewriteSystem<QScalar>> rs_;
    AlgMatrix<QScalar> L_;
    std::optional<QScalar> hbar_;
};

// the n^4 entries of R L1 R L1 - L1 R L1 R - hbar (R L1 - L1 R) over the
// free algebra on generators l^i_j (hbar = 0 gives the plain relations)
std::vector<NCPoly<QScalar>> re_relation_entries(const HeckeSymmetry& R,
                                                 const QScalar& hbar);

// deduplicate a relation list by exact row reduction; the echelonized
// representatives are returned in term order
std::vector<NCPoly<QScalar>> dedup_relations(const std::vector<NCPoly<QScalar>>& rels,
                                             const typename FieldOps<QScalar>::Context& ctx,
                                             size_t ngens, int max_degree);

REAlgebra build_re_algebra(const HeckeSymmetry& R, int degree = 6);
REAlgebra build_reh_algebra(const HeckeSymmetry& R, const QScalar& hbar, int degree = 6);

struct FlatnessRow {
    int degree;
    long expected, actual;
};
struct FlatnessReport {
    bool ok = true;
    bool filtered = false;
    std::vector<FlatnessRow> rows;
};

// graded (or filtered, for the shifted algebra) dimensions against the
// symmetric-algebra oracle
FlatnessReport check_flatness(const REAlgebra& A, int dmax);

// The diagonal trace form: Tr(D L) is central. D is solved for, never
// hard-coded, and normalized so its q -> 1 limit is the identity.
struct TraceForm {
    std::vector<QScalar> diag;
    NCPoly<QScalar> trace; // sum_i diag[i] * l^i_i
};

TraceForm quantum_trace(const REAlgebra& A);

// Cayley-Hamilton data: sum_{i=0}^{p} (-L)^i sigma(p-i) = 0 with central
// coefficients, sigma(0) = 1, coefficients written to the left.
struct CHData {
    int p = 0;
    std::vector<NCPoly<QScalar>> sigma; // sigma[0] = sigma(1), ..., sigma[p-1] = sigma(p)
    QScalar trace_ratio;                // sigma(1) = trace_ratio * Tr_q(L)
};

CHData ch_coefficients(const REAlgebra& A, const TraceForm& tf);

// the matrix polynomial sum (-L)^i sigma(p-i); zero iff the identity holds
AlgMatrix<QScalar> ch_residual(const REAlgebra& A, const CHData& ch);

// whether z commutes with every generator in normal form
bool is_central(const REAlgebra& A, const NCPoly<QScalar>& z);

// free-algebra identity: substituting l -> l - h id into the plain relations
// yields the shifted relations with hbar = h (q - q^-1)
bool shift_check(const HeckeSymmetry& R);

} // namespace qre
