#include "qre/rtt.hpp"

#include "qre/wordspace.hpp"

namespace qre {

namespace {

using Ctx = FieldOps<QScalar>::Context;

// entries of R T1 T2 - T1 T2 R over the free algebra on t^i_j
std::vector<NCPoly<QScalar>> rtt_relation_entries(const HeckeSymmetry& R) {
    Ctx ctx{R.params()};
    size_t n = R.dim();
    size_t N = n * n;
    FreeMat<QScalar> Rm(N, N, ctx);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            Rm.at(i, j) = NCPoly<QScalar>::scalar(ctx, R.matrix().at(i, j));
    FreeMat<QScalar> T1(N, N, ctx), T2(N, N, ctx);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c) {
                T1.at(a * n + b, c * n + b) =
                    NCPoly<QScalar>::generator(ctx, int(a * n + c), ctx.one());
                T2.at(b * n + a, b * n + c) =
                    NCPoly<QScalar>::generator(ctx, int(a * n + c), ctx.one());
            }
    FreeMat<QScalar> diff = Rm * T1 * T2 - T1 * T2 * Rm;
    return diff.data;
}

Word shift_word(const Word& w, int offset) {
    Word out;
    out.reserve(w.size());
    for (char c : w) out.push_back(char(int(static_cast<unsigned char>(c)) + offset));
    return out;
}

NCPoly<QScalar> shift_letters(const NCPoly<QScalar>& p, int offset) {
    NCPoly<QScalar> out(p.ctx());
    for (auto& [w, c] : p.terms()) out.add_term(shift_word(w, offset), c);
    return out;
}

} // namespace

RTTAlgebra::RTTAlgebra(HeckeSymmetry sym, std::unique_ptr<RewriteSystem<QScalar>> plain,
                       std::unique_ptr<RewriteSystem<QScalar>> localized, NCPoly<QScalar> det,
                       AlgMatrix<QScalar> T, AlgMatrix<QScalar> antipode)
    : sym_(std::move(sym)), plain_(std::move(plain)), loc_(std::move(localized)),
      det_(std::move(det)), T_(std::move(T)), S_(std::move(antipode)) {}

RTTAlgebra build_rtt(const HeckeSymmetry& R, int degree) {
    if (R.dim() != 2) throw Error("build_rtt: only n = 2 is supported");
    Ctx ctx{R.params()};
    size_t n = R.dim();
    size_t ngen = n * n;

    std::vector<std::string> tnames;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            tnames.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1));

    Presentation<QScalar> plain_pres;
    plain_pres.ctx = ctx;
    plain_pres.generators = tnames;
    plain_pres.relations = dedup_relations(rtt_relation_entries(R), ctx, ngen, 2);
    auto plain = std::make_unique<RewriteSystem<QScalar>>(complete_to_degree(plain_pres, degree));

    // quantum determinant: the central homogeneous quadratic, unique up to
    // scalar; normalized against the classical determinant
    WordBasis<QScalar> basis2(plain->irreducible_words(2), ctx);
    WordBasis<QScalar> basis3(plain->word_basis(3), ctx);
    Matrix<QScalar> sys(ngen * basis3.size(), basis2.size(), ctx);
    for (size_t g = 0; g < ngen; ++g) {
        NCPoly<QScalar> gp = NCPoly<QScalar>::generator(ctx, int(g), ctx.one());
        for (size_t w = 0; w < basis2.size(); ++w) {
            NCPoly<QScalar> wp = NCPoly<QScalar>::monomial(ctx, basis2.word(w), ctx.one());
            auto comm = plain->normal_form(wp * gp - gp * wp);
            auto coords = basis3.coords(comm);
            for (size_t r = 0; r < coords.size(); ++r)
                sys.at(g * basis3.size() + r, w) = coords[r];
        }
    }
    auto null = sys.nullspace();
    if (null.empty()) throw NoSolution("quantum determinant: no central quadratic element");
    if (null.size() > 1)
        throw SolutionNotUnique("quantum determinant: central quadratic space has dimension " +
                                std::to_string(null.size()));
    NCPoly<QScalar> det = basis2.from_coords(null[0]);
    std::map<std::string, Rat> zeros;
    for (size_t i = 1; i < ctx.ps->size(); ++i) zeros[ctx.ps->name(i)] = Rat(0);
    {
        // normalize: coefficient of t11*t22 equal to 1, classical limit check
        Word w11_22 = word_of({0, 3});
        auto it = det.terms().find(w11_22);
        if (it == det.terms().end())
            throw NoSolution("quantum determinant: unexpected support");
        det = det * it->second.inv();
        NCPoly<QScalar> limit(ctx);
        for (auto& [w, c] : det.terms()) {
            Word s = w;
            std::sort(s.begin(), s.end());
            limit.add_term(s, QScalar::from_rat(ctx.ps, c.classical_limit(zeros)));
        }
        NCPoly<QScalar> classical(ctx);
        classical.add_term(word_of({0, 3}), ctx.one());
        classical.add_term(word_of({1, 2}), -ctx.one());
        if (limit != classical)
            throw VerificationFailed("quantum determinant: classical limit mismatch");
    }

    // adjugate: linear-entry matrix with A T = det id, solved exactly
    size_t nunk = ngen * ngen; // A^i_k = sum_g x_{(i,k),g} t_g
    Matrix<QScalar> adj_sys(ngen * basis2.size(), nunk, ctx);
    std::vector<QScalar> adj_rhs(ngen * basis2.size(), ctx.zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t entry = i * n + j;
            for (size_t k = 0; k < n; ++k)
                for (size_t g = 0; g < ngen; ++g) {
                    NCPoly<QScalar> prod = NCPoly<QScalar>::generator(ctx, int(g), ctx.one()) *
                                           NCPoly<QScalar>::generator(ctx, int(k * n + j), ctx.one());
                    auto coords = basis2.coords(plain->normal_form(prod));
                    for (size_t r = 0; r < coords.size(); ++r)
                        adj_sys.at(entry * basis2.size() + r, (i * n + k) * ngen + g) =
                            adj_sys.at(entry * basis2.size() + r, (i * n + k) * ngen + g) +
                            coords[r];
                }
            if (i == j) {
                auto coords = basis2.coords(det);
                for (size_t r = 0; r < coords.size(); ++r)
                    adj_rhs[entry * basis2.size() + r] = coords[r];
            }
        }
    auto adj_sol = adj_sys.solve(adj_rhs);
    if (!adj_sol) throw NoSolution("antipode: no adjugate matrix");
    if (adj_sol->kernel_dim != 0)
        throw SolutionNotUnique("antipode: adjugate not unique");

    // localized system: adjoin a central inverse of the determinant
    Presentation<QScalar> loc_pres;
    loc_pres.ctx = ctx;
    loc_pres.generators = tnames;
    loc_pres.generators.push_back("dinv");
    int dinv = int(ngen);
    for (auto& r : plain_pres.relations) loc_pres.relations.push_back(r);
    for (size_t g = 0; g < ngen; ++g) {
        NCPoly<QScalar> rel(ctx);
        rel.add_term(word_of({dinv, int(g)}), ctx.one());
        rel.add_term(word_of({int(g), dinv}), -ctx.one());
        loc_pres.relations.push_back(rel);
    }
    {
        NCPoly<QScalar> dpoly = NCPoly<QScalar>::generator(ctx, dinv, ctx.one());
        loc_pres.relations.push_back(det * dpoly - NCPoly<QScalar>::one(ctx));
        loc_pres.relations.push_back(dpoly * det - NCPoly<QScalar>::one(ctx));
    }
    auto loc = std::make_unique<RewriteSystem<QScalar>>(complete_to_degree(loc_pres, degree));

    AlgMatrix<QScalar> T(n, n, loc.get());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            T.at(i, j) = NCPoly<QScalar>::generator(ctx, int(i * n + j), ctx.one());

    AlgMatrix<QScalar> S(n, n, loc.get());
    NCPoly<QScalar> dpoly = NCPoly<QScalar>::generator(ctx, dinv, ctx.one());
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            NCPoly<QScalar> a(ctx);
            for (size_t g = 0; g < ngen; ++g) {
                const QScalar& c = adj_sol->solution[(i * n + k) * ngen + g];
                if (!c.is_zero()) a.add_term(Word(1, char(g)), c);
            }
            S.at(i, k) = loc->normal_form(dpoly * a);
        }

    RTTAlgebra A(R, std::move(plain), std::move(loc), std::move(det), std::move(T),
                 std::move(S));

    auto id = AlgMatrix<QScalar>::identity(n, &A.localized());
    if (!(A.antipode() * A.T() == id) || !(A.T() * A.antipode() == id))
        throw VerificationFailed("antipode: S(T) T = T S(T) = id fails");
    return A;
}

bool det_group_like(const RTTAlgebra& A) {
    const auto& R = A.symmetry();
    Ctx ctx{R.params()};
    size_t n = R.dim();
    size_t ngen = n * n;

    // two commuting copies t, s
    Presentation<QScalar> pres;
    pres.ctx = ctx;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            pres.generators.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            pres.generators.push_back("s" + std::to_string(i + 1) + std::to_string(j + 1));
    auto rels = rtt_relation_entries(R);
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        pres.relations.push_back(r);
        pres.relations.push_back(shift_letters(r, int(ngen)));
    }
    for (size_t a = 0; a < ngen; ++a)
        for (size_t b = 0; b < ngen; ++b) {
            NCPoly<QScalar> rel(ctx);
            rel.add_term(word_of({int(ngen + b), int(a)}), ctx.one());
            rel.add_term(word_of({int(a), int(ngen + b)}), -ctx.one());
            pres.relations.push_back(rel);
        }
    auto rs = complete_to_degree(pres, 5);

    // Delta(t^i_j) = sum_k t^i_k s^k_j
    std::vector<NCPoly<QScalar>> images;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly<QScalar> im(ctx);
            for (size_t k = 0; k < n; ++k) {
                im = im + NCPoly<QScalar>::generator(ctx, int(i * n + k), ctx.one()) *
                              NCPoly<QScalar>::generator(ctx, int(ngen + k * n + j), ctx.one());
            }
            images.push_back(std::move(im));
        }
    NCPoly<QScalar> delta_det = substitute_generators(A.det(), images);
    NCPoly<QScalar> rhs = A.det() * shift_letters(A.det(), int(ngen));
    return rs.normal_form(delta_det - rhs).is_zero();
}

CoactionSystem::CoactionSystem(const RTTAlgebra& rtt, const REAlgebra& re, int degree)
    : rtt_(&rtt), re_(&re), n_(rtt.n()), l_offset_(rtt.n() * rtt.n() + 1) {
    require_same_params(rtt.symmetry().params(), re.params());
    Ctx ctx{rtt.symmetry().params()};
    Presentation<QScalar> pres;
    pres.ctx = ctx;
    pres.generators = rtt.localized().source().generators;
    for (auto& g : re.presentation().generators) pres.generators.push_back(g);

    for (auto& r : rtt.localized().source().relations) pres.relations.push_back(r);
    for (auto& r : re.presentation().relations)
        pres.relations.push_back(shift_letters(r, int(l_offset_)));
    // cross commutation: every l-letter commutes with every t-letter
    for (size_t a = 0; a < l_offset_; ++a)
        for (size_t b = 0; b < n_ * n_; ++b) {
            NCPoly<QScalar> rel(ctx);
            rel.add_term(word_of({int(l_offset_ + b), int(a)}), ctx.one());
            rel.add_term(word_of({int(a), int(l_offset_ + b)}), -ctx.one());
            pres.relations.push_back(rel);
        }
    rs_ = std::make_unique<RewriteSystem<QScalar>>(complete_to_degree(pres, degree));
}

NCPoly<QScalar> CoactionSystem::embed_l(const NCPoly<QScalar>& p) const {
    return shift_letters(p, int(l_offset_));
}
NCPoly<QScalar> CoactionSystem::embed_t(const NCPoly<QScalar>& p) const { return p; }

NCPoly<QScalar> CoactionSystem::image_impl(size_t i, size_t j, bool with_antipode) const {
    Ctx ctx = rs_->ctx();
    size_t n = n_;
    NCPoly<QScalar> acc(ctx);
    for (size_t p = 0; p < n; ++p)
        for (size_t k = 0; k < n; ++k) {
            // t^i_p S(t)^k_j (x) l^p_k  (the braided adjoint pattern)
            NCPoly<QScalar> tpart =
                NCPoly<QScalar>::generator(ctx, int(i * n + p), ctx.one());
            NCPoly<QScalar> spart =
                with_antipode
                    ? rtt_->antipode().at(k, j)
                    : NCPoly<QScalar>::generator(ctx, int(k * n + j), ctx.one());
            NCPoly<QScalar> lpart =
                NCPoly<QScalar>::generator(ctx, int(l_offset_ + p * n + k), ctx.one());
            acc = acc + tpart * spart * lpart;
        }
    return acc;
}

NCPoly<QScalar> CoactionSystem::coaction_image(size_t i, size_t j) const {
    return image_impl(i, j, true);
}
NCPoly<QScalar> CoactionSystem::coaction_image_no_antipode(size_t i, size_t j) const {
    return image_impl(i, j, false);
}

NCPoly<QScalar> CoactionSystem::apply_impl(const NCPoly<QScalar>& re_poly,
                                           bool with_antipode) const {
    std::vector<NCPoly<QScalar>> images;
    for (size_t a = 0; a < l_offset_; ++a)
        images.push_back(NCPoly<QScalar>::generator(rs_->ctx(), int(a), rs_->ctx().one()));
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j)
            images.push_back(image_impl(i, j, with_antipode));
    return substitute_generators(embed_l(re_poly), images);
}

NCPoly<QScalar> CoactionSystem::coaction_apply(const NCPoly<QScalar>& re_poly) const {
    return apply_impl(re_poly, true);
}
NCPoly<QScalar> CoactionSystem::coaction_apply_no_antipode(const NCPoly<QScalar>& re_poly) const {
    return apply_impl(re_poly, false);
}

bool CoactionSystem::coaction_preserves_ideal() const {
    for (auto& r : re_->presentation().relations)
        if (!rs_->normal_form(coaction_apply(r)).is_zero()) return false;
    return true;
}

bool CoactionSystem::coaction_preserves_ideal_no_antipode() const {
    for (auto& r : re_->presentation().relations)
        if (!rs_->normal_form(coaction_apply_no_antipode(r)).is_zero()) return false;
    return true;
}

bool CoactionSystem::power_equivariance(int k) const {
    Ctx ctx = rs_->ctx();
    size_t n = n_;
    AlgMatrix<QScalar> Lk = re_->L().pow(k);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly<QScalar> lhs = coaction_apply(Lk.at(i, j));
            NCPoly<QScalar> rhs(ctx);
            for (size_t p = 0; p < n; ++p)
                for (size_t m = 0; m < n; ++m) {
                    NCPoly<QScalar> tpart =
                        NCPoly<QScalar>::generator(ctx, int(i * n + p), ctx.one());
                    rhs = rhs + tpart * rtt_->antipode().at(m, j) *
                                    embed_l(Lk.at(p, m));
                }
            if (!rs_->normal_form(lhs - rhs).is_zero()) return false;
        }
    return true;
}

bool CoactionSystem::trace_invariant(const NCPoly<QScalar>& trace) const {
    NCPoly<QScalar> lhs = coaction_apply(trace);
    NCPoly<QScalar> rhs = embed_l(trace);
    return rs_->normal_form(lhs - rhs).is_zero();
}

} // namespace qre
