#include "qre/sphere.hpp"

#include "qre/wordspace.hpp"

namespace qre {

namespace {
using Ctx = FieldOps<QScalar>::Context;
} // namespace

SphereAlgebra::SphereAlgebra(REAlgebra ambient, TraceForm tf, CHData ch,
                             std::unique_ptr<RewriteSystem<QScalar>> rs, QScalar a, QScalar b)
    : ambient_(std::move(ambient)), tf_(std::move(tf)), ch_(std::move(ch)),
      rs_(std::move(rs)), a_(std::move(a)), b_(std::move(b)) {
    size_t n = ambient_.n();
    L_ = AlgMatrix<QScalar>(n, n, rs_.get());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            L_.at(i, j) = rs_->normal_form(ambient_.gen_poly(i, j));
}

namespace {

SphereAlgebra quotient_impl(REAlgebra A, std::optional<QScalar> trace_to_zero_or_a,
                            const QScalar& b0, int degree, bool via_trace) {
    TraceForm tf = quantum_trace(A);
    CHData ch = ch_coefficients(A, tf);
    Ctx ctx{A.params()};

    Presentation<QScalar> pres = A.presentation();
    if (via_trace) {
        pres.relations.push_back(tf.trace);
    } else {
        pres.relations.push_back(ch.sigma[0] -
                                 NCPoly<QScalar>::scalar(ctx, *trace_to_zero_or_a));
    }
    pres.relations.push_back(ch.sigma[1] - NCPoly<QScalar>::scalar(ctx, b0));
    auto rs = std::make_unique<RewriteSystem<QScalar>>(complete_to_degree(pres, degree));

    QScalar a_val = via_trace ? QScalar::zero(ctx.ps) : *trace_to_zero_or_a;
    return SphereAlgebra(std::move(A), std::move(tf), std::move(ch), std::move(rs),
                         a_val, b0);
}

} // namespace

SphereAlgebra build_sphere(REAlgebra A, const QScalar& c, int degree) {
    if (c.is_zero()) throw DegenerateOrbit("sphere requires a nonzero orbit constant");
    auto S = quotient_impl(std::move(A), std::nullopt, c, degree, true);
    auto rep = sphere_flatness(S, 4);
    if (!rep.ok) throw NonFlat("sphere quotient: filtration dimensions deviate from (d+1)^2");
    return S;
}

SphereAlgebra build_orbit(REAlgebra A, const QScalar& a0, const QScalar& b0, int degree) {
    auto S = quotient_impl(std::move(A), a0, b0, degree, false);
    auto rep = sphere_flatness(S, 4);
    if (!rep.ok) throw NonFlat("orbit quotient: filtration dimensions deviate from (d+1)^2");
    return S;
}

FlatnessReport sphere_flatness(const SphereAlgebra& S, int dmax) {
    FlatnessReport rep;
    rep.filtered = true;
    for (int d = 0; d <= dmax; ++d) {
        long expected = long(d + 1) * long(d + 1);
        long actual = S.system().filtered_dimension(d);
        rep.rows.push_back({d, expected, actual});
        if (expected != actual) rep.ok = false;
    }
    return rep;
}

OrbitSpec numeric_polynomial(const SphereAlgebra& S) {
    OrbitSpec spec;
    spec.a = S.sigma1_value();
    spec.b = S.sigma2_value();
    spec.c2 = spec.b; // a = 0 form: P(t) = t^2 + c2
    const ParamSetPtr& ps = S.params();
    QScalar four = QScalar::from_int(ps, 4);
    spec.disc = spec.a * spec.a - four * spec.b;
    if (spec.disc.is_zero()) throw DegenerateOrbit("orbit has a double root");
    auto rt = spec.disc.try_sqrt();
    if (rt) {
        QScalar half = QScalar::from_rat(ps, Rat(1, 2));
        spec.rational_roots = true;
        spec.nu1 = (spec.a + *rt) * half;
        spec.nu2 = (spec.a - *rt) * half;
    } else {
        spec.rational_roots = false;
        spec.nu1 = spec.nu2 = QScalar::zero(ps);
    }
    return spec;
}

namespace {

template <typename K>
void verify_projector_pair(const ProjectorPair<K>& pp, const AlgMatrix<K>& L) {
    auto check_zero = [](const AlgMatrix<K>& m, const char* what) {
        auto w = m.first_nonzero();
        if (w)
            throw VerificationFailed(std::string(what) + ": entry (" +
                                     std::to_string(w->first) + "," +
                                     std::to_string(w->second) + ") nonzero");
    };
    const auto* rs = L.ambient();
    auto id = AlgMatrix<K>::identity(L.rows(), rs);
    check_zero(pp.p1 * pp.p1 - pp.p1, "P1 idempotency");
    check_zero(pp.p2 * pp.p2 - pp.p2, "P2 idempotency");
    check_zero(pp.p1 + pp.p2 - id, "P1 + P2 = id");
    check_zero(pp.p1 * pp.p2, "P1 P2 = 0");
    check_zero(pp.p2 * pp.p1, "P2 P1 = 0");
    check_zero(pp.p1.scale(pp.nu1) + pp.p2.scale(pp.nu2) - L, "nu1 P1 + nu2 P2 = L");
}

template <typename K>
ProjectorPair<K> make_projectors(const AlgMatrix<K>& L, const K& nu1, const K& nu2) {
    const auto* rs = L.ambient();
    auto id = AlgMatrix<K>::identity(L.rows(), rs);
    K d12 = nu2 - nu1;
    if (d12.is_zero()) throw DegenerateOrbit("coinciding roots");
    ProjectorPair<K> pp{(L - id.scale(nu1)).scale(FieldOps<K>::inv(d12)),
                        (L - id.scale(nu2)).scale(FieldOps<K>::inv(-d12)), nu1, nu2};
    verify_projector_pair(pp, L);
    return pp;
}

} // namespace

ProjectorPair<QScalar> projectors(const SphereAlgebra& S, const OrbitSpec& spec) {
    if (!spec.rational_roots)
        throw Error("projectors: roots are irrational, use projectors_ext");
    return make_projectors(S.L(), spec.nu1, spec.nu2);
}

ExtProjectors projectors_ext(const SphereAlgebra& S, const OrbitSpec& spec) {
    const ParamSetPtr& ps = S.params();
    // nu = (a + s)/2 with s^2 = disc
    QScalar disc = spec.disc;
    ExtProjectors out;
    out.system = std::make_unique<RewriteSystem<ExtScalar>>(extend_scalars(S.system(), disc));
    FieldOps<ExtScalar>::Context ectx{ps, disc};
    size_t n = S.n();
    out.L = AlgMatrix<ExtScalar>(n, n, out.system.get());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out.L.at(i, j) = map_ncpoly<ExtScalar>(
                S.L().at(i, j), ectx, [&](const QScalar& c) { return ExtScalar::embed(c, disc); });
    QScalar half = QScalar::from_rat(ps, Rat(1, 2));
    ExtScalar nu1(spec.a * half, half, disc);
    ExtScalar nu2(spec.a * half, -half, disc);
    out.pair = make_projectors(out.L, nu1, nu2);
    return out;
}

ModuleReport quotient_module(const SphereAlgebra& S, const QScalar& nu, int level, int slack) {
    const auto& rs = S.system();
    Ctx ctx = rs.ctx();
    size_t n = S.n();
    int top = level + slack;
    std::vector<Word> words = rs.word_basis(top);
    WordBasis<QScalar> basis(words, ctx);
    size_t dim = basis.size();

    // column order: words of high degree first, so echelon pivots certify
    // membership of a row in the low filtration levels
    std::vector<size_t> colmap(2 * dim); // vector coordinate -> elimination column
    {
        std::vector<size_t> order(words.size());
        for (size_t i = 0; i < words.size(); ++i) order[i] = words.size() - 1 - i;
        for (size_t comp = 0; comp < 2; ++comp)
            for (size_t w = 0; w < dim; ++w) colmap[comp * dim + w] = 2 * order[w] + comp;
    }
    auto degree_of_col = [&](size_t col) {
        size_t w = words.size() - 1 - col / 2;
        return int(words[w].size());
    };

    RowSpace<QScalar> span(2 * dim, ctx);
    // generators G_k with j-th coordinate l^k_j - nu delta^k_j, multiplied by
    // every basis word of degree <= top - 1 on the right
    for (size_t k = 0; k < n; ++k) {
        for (auto& w : rs.word_basis(top - 1)) {
            std::vector<QScalar> vec(2 * dim, ctx.zero());
            for (size_t j = 0; j < n; ++j) {
                NCPoly<QScalar> entry = S.L().at(k, j);
                if (j == k) entry = entry - NCPoly<QScalar>::scalar(ctx, nu);
                NCPoly<QScalar> prod =
                    rs.normal_form(entry * NCPoly<QScalar>::monomial(ctx, w, ctx.one()));
                auto coords = basis.coords(prod);
                for (size_t i = 0; i < dim; ++i)
                    if (!coords[i].is_zero()) vec[colmap[j * dim + i]] = coords[i];
            }
            span.insert(std::move(vec));
        }
    }

    ModuleReport rep;
    for (int d = 0; d <= level; ++d) {
        long free_dim = 2 * rs.filtered_dimension(d);
        long inside = 0;
        for (size_t r = 0; r < span.rows().size(); ++r)
            if (degree_of_col(span.pivots()[r]) <= d) ++inside;
        rep.free_dims.push_back(free_dim);
        rep.quotient_dims.push_back(free_dim - inside);
    }
    rep.nontrivial = rep.quotient_dims.back() > 0;
    return rep;
}

AlgMatrix<QScalar> extend_L_plus(const SphereAlgebra& S, int k) {
    if (k < 1) throw Error("extend_L_plus: k must be positive");
    const auto& rs = S.system();
    size_t n = S.n();
    size_t N = 1;
    for (int i = 0; i < k; ++i) N *= n;

    ScalarMatrix proj = symmetrizer(S.ambient().symmetry(), k);
    AlgMatrix<QScalar> P = AlgMatrix<QScalar>::from_scalar_matrix(proj, &rs);
    AlgMatrix<QScalar> L1(N, N, &rs);
    // L acts on the first tensor slot only
    size_t rest = N / n;
    for (size_t a = 0; a < n; ++a)
        for (size_t c = 0; c < n; ++c)
            for (size_t tail = 0; tail < rest; ++tail)
                L1.at(a * rest + tail, c * rest + tail) = S.L().at(a, c);
    return P * L1 * P;
}

ChPlusReport verify_ch_plus(const SphereAlgebra& S, const OrbitSpec& spec) {
    const ParamSetPtr& ps = S.params();
    const auto& rs = S.system();
    AlgMatrix<QScalar> Lp = extend_L_plus(S, 2);
    ScalarMatrix proj = symmetrizer(S.ambient().symmetry(), 2);
    AlgMatrix<QScalar> P = AlgMatrix<QScalar>::from_scalar_matrix(proj, &rs);

    QScalar q = QScalar::q(ps);
    QScalar kappa = q.inv() / (q + q.inv()); // q^-1 / 2_q
    QScalar m = spec.a * kappa;

    ChPlusReport rep;
    rep.e1 = spec.a + m;
    rep.e2 = spec.b + spec.a * m;
    rep.e3 = spec.b * m;

    AlgMatrix<QScalar> Lp2 = Lp * Lp;
    AlgMatrix<QScalar> Lp3 = Lp2 * Lp;

    AlgMatrix<QScalar> vieta =
        Lp3 - Lp2.scale(rep.e1) + Lp.scale(rep.e2) - P.scale(rep.e3);
    rep.vieta_ok = vieta.is_zero();

    // variant with the sign of b flipped in the last two coefficients
    QScalar f2 = spec.a * spec.a * kappa - spec.b;
    QScalar f3 = -(spec.a * spec.b * kappa);
    AlgMatrix<QScalar> flipped = Lp3 - Lp2.scale(rep.e1) + Lp.scale(f2) - P.scale(f3);
    rep.flipped_ok = flipped.is_zero();

    auto q_free = [](const QScalar& s) {
        return s.num().degree_in(0) <= 0 && s.den().degree_in(0) <= 0;
    };
    rep.q_independent = q_free(rep.e1) && q_free(rep.e2) && q_free(rep.e3);
    return rep;
}

} // namespace qre
