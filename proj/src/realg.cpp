#include "qre/realg.hpp"

#include "qre/wordspace.hpp"

namespace qre {

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

using Ctx = FieldOps<QScalar>::Context;

} // namespace

REAlgebra::REAlgebra(HeckeSymmetry sym, std::unique_ptr<RewriteSystem<QScalar>> rs,
                     std::optional<QScalar> hbar)
    : sym_(std::move(sym)), rs_(std::move(rs)), hbar_(std::move(hbar)) {
    size_t n = sym_.dim();
    L_ = AlgMatrix<QScalar>(n, n, rs_.get());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) L_.at(i, j) = gen_poly(i, j);
}

std::vector<NCPoly<QScalar>> re_relation_entries(const HeckeSymmetry& R, const QScalar& hbar) {
    const ParamSetPtr& ps = R.params();
    require_same_params(ps, hbar.params());
    Ctx ctx{ps};
    size_t n = R.dim();
    size_t N = n * n;

    FreeMat<QScalar> Rm(N, N, ctx);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            Rm.at(i, j) = NCPoly<QScalar>::scalar(ctx, R.matrix().at(i, j));

    // L1 = L (x) id with generator entries l^a_c at ((a b), (c d)), b = d
    FreeMat<QScalar> L1(N, N, ctx);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                L1.at(a * n + b, c * n + b) =
                    NCPoly<QScalar>::generator(ctx, int(a * n + c), ctx.one());

    FreeMat<QScalar> lhs = Rm * L1 * Rm * L1;
    FreeMat<QScalar> rhs = L1 * Rm * L1 * Rm;
    FreeMat<QScalar> diff = lhs - rhs;
    if (!hbar.is_zero()) {
        FreeMat<QScalar> lin = (Rm * L1 - L1 * Rm).scale(hbar);
        diff = diff - lin;
    }
    return diff.data;
}

std::vector<NCPoly<QScalar>> dedup_relations(const std::vector<NCPoly<QScalar>>& rels,
                                             const Ctx& ctx, size_t ngens, int max_degree) {
    WordBasis<QScalar> basis(free_words_upto(ngens, max_degree), ctx);
    RowSpace<QScalar> span(basis.size(), ctx);
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        span.insert(basis.coords(r));
    }
    std::vector<NCPoly<QScalar>> out;
    for (auto& row : span.rows()) out.push_back(basis.from_coords(row));
    std::sort(out.begin(), out.end(), [](const NCPoly<QScalar>& a, const NCPoly<QScalar>& b) {
        return WordOrder{}(a.lead_word(), b.lead_word());
    });
    return out;
}

namespace {

REAlgebra build_impl(const HeckeSymmetry& R, const QScalar& hbar, bool shifted, int degree) {
    Ctx ctx{R.params()};
    size_t n = R.dim();
    Presentation<QScalar> pres;
    pres.ctx = ctx;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            pres.generators.push_back("l" + std::to_string(i + 1) + std::to_string(j + 1));
    pres.relations = dedup_relations(re_relation_entries(R, hbar), ctx, n * n, 2);
    auto rs = std::make_unique<RewriteSystem<QScalar>>(complete_to_degree(pres, degree));
    return REAlgebra(R, std::move(rs), shifted ? std::optional<QScalar>(hbar) : std::nullopt);
}

} // namespace

REAlgebra build_re_algebra(const HeckeSymmetry& R, int degree) {
    return build_impl(R, QScalar::zero(R.params()), false, degree);
}

REAlgebra build_reh_algebra(const HeckeSymmetry& R, const QScalar& hbar, int degree) {
    return build_impl(R, hbar, true, degree);
}

FlatnessReport check_flatness(const REAlgebra& A, int dmax) {
    FlatnessReport rep;
    rep.filtered = A.shifted();
    long ngen = long(A.n() * A.n());
    long cumulative = 0;
    for (int d = 0; d <= dmax; ++d) {
        long expected = binom(ngen + d - 1, d);
        long actual;
        if (rep.filtered) {
            cumulative += expected;
            expected = cumulative;
            actual = A.system().filtered_dimension(d);
        } else {
            actual = A.system().graded_dimension(d);
        }
        rep.rows.push_back({d, expected, actual});
        if (expected != actual) rep.ok = false;
    }
    return rep;
}

TraceForm quantum_trace(const REAlgebra& A) {
    const auto& rs = A.system();
    Ctx ctx = rs.ctx();
    size_t n = A.n();
    WordBasis<QScalar> basis(rs.word_basis(2), ctx);

    // rows: coefficient of each basis word in nf([sum_i d_i l^i_i, g]) per generator g
    size_t ngen = n * n;
    Matrix<QScalar> sys(ngen * basis.size(), n, ctx);
    for (size_t g = 0; g < ngen; ++g) {
        NCPoly<QScalar> gp = NCPoly<QScalar>::generator(ctx, int(g), ctx.one());
        for (size_t i = 0; i < n; ++i) {
            NCPoly<QScalar> di = A.gen_poly(i, i);
            auto comm = rs.normal_form(di * gp - gp * di);
            auto coords = basis.coords(comm);
            for (size_t w = 0; w < coords.size(); ++w)
                sys.at(g * basis.size() + w, i) = coords[w];
        }
    }
    auto null = sys.nullspace();
    if (null.empty()) throw NoSolution("quantum trace: no central diagonal form");
    if (null.size() > 1) throw SolutionNotUnique("quantum trace: solution space has dimension " +
                                                 std::to_string(null.size()));
    std::vector<QScalar> d = null[0];
    // normalize so the q -> 1 limit of D is the identity matrix
    size_t pivot = 0;
    while (pivot < d.size() && d[pivot].is_zero()) ++pivot;
    if (pivot == d.size()) throw NoSolution("quantum trace: zero solution");
    QScalar scale = d[pivot].inv();
    for (auto& x : d) x = x * scale;
    for (auto& x : d)
        if (x.classical_limit() != Rat(1))
            throw VerificationFailed("quantum trace: classical limit is not the identity");

    TraceForm tf;
    tf.diag = d;
    tf.trace = NCPoly<QScalar>(ctx);
    for (size_t i = 0; i < n; ++i) tf.trace = tf.trace + A.gen_poly(i, i) * d[i];
    return tf;
}

bool is_central(const REAlgebra& A, const NCPoly<QScalar>& z) {
    const auto& rs = A.system();
    for (size_t g = 0; g < A.n() * A.n(); ++g) {
        NCPoly<QScalar> gp = NCPoly<QScalar>::generator(rs.ctx(), int(g), rs.ctx().one());
        if (!rs.normal_form(z * gp - gp * z).is_zero()) return false;
    }
    return true;
}

CHData ch_coefficients(const REAlgebra& A, const TraceForm& tf) {
    const auto& rs = A.system();
    Ctx ctx = rs.ctx();
    size_t n = A.n();
    int p = hecke_rank(A.symmetry());

    // matrix powers L^1..L^p
    std::vector<AlgMatrix<QScalar>> powers;
    powers.push_back(A.L());
    for (int k = 2; k <= p; ++k) powers.push_back(powers.back() * A.L());

    // ansatz bases: sigma(m) over words of degree == m (graded case) or <= m
    std::vector<std::vector<Word>> ansatz(size_t(p - 1));
    std::vector<size_t> offset(size_t(p - 1));
    size_t nunk = 0;
    for (int m = 1; m <= p - 1; ++m) {
        std::vector<Word> ws =
            A.shifted() ? rs.word_basis(m) : rs.irreducible_words(m);
        offset[size_t(m - 1)] = nunk;
        nunk += ws.size();
        ansatz[size_t(m - 1)] = std::move(ws);
    }

    WordBasis<QScalar> basis(rs.word_basis(p), ctx);

    // build equations from off-diagonal entries until the solution is pinned
    std::vector<std::vector<QScalar>> rows;
    std::vector<QScalar> rhs;
    auto add_entry_rows = [&](size_t r, size_t c) {
        // sum_{k=0}^{p} (-1)^k L^k sigma(p-k) at (r, c), r != c
        std::vector<std::vector<QScalar>> block(basis.size(),
                                                std::vector<QScalar>(nunk, ctx.zero()));
        std::vector<QScalar> known(basis.size(), ctx.zero());
        // k = p: (-1)^p (L^p)_{rc}
        {
            auto coords = basis.coords(rs.normal_form(powers[size_t(p - 1)].at(r, c)));
            for (size_t w = 0; w < coords.size(); ++w)
                known[w] = (p % 2 == 0) ? coords[w] : -coords[w];
        }
        // k = p - m for m = 1..p-1: (-1)^{p-m} sigma(m) * (L^{p-m})_{rc}
        for (int m = 1; m <= p - 1; ++m) {
            int k = p - m;
            const auto& entry = powers[size_t(k - 1)].at(r, c);
            for (size_t wi = 0; wi < ansatz[size_t(m - 1)].size(); ++wi) {
                NCPoly<QScalar> prod = NCPoly<QScalar>::monomial(ctx, ansatz[size_t(m - 1)][wi],
                                                                ctx.one()) *
                                       entry;
                auto coords = basis.coords(rs.normal_form(prod));
                for (size_t w = 0; w < coords.size(); ++w) {
                    QScalar v = (k % 2 == 0) ? coords[w] : -coords[w];
                    block[w][offset[size_t(m - 1)] + wi] = v;
                }
            }
        }
        for (size_t w = 0; w < basis.size(); ++w) {
            rows.push_back(std::move(block[w]));
            rhs.push_back(-known[w]);
        }
    };

    std::optional<Matrix<QScalar>::SolveResult> sol;
    for (size_t r = 0; r < n && (!sol || sol->kernel_dim > 0); ++r)
        for (size_t c = 0; c < n && (!sol || sol->kernel_dim > 0); ++c) {
            if (r == c) continue;
            add_entry_rows(r, c);
            Matrix<QScalar> m(rows.size(), nunk, ctx);
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < nunk; ++j) m.at(i, j) = rows[i][j];
            sol = m.solve(rhs);
            if (!sol) throw NoSolution("Cayley-Hamilton: inconsistent linear system");
        }
    if (!sol || sol->kernel_dim > 0)
        throw SolutionNotUnique("Cayley-Hamilton: coefficients not pinned by off-diagonal entries");

    CHData ch;
    ch.p = p;
    for (int m = 1; m <= p - 1; ++m) {
        NCPoly<QScalar> s(ctx);
        for (size_t wi = 0; wi < ansatz[size_t(m - 1)].size(); ++wi)
            s.add_term(ansatz[size_t(m - 1)][wi], sol->solution[offset[size_t(m - 1)] + wi]);
        ch.sigma.push_back(std::move(s));
    }
    // sigma(p) from the (0,0) diagonal entry
    NCPoly<QScalar> sp(ctx);
    {
        NCPoly<QScalar> acc(ctx);
        for (int k = 1; k <= p; ++k) {
            NCPoly<QScalar> term = (k == p)
                                       ? powers[size_t(k - 1)].at(0, 0)
                                       : ch.sigma[size_t(p - k - 1)] * powers[size_t(k - 1)].at(0, 0);
            if (k % 2 == 1) term = -term;
            acc = acc + term;
        }
        sp = rs.normal_form(-acc);
    }
    ch.sigma.push_back(std::move(sp));

    // verification: full reduction of the identity and centrality of each sigma
    for (auto& s : ch.sigma)
        if (!is_central(A, s)) throw NoSolution("Cayley-Hamilton: coefficient not central");
    if (!ch_residual(A, ch).is_zero())
        throw NoSolution("Cayley-Hamilton: identity does not reduce to zero");

    // sigma(1) against the quantum trace
    const NCPoly<QScalar>& s1 = ch.sigma[0];
    ch.trace_ratio = QScalar::zero(ctx.ps);
    if (!tf.trace.is_zero() && !s1.is_zero()) {
        auto it = tf.trace.terms().begin();
        for (auto& [w, c] : s1.terms()) {
            if (w == it->first) {
                ch.trace_ratio = c / it->second;
                break;
            }
        }
        if (!A.shifted()) {
            NCPoly<QScalar> diff = s1 - tf.trace * ch.trace_ratio;
            if (!diff.is_zero())
                throw NoSolution("Cayley-Hamilton: sigma(1) is not proportional to the trace");
        }
    }
    return ch;
}

AlgMatrix<QScalar> ch_residual(const REAlgebra& A, const CHData& ch) {
    Ctx ctx = A.system().ctx();
    std::vector<NCPoly<QScalar>> coeffs;
    for (int k = 0; k <= ch.p; ++k) {
        NCPoly<QScalar> c = (k == ch.p) ? NCPoly<QScalar>::one(ctx)
                                        : ch.sigma[size_t(ch.p - k - 1)];
        if (k % 2 == 1) c = -c;
        coeffs.push_back(std::move(c));
    }
    return mat_poly(A.L(), coeffs);
}

bool shift_check(const HeckeSymmetry& R) {
    const ParamSetPtr& ps = R.params();
    if (ps->index_of("h") < 0)
        throw ParamMismatch("shift_check requires the parameter h to be declared");
    Ctx ctx{ps};
    QScalar h = QScalar::param(ps, "h");
    QScalar q = QScalar::q(ps);
    size_t n = R.dim();

    auto plain = re_relation_entries(R, QScalar::zero(ps));
    auto shifted = re_relation_entries(R, h * (q - q.inv()));

    // images l^i_j -> l^i_j - h delta^i_j
    std::vector<NCPoly<QScalar>> images;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            NCPoly<QScalar> im = NCPoly<QScalar>::generator(ctx, int(i * n + j), ctx.one());
            if (i == j) im = im - NCPoly<QScalar>::scalar(ctx, h);
            images.push_back(std::move(im));
        }

    for (size_t e = 0; e < plain.size(); ++e) {
        NCPoly<QScalar> subst = substitute_generators(plain[e], images);
        if (subst != shifted[e]) return false;
    }
    return true;
}

} // namespace qre
