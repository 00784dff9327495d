#include "doctest.h"

#include "qre/realg.hpp"
#include "qre/wordspace.hpp"

using namespace qre;

namespace {

using Ctx = FieldOps<QScalar>::Context;

// abelianization: sort the letters of every word; for q = 1 comparisons
NCPoly<QScalar> abelianized_at_q1(const NCPoly<QScalar>& p) {
    NCPoly<QScalar> out(p.ctx());
    for (auto& [w, c] : p.terms()) {
        Word s = w;
        std::sort(s.begin(), s.end());
        Rat lim = c.classical_limit();
        out.add_term(s, QScalar::from_rat(c.params(), lim));
    }
    return out;
}

// span of commutators [l_a, l_b] in the degree-2 word space over Q(q)
RowSpace<QScalar> commutator_span(const Ctx& ctx, size_t ngens, const WordBasis<QScalar>& basis) {
    RowSpace<QScalar> span(basis.size(), ctx);
    for (size_t a = 0; a < ngens; ++a)
        for (size_t b = a + 1; b < ngens; ++b) {
            NCPoly<QScalar> p(ctx);
            p.add_term(word_of({int(a), int(b)}), ctx.one());
            p.add_term(word_of({int(b), int(a)}), -ctx.one());
            span.insert(basis.coords(p));
        }
    return span;
}

} // namespace

TEST_CASE("RE presentation for n=2") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    auto A = build_re_algebra(R, 6);

    CHECK(A.presentation().relations.size() == 6);
    CHECK(A.system().fully_confluent());
    CHECK(A.system().graded_dimension(2) == 10);

    // dense-elimination oracle for low degrees
    for (int d = 0; d <= 3; ++d)
        CHECK(A.system().graded_dimension(d) == ideal_dimension_oracle(A.presentation(), d));
}

TEST_CASE("RE flatness n=2: symmetric algebra dimensions") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(2, ps), 6);
    auto rep = check_flatness(A, 5);
    CHECK(rep.ok);
    std::vector<long> dims;
    for (auto& row : rep.rows) dims.push_back(row.actual);
    CHECK(dims == std::vector<long>{1, 4, 10, 20, 35, 56});
}

TEST_CASE("RE relations at q=1 are commutators") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    // raw matrix entries: coefficients are Laurent in q, so q = 1 is regular
    auto rels = re_relation_entries(R, QScalar::zero(ps));
    Ctx ctx{ps};
    WordBasis<QScalar> basis(free_words(4, 2), ctx);
    auto comms = commutator_span(ctx, 4, basis);
    CHECK(comms.dim() == 6);
    RowSpace<QScalar> limits(basis.size(), ctx);
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        NCPoly<QScalar> lim(ctx);
        for (auto& [w, c] : r.terms())
            lim.add_term(w, QScalar::from_rat(ps, c.classical_limit()));
        if (lim.is_zero()) continue;
        CHECK(comms.contains(basis.coords(lim)));
        limits.insert(basis.coords(lim));
    }
    // the limits span the full commutator pattern
    CHECK(limits.dim() == 6);
}

TEST_CASE("RE n=3 dimensions") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(3, ps), 4);
    CHECK(A.presentation().relations.size() == 36);
    CHECK(A.system().graded_dimension(2) == 45);
    auto rep = check_flatness(A, 3);
    CHECK(rep.ok);
    CHECK(rep.rows[3].actual == 165);
}

TEST_CASE("corrupted relation breaks flatness") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    Ctx ctx{ps};
    auto rels = dedup_relations(re_relation_entries(R, QScalar::zero(ps)), ctx, 4, 2);
    // corrupt one relation by a stray quadratic word
    rels[0].add_term(word_of({0, 0}), QScalar::one(ps));
    Presentation<QScalar> pres;
    pres.ctx = ctx;
    pres.generators = {"l11", "l12", "l21", "l22"};
    pres.relations = rels;
    auto rs = complete_to_degree(pres, 4);
    bool mismatch = rs.graded_dimension(2) != 10 || rs.graded_dimension(3) != 20;
    CHECK(mismatch);
}

TEST_CASE("quantum trace: solved, unique, central") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(2, ps), 6);
    auto tf = quantum_trace(A);

    REQUIRE(tf.diag.size() == 2);
    CHECK(tf.diag[0].classical_limit() == Rat(1));
    CHECK(tf.diag[1].classical_limit() == Rat(1));
    // the two weights differ at generic q
    CHECK(tf.diag[0] != tf.diag[1]);
    CHECK(is_central(A, tf.trace));

    // centrality against every degree-2 basis word as well
    const auto& rs = A.system();
    for (auto& w : rs.irreducible_words(2)) {
        auto p = NCPoly<QScalar>::monomial(rs.ctx(), w, rs.ctx().one());
        CHECK(rs.normal_form(tf.trace * p - p * tf.trace).is_zero());
    }
}

TEST_CASE("naive trace is not central at generic q") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(2, ps), 6);
    Ctx ctx{ps};
    NCPoly<QScalar> naive = A.gen_poly(0, 0) + A.gen_poly(1, 1);
    CHECK_FALSE(is_central(A, naive));
}

TEST_CASE("trace commutators lie in the ideal (dense route, no rewriting)") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(2, ps), 6);
    auto tf = quantum_trace(A);
    Ctx ctx{ps};

    // degree 2: commutators with the generators against the bare relation span
    WordBasis<QScalar> basis2(free_words(4, 2), ctx);
    RowSpace<QScalar> span2(basis2.size(), ctx);
    for (auto& r : A.presentation().relations) span2.insert(basis2.coords(r));
    for (size_t g = 0; g < 4; ++g) {
        NCPoly<QScalar> gp = NCPoly<QScalar>::generator(ctx, int(g), ctx.one());
        NCPoly<QScalar> comm = tf.trace * gp - gp * tf.trace;
        CHECK(span2.contains(basis2.coords(comm)));
    }

    // degree 3: commutators with every quadratic word against span of a*r*b
    WordBasis<QScalar> basis3(free_words(4, 3), ctx);
    RowSpace<QScalar> span3(basis3.size(), ctx);
    for (auto& r : A.presentation().relations)
        for (size_t g = 0; g < 4; ++g) {
            span3.insert(basis3.coords(r.sandwich(ctx.one(), Word(1, char(g)), Word())));
            span3.insert(basis3.coords(r.sandwich(ctx.one(), Word(), Word(1, char(g)))));
        }
    for (auto& w : free_words(4, 2)) {
        NCPoly<QScalar> wp = NCPoly<QScalar>::monomial(ctx, w, ctx.one());
        NCPoly<QScalar> comm = tf.trace * wp - wp * tf.trace;
        CHECK(span3.contains(basis3.coords(comm)));
    }
}

TEST_CASE("Cayley-Hamilton for n=2") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(2, ps), 6);
    auto tf = quantum_trace(A);
    auto ch = ch_coefficients(A, tf);

    CHECK(ch.p == 2);
    REQUIRE(ch.sigma.size() == 2);
    CHECK_FALSE(ch.trace_ratio.is_zero());
    CHECK(is_central(A, ch.sigma[0]));
    CHECK(is_central(A, ch.sigma[1]));
    CHECK(ch_residual(A, ch).is_zero());

    // q = 1 limits: trace and determinant of a commutative 2x2 matrix
    auto s1 = abelianized_at_q1(ch.sigma[0]);
    NCPoly<QScalar> tr(A.system().ctx());
    tr.add_term(Word(1, char(0)), QScalar::one(ps));
    tr.add_term(Word(1, char(3)), QScalar::one(ps));
    CHECK(s1 == tr);

    auto s2 = abelianized_at_q1(ch.sigma[1]);
    NCPoly<QScalar> det(A.system().ctx());
    Word w1;
    w1.push_back(char(0));
    w1.push_back(char(3)); // l11 l22
    Word w2;
    w2.push_back(char(1));
    w2.push_back(char(2)); // l12 l21
    det.add_term(w1, QScalar::one(ps));
    det.add_term(w2, -QScalar::one(ps));
    CHECK(s2 == det);
}

TEST_CASE("Cayley-Hamilton for n=3") {
    auto ps = ParamSet::make();
    auto A = build_re_algebra(standard_r(3, ps), 4);
    auto tf = quantum_trace(A);
    auto ch = ch_coefficients(A, tf);
    CHECK(ch.p == 3);
    REQUIRE(ch.sigma.size() == 3);
    CHECK(ch_residual(A, ch).is_zero());
    for (auto& s : ch.sigma) CHECK(is_central(A, s));
}

TEST_CASE("shift identity in the free algebra") {
    auto ps = ParamSet::make({"h"});
    auto R = standard_r(2, ps);
    CHECK(shift_check(R));
}

TEST_CASE("shifted algebra at hbar = 0 coincides with the plain one") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    auto plain = re_relation_entries(R, QScalar::zero(ps));
    auto shifted = re_relation_entries(R, QScalar::zero(ps));
    for (size_t i = 0; i < plain.size(); ++i) CHECK(plain[i] == shifted[i]);
}

TEST_CASE("shifted algebra is a flat filtered deformation") {
    auto ps = ParamSet::make({"hbar"});
    auto R = standard_r(2, ps);
    auto A = build_reh_algebra(R, QScalar::param(ps, "hbar"), 5);
    auto rep = check_flatness(A, 4);
    CHECK(rep.ok);
    std::vector<long> dims;
    for (auto& row : rep.rows) dims.push_back(row.actual);
    CHECK(dims == std::vector<long>{1, 5, 15, 35, 70});
}

TEST_CASE("q -> 1 shifted relations match the gl(2) bracket pattern") {
    auto ps = ParamSet::make({"hbar"});
    auto R = standard_r(2, ps);
    QScalar hb = QScalar::param(ps, "hbar");
    auto rels = dedup_relations(re_relation_entries(R, hb), Ctx{ps}, 4, 2);

    // substitute q = 1 in every coefficient
    std::vector<NCPoly<QScalar>> limits;
    Ctx ctx{ps};
    for (auto& r : rels) {
        NCPoly<QScalar> lim(ctx);
        for (auto& [w, c] : r.terms()) lim.add_term(w, c.substitute("q", QScalar::one(ps)));
        if (!lim.is_zero()) limits.push_back(lim);
    }

    // expected: e_ab e_cd - e_cd e_ab - hbar (delta_cb e_ad - delta_ad e_cb),
    // built from gl(2) structure constants with l^i_j identified as e_ij
    auto gen = [&](size_t a, size_t b) { return int(a * 2 + b); };
    std::vector<NCPoly<QScalar>> expected;
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c)
                for (size_t d = 0; d < 2; ++d) {
                    NCPoly<QScalar> r(ctx);
                    r.add_term(word_of({gen(a, b), gen(c, d)}), QScalar::one(ps));
                    r.add_term(word_of({gen(c, d), gen(a, b)}), -QScalar::one(ps));
                    if (b == c) r.add_term(Word(1, char(gen(a, d))), -hb);
                    if (d == a) r.add_term(Word(1, char(gen(c, b))), hb);
                    if (!r.is_zero()) expected.push_back(r);
                }

    WordBasis<QScalar> basis(free_words_upto(4, 2), ctx);
    RowSpace<QScalar> span_exp(basis.size(), ctx);
    for (auto& r : expected) span_exp.insert(basis.coords(r));
    RowSpace<QScalar> span_lim(basis.size(), ctx);
    for (auto& r : limits) span_lim.insert(basis.coords(r));

    CHECK(span_exp.dim() == span_lim.dim());
    bool fwd = true, bwd = true;
    for (auto& r : limits)
        if (!span_exp.contains(basis.coords(r))) fwd = false;
    for (auto& r : expected)
        if (!span_lim.contains(basis.coords(r))) bwd = false;
    CHECK(fwd);
    CHECK(bwd);
}
