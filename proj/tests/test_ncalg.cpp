#include "doctest.h"

#include "qre/algmatrix.hpp"
#include "qre/expr.hpp"
#include "qre/wordspace.hpp"

using namespace qre;

namespace {

using Ctx = FieldOps<QScalar>::Context;

Presentation<QScalar> make_presentation(const ParamSetPtr& ps,
                                        std::vector<std::string> gens,
                                        const std::vector<std::string>& rels) {
    Presentation<QScalar> p;
    p.ctx = Ctx{ps};
    p.generators = std::move(gens);
    for (auto& r : rels) p.relations.push_back(parse_ncpoly(p.ctx, p.generators, r));
    return p;
}

} // namespace

TEST_CASE("commutative polynomial ring via rewriting") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - x*y"});
    auto rs = complete_to_degree(p, 6);

    CHECK(rs.rule_count() == 1);
    CHECK(rs.fully_confluent());
    // dims of k[x,y]: d+1 per degree
    for (int d = 0; d <= 6; ++d) CHECK(rs.graded_dimension(d) == d + 1);

    auto f = parse_ncpoly(p.ctx, p.generators, "y*x*y - x*y*y");
    CHECK(rs.normal_form(f).is_zero());
}

TEST_CASE("truncated generator x^2 = 0") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x"}, {"x*x"});
    auto rs = complete_to_degree(p, 6);
    CHECK(rs.graded_dimension(0) == 1);
    CHECK(rs.graded_dimension(1) == 1);
    CHECK(rs.graded_dimension(2) == 0);
    CHECK(rs.graded_dimension(3) == 0);
}

TEST_CASE("free algebra dimensions") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y"}, {});
    auto rs = complete_to_degree(p, 5);
    CHECK(rs.graded_dimension(2) == 4);
    CHECK(rs.graded_dimension(3) == 8);
}

TEST_CASE("commutative ring on 4 generators, d=2 -> 10") {
    auto ps = ParamSet::make();
    std::vector<std::string> rels;
    std::vector<std::string> gens{"a", "b", "c", "d"};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            rels.push_back(gens[j] + "*" + gens[i] + " - " + gens[i] + "*" + gens[j]);
    auto p = make_presentation(ps, gens, rels);
    auto rs = complete_to_degree(p, 4);
    CHECK(rs.graded_dimension(2) == 10);
    CHECK(rs.graded_dimension(3) == 20);
}

TEST_CASE("normal form is a projection and multiplicative") {
    auto ps = ParamSet::make();
    // q-plane: y x = q x y
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - q*x*y"});
    auto rs = complete_to_degree(p, 8);

    auto f = parse_ncpoly(p.ctx, p.generators, "y*x*y*x + x*x - q*y*y");
    auto g = parse_ncpoly(p.ctx, p.generators, "x*y - y + 2");
    auto nf = [&](const NCPoly<QScalar>& h) { return rs.normal_form(h); };

    CHECK(nf(nf(f)) == nf(f));
    CHECK(nf(f + g) == nf(nf(f) + nf(g)));
    CHECK(nf(f * g) == nf(nf(f) * nf(g)));
}

TEST_CASE("graded dimension independent of generator order") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y", "z"},
                               {"y*x - q*x*y", "z*y - q*y*z", "z*x - x*z"});
    auto rs = complete_to_degree(p, 5);
    auto p2 = permute_generators(p, {2, 0, 1});
    auto rs2 = complete_to_degree(p2, 5);
    for (int d = 0; d <= 5; ++d) CHECK(rs.graded_dimension(d) == rs2.graded_dimension(d));
}

TEST_CASE("dense oracle agrees with rewriting dimensions") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - q*x*y - x*x"});
    auto rs = complete_to_degree(p, 4);
    for (int d = 0; d <= 3; ++d)
        CHECK(rs.graded_dimension(d) == ideal_dimension_oracle(p, d));
}

TEST_CASE("filtered dimensions for inhomogeneous relations") {
    auto ps = ParamSet::make();
    // x y - y x = 1 (a Weyl-algebra flavour): flat filtered quotient
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - x*y - 1"});
    auto rs = complete_to_degree(p, 6);
    for (int d = 0; d <= 5; ++d) {
        long expected = (d + 1) * (d + 2) / 2; // cumulative commutative dims
        CHECK(rs.filtered_dimension(d) == expected);
    }
}

TEST_CASE("degree guard") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - x*y - y*y"});
    auto rs = complete_to_degree(p, 3);
    if (!rs.fully_confluent()) {
        auto f = parse_ncpoly(p.ctx, p.generators, "y*y*x*x");
        CHECK_THROWS_AS((void)rs.normal_form(f), DegreeExceeded);
    }
    auto g = parse_ncpoly(p.ctx, p.generators, "y*x*x");
    CHECK(rs.normal_form(g).degree() <= 3);
}

TEST_CASE("matrix algebra over a quotient") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x", "y"}, {"y*x - q*x*y"});
    auto rs = complete_to_degree(p, 6);

    AlgMatrix<QScalar> m(2, 2, &rs);
    m.at(0, 0) = parse_ncpoly(p.ctx, p.generators, "x");
    m.at(0, 1) = parse_ncpoly(p.ctx, p.generators, "y");
    m.at(1, 0) = parse_ncpoly(p.ctx, p.generators, "q*y");
    m.at(1, 1) = parse_ncpoly(p.ctx, p.generators, "x + 1");

    auto id = AlgMatrix<QScalar>::identity(2, &rs);
    CHECK(m * id == m);
    CHECK(id * m == m);

    // (M * M) entries are reduced to normal form
    auto sq = m * m;
    auto expect = parse_ncpoly(p.ctx, p.generators, "x*y + y*x + y");
    CHECK(sq.at(0, 1) == rs.normal_form(expect));

    // shape and ambient guards
    AlgMatrix<QScalar> bad(3, 2, &rs);
    CHECK_THROWS_AS((void)(m + bad), ShapeMismatch);
    auto rs2 = complete_to_degree(p, 6);
    AlgMatrix<QScalar> other(2, 2, &rs2);
    CHECK_THROWS_AS((void)(m + other), AmbientMismatch);
}

TEST_CASE("mat_poly with central coefficients") {
    auto ps = ParamSet::make();
    auto p = make_presentation(ps, {"x"}, {});
    auto rs = complete_to_degree(p, 8);
    AlgMatrix<QScalar> m(2, 2, &rs);
    // M = [[x, 1], [0, x]]: satisfies (M - x)^2 = 0, i.e. M^2 - 2x M + x^2 = 0
    m.at(0, 0) = parse_ncpoly(p.ctx, p.generators, "x");
    m.at(0, 1) = NCPoly<QScalar>::one(p.ctx);
    m.at(1, 1) = parse_ncpoly(p.ctx, p.generators, "x");
    auto x2 = parse_ncpoly(p.ctx, p.generators, "x*x");
    auto minus2x = parse_ncpoly(p.ctx, p.generators, "-2*x");
    auto one = NCPoly<QScalar>::one(p.ctx);
    CHECK(mat_poly(m, {x2, minus2x, one}).is_zero());
}

TEST_CASE("exact linear algebra") {
    auto ps = ParamSet::make();
    Ctx ctx{ps};
    QScalar q = QScalar::q(ps);

    Matrix<QScalar> a(2, 2, ctx);
    a.at(0, 0) = q;
    a.at(0, 1) = QScalar::one(ps);
    a.at(1, 0) = QScalar::one(ps);
    a.at(1, 1) = q.inv();
    CHECK(a.rank() == 1); // rows proportional

    auto ns = a.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK((a * Matrix<QScalar>::identity(2, ctx)).rank() == 1);
    // nullspace vector really annihilates
    QScalar r0 = a.at(0, 0) * ns[0][0] + a.at(0, 1) * ns[0][1];
    CHECK(r0.is_zero());

    Matrix<QScalar> b(2, 2, ctx);
    b.at(0, 0) = q;
    b.at(1, 1) = q - q.inv();
    auto sol = b.solve({QScalar::one(ps), q});
    REQUIRE(sol.has_value());
    CHECK(sol->kernel_dim == 0);
    CHECK(sol->solution[0] == q.inv());
    CHECK(sol->solution[1] == q / (q - q.inv()));
}
