#include "doctest.h"

#include "qre/rtt.hpp"
#include "qre/wordspace.hpp"

using namespace qre;

namespace {
using Ctx = FieldOps<QScalar>::Context;

struct Fixture {
    ParamSetPtr ps = ParamSet::make();
    HeckeSymmetry R = standard_r(2, ps);
    RTTAlgebra rtt = build_rtt(R);
    REAlgebra re = build_re_algebra(R, 6);
};

Fixture& fixture() {
    static Fixture f;
    return f;
}

} // namespace

TEST_CASE("RTT t-subalgebra dimensions") {
    auto& f = fixture();
    CHECK(f.rtt.plain().graded_dimension(2) == 10);
    CHECK(f.rtt.plain().graded_dimension(3) == 20);
    for (int d = 0; d <= 3; ++d)
        CHECK(f.rtt.plain().graded_dimension(d) ==
              ideal_dimension_oracle(f.rtt.plain().source(), d));
}

TEST_CASE("RTT relations at q=1 are commutators") {
    auto& f = fixture();
    Ctx ctx{f.ps};
    // raw entries have regular q = 1 limits
    auto T = [&](size_t i, size_t j) { return int(i * 2 + j); };
    WordBasis<QScalar> basis(free_words(4, 2), ctx);
    RowSpace<QScalar> comms(basis.size(), ctx);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            NCPoly<QScalar> p(ctx);
            p.add_term(word_of({a, b}), ctx.one());
            p.add_term(word_of({b, a}), -ctx.one());
            comms.insert(basis.coords(p));
        }
    (void)T;
    for (auto& [lead, rhs] : f.rtt.plain().rules()) {
        NCPoly<QScalar> rel = NCPoly<QScalar>::monomial(ctx, lead, ctx.one()) - rhs;
        NCPoly<QScalar> lim(ctx);
        for (auto& [w, c] : rel.terms())
            lim.add_term(w, QScalar::from_rat(f.ps, c.classical_limit()));
        CHECK(comms.contains(basis.coords(lim)));
    }
}

TEST_CASE("quantum determinant is central and classically the determinant") {
    auto& f = fixture();
    const auto& rs = f.rtt.plain();
    Ctx ctx{f.ps};
    for (size_t g = 0; g < 4; ++g) {
        NCPoly<QScalar> gp = NCPoly<QScalar>::generator(ctx, int(g), ctx.one());
        CHECK(rs.normal_form(f.rtt.det() * gp - gp * f.rtt.det()).is_zero());
    }
}

TEST_CASE("determinant is group-like under the coproduct") {
    auto& f = fixture();
    CHECK(det_group_like(f.rtt));
}

TEST_CASE("determinant inverse works in the localized system") {
    auto& f = fixture();
    const auto& rs = f.rtt.localized();
    Ctx ctx{f.ps};
    NCPoly<QScalar> dpoly = NCPoly<QScalar>::generator(ctx, f.rtt.dinv_index(), ctx.one());
    CHECK(rs.normal_form(f.rtt.det() * dpoly - NCPoly<QScalar>::one(ctx)).is_zero());
    CHECK(rs.normal_form(dpoly * f.rtt.det() - NCPoly<QScalar>::one(ctx)).is_zero());
}

TEST_CASE("antipode inverts T on both sides") {
    auto& f = fixture();
    auto id = AlgMatrix<QScalar>::identity(2, &f.rtt.localized());
    CHECK(f.rtt.antipode() * f.rtt.T() == id);
    CHECK(f.rtt.T() * f.rtt.antipode() == id);
}

TEST_CASE("classical adjugate fails at generic q") {
    auto& f = fixture();
    const auto& rs = f.rtt.localized();
    Ctx ctx{f.ps};
    // S_cl = dinv * [[t22, -t12], [-t21, t11]]
    NCPoly<QScalar> dpoly = NCPoly<QScalar>::generator(ctx, f.rtt.dinv_index(), ctx.one());
    AlgMatrix<QScalar> Scl(2, 2, &rs);
    auto gen = [&](int g) { return NCPoly<QScalar>::generator(ctx, g, ctx.one()); };
    Scl.at(0, 0) = rs.normal_form(dpoly * gen(3));
    Scl.at(0, 1) = rs.normal_form(-(dpoly * gen(1)));
    Scl.at(1, 0) = rs.normal_form(-(dpoly * gen(2)));
    Scl.at(1, 1) = rs.normal_form(dpoly * gen(0));
    auto prod = Scl * f.rtt.T();
    auto id = AlgMatrix<QScalar>::identity(2, &rs);
    CHECK_FALSE(prod == id);
    auto diff = prod - id;
    auto w = diff.first_nonzero();
    REQUIRE(w.has_value());
    // but its entries all have the right classical limit: the witness entry
    // vanishes at q = 1
    auto witness = diff.at(w->first, w->second);
    for (auto& [word, c] : witness.terms()) CHECK(c.classical_limit() == Rat(0));
}

TEST_CASE("antipode squared returns T classically") {
    auto& f = fixture();
    const auto& rs = f.rtt.localized();
    // S(S(T)) entrywise: substitute generator images t -> S(t) into S entries
    Ctx ctx{f.ps};
    std::vector<NCPoly<QScalar>> images;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) images.push_back(f.rtt.antipode().at(i, j));
    // S(dinv) = det
    images.push_back(f.rtt.det());
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            NCPoly<QScalar> ss = rs.normal_form(
                substitute_generators(f.rtt.antipode().at(i, j), images));
            NCPoly<QScalar> diff =
                ss - NCPoly<QScalar>::generator(ctx, int(i * 2 + j), ctx.one());
            diff = rs.normal_form(diff);
            for (auto& [w, c] : diff.terms()) CHECK(c.classical_limit() == Rat(0));
        }
}

TEST_CASE("coaction maps the ideal into the ideal") {
    auto& f = fixture();
    CoactionSystem cs(f.rtt, f.re);
    CHECK(cs.coaction_preserves_ideal());
}

TEST_CASE("coaction without the antipode fails") {
    auto& f = fixture();
    CoactionSystem cs(f.rtt, f.re);
    CHECK_FALSE(cs.coaction_preserves_ideal_no_antipode());
}

TEST_CASE("coaction on the shifted algebra") {
    auto& f = fixture();
    auto ps2 = ParamSet::make({"hbar"});
    auto R2 = standard_r(2, ps2);
    auto reh = build_reh_algebra(R2, QScalar::param(ps2, "hbar"), 5);
    auto rtt2 = build_rtt(R2);
    CoactionSystem cs(rtt2, reh);
    CHECK(cs.coaction_preserves_ideal());
}

TEST_CASE("power equivariance for k = 1, 2") {
    auto& f = fixture();
    CoactionSystem cs(f.rtt, f.re);
    CHECK(cs.power_equivariance(1));
    CHECK(cs.power_equivariance(2));
}

TEST_CASE("power equivariance for k = 3") {
    auto& f = fixture();
    CoactionSystem cs(f.rtt, f.re);
    CHECK(cs.power_equivariance(3));
}

TEST_CASE("quantum trace is coinvariant") {
    auto& f = fixture();
    CoactionSystem cs(f.rtt, f.re);
    auto tf = quantum_trace(f.re);
    CHECK(cs.trace_invariant(tf.trace));
    // naive trace is not coinvariant
    Ctx ctx{f.ps};
    NCPoly<QScalar> naive = f.re.gen_poly(0, 0) + f.re.gen_poly(1, 1);
    CHECK_FALSE(cs.trace_invariant(naive));
}
