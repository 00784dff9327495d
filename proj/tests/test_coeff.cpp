#include "doctest.h"

#include <random>

#include "qre/expr.hpp"
#include "qre/extscalar.hpp"
#include "qre/qscalar.hpp"

using namespace qre;

namespace {

// random rational-function generator for property tests
struct Rng {
    std::mt19937 gen{12345};
    QScalar scalar(const ParamSetPtr& ps, int depth = 2) {
        std::uniform_int_distribution<int> coin(0, 5);
        std::uniform_int_distribution<int> small(-4, 4);
        QScalar acc = QScalar::from_int(ps, small(gen));
        for (int t = 0; t < 3; ++t) {
            QScalar term = QScalar::from_int(ps, small(gen));
            for (size_t v = 0; v < ps->size(); ++v) {
                int e = small(gen) / 2;
                term = term * QScalar::param(ps, ps->name(v)).pow(e >= 0 ? e : -e);
            }
            acc = acc + term;
        }
        if (depth > 0 && coin(gen) == 0) {
            QScalar d = scalar(ps, depth - 1);
            if (!d.is_zero()) acc = acc / d;
        }
        return acc;
    }
};

} // namespace

TEST_CASE("q_number values") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);

    CHECK(q_number(ps, 0).is_zero());
    CHECK(q_number(ps, 1) == QScalar::one(ps));
    CHECK(q_number(ps, 2) == q + q.pow(-1));

    // expand (q^3 - q^-3)/(q - q^-1) by exact division
    QScalar three = (q.pow(3) - q.pow(-3)) / (q - q.pow(-1));
    CHECK(q_number(ps, 3) == three);
    CHECK(q_number(ps, 3) == q.pow(2) + QScalar::one(ps) + q.pow(-2));

    // independent numeric oracle: evaluate both routes at rational points
    for (long num : {2L, 3L, 5L, 7L}) {
        Rat x(num, 1);
        Rat direct = q_number(ps, 3).eval({{"q", x}});
        Rat brute = (x * x * x - 1 / (x * x * x)) / (x - 1 / x);
        brute.canonicalize();
        CHECK(direct == brute);
    }
}

TEST_CASE("q_number classical limit is n") {
    auto ps = ParamSet::make();
    for (long n = 1; n <= 8; ++n) CHECK(q_number(ps, n).classical_limit() == Rat(n));
}

TEST_CASE("classical_limit cancels removable singularities") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);

    CHECK(q_number(ps, 2).classical_limit() == Rat(2));
    QScalar s = (q.pow(3) - q.pow(-3)) / (q - q.pow(-1));
    CHECK(s.classical_limit() == Rat(3));
    CHECK_THROWS_AS((QScalar::one(ps) / (q - q.pow(-1))).classical_limit(), PoleAtOne);
}

TEST_CASE("field arithmetic basics") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);

    CHECK(q.inv() == q.pow(-1));
    QScalar d = q - q.pow(-1);
    CHECK(d * d.inv() == QScalar::one(ps));
    CHECK_THROWS_AS(QScalar::zero(ps).inv(), DivisionByZero);
}

TEST_CASE("field axioms on randomized inputs") {
    auto ps = ParamSet::make({"h"});
    Rng rng;
    for (int i = 0; i < 40; ++i) {
        QScalar a = rng.scalar(ps), b = rng.scalar(ps), c = rng.scalar(ps);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == QScalar::zero(ps));
        if (!a.is_zero()) CHECK(a * a.inv() == QScalar::one(ps));
    }
}

TEST_CASE("canonical form is idempotent and structural") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);
    // same value along two different construction routes
    QScalar a = (q.pow(2) - QScalar::one(ps)) / (q - QScalar::one(ps));
    QScalar b = q + QScalar::one(ps);
    CHECK(a == b);
    CHECK(a.str() == b.str());
    // rebuilding from the canonical fraction changes nothing
    QScalar c = QScalar::from_fraction(ps, a.num(), a.den());
    CHECK(c == a);
    CHECK(c.num() == a.num());
    CHECK(c.den() == a.den());
}

TEST_CASE("parameter sets do not mix") {
    auto ps1 = ParamSet::make();
    auto ps2 = ParamSet::make({"h"});
    QScalar a = QScalar::q(ps1), b = QScalar::q(ps2);
    CHECK_THROWS_AS((void)(a + b), ParamMismatch);
}

TEST_CASE("substitution and evaluation") {
    auto ps = ParamSet::make({"c"});
    QScalar q = QScalar::q(ps);
    QScalar c = QScalar::param(ps, "c");
    QScalar s = c * q + c.pow(2);

    auto ps_q = ParamSet::make();
    QScalar sub = s.substitute("c", QScalar::q(ps_q).pow(2));
    CHECK(sub == QScalar::q(ps_q).pow(3) + QScalar::q(ps_q).pow(4));

    CHECK(s.eval({{"q", Rat(2)}, {"c", Rat(3)}}) == Rat(15));
    CHECK(s.classical_limit({{"c", Rat(-1)}}) == Rat(0));
}

TEST_CASE("perfect squares") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);
    QScalar s = (q + q.pow(-1)) * (q + q.pow(-1));
    auto rt = s.try_sqrt();
    REQUIRE(rt.has_value());
    CHECK((*rt) * (*rt) == s);
    CHECK_FALSE((q + QScalar::one(ps)).try_sqrt().has_value());
    CHECK_FALSE((-QScalar::one(ps)).try_sqrt().has_value());
}

TEST_CASE("quadratic extension") {
    auto ps = ParamSet::make({"c2"});
    QScalar c2 = QScalar::param(ps, "c2");
    QScalar r = -c2; // nu^2 = -c2
    ExtScalar nu = ExtScalar::root(r);

    CHECK(nu * nu == ExtScalar::embed(r, r));
    ExtScalar x = ExtScalar(QScalar::one(ps), QScalar::from_int(ps, 2), r);
    CHECK(x * x.inv() == ExtScalar::embed(QScalar::one(ps), r));
    // embedding is lossless
    ExtScalar e = ExtScalar::embed(c2, r);
    CHECK(e.in_base_field());
    CHECK(e.base() == c2);
}

TEST_CASE("scalar expression parser round trip") {
    auto ps = ParamSet::make({"h"});
    QScalar q = QScalar::q(ps);
    QScalar h = QScalar::param(ps, "h");

    CHECK(parse_scalar(ps, "q^2 + 1 - 2*q^-1") == q.pow(2) + QScalar::one(ps) - q.pow(-1) * QScalar::from_int(ps, 2));
    CHECK(parse_scalar(ps, "(q - q^-1) * h") == (q - q.pow(-1)) * h);
    CHECK(parse_scalar(ps, "-3/2") == QScalar::from_rat(ps, Rat(-3, 2)));
    CHECK(parse_scalar(ps, "1/(q+1)") == (q + QScalar::one(ps)).inv());

    QScalar v = (q.pow(3) - q.pow(-2)) / (q + QScalar::from_int(ps, 7)) * h.pow(2);
    CHECK(parse_scalar(ps, v.str()) == v);
    CHECK_THROWS_AS(parse_scalar(ps, "q + zz"), ParseError);
    CHECK_THROWS_AS(parse_scalar(ps, "q +"), ParseError);
}
