#include "doctest.h"

#include "qre/hecke.hpp"
#include "qre/qscalar.hpp"

using namespace qre;

namespace {

ScalarMatrix flip_matrix(size_t n, const ParamSetPtr& ps) {
    FieldOps<QScalar>::Context ctx{ps};
    ScalarMatrix m(n * n, n * n, ctx);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(j * n + i, i * n + j) = QScalar::one(ps);
    return m;
}

bool classical_equals(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j).classical_limit() != b.at(i, j).classical_limit()) return false;
    return true;
}

} // namespace

TEST_CASE("standard symmetry passes both conditions") {
    auto ps = ParamSet::make();
    for (size_t n : {2u, 3u}) {
        auto R = standard_r(n, ps);
        CHECK(R.braid_checked());
        CHECK(R.hecke_checked());
    }
}

TEST_CASE("standard symmetry at q=1 is the flip") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    CHECK(classical_equals(R.matrix(), flip_matrix(2, ps)));
}

TEST_CASE("flip fails the Hecke condition at generic q") {
    auto ps = ParamSet::make();
    auto flip = flip_matrix(2, ps);
    CHECK(check_braid(flip, 2).ok);
    auto w = check_hecke(flip, 2);
    CHECK_FALSE(w.ok);
    CHECK_FALSE(w.value.empty());
}

TEST_CASE("perturbed entry is rejected with a witness") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    ScalarMatrix bad = R.matrix();
    bad.at(1, 2) = bad.at(1, 2) + QScalar::one(ps);
    auto wb = check_braid(bad, 2);
    auto wh = check_hecke(bad, 2);
    CHECK((!wb.ok || !wh.ok));
    CHECK_THROWS_AS(HeckeSymmetry::validated(2, bad), VerificationFailed);
}

TEST_CASE("k=2 symmetrizer is (R + q^-1)/(q + q^-1)") {
    auto ps = ParamSet::make();
    QScalar q = QScalar::q(ps);
    auto R = standard_r(2, ps);
    auto p2 = symmetrizer(R, 2);
    auto ctx = R.matrix().ctx();
    ScalarMatrix expected =
        (R.matrix() + ScalarMatrix::identity(4, ctx) * q.inv()) * (q + q.inv()).inv();
    CHECK(p2 == expected);
    CHECK(p2.rank() == 3);

    // classical limit: (flip + id)/2
    ScalarMatrix cl = (flip_matrix(2, ps) + ScalarMatrix::identity(4, ctx)) *
                      QScalar::from_rat(ps, Rat(1, 2));
    CHECK(classical_equals(p2, cl));
}

TEST_CASE("symmetrizer ranks count symmetric tensors") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    CHECK(symmetrizer(R, 3).rank() == 4);
    CHECK(symmetrizer(R, 4).rank() == 5);
}

TEST_CASE("k=2 projectors are orthogonal idempotents summing to id") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    auto p = symmetrizer(R, 2);
    auto m = antisymmetrizer(R, 2);
    auto ctx = R.matrix().ctx();
    CHECK(p * p == p);
    CHECK(m * m == m);
    CHECK((p * m).is_zero());
    CHECK((m * p).is_zero());
    CHECK(p + m == ScalarMatrix::identity(4, ctx));
}

TEST_CASE("symmetrizer commutes with every R_i") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    for (int k : {2, 3}) {
        auto p = symmetrizer(R, k);
        for (size_t i = 1; i + 1 <= size_t(k); ++i) {
            auto ri = R.embed_at(i, size_t(k));
            CHECK(p * ri == ri * p);
        }
    }
}

TEST_CASE("classical symmetrizer at q=1 for k=3") {
    auto ps = ParamSet::make();
    auto R = standard_r(2, ps);
    auto p3 = symmetrizer(R, 3);
    // average of all six permutation actions on V^(x)3, built directly
    FieldOps<QScalar>::Context ctx{ps};
    size_t n = 2, N = 8;
    auto apply_perm = [&](std::array<int, 3> perm) {
        ScalarMatrix m(N, N, ctx);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                for (size_t c = 0; c < n; ++c) {
                    size_t src = a * 4 + b * 2 + c;
                    std::array<size_t, 3> v{a, b, c};
                    size_t dst = v[size_t(perm[0])] * 4 + v[size_t(perm[1])] * 2 +
                                 v[size_t(perm[2])];
                    m.at(dst, src) = QScalar::one(ps);
                }
        return m;
    };
    ScalarMatrix avg(N, N, ctx);
    for (auto perm : std::vector<std::array<int, 3>>{
             {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
        avg = avg + apply_perm(perm);
    avg = avg * QScalar::from_rat(ps, Rat(1, 6));
    CHECK(classical_equals(p3, avg));
}

TEST_CASE("antisymmetrizer Poincare ranks") {
    auto ps = ParamSet::make();
    auto R2 = standard_r(2, ps);
    CHECK(poincare_minus(R2, 3) == std::vector<long>{1, 2, 1, 0});
    CHECK(hecke_rank(R2) == 2);

    auto R3 = standard_r(3, ps);
    CHECK(poincare_minus(R3, 4) == std::vector<long>{1, 3, 3, 1, 0});
    CHECK(hecke_rank(R3) == 3);
}
