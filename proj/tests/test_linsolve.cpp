#include <catch2/catch_amalgamated.hpp>

#include "util.hpp"

using namespace oreh;
using testutil::Rng;

namespace {

Matrix<RatFun> rnd_mat(Rng& rng, int m, int n, int e) {
    Matrix<RatFun> a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.ratfun(e);
    return a;
}

Matrix<RatFun> mul(const Matrix<RatFun>& a, const Matrix<RatFun>& b) {
    Matrix<RatFun> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

}  // namespace

TEST_CASE("solve recovers a planted solution over Q(z)") {
    Rng rng(501);
    for (int t = 0; t < 10; ++t) {
        Matrix<RatFun> a = rnd_mat(rng, 4, 4, 2);
        Matrix<RatFun> x = rnd_mat(rng, 4, 2, 1);
        LinearSolveResult res = solve_exact(a, mul(a, x));
        if (!res.full_column_rank) continue;  // singular draw; rare
        REQUIRE(res.consistent == std::vector<bool>({true, true}));
        REQUIRE(res.solution == x);
    }
}

TEST_CASE("overdetermined consistent systems solve; tampering is flagged") {
    Rng rng(502);
    Matrix<RatFun> a(5, 3);
    // Rows 0-2 random, rows 3-4 dependent combinations.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = rng.ratfun(2);
    for (int j = 0; j < 3; ++j) {
        a(3, j) = a(0, j) + a(1, j);
        a(4, j) = rng.ratfun(1) * a(2, j);
    }
    Matrix<RatFun> x = rnd_mat(rng, 3, 1, 1);
    Matrix<RatFun> b = mul(a, x);
    LinearSolveResult res = solve_exact(a, b);
    REQUIRE(res.rank == 3);
    REQUIRE(res.full_column_rank);
    REQUIRE(res.consistent[0]);
    REQUIRE(res.solution == x);

    // Perturb a redundant equation's right-hand side: inconsistent.
    b(4, 0) += RatFun::one();
    LinearSolveResult bad = solve_exact(a, b);
    REQUIRE(!bad.consistent[0]);
}

TEST_CASE("rank of constructed deficient matrices") {
    Rng rng(503);
    Matrix<RatFun> a(4, 4);
    for (int j = 0; j < 4; ++j) {
        a(0, j) = rng.ratfun(2);
        a(1, j) = rng.ratfun(2);
    }
    RatFun c1 = rng.ratfun(1), c2 = rng.ratfun(1);
    for (int j = 0; j < 4; ++j) {
        a(2, j) = c1 * a(0, j);
        a(3, j) = c2 * a(0, j) + a(1, j);
    }
    Matrix<RatFun> zero_rhs(4, 1);
    LinearSolveResult res = solve_exact(a, zero_rhs);
    REQUIRE(res.rank == 2);
    REQUIRE(!res.full_column_rank);
    REQUIRE(res.consistent[0]);  // zero rhs is always consistent
}

TEST_CASE("mixed consistent and inconsistent right-hand sides") {
    Matrix<RatFun> a(2, 1);
    a(0, 0) = RatFun::z();
    a(1, 0) = RatFun::z() * RatFun::z();
    Matrix<RatFun> b(2, 2);
    // Column 0: b = A * 3; column 1: unreachable.
    b(0, 0) = RatFun(Rational(3)) * RatFun::z();
    b(1, 0) = RatFun(Rational(3)) * RatFun::z() * RatFun::z();
    b(0, 1) = RatFun::one();
    b(1, 1) = RatFun::one();
    LinearSolveResult res = solve_exact(a, b);
    REQUIRE(res.full_column_rank);
    REQUIRE(res.consistent[0]);
    REQUIRE(!res.consistent[1]);
    REQUIRE(res.solution(0, 0) == RatFun(Rational(3)));
}
