#include "nker/fp.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

#include <random>

using namespace nker;

TEST_CASE("prime field arithmetic") {
    fp::PrimeField F{101};
    CHECK(F.add(100, 5) == 4);
    CHECK(F.sub(3, 7) == 97);
    CHECK(F.neg(0) == 0);
    CHECK(F.neg(40) == 61);
    CHECK(F.mul(50, 50) == 2500 % 101);
    CHECK(F.pow(2, 100) == 1); // Fermat
    for (uint64_t a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("matrix product kernels agree") {
    fp::PrimeField F{1000003};
    std::mt19937_64 rng(7);
    for (int n : {1, 5, 17, 64}) {
        fp::Matrix A(n, n), B(n, n);
        for (auto& x : A.a) x = rng() % F.p;
        for (auto& x : B.a) x = rng() % F.p;
        fp::Matrix S = fp::mul_serial(F, A, B);
        CHECK(fp::mul_parallel(F, A, B) == S);
        CHECK(fp::mul(F, A, B) == S);
        CHECK(fp::mul(F, A, fp::Matrix::identity(n)) == A);
    }
}

TEST_CASE("matrix vector product") {
    fp::PrimeField F{97};
    fp::Matrix A(2, 3);
    A.at(0, 0) = 1; A.at(0, 1) = 2; A.at(0, 2) = 3;
    A.at(1, 0) = 4; A.at(1, 1) = 5; A.at(1, 2) = 6;
    std::vector<uint64_t> v = fp::mul_vec(F, A, {1, 1, 1});
    CHECK(v == std::vector<uint64_t>{6, 15});
}

TEST_CASE("row echelon and null space") {
    fp::PrimeField F{101};
    fp::Matrix A(2, 2);
    A.at(0, 0) = 1; A.at(0, 1) = 2;
    A.at(1, 0) = 2; A.at(1, 1) = 4;
    fp::Matrix B = A;
    auto pivots = fp::row_echelon(F, B);
    CHECK(pivots == std::vector<int>{0});
    fp::Matrix N = fp::nullspace(F, A);
    REQUIRE(N.rows == 1);
    // A times the kernel vector vanishes
    for (int r = 0; r < 2; ++r) {
        uint64_t s = 0;
        for (int c = 0; c < 2; ++c) s = F.add(s, F.mul(A.at(r, c), N.at(0, c)));
        CHECK(s == 0);
    }
}

TEST_CASE("characteristic polynomial") {
    fp::PrimeField F{101};
    fp::Matrix C(2, 2); // companion of x^2 + 1
    C.at(0, 1) = F.p - 1;
    C.at(1, 0) = 1;
    CHECK(fp::charpoly(F, C) == std::vector<uint64_t>{1, 0, 1});
    fp::Matrix D(2, 2); // diag(2, 3): x^2 - 5x + 6
    D.at(0, 0) = 2;
    D.at(1, 1) = 3;
    CHECK(fp::charpoly(F, D) == std::vector<uint64_t>{6, F.p - 5, 1});
}

TEST_CASE("polynomial roots by scan") {
    fp::PrimeField F{101};
    // x^2 - 1
    auto roots = fp::poly_roots(F, {F.p - 1, 0, 1});
    CHECK(roots == std::vector<uint64_t>{1, F.p - 1});
    CHECK(fp::poly_roots(F, {1, 0, 1}).size() == 2); // -1 is a square mod 101
}

TEST_CASE("splitting prime search") {
    CHECK(fp::find_prime(6, 2048) == 2053);
    uint64_t p = fp::find_prime(12, 5000);
    CHECK(p > 5000);
    CHECK(p % 12 == 1);
}

TEST_CASE("primitive root") {
    CHECK(fp::primitive_root(fp::PrimeField{7}) == 3);
    fp::PrimeField F{2053};
    uint64_t g = fp::primitive_root(F);
    // order is exactly p - 1
    CHECK(F.pow(g, 2052) == 1);
    CHECK(F.pow(g, 1026) != 1);
    CHECK(F.pow(g, 684) != 1);
}
