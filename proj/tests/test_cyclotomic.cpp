#include "nker/cyclotomic.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

using namespace nker;

namespace {
std::vector<long> poly(int e) {
    std::vector<long> out;
    for (const auto& c : cyclotomic_polynomial(e)) out.push_back(c.get_si());
    return out;
}
} // namespace

TEST_CASE("cyclotomic polynomials, low to high") {
    CHECK(poly(1) == std::vector<long>{-1, 1});
    CHECK(poly(2) == std::vector<long>{1, 1});
    CHECK(poly(3) == std::vector<long>{1, 1, 1});
    CHECK(poly(4) == std::vector<long>{1, 0, 1});
    CHECK(poly(6) == std::vector<long>{1, -1, 1});
    CHECK(poly(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(poly(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(poly(105).size() == 49); // first coefficient of size 2 appears here
}

TEST_CASE("euler phi and multiplicative order") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(64) == 32);
    CHECK(euler_phi(105) == 48);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 9) == 6);
    CHECK(multiplicative_order(3, 1) == 1);
    CHECK(multiplicative_order(7, 16) == 2);
}

TEST_CASE("root of unity identities") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(-1L));
    Cyclotomic w = Cyclotomic::root_of_unity(3, 1);
    CHECK(w * w + w + Cyclotomic(1L) == Cyclotomic(0L));
    Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
    Cyclotomic s(0L);
    Cyclotomic pw(1L);
    for (int k = 0; k < 5; ++k) {
        s = s + pw;
        pw = pw * z5;
    }
    CHECK(s.is_zero());
    CHECK(pw == Cyclotomic(1L)); // zeta_5^5
}

TEST_CASE("conjugation and galois action") {
    Cyclotomic z = Cyclotomic::root_of_unity(8, 1);
    CHECK(z.conj() == Cyclotomic::root_of_unity(8, 7));
    CHECK(z * z.conj() == Cyclotomic(1L));
    CHECK(z.galois_apply(3) == Cyclotomic::root_of_unity(8, 3));
    CHECK_THROWS_AS(z.galois_apply(2), NotCoprime);
    // real part of zeta_8 squares to 1/2
    Cyclotomic c = (z + z.conj()).scalar_mul(Rational(1, 2));
    CHECK(c * c == Cyclotomic(Rational(1, 2)));
}

TEST_CASE("canonical form drops the conductor") {
    Cyclotomic z8sq = Cyclotomic::root_of_unity(8, 2); // = i
    CHECK(z8sq.canonical().conductor() == 4);
    CHECK(z8sq == Cyclotomic::root_of_unity(4, 1));
    Cyclotomic mone = Cyclotomic::root_of_unity(6, 3);
    CHECK(mone.canonical().conductor() == 1);
    CHECK(mone.is_rational());
    CHECK(mone.as_rational() == -1);
}

TEST_CASE("rationality checks") {
    Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
    CHECK_FALSE(z.is_rational());
    CHECK_THROWS_AS(z.as_rational(), NotRational);
    CHECK((z + z.conj() + z.galois_apply(2) + z.galois_apply(3)) == Cyclotomic(-1L));
}

TEST_CASE("root order detection") {
    CHECK(Cyclotomic(1L).root_order() == 1);
    CHECK(Cyclotomic(-1L).root_order() == 2);
    CHECK(Cyclotomic::root_of_unity(12, 1).root_order() == 12);
    CHECK(Cyclotomic::root_of_unity(12, 8).root_order() == 3);
    Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
    CHECK((z + z.conj()).root_order() == -1); // 2 cos(2 pi/5) is not one
}

TEST_CASE("reduction is idempotent and equality is exact") {
    Cyclotomic z = Cyclotomic::root_of_unity(9, 4);
    CHECK(z.reduced().identical(z.reduced().reduced()));
    Cyclotomic a = Cyclotomic::root_of_unity(6, 1);
    Cyclotomic b = Cyclotomic(1L) + Cyclotomic::root_of_unity(3, 1); // 1 + zeta_3 = zeta_6
    CHECK(a == b);
    CHECK(a != a + Cyclotomic(1L));
}
