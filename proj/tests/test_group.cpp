#include "nker/group.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nker;

TEST_CASE("cyclic and abelian construction") {
    GroupPtr c12 = FiniteGroup::cyclic(12);
    CHECK(c12->order() == 12);
    CHECK(c12->is_abelian());
    CHECK(c12->exponent() == 12);
    CHECK(c12->element_order(1) == 12);
    CHECK(c12->pow(1, 12) == 0);
    CHECK(c12->inv(5) == 7);

    GroupPtr a = FiniteGroup::abelian({4, 2});
    CHECK(a->order() == 8);
    CHECK(a->exponent() == 4);
    int count4 = 0;
    for (int g = 0; g < 8; ++g) count4 += a->element_order(g) == 4;
    CHECK(count4 == 4);
}

TEST_CASE("dicyclic relations") {
    GroupPtr q8 = FiniteGroup::dicyclic(2);
    CHECK(q8->order() == 8);
    CHECK_FALSE(q8->is_abelian());
    // one involution, six elements of order 4
    int inv2 = 0, ord4 = 0;
    for (int g = 0; g < 8; ++g) {
        inv2 += q8->element_order(g) == 2;
        ord4 += q8->element_order(g) == 4;
    }
    CHECK(inv2 == 1);
    CHECK(ord4 == 6);

    GroupPtr d = FiniteGroup::dicyclic(3);
    CHECK(d->order() == 12);
    // a = element 1 has order 6, g = element 6 squares to a^3
    CHECK(d->element_order(1) == 6);
    int g = 6;
    CHECK(d->mul(g, g) == d->pow(1, 3));
    CHECK(d->mul(d->mul(g, 1), d->inv(g)) == d->inv(1));
    CHECK_THROWS_AS(FiniteGroup::dicyclic(1), InvalidParams);
}

TEST_CASE("generalized dicyclic over C4 x C2") {
    GroupPtr g = FiniteGroup::generalized_dicyclic({4, 2});
    CHECK(g->order() == 16);
    CHECK_FALSE(g->is_abelian());
    // some outside element inverts the abelian half
    CHECK_THROWS_AS(FiniteGroup::generalized_dicyclic({3, 3}), NotOrderTwo);
}

TEST_CASE("permutation construction") {
    GroupPtr s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3");
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    CHECK(s3->num_classes() == 3);
    CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}, "bad"), InvalidParams);
}

TEST_CASE("direct products") {
    GroupPtr p = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(3));
    CHECK(p->order() == 24);
    CHECK(p->provenance().kind == Provenance::Product);
    CHECK(p->provenance().factors.size() == 2);
    // (a, b) components multiply independently: index = a * 3 + b
    CHECK(p->mul(3 * 3 + 1, 2) == 3 * 3 + 0);
    CHECK_THROWS_AS(
        FiniteGroup::direct_product(FiniteGroup::cyclic(512), FiniteGroup::cyclic(2)),
        OrderBound);
}

TEST_CASE("pq family") {
    PQParams pp;
    pp.p = 2;
    pp.q = 3;
    PQGroup fam = pq_family(pp);
    CHECK(fam.group->order() == 12);
    CHECK_FALSE(fam.group->is_abelian());
    CHECK(fam.group->element_order(fam.g) == 4);
    CHECK(fam.params.k == 2); // inversion is the only order-2 action mod 3

    PQParams bad = pp;
    bad.d = 0;
    CHECK_THROWS_AS(pq_family(bad), InvalidParams);
    PQParams bad2 = pp;
    bad2.p = 3; // 3 does not divide q - 1 = 2
    bad2.q = 3;
    CHECK_THROWS_AS(pq_family(bad2), InvalidParams);
}

TEST_CASE("subgroup helpers") {
    GroupPtr q8 = FiniteGroup::dicyclic(2);
    CHECK(center(*q8).size() == 2);
    CHECK(derived_subgroup(*q8).size() == 2);
    CHECK(squares_subgroup(*q8).size() == 2);
    GroupPtr s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3");
    CHECK(center(*s3).size() == 1);
    CHECK(derived_subgroup(*s3).size() == 3);

    std::vector<int> all = closure(*q8, {1, 2});
    CHECK(all.size() <= 8);
    std::vector<int> c = cyclic_subgroup(*q8, 1);
    CHECK(c.size() == q8->element_order(1));
    CHECK(contains(c, 0));
    CHECK(std::is_sorted(c.begin(), c.end()));

    // every subgroup of Q8 is normal
    for (int g = 0; g < 8; ++g) CHECK(is_subgroup_normal(*q8, cyclic_subgroup(*q8, g)));
    // the reflections of S3 generate nonnormal subgroups
    bool some_nonnormal = false;
    for (int g = 0; g < 6; ++g)
        if (!is_subgroup_normal(*s3, cyclic_subgroup(*s3, g))) some_nonnormal = true;
    CHECK(some_nonnormal);

    CHECK(intersect_sorted({0, 2, 4, 6}, {0, 3, 4}) == std::vector<int>{0, 4});
}
