#include "nker/chartab.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace nker;

namespace {
std::multiset<long> degrees(const CharacterTable& T) {
    std::multiset<long> d;
    for (const auto& chi : T.irreducibles()) d.insert(chi.degree);
    return d;
}
GroupPtr s3() { return FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3"); }
GroupPtr s4() {
    return FiniteGroup::from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4");
}
} // namespace

TEST_CASE("degree patterns of small tables") {
    CHECK(degrees(CharacterTable::compute(s3())) == std::multiset<long>{1, 1, 2});
    CHECK(degrees(CharacterTable::compute(s4())) == std::multiset<long>{1, 1, 2, 3, 3});
    GroupPtr a4 = FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
    CHECK(degrees(CharacterTable::compute(a4)) == std::multiset<long>{1, 1, 1, 3});
    CHECK(degrees(CharacterTable::compute(FiniteGroup::dicyclic(2))) ==
          std::multiset<long>{1, 1, 1, 1, 2});
    CHECK(degrees(CharacterTable::compute(FiniteGroup::dicyclic(3))) ==
          std::multiset<long>{1, 1, 1, 1, 2, 2});
    CHECK(degrees(CharacterTable::compute(FiniteGroup::cyclic(7))) ==
          std::multiset<long>{1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("columns and values of the cyclic group") {
    CharacterTable T = CharacterTable::compute(FiniteGroup::cyclic(4));
    REQUIRE(T.num_classes() == 4);
    // the four rows are k -> i^(jk) in some order; check value multiset at g=1
    std::multiset<long> orders;
    for (const auto& chi : T.irreducibles()) orders.insert(T.value_at(chi, 1).root_order());
    CHECK(orders == std::multiset<long>{1, 2, 4, 4});
}

TEST_CASE("kernels") {
    CharacterTable T = CharacterTable::compute(s3());
    std::multiset<size_t> ks;
    for (const auto& chi : T.irreducibles()) ks.insert(T.kernel(chi).size());
    // trivial char: kernel S3; sign: kernel A3; degree 2: faithful
    CHECK(ks == std::multiset<size_t>{6, 3, 1});
}

TEST_CASE("frobenius schur indicators") {
    CharacterTable q8 = CharacterTable::compute(FiniteGroup::dicyclic(2));
    int minus = 0;
    for (const auto& chi : q8.irreducibles()) {
        int fs = q8.fs_indicator(chi);
        CHECK((fs == 1 || fs == -1));
        if (chi.degree == 2) CHECK(fs == -1);
        minus += fs == -1;
    }
    CHECK(minus == 1);

    CharacterTable c5 = CharacterTable::compute(FiniteGroup::cyclic(5));
    for (const auto& chi : c5.irreducibles()) {
        bool trivial = c5.kernel(chi).size() == 5;
        CHECK(c5.fs_indicator(chi) == (trivial ? 1 : 0));
    }
}

TEST_CASE("row orthogonality through inner products") {
    CharacterTable T = CharacterTable::compute(s4());
    const auto& irr = T.irreducibles();
    for (size_t i = 0; i < irr.size(); ++i)
        for (size_t j = 0; j < irr.size(); ++j) {
            Cyclotomic ip = T.inner_product(irr[i].values, irr[j].values);
            CHECK(ip == Cyclotomic(i == j ? 1L : 0L));
        }
}

TEST_CASE("idempotent pairing") {
    GroupPtr g = s3();
    CharacterTable T = CharacterTable::compute(g);
    std::vector<int> a3 = derived_subgroup(*g);
    for (const auto& chi : T.irreducibles()) {
        Cyclotomic v = T.en_pairing(chi, a3);
        bool in_kernel = T.kernel(chi).size() >= 3 && chi.degree == 1;
        CHECK(v == Cyclotomic(in_kernel ? chi.degree : 0L));
    }
    int refl = -1;
    for (int x = 0; x < 6; ++x)
        if (g->element_order(x) == 2) refl = x;
    CHECK_THROWS_AS(T.en_pairing(T.irreducibles()[0], cyclic_subgroup(*g, refl)), NotNormal);
}

TEST_CASE("galois orbits and character fields") {
    CharacterTable c5 = CharacterTable::compute(FiniteGroup::cyclic(5));
    for (const auto& chi : c5.irreducibles()) {
        if (c5.kernel(chi).size() == 5) continue;
        CHECK(c5.galois_orbit(chi.id).size() == 4);
        CHECK(c5.character_field_conductor(chi.id) == 5);
        CHECK(c5.character_field_degree(chi.id) == 4);
    }
    CharacterTable t = CharacterTable::compute(s4());
    for (const auto& chi : t.irreducibles()) {
        CHECK(t.character_field_conductor(chi.id) == 1); // all rational
        CHECK(t.field_stabilizer(chi.id).size() == size_t(euler_phi(t.class_data().exponent)));
    }
}

TEST_CASE("restriction and decomposition") {
    GroupPtr g = s4();
    CharacterTable T = CharacterTable::compute(g);
    // find a subgroup isomorphic to S3
    SubgroupGroup sg;
    bool found = false;
    for (int x = 0; x < 24 && !found; ++x)
        for (int y = 0; y < 24 && !found; ++y) {
            if (g->element_order(x) != 3 || g->element_order(y) != 2) continue;
            auto h = closure(*g, {x, y});
            if (h.size() == 6) {
                sg = subgroup_as_group(*g, h);
                found = true;
            }
        }
    REQUIRE(found);
    CharacterTable TH = CharacterTable::compute(sg.group);
    for (const auto& chi : T.irreducibles()) {
        auto vals = T.restrict_to(chi, sg);
        auto parts = TH.decompose(vals);
        long total = 0;
        std::multiset<long> cdeg;
        for (const auto& [id, mult] : parts) {
            total += mult * TH.irreducibles()[size_t(id)].degree;
            cdeg.insert(TH.irreducibles()[size_t(id)].degree);
        }
        CHECK(total == chi.degree);
        if (chi.degree == 3) CHECK(cdeg == std::multiset<long>{1, 2});
    }
}

TEST_CASE("direct product tables via tensor assembly") {
    GroupPtr p = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(3));
    CharacterTable T = CharacterTable::compute(p);
    CHECK(T.num_classes() == 15);
    CHECK(degrees(T) == std::multiset<long>{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2});
    long sumsq = 0;
    for (const auto& chi : T.irreducibles()) sumsq += chi.degree * chi.degree;
    CHECK(sumsq == 24);
}

TEST_CASE("deterministic recomputation") {
    CharacterTable a = CharacterTable::compute(FiniteGroup::dicyclic(5));
    CharacterTable b = CharacterTable::compute(FiniteGroup::dicyclic(5));
    REQUIRE(a.irreducibles().size() == b.irreducibles().size());
    for (size_t i = 0; i < a.irreducibles().size(); ++i)
        for (size_t c = 0; c < a.irreducibles()[i].values.size(); ++c)
            CHECK(a.irreducibles()[i].values[c].identical(b.irreducibles()[i].values[c]));
}
