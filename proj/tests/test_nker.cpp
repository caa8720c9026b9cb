#include "nker/nker.hpp"

#include "nker/errors.hpp"
#include "nker/spec_parser.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nker;

namespace {
VerdictEngine engine_for(const std::string& spec) {
    return VerdictEngine{CharacterTable::compute(build_group(parse_spec(spec)))};
}
std::vector<size_t> kernel_orders(const std::string& spec) {
    VerdictEngine e = engine_for(spec);
    std::vector<size_t> out;
    for (const KernelReport& r : cross_check(e)) {
        CHECK(r.match);
        CHECK(r.definitional.exact());
        out.push_back(r.definitional.lower.size());
    }
    return out; // C, R, Q
}
} // namespace

TEST_CASE("definitional kernels") {
    GroupPtr q8 = FiniteGroup::dicyclic(2);
    VerdictEngine e{CharacterTable::compute(q8)};
    NKerResult r = nker_definitional(e, FieldTag::R);
    CHECK(r.exact());
    CHECK(r.lower.size() == 8); // every irreducible of Q8 is skew-linear over R
    NKerResult c = nker_definitional(e, FieldTag::C);
    CHECK(c.lower == std::vector<int>{0});

    VerdictEngine ed{CharacterTable::compute(FiniteGroup::dicyclic(3))};
    NKerResult rd = nker_definitional(ed, FieldTag::R);
    CHECK(rd.lower.size() == 2);
    NKerResult cd = nker_definitional(ed, FieldTag::C);
    CHECK(cd.lower == std::vector<int>{0}); // nonabelian, so trivial over C
}

TEST_CASE("real classification") {
    Classification ab = classify_real(*FiniteGroup::cyclic(6));
    CHECK(ab.exact);
    CHECK(ab.predicted.size() == 6);
    CHECK(std::find(ab.tags.begin(), ab.tags.end(), "abelian") != ab.tags.end());

    Classification q8 = classify_real(*FiniteGroup::dicyclic(2));
    CHECK(q8.predicted.size() == 8);
    CHECK(q8.tags == std::vector<std::string>{"generalized_dicyclic"});

    GroupPtr c4q8 =
        FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::dicyclic(2));
    Classification m = classify_real(*c4q8);
    CHECK(m.predicted.size() == 2);
    CHECK(m.tags == std::vector<std::string>{"c4_q8"});

    Classification triv = classify_real(*FiniteGroup::from_permutations(
        {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4"));
    CHECK(triv.predicted == std::vector<int>{0});
    CHECK(triv.tags.empty());

    Classification dic = classify_real(*FiniteGroup::dicyclic(5));
    CHECK(dic.predicted.size() == 2); // Dic(5)/<a^2> is not abelian
}

TEST_CASE("rational classification") {
    GroupPtr h7 = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(7));
    Classification c = classify_rational(*h7);
    CHECK(c.exact);
    CHECK(c.predicted.size() == 56);
    CHECK(std::find(c.tags.begin(), c.tags.end(), "b_two_group_times_odd") != c.tags.end());
    CHECK(std::find(c.tags.begin(), c.tags.end(), "e_q8_times_h") != c.tags.end());

    GroupPtr h3 = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(3));
    CHECK(classify_rational(*h3).predicted == std::vector<int>{0});

    PQParams pp;
    pp.p = 3;
    pp.q = 7;
    Classification d = classify_rational(*pq_family(pp).group);
    CHECK(d.predicted.size() == 3);
    CHECK(std::find(d.tags.begin(), d.tags.end(), "d_pq_times_b") != d.tags.end());
}

TEST_CASE("division ring product predicates") {
    GroupPtr q8 = FiniteGroup::dicyclic(2);
    GroupPtr h3 = FiniteGroup::direct_product(q8, FiniteGroup::cyclic(3));
    GroupPtr h7 = FiniteGroup::direct_product(q8, FiniteGroup::cyclic(7));
    GroupPtr s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3");

    CHECK(sehgal_predicate(*FiniteGroup::cyclic(6)));
    CHECK(sehgal_predicate(*q8));
    CHECK(sehgal_predicate(*h7));
    CHECK_FALSE(sehgal_predicate(*h3)); // 2 has even order mod 3
    CHECK_FALSE(sehgal_predicate(*s3));

    CHECK(division_product_predicate(*q8, "R"));
    CHECK_FALSE(division_product_predicate(*h3, "R"));
    CHECK(division_product_predicate(*h7, "Q"));
    CHECK(division_product_predicate(*h7, "Q2"));
    CHECK_FALSE(division_product_predicate(*q8, "Qp"));
    CHECK(division_product_predicate(*FiniteGroup::cyclic(5), "Qp"));
    CHECK_THROWS_AS(division_product_predicate(*q8, "F_4"), InvalidParams);
}

TEST_CASE("cross checked kernel orders") {
    CHECK(kernel_orders("Dic(3)") == std::vector<size_t>{1, 2, 2});
    CHECK(kernel_orders("S4") == std::vector<size_t>{1, 1, 1});
    CHECK(kernel_orders("Q8") == std::vector<size_t>{1, 8, 8});
    CHECK(kernel_orders("Q8 x C7") == std::vector<size_t>{1, 1, 56});
    CHECK(kernel_orders("Q8 x C3") == std::vector<size_t>{1, 1, 1});
    CHECK(kernel_orders("C4 x Q8") == std::vector<size_t>{1, 2, 2});
    CHECK(kernel_orders("Q8 x Q8") == std::vector<size_t>{1, 2, 2});
    CHECK(kernel_orders("PQ(3,7,1,1)") == std::vector<size_t>{1, 1, 3});
    CHECK(kernel_orders("PQ(2,3,1,1)") == std::vector<size_t>{1, 2, 2});
    // the two routes agree on the order 4 kernel here even though the naive
    // power formula p^(c-1) (q-1)_2 = 2 predicts order 2
    CHECK(kernel_orders("PQ(2,5,1,2)") == std::vector<size_t>{1, 1, 4});
}

TEST_CASE("kernel chain is increasing") {
    for (const char* spec : {"Dic(3)", "Dic(5)", "Q8 x C7", "PQ(3,7,1,1)", "GDic(4,2)"}) {
        VerdictEngine e = engine_for(spec);
        auto reports = cross_check(e);
        REQUIRE(reports.size() == 3);
        const auto& c = reports[0].definitional.lower;
        const auto& r = reports[1].definitional.lower;
        const auto& q = reports[2].definitional.lower;
        CHECK(std::includes(r.begin(), r.end(), c.begin(), c.end()));
        CHECK(std::includes(q.begin(), q.end(), r.begin(), r.end()));
        const auto rg = r_of_g(e.table().group());
        CHECK(std::includes(rg.begin(), rg.end(), q.begin(), q.end()));
    }
}
