#include "nker/catalog.hpp"
#include "nker/nker.hpp"
#include "nker/spec_parser.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nker;

namespace {

const std::vector<std::string>& sample_specs() {
    static const std::vector<std::string> s = {
        "C8", "C2^3", "C12", "S3", "S4", "A4", "D4", "Q8", "Dic(3)", "Dic(4)",
        "GDic(4,2)", "Q8 x C3", "Q8 x C7", "PQ(2,3,1,1)", "PQ(3,7,1,1)"};
    return s;
}

struct Case {
    GroupPtr group;
    CharacterTable table;
    VerdictEngine engine;
};

const std::vector<Case>& cases() {
    static std::vector<Case> cs = [] {
        std::vector<Case> out;
        for (const std::string& s : sample_specs()) {
            GroupPtr g = build_group(parse_spec(s));
            CharacterTable t = CharacterTable::compute(g);
            out.push_back({g, t, VerdictEngine{t}});
        }
        return out;
    }();
    return cs;
}

} // namespace

TEST_CASE("degree squares sum to the group order") {
    for (const Case& c : cases()) {
        long s = 0;
        for (const auto& chi : c.table.irreducibles()) s += chi.degree * chi.degree;
        CHECK(s == c.group->order());
    }
}

TEST_CASE("rows are orthonormal") {
    for (const Case& c : cases()) {
        const auto& irr = c.table.irreducibles();
        for (size_t i = 0; i < irr.size(); ++i) {
            CHECK(c.table.inner_product(irr[i].values, irr[i].values) == Cyclotomic(1L));
            if (i + 1 < irr.size())
                CHECK(c.table.inner_product(irr[i].values, irr[i + 1].values) ==
                      Cyclotomic(0L));
        }
    }
}

TEST_CASE("indicator values and realness") {
    for (const Case& c : cases()) {
        for (const auto& chi : c.table.irreducibles()) {
            int fs = c.table.fs_indicator(chi);
            CHECK((fs == -1 || fs == 0 || fs == 1));
            bool real = true;
            for (const auto& v : chi.values)
                if (v != v.conj()) real = false;
            CHECK((fs != 0) == real);
        }
    }
}

TEST_CASE("linear characters are always skew linear") {
    for (const Case& c : cases())
        for (const auto& chi : c.table.irreducibles())
            if (chi.degree == 1)
                for (const char* f : {"C", "R", "Q"})
                    CHECK(c.engine.skew_linear(chi.id, f) == Verdict::Yes);
}

TEST_CASE("complex kernel rule") {
    for (const Case& c : cases()) {
        NKerResult r = nker_definitional(c.engine, FieldTag::C);
        CHECK(r.exact());
        if (c.group->is_abelian())
            CHECK(r.lower.size() == size_t(c.group->order()));
        else
            CHECK(r.lower == std::vector<int>{0});
    }
}

TEST_CASE("kernel chain and cross checks hold") {
    for (const Case& c : cases()) {
        std::vector<KernelReport> reports = cross_check(c.engine); // throws on mismatch
        REQUIRE(reports.size() == 3);
        const auto& kc = reports[0].definitional.lower;
        const auto& kr = reports[1].definitional.lower;
        const auto& kq = reports[2].definitional.lower;
        CHECK(std::includes(kr.begin(), kr.end(), kc.begin(), kc.end()));
        CHECK(std::includes(kq.begin(), kq.end(), kr.begin(), kr.end()));
        std::vector<int> rg = r_of_g(*c.group);
        CHECK(std::includes(rg.begin(), rg.end(), kq.begin(), kq.end()));
        for (const KernelReport& rep : reports) {
            CHECK(rep.match);
            CHECK(is_subgroup_normal(*c.group, rep.definitional.lower));
        }
    }
}

TEST_CASE("a nontrivial real kernel forces order four generators") {
    // whenever NKer_R is nontrivial but proper and <g> is nonnormal, g has
    // order 4 and NKer_R = <g^2>
    for (const Case& c : cases()) {
        NKerResult r = nker_definitional(c.engine, FieldTag::R);
        REQUIRE(r.exact());
        if (r.lower.size() <= 1 || r.lower.size() == size_t(c.group->order())) continue;
        for (int g = 0; g < c.group->order(); ++g) {
            std::vector<int> cyc = cyclic_subgroup(*c.group, g);
            if (is_subgroup_normal(*c.group, cyc)) continue;
            CHECK(c.group->element_order(g) == 4);
            std::vector<int> gsq = cyclic_subgroup(*c.group, c.group->mul(g, g));
            CHECK(r.lower == gsq);
        }
    }
}

TEST_CASE("idempotent pairing separates kernels") {
    for (const Case& c : cases()) {
        for (const std::vector<int>& n :
             {derived_subgroup(*c.group), center(*c.group), squares_subgroup(*c.group)}) {
            for (const auto& chi : c.table.irreducibles()) {
                std::vector<int> ker = c.table.kernel(chi);
                bool inside = std::includes(ker.begin(), ker.end(), n.begin(), n.end());
                Cyclotomic v = c.table.en_pairing(chi, n);
                CHECK(v == Cyclotomic(inside ? chi.degree : 0L));
            }
        }
    }
}

TEST_CASE("curated specs parse and print stably") {
    for (const std::string& s : curated_catalog_specs()) {
        GroupSpec spec = parse_spec(s);
        CHECK(print_spec(spec) == s);
        CHECK(parse_spec(print_spec(spec)) == spec);
    }
}
