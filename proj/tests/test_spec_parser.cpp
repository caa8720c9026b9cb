#include "nker/spec_parser.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

using namespace nker;

namespace {
std::string canon(const std::string& s) { return print_spec(parse_spec(s)); }
} // namespace

TEST_CASE("round trips") {
    for (const char* s : {"C12", "Q8", "Dic(3)", "GDic(4,2)", "GDic(8)", "PQ(2,5,1,2)",
                          "S4", "A4", "D6", "C2^3 x C4", "Q8 x C7", "C4 x Q8 x C2",
                          "PQ(3,7,1,1) x C2"}) {
        CHECK(canon(s) == s);
        CHECK(canon(canon(s)) == canon(s));
    }
}

TEST_CASE("whitespace and canonical spelling") {
    CHECK(canon("  C2 ^ 3x C4 ") == "C2^3 x C4");
    CHECK(canon("Q8xC7") == "Q8 x C7");
    CHECK(canon("PQ( 2, 5 ,1,2 )") == "PQ(2,5,1,2)");
}

TEST_CASE("built orders") {
    CHECK(build_group(parse_spec("Q8 x C2^2 x C7"))->order() == 224);
    CHECK(build_group(parse_spec("PQ(3,7,1,1)"))->order() == 63);
    CHECK(build_group(parse_spec("D6"))->order() == 12);
    CHECK(build_group(parse_spec("Perm[(1 2 3)(4 5), (1 2)]"))->order() > 1);
    GroupPtr g = build_group(parse_spec("GDic(4,4;2)"));
    CHECK(g->order() == 32);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_spec("Dic(");
        FAIL("expected throw");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("1:5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_spec(""), SyntaxError);
    CHECK_THROWS_AS(parse_spec("C"), SyntaxError);
    CHECK_THROWS_AS(parse_spec("C3 y C4"), SyntaxError);
    CHECK_THROWS_AS(parse_spec("Frob(20)"), SyntaxError);
    CHECK_THROWS_AS(parse_spec("C4 ^"), SyntaxError);
    CHECK_THROWS_AS(parse_spec("Perm[(1 2"), SyntaxError);
}

TEST_CASE("constructor errors surface through build") {
    CHECK_THROWS_AS(build_group(parse_spec("C2^10")), OrderBound);
    CHECK_THROWS_AS(build_group(parse_spec("C600")), InvalidParams);
    CHECK_THROWS_AS(build_group(parse_spec("PQ(2,5,1,2,7)")), InvalidParams);
    CHECK_THROWS_AS(build_group(parse_spec("PQ(3,3,1,1)")), InvalidParams);
    CHECK_THROWS_AS(build_group(parse_spec("Dic(1)")), InvalidParams);
    CHECK_THROWS_AS(build_group(parse_spec("GDic(3,3)")), NotOrderTwo);
}

TEST_CASE("spec equality is structural") {
    CHECK(parse_spec("C2 x C2") == parse_spec("C2xC2"));
    CHECK(parse_spec("C2^2") != parse_spec("C2 x C2"));
    CHECK(build_group(parse_spec("C2^2"))->order() ==
          build_group(parse_spec("C2 x C2"))->order());
}
