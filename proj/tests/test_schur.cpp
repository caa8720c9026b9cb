#include "nker/schur.hpp"

#include "nker/errors.hpp"

#include <doctest.h>

using namespace nker;

namespace {
const Character& deg_fs(const CharacterTable& T, long deg, int fs) {
    for (const auto& chi : T.irreducibles())
        if (chi.degree == deg && T.fs_indicator(chi) == fs) return chi;
    REQUIRE(false);
    return T.irreducibles()[0];
}
} // namespace

TEST_CASE("splitting of the rational quaternions") {
    CHECK_FALSE(quaternion_splits_over(1, QuatVariant::RationalCyclotomic));
    CHECK(quaternion_splits_over(3, QuatVariant::RationalCyclotomic));
    CHECK(quaternion_splits_over(5, QuatVariant::TwoAdic));
    CHECK_FALSE(quaternion_splits_over(7, QuatVariant::RationalCyclotomic));
    CHECK(quaternion_splits_over(9, QuatVariant::RationalCyclotomic));
    CHECK_FALSE(quaternion_splits_over(7, QuatVariant::Real));
    CHECK_FALSE(quaternion_splits_over(1, QuatVariant::Sqrt2Extension));
    CHECK(quaternion_splits_over(3, QuatVariant::Sqrt2Extension));
    CHECK_THROWS_AS(quaternion_splits_over(2, QuatVariant::RationalCyclotomic), EvenConductor);
    CHECK_THROWS_AS(quaternion_splits_over(4, QuatVariant::Real), EvenConductor);
}

TEST_CASE("cyclic algebra index l over k") {
    CHECK(m_q_blackburn(7, 1, 2) == 3);
    CHECK(m_q_blackburn(15, 5, 2) == 1);
    CHECK(m_q_blackburn(15, 3, 2) == 2);
    CHECK_THROWS_AS(m_q_blackburn(7, 5, 2), NonIntegralIndex);
}

TEST_CASE("blackburn normal form recognition") {
    auto s = blackburn_shape(*FiniteGroup::dicyclic(3));
    REQUIRE(s.has_value());
    CHECK(s->p == 2);
    CHECK(s->q == 3);
    CHECK(s->c == 1);
    CHECK(s->d == 1);
    CHECK(s->k == 2);
    CHECK(s->P.size() == 4);
    CHECK(s->Q.size() == 3);
    CHECK(s->B.size() == 1);
    CHECK(s->C.size() == 2);

    PQParams pp;
    pp.p = 3;
    pp.q = 7;
    auto t = blackburn_shape(*pq_family(pp).group);
    REQUIRE(t.has_value());
    CHECK(t->p == 3);
    CHECK(t->q == 7);
    CHECK(t->c == 1);
    CHECK(t->d == 1);
    CHECK(t->P.size() == 9);
    CHECK(t->Q.size() == 7);
    CHECK(t->C.size() == 3);
    CHECK(multiplicative_order(t->k, 7) == 3);

    CHECK_FALSE(blackburn_shape(*FiniteGroup::dicyclic(2)).has_value());
    CHECK_FALSE(blackburn_shape(*FiniteGroup::cyclic(12)).has_value());
}

TEST_CASE("verdicts for small groups") {
    GroupPtr s3 = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, "S3");
    VerdictEngine es3{CharacterTable::compute(s3)};
    const Character& ref = deg_fs(es3.table(), 2, 1);
    const SchurVerdict& vs = es3.verdict(ref.id);
    CHECK(vs.skew_linear.at("C") == Verdict::No);
    CHECK(vs.skew_linear.at("R") == Verdict::No);
    CHECK(vs.skew_linear.at("Q") == Verdict::No);
    CHECK(vs.m_real == 1);
    CHECK(vs.m_rational == 1);

    VerdictEngine eq8{CharacterTable::compute(FiniteGroup::dicyclic(2))};
    const Character& q = deg_fs(eq8.table(), 2, -1);
    const SchurVerdict& vq = eq8.verdict(q.id);
    CHECK(vq.skew_linear.at("C") == Verdict::No);
    CHECK(vq.skew_linear.at("R") == Verdict::Yes);
    CHECK(vq.skew_linear.at("Q") == Verdict::Yes);
    CHECK(vq.m_real == 2);
    CHECK(vq.m_rational == 2);
    CHECK(vq.m_local.at(2) == 2);
    CHECK(eq8.unknown_count_over_q() == 0);
}

TEST_CASE("dicyclic twelve, both degree two characters") {
    VerdictEngine e{CharacterTable::compute(FiniteGroup::dicyclic(3))};
    const Character& quat = deg_fs(e.table(), 2, -1);
    const Character& dih = deg_fs(e.table(), 2, 1);
    CHECK(e.verdict(quat.id).skew_linear.at("R") == Verdict::Yes);
    CHECK(e.verdict(quat.id).skew_linear.at("Q") == Verdict::Yes);
    CHECK(e.verdict(quat.id).m_rational == 2);
    CHECK(e.verdict(dih.id).skew_linear.at("R") == Verdict::No);
    CHECK(e.verdict(dih.id).skew_linear.at("Q") == Verdict::No);
    // local tags: index 1 at primes away from the order, undecided otherwise
    CHECK(e.skew_linear(quat.id, "Q_5") == Verdict::No);
    CHECK(e.skew_linear(quat.id, "Q_3") == Verdict::Unknown);
    CHECK(e.skew_linear(0, "Q_3") == Verdict::Yes); // linear
    CHECK_THROWS_AS(e.skew_linear(0, "F_9"), InvalidParams);
}

TEST_CASE("hamiltonian group with splitting odd part") {
    GroupPtr g = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(3));
    VerdictEngine e{CharacterTable::compute(g)};
    int yes = 0, no = 0;
    for (const auto& chi : e.table().irreducibles()) {
        if (chi.degree == 1) continue;
        const SchurVerdict& v = e.verdict(chi.id);
        // only the rational quaternionic character keeps a division block;
        // 2 = ord(2 mod 3) is even, so the quaternions split over Q(zeta_3)
        if (v.fs == -1) {
            CHECK(v.skew_linear.at("Q") == Verdict::Yes);
            CHECK(v.m_local.at(2) == 2);
            ++yes;
        } else {
            CHECK(v.skew_linear.at("Q") == Verdict::No);
            CHECK(v.m_local.at(2) == 1);
            CHECK(v.m_local.at(3) == 1);
            ++no;
        }
    }
    CHECK(yes == 1);
    CHECK(no == 2);
}

TEST_CASE("hamiltonian group with nonsplitting odd part") {
    GroupPtr g = FiniteGroup::direct_product(FiniteGroup::dicyclic(2), FiniteGroup::cyclic(7));
    VerdictEngine e{CharacterTable::compute(g)};
    int skew = 0;
    for (const auto& chi : e.table().irreducibles()) {
        if (chi.degree == 1) continue;
        const SchurVerdict& v = e.verdict(chi.id);
        // 3 = ord(2 mod 7) is odd: every degree two block stays division
        CHECK(v.skew_linear.at("Q") == Verdict::Yes);
        CHECK(v.m_rational == 2);
        CHECK(v.m_local.at(2) == 2);
        CHECK(v.m_local.at(7) == 1);
        skew += v.fs == 0;
    }
    CHECK(skew == 6); // six complex pairs plus the quaternionic character
}

TEST_CASE("blackburn family indices") {
    PQParams pp;
    pp.p = 3;
    pp.q = 7;
    VerdictEngine e{CharacterTable::compute(pq_family(pp).group)};
    int big = 0, small = 0;
    for (const auto& chi : e.table().irreducibles()) {
        if (chi.degree != 3) continue;
        const SchurVerdict& v = e.verdict(chi.id);
        CHECK(v.skew_linear.at("R") == Verdict::No);
        if (v.m_rational == 3) {
            CHECK(v.skew_linear.at("Q") == Verdict::Yes);
            CHECK(v.m_local.at(7) == 3);
            ++big;
        } else {
            CHECK(v.m_rational == 1);
            ++small;
        }
    }
    CHECK(big == 4);  // faithful characters, theta of order 9
    CHECK(small == 2); // theta of order 3 factors through the quotient
    CHECK(e.unknown_count_over_q() == 0);
}

TEST_CASE("verdict cache is stable") {
    VerdictEngine e{CharacterTable::compute(FiniteGroup::dicyclic(2))};
    const SchurVerdict& a = e.verdict(4);
    const SchurVerdict& b = e.verdict(4);
    CHECK(&a == &b);
}
