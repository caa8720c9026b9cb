#pragma once

// Skew-linearity decisions.  A character is skew-linear over K when its
// degree equals its Schur index over K, i.e. its block of KG is a division
// ring.  The engine applies a fixed rule list and returns Unknown when no
// rule covers the character; it never guesses.

#include "nker/chartab.hpp"

#include <map>
#include <optional>
#include <string>

namespace nker {

enum class Verdict { Yes, No, Unknown };

const char* verdict_str(Verdict v);

struct SchurVerdict {
    int char_id = 0;
    long degree = 1;
    int fs = 0;
    int m_real = 1;                          // exact
    std::map<long, long> m_local;            // prime -> exact value, where known
    long m_rational = 0;                     // 0 = unknown
    std::map<std::string, Verdict> skew_linear; // keys "C", "R", "Q"
    std::vector<std::string> trace;
};

enum class QuatVariant { RationalCyclotomic, TwoAdic, Real, Sqrt2Extension };

// True when the rational quaternion algebra tensored with the named field
// splits (is a matrix ring).  n must be odd; throws EvenConductor.
bool quaternion_splits_over(long n, QuatVariant variant);

// l/k with l = ord(q mod theta_order), k = ord(q mod mu_order); throws
// NonIntegralIndex when k does not divide l.
long m_q_blackburn(long theta_order, long mu_order, long q);

// Normal form P(Q x B) with P = <g> x P0 abelian acting on Q through the
// power map x -> x^k, B = C_A(P), C_P(Q) = <g^{p^c}> x P0 of exponent p^d.
struct BlackburnShape {
    long p = 0, q = 0;
    long c = 0, d = 0, k = 0;
    int g = 0;
    std::vector<int> P, P0, Q, B, C;
};
std::optional<BlackburnShape> blackburn_shape(const FiniteGroup& G);

class VerdictEngine {
public:
    explicit VerdictEngine(CharacterTable table);

    const CharacterTable& table() const { return T_; }
    // Full record for one irreducible (cached).
    const SchurVerdict& verdict(int char_id) const;
    // field_tag in {C, R, Q} or Q_<prime>.
    Verdict skew_linear(int char_id, const std::string& field_tag) const;
    int unknown_count_over_q() const;

private:
    SchurVerdict analyze(const Character& chi) const;
    Verdict rational_rules(const Character& chi, SchurVerdict& v) const;
    std::optional<Verdict> rule_product_tensor(const Character& chi, SchurVerdict& v) const;
    std::optional<Verdict> rule_bounds(const Character& chi, SchurVerdict& v) const;

    CharacterTable T_;
    mutable std::map<int, SchurVerdict> cache_;
    mutable std::map<std::vector<int>, std::optional<BlackburnShape>> shape_cache_;
    mutable std::map<std::vector<int>, QuotientGroup> quotient_cache_;
    mutable std::vector<std::unique_ptr<VerdictEngine>> factor_engines_;

    const QuotientGroup& quotient_by_kernel(const std::vector<int>& K) const;
};

} // namespace nker
