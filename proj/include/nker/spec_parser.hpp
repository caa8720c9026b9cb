#pragma once

// Group-spec DSL: atoms Cn, Q8, Dic(m), GDic(invariants[;t]), PQ(p,q,c,d[,k]),
// Perm[...cycles...], and named groups (S3, S4, A4, Dn), combined with the
// product operator "x" and the repetition operator "^" (binds tighter).

#include "nker/group.hpp"

#include <string>
#include <vector>

namespace nker {

struct GroupSpec {
    enum class Kind { Cyclic, Q8, Dic, GDic, PQ, Perm, Named, Power, Product };
    Kind kind = Kind::Cyclic;
    long n = 0;                // Cyclic order, Dic parameter, Power exponent
    std::vector<long> params;  // GDic invariants or PQ(p,q,c,d[,k])
    long t_index = -1;         // GDic; -1 = constructor default
    std::vector<std::vector<std::vector<long>>> perms; // generator -> cycles
    std::string name;                                  // Named
    std::vector<GroupSpec> children; // Power base (one) or Product factors

    bool operator==(const GroupSpec&) const = default;
};

// Throws SyntaxError with 1-based position; whitespace-insensitive.
GroupSpec parse_spec(const std::string& text);
std::string print_spec(const GroupSpec& spec);
// Builds the group (name = canonical spec string); throws OrderBound past 512
// and the constructor errors for invalid parameters.
GroupPtr build_group(const GroupSpec& spec);

} // namespace nker
