#pragma once

// The nonideal kernel NKer_K(G): intersection of the kernels of all
// characters that are not skew-linear over K.  Computed two ways — from the
// per-character verdicts, and from the structural classification — and
// cross-checked.

#include "nker/schur.hpp"

namespace nker {

enum class FieldTag { C, R, Q };
const char* field_tag_str(FieldTag t);

struct NKerResult {
    std::vector<int> lower, upper; // equal when every verdict is decided
    int unresolved = 0;
    bool exact() const { return unresolved == 0; }
};

// Unknown verdicts shrink only the lower bound.
NKerResult nker_definitional(const VerdictEngine& engine, FieldTag tag);

struct Classification {
    std::vector<std::string> tags; // every matching case
    bool exact = true;             // false: predicted is only a guaranteed lower
                                   // bound of a nontrivial kernel
    std::vector<int> predicted;
};

Classification classify_complex(const FiniteGroup& G);
Classification classify_real(const FiniteGroup& G);
Classification classify_rational(const FiniteGroup& G);

// QG is a direct product of division rings (Sehgal's classification).
bool sehgal_predicate(const FiniteGroup& G);
// field_tag in {R, Q, Q2, Qp}; Qp stands for any odd p.
bool division_product_predicate(const FiniteGroup& G, const std::string& field_tag);

struct KernelReport {
    std::string group;
    FieldTag field = FieldTag::C;
    NKerResult definitional;
    Classification classifier;
    bool match = false;
    bool comparable = true; // false when only containment could be checked
    int unresolved_chars = 0;
};

// One report per field tag; throws MismatchDetected on any divergence,
// including a violated inclusion NKer_C <= NKer_R <= NKer_Q <= R(G).
std::vector<KernelReport> cross_check(const VerdictEngine& engine);

} // namespace nker
