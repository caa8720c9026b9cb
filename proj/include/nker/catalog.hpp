#pragma once

// Curated group catalog plus the invariant suites that run over it.  Every
// entry is analyzed once (character table, verdicts, both kernel routes,
// cross-check) and the result is cached for the suites.

#include "nker/nker.hpp"
#include "nker/spec_parser.hpp"

#include <memory>

namespace nker {

struct CatalogAnalysis {
    std::string spec; // canonical
    GroupPtr group;
    std::unique_ptr<VerdictEngine> engine;
    std::vector<KernelReport> reports; // C, R, Q
    double seconds = 0.0;
};

// Canonical spec strings, deterministic order, all of order <= 224.
const std::vector<std::string>& curated_catalog_specs();

// Full catalog, analyzed in parallel (jobs <= 0: OpenMP default) and cached
// after the first call; throws MismatchDetected if any entry diverges.
const std::vector<CatalogAnalysis>& analyzed_catalog(int jobs = 0);

// One JSON object (single line) per entry; schema carries a "v" field.
std::string entry_json(const CatalogAnalysis& a, bool with_timing = true);

// 64-bit FNV-1a over the Cayley table, as hex.
std::string group_fingerprint(const FiniteGroup& G);

struct CheckList {
    std::vector<std::pair<bool, std::string>> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.first) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.first ? 0 : 1;
        return n;
    }
    void add(bool pass, std::string what) { checks.emplace_back(pass, std::move(what)); }
    void merge(const CheckList& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

// Individual invariant checks (scopes as documented in each implementation).
CheckList check_orthogonality(int jobs = 0);     // rows, columns, sum of squares
CheckList check_fs(int jobs = 0);                // indicator range and realness
CheckList check_restriction(int jobs = 0);       // skew-linear restriction, order <= 64
CheckList check_local_restriction(int jobs = 0); // local-index forcing of linearity
CheckList check_en_pairing(int jobs = 0);        // idempotent pairing, order <= 24
CheckList check_triviality(int jobs = 0);        // complex kernel trivial/nonabelian
CheckList check_compositum(int jobs = 0);        // product character fields
CheckList check_inclusions(int jobs = 0);        // kernel chain + strict witnesses
CheckList check_classifiers(int jobs = 0);       // dual-route agreement, no unknowns
CheckList check_sehgal(int jobs = 0);            // predicate vs per-block verdicts
CheckList check_pq_remark(int jobs = 0);         // power-kernel formula, all tuples

struct SuiteResult {
    std::string name;
    std::string note; // printed as a diagnostic before the checks
    CheckList list;
};

const std::vector<std::string>& suite_names();
// Throws InvalidParams on an unknown suite name.
SuiteResult run_suite(const std::string& name, int jobs = 0);

} // namespace nker
