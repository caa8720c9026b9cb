#include "nker/catalog.hpp"

#include "nker/errors.hpp"

#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nker {

namespace {

// ---------------------------------------------------------------------------
// Curated spec list
// ---------------------------------------------------------------------------

// Descending partitions of n, lexicographically largest first.
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, maxpart); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::string abelian_spec(std::vector<int> factors) {
    std::sort(factors.begin(), factors.end(), std::greater<int>());
    std::ostringstream os;
    for (size_t i = 0; i < factors.size();) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (i) os << " x ";
        os << "C" << factors[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

// Every abelian group of order 2..64, one entry per invariant multiset.
void append_abelian(std::vector<std::string>& out) {
    out.push_back("C1");
    for (int n = 2; n <= 64; ++n) {
        std::vector<std::pair<int, int>> fact; // prime, exponent
        int m = n;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                int e = 0;
                while (m % p == 0) { m /= p; ++e; }
                fact.emplace_back(p, e);
            }
        if (m > 1) fact.emplace_back(m, 1);
        std::vector<std::vector<int>> combos{{}};
        for (const auto& [p, e] : fact) {
            std::vector<std::vector<int>> next;
            for (const auto& part : partitions(e))
                for (const auto& base : combos) {
                    std::vector<int> c = base;
                    for (int a : part) {
                        int pw = 1;
                        for (int i = 0; i < a; ++i) pw *= p;
                        c.push_back(pw);
                    }
                    next.push_back(std::move(c));
                }
            combos = std::move(next);
        }
        for (auto& c : combos) out.push_back(abelian_spec(std::move(c)));
    }
}

std::vector<std::string> build_spec_list() {
    std::vector<std::string> s;
    append_abelian(s);
    for (const char* n : {"S3", "S4", "A4", "D4", "D6"}) s.push_back(n);
    s.push_back("Q8");
    for (int m = 3; m <= 16; ++m) s.push_back("Dic(" + std::to_string(m) + ")");
    for (const char* g : {"GDic(6)", "GDic(4,2)", "GDic(8)", "GDic(4,4)", "GDic(12)"})
        s.push_back(g);
    for (const char* g : {"C4 x Q8", "C4 x Q8 x C2", "C4 x Q8 x C2^2", "Q8 x Q8",
                          "Q8 x Q8 x C2"})
        s.push_back(g);
    for (int n : {3, 5, 7, 9, 15, 21})
        for (int r = 0; r <= 2; ++r) {
            long order = 8L * n << r;
            if (order > 224) continue;
            std::ostringstream os;
            os << "Q8";
            if (r == 1) os << " x C2";
            if (r == 2) os << " x C2^2";
            os << " x C" << n;
            s.push_back(os.str());
        }
    for (const char* g : {"PQ(2,3,1,1)", "PQ(2,3,1,2)", "PQ(2,7,1,1)", "PQ(2,7,1,2)",
                          "PQ(2,5,1,2)", "PQ(2,5,2,2)", "PQ(2,13,1,2)", "PQ(3,7,1,1)",
                          "PQ(3,13,1,1)"})
        s.push_back(g);
    for (const char* g : {"PQ(2,3,1,1) x C13", "PQ(2,3,1,1) x C5", "PQ(2,3,1,2) x C7",
                          "PQ(2,5,1,2) x C3", "PQ(3,7,1,1) x C2"})
        s.push_back(g);
    return s;
}

int effective_jobs(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

// ---------------------------------------------------------------------------
// Subgroup enumeration (joins of cyclic subgroups)
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> cyc;
    for (int g = 0; g < G.order(); ++g) {
        auto c = cyclic_subgroup(G, g);
        if (seen.insert(c).second) cyc.push_back(std::move(c));
    }
    std::vector<std::vector<int>> list(seen.begin(), seen.end());
    for (size_t h = 0; h < list.size(); ++h)
        for (const auto& c : cyc) {
            if (std::includes(list[h].begin(), list[h].end(), c.begin(), c.end()))
                continue;
            std::vector<int> gens = list[h];
            gens.insert(gens.end(), c.begin(), c.end());
            auto join = closure(G, std::move(gens));
            if (seen.insert(join).second) list.push_back(std::move(join));
        }
    std::sort(list.begin(), list.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return list;
}

bool subgroup_is_abelian(const FiniteGroup& G, const std::vector<int>& H) {
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = i + 1; j < H.size(); ++j)
            if (G.mul(H[i], H[j]) != G.mul(H[j], H[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Integer root-of-unity rows for fast orthogonality sums
// ---------------------------------------------------------------------------

using Sparse = std::vector<std::pair<int, long long>>; // exponent mod e -> coeff

bool sparse_at(const Cyclotomic& v, int e, Sparse& out) {
    Cyclotomic r = v.reduced();
    int d = r.conductor();
    if (e % d != 0) return false;
    int f = e / d;
    const auto& c = r.coeffs();
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        if (c[t].get_den() != 1 || !c[t].get_num().fits_slong_p()) return false;
        out.emplace_back(int(t) * f, (long long)c[t].get_num().get_si());
    }
    return true;
}

// x^t mod the e-th cyclotomic polynomial, integer coefficients.
std::vector<std::vector<long long>> power_reductions(int e) {
    const auto& phi = cyclotomic_polynomial(e);
    int deg = int(phi.size()) - 1;
    std::vector<std::vector<long long>> red(size_t(e), std::vector<long long>(size_t(deg), 0));
    for (int t = 0; t < e; ++t) {
        if (t < deg) {
            red[size_t(t)][size_t(t)] = 1;
            continue;
        }
        std::vector<long long> v(size_t(deg) + 1, 0);
        for (int i = 0; i < deg; ++i) v[size_t(i) + 1] = red[size_t(t) - 1][size_t(i)];
        long long lead = v[size_t(deg)];
        for (int i = 0; i < deg; ++i)
            red[size_t(t)][size_t(i)] = v[size_t(i)] - lead * phi[size_t(i)].get_si();
    }
    return red;
}

bool reduces_to_const(const std::vector<long long>& acc,
                      const std::vector<std::vector<long long>>& red, long long cst) {
    size_t deg = red.empty() ? 1 : red[0].size();
    std::vector<__int128> r(deg, 0);
    for (size_t t = 0; t < acc.size(); ++t) {
        if (acc[t] == 0) continue;
        for (size_t i = 0; i < deg; ++i) r[i] += (__int128)acc[t] * red[t][i];
    }
    if (r[0] != cst) return false;
    for (size_t i = 1; i < deg; ++i)
        if (r[i] != 0) return false;
    return true;
}

// conj(zeta^t) = zeta^(e-t)
void accumulate_conv(std::vector<long long>& acc, const Sparse& a, const Sparse& b,
                     long long w, int e) {
    for (const auto& [s, x] : a)
        for (const auto& [t, y] : b) acc[size_t((s + e - t) % e)] += w * x * y;
}

bool orthogonality_holds(const CharacterTable& T, std::string& why) {
    const FiniteGroup& G = T.group();
    const ClassData& cd = T.class_data();
    const auto& irr = T.irreducibles();
    int k = int(cd.classes.size());
    int e = cd.exponent;
    long long n = G.order();

    long long sumsq = 0;
    for (const auto& chi : irr) sumsq += (long long)chi.degree * chi.degree;
    if (sumsq != n) {
        why = "sum of squared degrees is " + std::to_string(sumsq);
        return false;
    }

    std::vector<std::vector<Sparse>> rows(irr.size(), std::vector<Sparse>(size_t(k)));
    for (size_t i = 0; i < irr.size(); ++i)
        for (int c = 0; c < k; ++c)
            if (!sparse_at(irr[i].values[size_t(c)], e, rows[i][size_t(c)])) {
                why = "non-integral character value";
                return false;
            }
    auto red = power_reductions(e);

    for (size_t i = 0; i < irr.size(); ++i)
        for (size_t j = i; j < irr.size(); ++j) {
            std::vector<long long> acc(size_t(e), 0);
            for (int c = 0; c < k; ++c)
                accumulate_conv(acc, rows[i][size_t(c)], rows[j][size_t(c)],
                                (long long)cd.classes[size_t(c)].size(), e);
            if (!reduces_to_const(acc, red, i == j ? n : 0)) {
                why = "row orthogonality fails for characters " + std::to_string(i) +
                      "," + std::to_string(j);
                return false;
            }
        }

    for (int ci = 0; ci < k; ++ci)
        for (int cj = ci; cj < k; ++cj) {
            std::vector<long long> acc(size_t(e), 0);
            for (size_t i = 0; i < irr.size(); ++i)
                accumulate_conv(acc, rows[i][size_t(ci)], rows[i][size_t(cj)], 1, e);
            long long cent = n / (long long)cd.classes[size_t(ci)].size();
            if (!reduces_to_const(acc, red, ci == cj ? cent : 0)) {
                why = "column orthogonality fails for classes " + std::to_string(ci) +
                      "," + std::to_string(cj);
                return false;
            }
        }
    return true;
}

// Merge per-entry check lists in catalog order after a parallel loop.
template <typename F>
CheckList parallel_over_catalog(int jobs, F&& per_entry) {
    const auto& cat = analyzed_catalog(jobs);
    std::vector<CheckList> parts(cat.size());
    std::string error;
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(jobs))
    for (size_t i = 0; i < cat.size(); ++i) {
        try {
            per_entry(cat[i], parts[i]);
        } catch (const std::exception& ex) {
            CheckList cl;
            cl.add(false, cat[i].spec + ": exception: " + ex.what());
            parts[i] = cl;
        }
    }
    CheckList out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> small_primes_upto(int n) {
    std::vector<int> ps;
    std::vector<char> sieve(size_t(n) + 1, 1);
    for (int i = 2; i <= n; ++i)
        if (sieve[size_t(i)]) {
            ps.push_back(i);
            for (int j = 2 * i; j <= n; j += i) sieve[size_t(j)] = 0;
        }
    return ps;
}

} // namespace

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

const std::vector<std::string>& curated_catalog_specs() {
    static const std::vector<std::string> specs = build_spec_list();
    return specs;
}

std::string group_fingerprint(const FiniteGroup& G) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    int n = G.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = G.mul(i, j);
            mix(uint64_t(v) & 0xff);
            mix(uint64_t(v) >> 8);
        }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

const std::vector<CatalogAnalysis>& analyzed_catalog(int jobs) {
    static std::vector<CatalogAnalysis> cache;
    static std::string error;
    static bool done = false;
    if (done) {
        if (!error.empty()) throw MismatchDetected(error);
        return cache;
    }
    const auto& specs = curated_catalog_specs();
    std::vector<CatalogAnalysis> out(specs.size());
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(jobs))
    for (size_t i = 0; i < specs.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        CatalogAnalysis a;
        a.spec = specs[i];
        try {
            a.group = build_group(parse_spec(specs[i]));
            a.engine = std::make_unique<VerdictEngine>(CharacterTable::compute(a.group));
            a.reports = cross_check(*a.engine);
        } catch (const std::exception& ex) {
#pragma omp critical
            if (error.empty()) error = specs[i] + ": " + ex.what();
        }
        a.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out[i] = std::move(a);
    }
    done = true;
    if (!error.empty()) throw MismatchDetected(error);
    cache = std::move(out);
    return cache;
}

std::string entry_json(const CatalogAnalysis& a, bool with_timing) {
    nlohmann::json j;
    j["v"] = 1;
    j["spec"] = a.spec;
    j["order"] = a.group->order();
    j["classes"] = a.group->num_classes();
    j["fingerprint"] = group_fingerprint(*a.group);
    j["unknown_q"] = a.engine->unknown_count_over_q();
    nlohmann::json fields = nlohmann::json::object();
    for (const auto& r : a.reports) {
        nlohmann::json f;
        f["def_lower_order"] = r.definitional.lower.size();
        f["def_upper_order"] = r.definitional.upper.size();
        f["def_exact"] = r.definitional.exact();
        f["classifier_order"] = r.classifier.predicted.size();
        f["classifier_exact"] = r.classifier.exact;
        f["tags"] = r.classifier.tags;
        f["match"] = r.match;
        f["comparable"] = r.comparable;
        fields[field_tag_str(r.field)] = std::move(f);
    }
    j["fields"] = std::move(fields);
    if (with_timing) j["seconds"] = a.seconds;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Invariant checks
// ---------------------------------------------------------------------------

CheckList check_orthogonality(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        std::string why;
        bool ok = orthogonality_holds(a.engine->table(), why);
        cl.add(ok, a.spec + ": orthogonality relations and degree sum" +
                       (ok ? "" : " (" + why + ")"));
    });
}

CheckList check_fs(int jobs) {
    CheckList out = parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const CharacterTable& T = a.engine->table();
        for (const auto& chi : T.irreducibles()) {
            const SchurVerdict& v = a.engine->verdict(chi.id);
            if (v.fs < -1 || v.fs > 1) {
                cl.add(false, a.spec + ": indicator out of range for character " +
                                  std::to_string(chi.id));
                return;
            }
            bool real_values = true;
            for (const auto& val : chi.values)
                if (val != val.conj()) {
                    real_values = false;
                    break;
                }
            if ((v.fs != 0) != real_values) {
                cl.add(false, a.spec + ": indicator/realness mismatch for character " +
                                  std::to_string(chi.id));
                return;
            }
        }
        cl.add(true, a.spec + ": indicators in {-1,0,1}, nonzero iff real-valued");
    });
    const auto& cat = analyzed_catalog(jobs);
    for (const auto& a : cat)
        if (a.spec == "Q8") {
            int minus = 0;
            for (const auto& chi : a.engine->table().irreducibles())
                if (chi.degree == 2 && a.engine->verdict(chi.id).fs == -1) ++minus;
            out.add(minus == 1, "Q8: unique degree-2 character has indicator -1");
        }
    return out;
}

// Constituents of the restriction of a skew-linear (over R) character are
// skew-linear; checked on every subgroup of every catalog group of order
// <= 64.  Linear constituents are skew-linear by definition, so the content
// is that degree-2 constituents on nonabelian subgroups have indicator -1.
CheckList check_restriction(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const FiniteGroup& G = *a.group;
        if (G.order() > 64) return;
        const CharacterTable& T = a.engine->table();
        std::vector<int> skew2; // degree-2 skew characters over R
        for (const auto& chi : T.irreducibles())
            if (chi.degree > 1 &&
                a.engine->skew_linear(chi.id, "R") == Verdict::Yes)
                skew2.push_back(chi.id);
        if (skew2.empty()) {
            cl.add(true, a.spec + ": restriction property (no nonlinear skew characters)");
            return;
        }
        auto subs = all_subgroups(G);
        int tested = 0;
        for (const auto& H : subs) {
            if (H.size() <= 1 || H.size() == size_t(G.order())) continue;
            if (subgroup_is_abelian(G, H)) continue; // constituents linear
            SubgroupGroup sg = subgroup_as_group(G, H);
            CharacterTable TH = CharacterTable::compute(sg.group);
            for (int id : skew2) {
                auto vals = T.restrict_to(T.irreducibles()[size_t(id)], sg);
                for (const auto& [cid, mult] : TH.decompose(vals)) {
                    (void)mult;
                    const Character& psi = TH.irreducibles()[size_t(cid)];
                    if (psi.degree == 1) continue;
                    ++tested;
                    if (TH.fs_indicator(psi) != -1) {
                        cl.add(false, a.spec + ": non-skew constituent on a subgroup of order " +
                                          std::to_string(H.size()));
                        return;
                    }
                }
            }
        }
        cl.add(true, a.spec + ": restriction property over R (" +
                         std::to_string(tested) + " nonlinear constituents)");
    });
}

// When chi(1) equals a finite local index m_q, restricting to any subgroup
// of order prime to q yields only linear constituents.
CheckList check_local_restriction(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const FiniteGroup& G = *a.group;
        if (G.order() > 128) return;
        const CharacterTable& T = a.engine->table();
        std::vector<std::pair<int, long>> forced; // char id, prime q
        for (const auto& chi : T.irreducibles()) {
            if (chi.degree < 2) continue;
            const SchurVerdict& v = a.engine->verdict(chi.id);
            for (const auto& [q, m] : v.m_local)
                if (m == chi.degree) forced.emplace_back(chi.id, q);
        }
        if (forced.empty()) return;
        auto subs = all_subgroups(G);
        std::map<std::vector<int>, CharacterTable> tables;
        int tested = 0;
        for (const auto& H : subs) {
            if (H.size() <= 1) continue;
            bool abelian = subgroup_is_abelian(G, H);
            for (const auto& [id, q] : forced) {
                if (long(H.size()) % q == 0) continue;
                ++tested;
                if (abelian) continue; // constituents linear
                auto it = tables.find(H);
                if (it == tables.end()) {
                    SubgroupGroup sg = subgroup_as_group(G, H);
                    it = tables.emplace(H, CharacterTable::compute(sg.group)).first;
                }
                SubgroupGroup sg = subgroup_as_group(G, H);
                auto vals = T.restrict_to(T.irreducibles()[size_t(id)], sg);
                for (const auto& [cid, mult] : it->second.decompose(vals)) {
                    (void)mult;
                    if (it->second.irreducibles()[size_t(cid)].degree != 1) {
                        cl.add(false, a.spec + ": nonlinear constituent on a q-prime subgroup");
                        return;
                    }
                }
            }
        }
        cl.add(true, a.spec + ": local-index forcing of linear constituents (" +
                         std::to_string(tested) + " restrictions)");
    });
}

// (1/|N|) sum over N of chi equals chi(1) when N is in the kernel and 0
// otherwise, for every normal subgroup of every catalog group of order <= 24.
CheckList check_en_pairing(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const FiniteGroup& G = *a.group;
        if (G.order() > 24) return;
        const CharacterTable& T = a.engine->table();
        int pairs = 0;
        for (const auto& N : all_subgroups(G)) {
            if (!is_subgroup_normal(G, N)) continue;
            for (const auto& chi : T.irreducibles()) {
                ++pairs;
                Cyclotomic val = T.en_pairing(chi, N);
                bool in_kernel = is_subset(N, T.kernel(chi));
                Cyclotomic expect = in_kernel ? Cyclotomic(chi.degree) : Cyclotomic(0L);
                if (val != expect) {
                    cl.add(false, a.spec + ": pairing value off for character " +
                                      std::to_string(chi.id) + ", |N| = " +
                                      std::to_string(N.size()));
                    return;
                }
            }
        }
        cl.add(true, a.spec + ": idempotent pairing on " + std::to_string(pairs) +
                         " (character, normal subgroup) pairs");
    });
}

// Complex kernel: the whole group iff abelian, trivial otherwise.
CheckList check_triviality(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        if (a.group->order() > 64) return;
        const NKerResult& c = a.reports[0].definitional;
        bool ok = c.exact() &&
                  (a.group->is_abelian() ? long(c.lower.size()) == a.group->order()
                                         : c.lower.size() == 1);
        cl.add(ok, a.spec + ": complex kernel is " +
                       (a.group->is_abelian() ? "the whole group" : "trivial"));
    });
}

// Character field of an outer tensor product is the compositum of the factor
// character fields: a Galois twist fixes the product row iff it fixes both
// factor rows.
CheckList check_compositum(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const FiniteGroup& G = *a.group;
        if (G.provenance().kind != Provenance::Product) return;
        const auto& factors = G.provenance().factors;
        int m = int(factors.size());
        std::vector<CharacterTable> ft;
        ft.reserve(size_t(m));
        for (const auto& f : factors) ft.push_back(CharacterTable::compute(f));
        std::vector<int> stride(size_t(m), 1);
        for (int i = m - 2; i >= 0; --i)
            stride[size_t(i)] = stride[size_t(i) + 1] * factors[size_t(i) + 1]->order();

        const CharacterTable& T = a.engine->table();
        const ClassData& cd = T.class_data();
        int k = int(cd.classes.size());
        int eG = cd.exponent;

        // stabilizer sets per factor character, as sorted vectors
        std::vector<std::vector<std::vector<long>>> stab{size_t(m)};
        for (int i = 0; i < m; ++i)
            for (const auto& sigma : ft[size_t(i)].irreducibles())
                stab[size_t(i)].push_back(ft[size_t(i)].field_stabilizer(sigma.id));

        std::vector<int> idx(size_t(m), 0);
        int checked = 0;
        while (true) {
            // values of the product character on each class of G
            std::vector<Cyclotomic> vals(size_t(k), Cyclotomic(1L));
            for (int c = 0; c < k; ++c) {
                int rep = cd.classes[size_t(c)][0];
                Cyclotomic v(1L);
                for (int i = 0; i < m; ++i) {
                    int comp = (rep / stride[size_t(i)]) % factors[size_t(i)]->order();
                    v = v * ft[size_t(i)].value_at(
                                ft[size_t(i)].irreducibles()[size_t(idx[size_t(i)])], comp);
                }
                vals[size_t(c)] = v;
            }
            int found = -1;
            for (const auto& chi : T.irreducibles()) {
                bool same = true;
                for (int c = 0; c < k && same; ++c)
                    same = chi.values[size_t(c)] == vals[size_t(c)];
                if (same) {
                    found = chi.id;
                    break;
                }
            }
            if (found < 0) {
                cl.add(false, a.spec + ": product character not found in the table");
                return;
            }
            std::vector<long> pstab = T.field_stabilizer(found);
            for (long t = 1; t <= eG; ++t) {
                if (std::gcd(t, long(eG)) != 1) continue;
                bool fixes_product =
                    std::binary_search(pstab.begin(), pstab.end(), t);
                bool fixes_factors = true;
                for (int i = 0; i < m && fixes_factors; ++i) {
                    long ei = ft[size_t(i)].class_data().exponent;
                    long ti = t % ei;
                    const auto& si = stab[size_t(i)][size_t(idx[size_t(i)])];
                    fixes_factors = std::binary_search(si.begin(), si.end(), ti);
                }
                if (fixes_product != fixes_factors) {
                    cl.add(false, a.spec + ": compositum mismatch for character " +
                                      std::to_string(found));
                    return;
                }
            }
            ++checked;
            int pos = m - 1;
            while (pos >= 0 && ++idx[size_t(pos)] ==
                                   int(ft[size_t(pos)].irreducibles().size())) {
                idx[size_t(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        cl.add(checked == int(T.irreducibles().size()),
               a.spec + ": character fields of " + std::to_string(checked) +
                   " product characters are composita");
    });
}

CheckList check_inclusions(int jobs) {
    CheckList out = parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        const auto& C = a.reports[0].definitional;
        const auto& R = a.reports[1].definitional;
        const auto& Q = a.reports[2].definitional;
        std::vector<int> rg = r_of_g(*a.group);
        bool ok = is_subset(C.lower, R.lower) && is_subset(R.lower, Q.lower) &&
                  is_subset(Q.upper, rg);
        cl.add(ok, a.spec + ": kernel chain C <= R <= Q <= R(G)");
    });
    const auto& cat = analyzed_catalog(jobs);
    bool strict_cr = false, strict_rq = false, strict_qr = false;
    std::string w1, w2, w3;
    for (const auto& a : cat) {
        const auto& C = a.reports[0].definitional;
        const auto& R = a.reports[1].definitional;
        const auto& Q = a.reports[2].definitional;
        std::vector<int> rg = r_of_g(*a.group);
        if (!strict_cr && C.lower.size() < R.lower.size()) { strict_cr = true; w1 = a.spec; }
        if (!strict_rq && R.exact() && Q.exact() && R.lower.size() < Q.lower.size()) {
            strict_rq = true;
            w2 = a.spec;
        }
        if (!strict_qr && Q.exact() && Q.lower.size() < rg.size()) { strict_qr = true; w3 = a.spec; }
    }
    out.add(strict_cr, "strict inclusion C < R witnessed" + (strict_cr ? " by " + w1 : ""));
    out.add(strict_rq, "strict inclusion R < Q witnessed" + (strict_rq ? " by " + w2 : ""));
    out.add(strict_qr, "strict inclusion Q < R(G) witnessed" + (strict_qr ? " by " + w3 : ""));
    bool order63 = false;
    for (const auto& a : cat)
        if (a.spec == "PQ(3,7,1,1)") {
            const auto& R = a.reports[1].definitional;
            const auto& Q = a.reports[2].definitional;
            order63 = R.exact() && Q.exact() && R.lower.size() == 1 && Q.lower.size() == 3;
        }
    out.add(order63, "order-63 group: real kernel trivial, rational kernel of order 3");
    return out;
}

CheckList check_classifiers(int jobs) {
    return parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        bool ok = true;
        std::string why;
        for (const auto& r : a.reports) {
            if (r.comparable ? !r.match
                             : !is_subset(r.classifier.predicted, r.definitional.upper)) {
                ok = false;
                why = std::string(" (field ") + field_tag_str(r.field) + ")";
                break;
            }
        }
        if (a.engine->unknown_count_over_q() != 0) {
            ok = false;
            why = " (unresolved rational verdicts)";
        }
        cl.add(ok, a.spec + ": dual routes agree, all verdicts decided" + why);
    });
}

CheckList check_sehgal(int jobs) {
    CheckList out = parallel_over_catalog(jobs, [](const CatalogAnalysis& a, CheckList& cl) {
        bool pred = sehgal_predicate(*a.group);
        bool all_yes = true;
        for (const auto& chi : a.engine->table().irreducibles())
            if (a.engine->skew_linear(chi.id, "Q") != Verdict::Yes) {
                all_yes = false;
                break;
            }
        cl.add(pred == all_yes,
               a.spec + ": predicate " + (pred ? "true" : "false") +
                   ", every block a division ring: " + (all_yes ? "true" : "false"));
    });
    const auto& cat = analyzed_catalog(jobs);
    bool q8c7 = false, q8c3 = false;
    for (const auto& a : cat) {
        if (a.spec == "Q8 x C7") q8c7 = sehgal_predicate(*a.group);
        if (a.spec == "Q8 x C3") q8c3 = !sehgal_predicate(*a.group);
    }
    out.add(q8c7, "Q8 x C7 satisfies the predicate (order of 2 mod 7 is odd)");
    out.add(q8c3, "Q8 x C3 fails the predicate (order of 2 mod 3 is even)");
    return out;
}

// The conjectured closed form NKer_Q = <g^(p^s)>, p^s = p^(c-1) (q-1)_p, on
// every in-range parameter tuple.  A failing tuple is a counterexample to
// the conjecture, found by exact computation; it is not an engine fault.
CheckList check_pq_remark(int jobs) {
    struct Tuple {
        long p, q, c, d;
    };
    std::vector<Tuple> tuples;
    auto primes = small_primes_upto(256);
    for (int p : primes)
        for (int q : primes) {
            if (p == q || (q - 1) % p != 0) continue;
            long qp = p_part(q - 1, p);
            for (long c = 1;; ++c) {
                long pc = 1;
                for (long i = 0; i < c; ++i) pc *= p;
                if ((q - 1) % pc != 0) break;
                for (long d = 1;; ++d) {
                    long pd = 1;
                    for (long i = 0; i < d; ++i) pd *= p;
                    if (pc * pd * q > 512) break;
                    if (pd % qp != 0) continue;
                    tuples.push_back({p, q, c, d});
                }
            }
        }
    std::sort(tuples.begin(), tuples.end(), [](const Tuple& a, const Tuple& b) {
        auto ka = std::tuple(a.p, a.q, a.c, a.d);
        auto kb = std::tuple(b.p, b.q, b.c, b.d);
        return ka < kb;
    });

    std::vector<CheckList> parts(tuples.size());
#pragma omp parallel for schedule(dynamic) num_threads(effective_jobs(jobs))
    for (size_t i = 0; i < tuples.size(); ++i) {
        const Tuple& t = tuples[i];
        std::string name = "PQ(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
                           std::to_string(t.c) + "," + std::to_string(t.d) + ")";
        try {
            PQParams pp;
            pp.p = t.p;
            pp.q = t.q;
            pp.c = t.c;
            pp.d = t.d;
            PQGroup fam = pq_family(pp);
            VerdictEngine E(CharacterTable::compute(fam.group));
            NKerResult def = nker_definitional(E, FieldTag::Q);
            long s = (t.c - 1);
            long m = t.q - 1;
            while (m % t.p == 0) { m /= t.p; ++s; }
            long ps = 1;
            for (long k = 0; k < s; ++k) ps *= t.p;
            std::vector<int> predicted =
                cyclic_subgroup(*fam.group, fam.group->pow(fam.g, ps));
            bool ok = def.exact() && def.lower == predicted;
            parts[i].add(ok, name + ": computed order " + std::to_string(def.lower.size()) +
                                 ", formula order " + std::to_string(predicted.size()));
        } catch (const std::exception& ex) {
            parts[i].add(false, name + ": exception: " + ex.what());
        }
    }
    CheckList out;
    for (const auto& p : parts) out.merge(p);
    return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "orthogonality", "fs",      "restriction", "en-pairing", "inclusions",
        "classifiers",   "sehgal",  "pq-families", "all"};
    return names;
}

SuiteResult run_suite(const std::string& name, int jobs) {
    SuiteResult r;
    r.name = name;
    if (name == "orthogonality") {
        r.list = check_orthogonality(jobs);
    } else if (name == "fs") {
        r.list = check_fs(jobs);
    } else if (name == "restriction") {
        r.list = check_restriction(jobs);
        r.list.merge(check_local_restriction(jobs));
    } else if (name == "en-pairing") {
        r.list = check_en_pairing(jobs);
    } else if (name == "inclusions") {
        r.list = check_inclusions(jobs);
        r.list.merge(check_triviality(jobs));
    } else if (name == "classifiers") {
        r.list = check_classifiers(jobs);
        r.list.merge(check_compositum(jobs));
    } else if (name == "sehgal") {
        r.list = check_sehgal(jobs);
    } else if (name == "pq-families") {
        r.note = "checks the conjectured closed form <g^(p^s)>, p^s = p^(c-1) (q-1)_p, "
                 "against the exactly computed kernel; failures are counterexamples to "
                 "the conjecture, not engine faults";
        r.list = check_pq_remark(jobs);
    } else if (name == "all") {
        for (const auto& n : suite_names()) {
            if (n == "all") continue;
            SuiteResult sub = run_suite(n, jobs);
            if (!sub.note.empty()) r.note += (r.note.empty() ? "" : "; ") + sub.note;
            r.list.merge(sub.list);
        }
    } else {
        throw InvalidParams("unknown suite: " + name);
    }
    return r;
}

} // namespace nker
