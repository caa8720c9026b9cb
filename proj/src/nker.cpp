#include "nker/nker.hpp"

#include "nker/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nker {

const char* field_tag_str(FieldTag t) {
    switch (t) {
        case FieldTag::C: return "C";
        case FieldTag::R: return "R";
        default: return "Q";
    }
}

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> whole_group(const FiniteGroup& G) {
    std::vector<int> all(size_t(G.order()));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

// Elements whose order is a power of 2 / odd, when they form subgroups.
std::vector<int> two_part_elements(const FiniteGroup& G) {
    std::vector<int> s;
    for (int x = 0; x < G.order(); ++x) {
        int o = G.element_order(x);
        while (o % 2 == 0) o /= 2;
        if (o == 1) s.push_back(x);
    }
    return s;
}

std::vector<int> odd_part_elements(const FiniteGroup& G) {
    std::vector<int> s;
    for (int x = 0; x < G.order(); ++x)
        if (G.element_order(x) % 2 == 1) s.push_back(x);
    return s;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    for (int a : elems)
        for (int b : elems)
            if (!contains(elems, G.mul(a, b))) return false;
    return true;
}

bool is_central(const FiniteGroup& G, const std::vector<int>& elems) {
    for (int a : elems)
        for (int x = 0; x < G.order(); ++x)
            if (G.mul(a, x) != G.mul(x, a)) return false;
    return true;
}

bool subgroup_abelian(const FiniteGroup& G, const std::vector<int>& elems) {
    for (int a : elems)
        for (int b : elems)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

// Sylow-2 = Q8 x (C2)^r, i.e. a nonabelian Dedekind 2-group.
bool two_part_is_q8_e(const FiniteGroup& G, const std::vector<int>& S) {
    if (S.size() < 8) return false;
    if (subgroup_abelian(G, S)) return false;
    auto sg = subgroup_as_group(G, S);
    auto odd = hamiltonian_odd_part(*sg.group);
    return odd && *odd == 1;
}

// Exact rational kernel of a group carrying a Blackburn shape.  Every
// nonlinear character is (mu x lambda)^G with mu in Lin(CB), lambda != 1 in
// Lin(Q); its block is a cyclic algebra whose extension ramifies only over q
// and whose defining scalar is a root of unity, so the index is
// lcm(m_inf, l/k).  The lambda-kernels of a fixed mu intersect to 1, leaving
// the intersection of Ker(mu) over the non-skew mu.
std::vector<int> shape_exact_kernel(const FiniteGroup& G, const BlackburnShape& s) {
    long pc = 1;
    for (long i = 0; i < s.c; ++i) pc *= s.p;

    std::vector<int> gens = s.C;
    gens.insert(gens.end(), s.B.begin(), s.B.end());
    std::vector<int> CB = closure(G, gens);
    auto sg = subgroup_as_group(G, CB);
    CharacterTable T = CharacterTable::compute(sg.group);

    auto local_of = [&](int parent) {
        return int(std::lower_bound(sg.elements.begin(), sg.elements.end(), parent) -
                   sg.elements.begin());
    };
    int gpc = local_of(G.pow(s.g, pc));
    std::vector<int> P0l, Bl;
    for (int u : s.P0) P0l.push_back(local_of(u));
    for (int b : s.B) Bl.push_back(local_of(b));

    std::vector<int> result = CB;
    for (const Character& mu : T.irreducibles()) {
        std::vector<int> K = T.kernel(mu);
        auto ord_mod = [&](int x) {
            int acc = x;
            long t = 1;
            while (!contains(K, acc)) { acc = sg.group->mul(acc, x); ++t; }
            return t;
        };
        long pa = ord_mod(gpc);
        long pi = 1, beta = 1;
        for (int u : P0l) pi = std::lcm(pi, ord_mod(u));
        for (int b : Bl) beta = std::lcm(beta, ord_mod(b));
        long theta = std::lcm(pa > 1 ? pc * pa : 1, std::lcm(pi, beta));
        long mo = std::lcm(pa, std::lcm(pi, beta));
        long mq = m_q_blackburn(theta, mo, s.q);
        long minf = (s.p == 2 && pa == 2 && pi <= 2 && beta == 1) ? 2 : 1;
        if (std::lcm(minf, mq) == pc) continue; // skew-linear, no constraint
        std::vector<int> Kp;
        Kp.reserve(K.size());
        for (int x : K) Kp.push_back(sg.elements[size_t(x)]);
        result = intersect_sorted(result, Kp);
    }
    return result;
}

} // namespace

NKerResult nker_definitional(const VerdictEngine& engine, FieldTag tag) {
    const CharacterTable& T = engine.table();
    NKerResult res;
    res.lower = whole_group(T.group());
    res.upper = res.lower;
    for (const Character& chi : T.irreducibles()) {
        Verdict v;
        if (tag == FieldTag::C)
            v = (chi.degree == 1) ? Verdict::Yes : Verdict::No;
        else
            v = engine.verdict(chi.id).skew_linear.at(tag == FieldTag::R ? "R" : "Q");
        if (v == Verdict::Yes) continue;
        std::vector<int> K = T.kernel(chi);
        res.lower = intersect_sorted(res.lower, K);
        if (v == Verdict::No)
            res.upper = intersect_sorted(res.upper, K);
        else
            ++res.unresolved;
    }
    if (res.unresolved == 0) res.upper = res.lower;
    return res;
}

Classification classify_complex(const FiniteGroup& G) {
    Classification out;
    if (G.is_abelian()) {
        out.tags.push_back("abelian");
        out.predicted = whole_group(G);
    } else {
        out.predicted = {0};
    }
    return out;
}

Classification classify_real(const FiniteGroup& G) {
    Classification out;
    out.predicted = {0};
    if (G.is_abelian()) {
        out.tags.push_back("abelian");
        out.predicted = whole_group(G);
        return out;
    }
    if (auto w = is_generalized_dicyclic(G)) {
        out.tags.push_back("generalized_dicyclic");
        std::vector<int> gsq = cyclic_subgroup(G, G.mul(w->g, w->g));
        out.predicted = kernel_quotient_is_abelian(G, gsq) ? whole_group(G) : gsq;
        return out;
    }
    if (auto w = c4_q8_shape(G)) {
        out.tags.push_back("c4_q8");
        int t = G.mul(G.pow(w->first, 2), G.pow(w->second, 2));
        out.predicted = cyclic_subgroup(G, t);
        return out;
    }
    if (auto w = q8_q8_shape(G)) {
        out.tags.push_back("q8_q8");
        int t = G.mul(G.pow(w->first, 2), G.pow(w->second, 2));
        out.predicted = cyclic_subgroup(G, t);
        return out;
    }
    return out;
}

bool sehgal_predicate(const FiniteGroup& G) {
    if (G.is_abelian()) return true;
    std::vector<int> A = odd_part_elements(G);
    std::vector<int> S = two_part_elements(G);
    if (A.size() * S.size() != size_t(G.order())) return false;
    if (!is_subgroup(G, A) || !is_subgroup(G, S)) return false;
    if (!subgroup_abelian(G, A) || !is_central(G, A)) return false;
    if (!two_part_is_q8_e(G, S)) return false;
    return multiplicative_order(2, long(A.size())) % 2 == 1;
}

bool division_product_predicate(const FiniteGroup& G, const std::string& field_tag) {
    if (field_tag == "Qp") return G.is_abelian();
    if (field_tag == "R") {
        if (G.is_abelian()) return true;
        auto odd = hamiltonian_odd_part(G);
        return odd && *odd == 1;
    }
    if (field_tag == "Q" || field_tag == "Q2") return sehgal_predicate(G);
    throw InvalidParams("unknown field tag: " + field_tag);
}

Classification classify_rational(const FiniteGroup& G) {
    Classification out;
    out.predicted = {0};
    bool have_exact = false;
    std::vector<int> exact_val;
    std::vector<int> flag_lower;
    bool flagged = false;

    auto offer_exact = [&](const std::vector<int>& v) {
        if (!have_exact) { have_exact = true; exact_val = v; }
    };
    auto offer_flag = [&](const std::vector<int>& lb) {
        if (!flagged || lb.size() > flag_lower.size()) flag_lower = lb;
        flagged = true;
    };

    // (a)
    if (G.is_abelian()) {
        out.tags.push_back("a_abelian");
        offer_exact(whole_group(G));
    }

    // (c)
    if (auto w = is_generalized_dicyclic(G)) {
        out.tags.push_back("c_generalized_dicyclic");
        std::vector<int> gsq = cyclic_subgroup(G, G.mul(w->g, w->g));
        if (kernel_quotient_is_abelian(G, gsq))
            offer_exact(whole_group(G)); // NKer_R = G and monotonicity forces NKer_Q = G
        else
            offer_flag(gsq);
    }

    // (b)
    if (!G.is_abelian()) {
        std::vector<int> A = odd_part_elements(G);
        std::vector<int> S = two_part_elements(G);
        if (A.size() * S.size() == size_t(G.order()) && is_subgroup(G, A) &&
            is_subgroup(G, S) && subgroup_abelian(G, A) && is_central(G, A)) {
            auto sg = subgroup_as_group(G, S);
            bool on_real_list = !sg.group->is_abelian() && sg.group->exponent() == 4 &&
                                !classify_real(*sg.group).tags.empty();
            if (on_real_list && multiplicative_order(2, long(A.size())) % 2 == 1) {
                out.tags.push_back("b_two_group_times_odd");
                if (sehgal_predicate(G)) {
                    offer_exact(whole_group(G));
                } else {
                    // The 2-factor carries the whole kernel: its split blocks
                    // stay split under any odd cyclotomic extension, and its
                    // quaternion blocks stay division when the order of 2
                    // modulo |A| is odd.
                    Classification sr = classify_real(*sg.group);
                    std::vector<int> mapped;
                    mapped.reserve(sr.predicted.size());
                    for (int i : sr.predicted) mapped.push_back(sg.elements[size_t(i)]);
                    std::sort(mapped.begin(), mapped.end());
                    offer_exact(mapped);
                }
            }
        }
    }

    // (d)
    std::optional<BlackburnShape> shape = blackburn_shape(G);
    if (shape) {
        long pd = 1;
        for (long i = 0; i < shape->d; ++i) pd *= shape->p;
        long qm1p = p_part(shape->q - 1, shape->p);
        long ordB = multiplicative_order(shape->q, long(shape->B.size()));
        long ordpd = multiplicative_order(shape->q, pd);
        if (qm1p <= pd && pd % qm1p == 0 && ordpd % p_part(ordB, shape->p) == 0)
            out.tags.push_back("d_pq_times_b");
        offer_exact(shape_exact_kernel(G, *shape));
    }

    // (e)
    if (!G.is_abelian()) {
        std::vector<int> H = odd_part_elements(G);
        std::vector<int> S = two_part_elements(G);
        if (H.size() > 1 && H.size() * S.size() == size_t(G.order()) &&
            is_subgroup(G, H) && is_subgroup(G, S) && two_part_is_q8_e(G, S)) {
            bool commute = true;
            for (int h : H) {
                for (int s : S)
                    if (G.mul(h, s) != G.mul(s, h)) { commute = false; break; }
                if (!commute) break;
            }
            if (commute) {
                auto hg = subgroup_as_group(G, H);
                bool h_ok = hg.group->is_abelian();
                if (!h_ok) {
                    auto hs = blackburn_shape(*hg.group);
                    if (hs) {
                        long pd = 1;
                        for (long i = 0; i < hs->d; ++i) pd *= hs->p;
                        long qm1p = p_part(hs->q - 1, hs->p);
                        long ordB = multiplicative_order(hs->q, long(hs->B.size()));
                        long ordpd = multiplicative_order(hs->q, pd);
                        h_ok = qm1p <= pd && pd % qm1p == 0 &&
                               ordpd % p_part(ordB, hs->p) == 0;
                    }
                }
                if (h_ok && multiplicative_order(2, long(H.size())) % 2 == 1) {
                    out.tags.push_back("e_q8_times_h");
                    offer_flag({0});
                }
            }
        }
    }

    if (have_exact) {
        out.exact = true;
        out.predicted = exact_val;
    } else if (flagged) {
        out.exact = false;
        out.predicted = flag_lower;
    }
    return out;
}

namespace {

std::string subgroup_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{order " << s.size() << ":";
    for (size_t i = 0; i < s.size() && i < 12; ++i) os << " " << s[i];
    if (s.size() > 12) os << " ...";
    os << "}";
    return os.str();
}

} // namespace

std::vector<KernelReport> cross_check(const VerdictEngine& engine) {
    const FiniteGroup& G = engine.table().group();
    std::vector<KernelReport> reports;
    for (FieldTag tag : {FieldTag::C, FieldTag::R, FieldTag::Q}) {
        KernelReport r;
        r.group = G.name();
        r.field = tag;
        r.definitional = nker_definitional(engine, tag);
        r.classifier = tag == FieldTag::C   ? classify_complex(G)
                       : tag == FieldTag::R ? classify_real(G)
                                            : classify_rational(G);
        r.unresolved_chars = r.definitional.unresolved;

        auto fail = [&](const std::string& why) {
            throw MismatchDetected(G.name() + " over " + field_tag_str(tag) + ": " + why +
                                   "; classifier " + subgroup_str(r.classifier.predicted) +
                                   (r.classifier.exact ? "" : " (lower bound)") +
                                   ", definitional lower " + subgroup_str(r.definitional.lower) +
                                   " upper " + subgroup_str(r.definitional.upper));
        };

        if (r.classifier.exact && r.definitional.exact()) {
            r.match = r.classifier.predicted == r.definitional.lower;
            if (!r.match) fail("exact values differ");
        } else if (r.classifier.exact) {
            r.comparable = false;
            if (!is_subset(r.definitional.lower, r.classifier.predicted) ||
                !is_subset(r.classifier.predicted, r.definitional.upper))
                fail("exact classifier value escapes the definitional bounds");
            r.match = true;
        } else {
            r.comparable = false;
            if (!is_subset(r.classifier.predicted, r.definitional.upper))
                fail("classifier lower bound escapes the definitional upper bound");
            if (r.definitional.upper.size() <= 1)
                fail("classifier demands a nontrivial kernel");
            r.match = true;
        }
        reports.push_back(std::move(r));
    }

    std::vector<int> rg = r_of_g(G);
    const auto& C = reports[0].definitional;
    const auto& R = reports[1].definitional;
    const auto& Q = reports[2].definitional;
    if (!is_subset(C.lower, R.upper) || !is_subset(R.lower, Q.upper) ||
        !is_subset(Q.lower, rg))
        throw MismatchDetected(G.name() + ": inclusion chain C <= R <= Q <= R(G) violated");
    return reports;
}

} // namespace nker
