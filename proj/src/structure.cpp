#include "nker/structure.hpp"

#include "nker/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nker {

namespace {

bool is_sorted_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    if (elems.empty() || elems[0] != 0) return false;
    if (!std::is_sorted(elems.begin(), elems.end())) return false;
    for (int a : elems)
        for (int b : elems)
            if (!contains(elems, G.mul(a, b))) return false;
    return true;
}

bool all_commute(const FiniteGroup& G, const std::vector<int>& elems) {
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (G.mul(elems[i], elems[j]) != G.mul(elems[j], elems[i])) return false;
    return true;
}

} // namespace

StructuralScan structural_scan(const FiniteGroup& G) {
    StructuralScan s;
    s.center = center(G);
    s.derived = derived_subgroup(G);
    s.abelian = int(s.center.size()) == G.order();
    s.dedekind = true;
    for (int g = 0; g < G.order() && s.dedekind; ++g)
        if (!is_subgroup_normal(G, cyclic_subgroup(G, g))) s.dedekind = false;
    for (int g = 0; g < G.order(); ++g) ++s.order_histogram[G.element_order(g)];
    return s;
}

std::vector<int> r_of_g(const FiniteGroup& G) {
    std::vector<int> R(G.order());
    std::iota(R.begin(), R.end(), 0);
    for (int g = 0; g < G.order(); ++g) {
        std::vector<int> C = cyclic_subgroup(G, g);
        if (!is_subgroup_normal(G, C)) R = intersect_sorted(R, C);
    }
    return R;
}

bool kernel_quotient_is_abelian(const FiniteGroup& G, const std::vector<int>& N) {
    for (int a = 0; a < G.order(); ++a)
        for (int b = a + 1; b < G.order(); ++b) {
            int c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
            if (!contains(N, c)) return false;
        }
    return true;
}

QuotientGroup quotient_group(const FiniteGroup& G, const std::vector<int>& N) {
    if (!is_sorted_subgroup(G, N)) throw NotASubgroup("quotient by a non-subgroup");
    if (!is_subgroup_normal(G, N)) throw NotNormal("quotient by a nonnormal subgroup");
    int n = G.order();
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (coset_of[g] >= 0) continue;
        int c = int(reps.size());
        reps.push_back(g);
        for (int x : N) coset_of[G.mul(g, x)] = c;
    }
    int m = int(reps.size());
    std::vector<uint16_t> t(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[size_t(i) * m + j] = uint16_t(coset_of[G.mul(reps[i], reps[j])]);
    QuotientGroup q;
    q.group = FiniteGroup::from_table(std::move(t),
                                      G.name() + "/N" + std::to_string(int(N.size())));
    q.coset_of = std::move(coset_of);
    return q;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_sorted_subgroup(G, elems)) throw NotASubgroup("element set is not a subgroup");
    int m = int(elems.size());
    auto local = [&elems](int parent) {
        return int(std::lower_bound(elems.begin(), elems.end(), parent) - elems.begin());
    };
    std::vector<uint16_t> t(size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[size_t(i) * m + j] = uint16_t(local(G.mul(elems[i], elems[j])));
    SubgroupGroup s;
    s.group = FiniteGroup::from_table(std::move(t), G.name() + "_sub" + std::to_string(m));
    s.elements = std::move(elems);
    return s;
}

std::optional<std::vector<int>> normal_p_complement(const FiniteGroup& G, int p) {
    std::vector<int> elems;
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) % p != 0) elems.push_back(g);
    if (long(elems.size()) * p_part(G.order(), p) != G.order()) return std::nullopt;
    for (int a : elems)
        for (int b : elems)
            if (!contains(elems, G.mul(a, b))) return std::nullopt;
    return elems;
}

std::vector<int> sylow_subgroup(const FiniteGroup& G, int p) {
    long target = p_part(G.order(), p);
    std::vector<int> S{0};
    while (long(S.size()) < target) {
        int pick = -1;
        for (int g = 0; g < G.order() && pick < 0; ++g) {
            int o = G.element_order(g);
            bool ppower = true;
            while (o > 1) {
                if (o % p != 0) { ppower = false; break; }
                o /= p;
            }
            if (!ppower || contains(S, g)) continue;
            bool normalizes = true;
            for (int s : S)
                if (!contains(S, G.mul(G.mul(G.inv(g), s), g))) { normalizes = false; break; }
            if (normalizes) pick = g;
        }
        if (pick < 0) break; // cannot happen for a p-subgroup below Sylow order
        std::vector<int> gens = S;
        gens.push_back(pick);
        S = closure(G, gens);
    }
    return S;
}

std::vector<std::vector<int>> index_two_subgroups(const FiniteGroup& G) {
    std::vector<int> gens = derived_subgroup(G);
    for (int x : squares_subgroup(G)) gens.push_back(x);
    std::vector<int> K = closure(G, gens);
    QuotientGroup Q = quotient_group(G, K);
    int m = Q.group->order(); // elementary abelian 2-group
    std::vector<int> basis;
    std::vector<int> span{0};
    for (int v = 1; v < m; ++v) {
        if (contains(span, v)) continue;
        basis.push_back(v);
        std::vector<int> g2 = span;
        g2.push_back(v);
        span = closure(*Q.group, g2);
    }
    int r = int(basis.size());
    // coordinates of each quotient element over the basis
    std::vector<unsigned> coords(m, 0);
    for (unsigned bits = 0; bits < (1u << r); ++bits) {
        int e = 0;
        for (int i = 0; i < r; ++i)
            if (bits & (1u << i)) e = Q.group->mul(e, basis[i]);
        coords[e] = bits;
    }
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> H;
        for (int g = 0; g < G.order(); ++g)
            if (__builtin_parity(coords[Q.coset_of[g]] & mask) == 0) H.push_back(g);
        out.push_back(std::move(H));
    }
    return out;
}

std::optional<GenDicyclicWitness> is_generalized_dicyclic(const FiniteGroup& G) {
    if (int(center(G).size()) == G.order()) return std::nullopt; // abelian
    for (auto& A : index_two_subgroups(G)) {
        if (!all_commute(G, A)) continue;
        for (int g = 0; g < G.order(); ++g) {
            if (contains(A, g) || G.mul(g, g) == 0) continue;
            bool inverts = true;
            for (int a : A)
                if (G.mul(G.mul(G.inv(g), a), g) != G.inv(a)) { inverts = false; break; }
            if (inverts) return GenDicyclicWitness{A, g};
        }
    }
    return std::nullopt;
}

std::vector<int> abelian_invariants(const FiniteGroup& G) {
    if (!G.is_abelian()) throw InvalidParams("abelian_invariants on a nonabelian group");
    if (G.order() == 1) return {};
    int d = G.exponent();
    int g = 0;
    while (G.element_order(g) != d) ++g;
    QuotientGroup Q = quotient_group(G, cyclic_subgroup(G, g));
    std::vector<int> inv{d};
    for (int x : abelian_invariants(*Q.group)) inv.push_back(x);
    return inv;
}

bool is_dihedral_shape(const FiniteGroup& G) {
    int n = G.order();
    if (n % 2 != 0 || n < 4) return false;
    int m = n / 2;
    for (int a = 0; a < n; ++a) {
        if (G.element_order(a) != m) continue;
        std::vector<int> C = cyclic_subgroup(G, a);
        for (int t = 0; t < n; ++t) {
            if (contains(C, t) || G.mul(t, t) != 0) continue;
            if (G.mul(G.mul(G.inv(t), a), t) == G.inv(a)) return true;
        }
    }
    return false;
}

namespace {

// Q8 pairs: x of order 4, y outside <x> with y^2 = x^2 and x^y = x^{-1}.
std::vector<std::pair<int, int>> q8_pairs(const FiniteGroup& G) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < G.order(); ++x) {
        if (G.element_order(x) != 4) continue;
        std::vector<int> C = cyclic_subgroup(G, x);
        for (int y = 0; y < G.order(); ++y) {
            if (contains(C, y)) continue;
            if (G.mul(y, y) != G.mul(x, x)) continue;
            if (G.mul(G.mul(G.inv(y), x), y) != G.inv(x)) continue;
            out.emplace_back(x, y);
        }
    }
    return out;
}

// Extend S to all of G by adjoining central involutions; true on success.
bool central_elementary_complement(const FiniteGroup& G, std::vector<int> S) {
    std::vector<int> Z = center(G);
    bool grew = true;
    while (int(S.size()) < G.order() && grew) {
        grew = false;
        for (int z : Z) {
            if (G.element_order(z) != 2 || contains(S, z)) continue;
            std::vector<int> g2 = S;
            g2.push_back(z);
            S = closure(G, g2);
            grew = true;
            break;
        }
    }
    return int(S.size()) == G.order();
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

std::optional<std::pair<int, int>> c4_q8_shape(const FiniteGroup& G) {
    if (!power_of_two(G.order()) || G.order() < 32 || G.exponent() != 4) return std::nullopt;
    std::vector<int> Z = center(G);
    for (auto [x, y] : q8_pairs(G)) {
        std::vector<int> Q = closure(G, {x, y});
        if (Q.size() != 8) continue;
        for (int u : Z) {
            if (G.element_order(u) != 4 || G.mul(u, u) == G.mul(x, x)) continue;
            std::vector<int> UQ = closure(G, {u, x, y});
            if (UQ.size() != 32) continue;
            if (central_elementary_complement(G, UQ)) return std::make_pair(u, x);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> q8_q8_shape(const FiniteGroup& G) {
    if (!power_of_two(G.order()) || G.order() < 64 || G.exponent() != 4) return std::nullopt;
    auto pairs = q8_pairs(G);
    for (auto [x1, y1] : pairs) {
        std::vector<int> Q1 = closure(G, {x1, y1});
        if (Q1.size() != 8) continue;
        for (auto [x2, y2] : pairs) {
            if (G.mul(x1, x1) == G.mul(x2, x2)) continue;
            bool commute = true;
            for (int a : {x1, y1})
                for (int b : {x2, y2})
                    if (G.mul(a, b) != G.mul(b, a)) commute = false;
            if (!commute) continue;
            std::vector<int> QQ = closure(G, {x1, y1, x2, y2});
            if (QQ.size() != 64) continue;
            if (central_elementary_complement(G, QQ)) return std::make_pair(x1, x2);
        }
    }
    return std::nullopt;
}

std::optional<long> hamiltonian_odd_part(const FiniteGroup& G) {
    StructuralScan s = structural_scan(G);
    if (s.abelian || !s.dedekind) return std::nullopt;
    long odd = G.order();
    while (odd % 2 == 0) odd /= 2;
    return odd;
}

std::vector<int> primes_dividing(long n) {
    std::vector<int> out;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(int(p));
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(int(n));
    return out;
}

long p_part(long n, long p) {
    long r = 1;
    while (n % p == 0) {
        r *= p;
        n /= p;
    }
    return r;
}

} // namespace nker
