#include "nker/group.hpp"

#include "nker/cyclotomic.hpp"
#include "nker/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nker {

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

void FiniteGroup::finish() {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw InvalidParams("element 0 is not an identity in table for " + name_);
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) { inv_[a] = b; break; }
        if (inv_[a] < 0) throw InvalidParams("element without inverse in table for " + name_);
    }
    elt_order_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        elt_order_[a] = k;
    }
}

GroupPtr FiniteGroup::from_table(std::vector<uint16_t> table, std::string name, Provenance prov) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    size_t n = 0;
    while (n * n < table.size()) ++n;
    if (n * n != table.size() || n == 0 || n > kMaxOrder)
        throw InvalidParams("bad table size for " + name);
    g->n_ = int(n);
    g->table_ = std::move(table);
    g->name_ = std::move(name);
    g->prov_ = std::move(prov);
    g->finish();
    return g;
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::cyclic(int n) {
    if (n < 1 || n > kMaxOrder) throw InvalidParams("cyclic order " + std::to_string(n));
    std::vector<uint16_t> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[size_t(i) * n + j] = uint16_t((i + j) % n);
    Provenance p;
    p.kind = Provenance::Cyclic;
    p.params = {n};
    return from_table(std::move(t), "C" + std::to_string(n), std::move(p));
}

GroupPtr FiniteGroup::abelian(const std::vector<int>& invariants) {
    GroupPtr g = nullptr;
    for (int n : invariants) {
        GroupPtr c = cyclic(n);
        g = g ? direct_product(g, c) : c;
    }
    return g ? g : trivial();
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                        std::string name) {
    size_t deg = gens.empty() ? 1 : gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != deg) throw InvalidParams("mixed permutation degrees");
        std::vector<char> seen(deg, 0);
        for (int v : p) {
            if (v < 0 || size_t(v) >= deg || seen[v]) throw InvalidParams("not a permutation");
            seen[v] = 1;
        }
    }
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gperm : gens) {
            // product acts as (a*g)(x) = a(g(x))
            std::vector<int> prod(deg);
            for (size_t x = 0; x < deg; ++x) prod[x] = elems[head][gperm[x]];
            if (index.emplace(prod, int(elems.size())).second) {
                elems.push_back(prod);
                if (elems.size() > kMaxOrder)
                    throw ClosureTooLarge("permutation closure exceeds " +
                                          std::to_string(kMaxOrder));
            }
        }
    }
    int n = int(elems.size());
    std::vector<uint16_t> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> prod(deg);
            for (size_t x = 0; x < deg; ++x) prod[x] = elems[a][elems[b][x]];
            t[size_t(a) * n + b] = uint16_t(index.at(prod));
        }
    return from_table(std::move(t), std::move(name));
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b) {
    long n = long(a->order()) * b->order();
    if (n > kMaxOrder)
        throw OrderBound("product order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxOrder));
    int nb = b->order();
    std::vector<uint16_t> t(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int x = a->mul(i / nb, j / nb);
            int y = b->mul(i % nb, j % nb);
            t[size_t(i) * n + j] = uint16_t(x * nb + y);
        }
    Provenance p;
    p.kind = Provenance::Product;
    auto flatten = [&p](const GroupPtr& g) {
        if (g->provenance().kind == Provenance::Product)
            for (const auto& f : g->provenance().factors) p.factors.push_back(f);
        else
            p.factors.push_back(g);
    };
    flatten(a);
    flatten(b);
    return from_table(std::move(t), a->name() + "x" + b->name(), std::move(p));
}

GroupPtr FiniteGroup::dicyclic(int m) {
    if (m < 2 || 4 * m > kMaxOrder) throw InvalidParams("dicyclic parameter " + std::to_string(m));
    int n = 4 * m, a2 = 2 * m;
    std::vector<uint16_t> t(size_t(n) * n);
    // index = eps * 2m + i encodes a^i g^eps
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < a2; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < a2; ++j) {
                    int ii, ee;
                    if (e1 == 0) {
                        ii = (i + j) % a2;
                        ee = e2;
                    } else if (e2 == 0) {
                        ii = ((i - j) % a2 + a2) % a2;
                        ee = 1;
                    } else {
                        ii = ((i - j + m) % a2 + a2) % a2;
                        ee = 0;
                    }
                    t[size_t(e1 * a2 + i) * n + (e2 * a2 + j)] = uint16_t(ee * a2 + ii);
                }
    Provenance p;
    p.kind = Provenance::Dicyclic;
    p.params = {m};
    std::string name = (m == 2) ? "Q8" : "Dic(" + std::to_string(m) + ")";
    return from_table(std::move(t), std::move(name), std::move(p));
}

GroupPtr FiniteGroup::generalized_dicyclic(const std::vector<int>& invariants, long t_index) {
    GroupPtr A = abelian(invariants);
    int na = A->order();
    if (2L * na > kMaxOrder) throw OrderBound("generalized dicyclic order exceeds bound");
    if (A->exponent() <= 2)
        throw AbelianResult("adjoining g to an elementary abelian 2-group gives an abelian group");
    long t = t_index;
    if (t < 0) {
        // default: a^{n/2} for the first even-order direct factor a
        t = -1;
        int stride = na;
        for (int inv : invariants) {
            stride /= inv;
            if (inv % 2 == 0) { t = long(inv / 2) * stride; break; }
        }
        if (t < 0) throw NotOrderTwo("no even invariant to supply g^2");
    }
    if (t <= 0 || t >= na || A->element_order(int(t)) != 2)
        throw NotOrderTwo("g^2 candidate does not have order 2");
    int n = 2 * na;
    std::vector<uint16_t> tab(size_t(n) * n);
    // index = eps * |A| + a encodes a g^eps
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < na; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < na; ++j) {
                    int ii, ee;
                    if (e1 == 0) {
                        ii = A->mul(i, j);
                        ee = e2;
                    } else if (e2 == 0) {
                        ii = A->mul(i, A->inv(j));
                        ee = 1;
                    } else {
                        ii = A->mul(A->mul(i, A->inv(j)), int(t));
                        ee = 0;
                    }
                    tab[size_t(e1 * na + i) * n + (e2 * na + j)] = uint16_t(ee * na + ii);
                }
    Provenance p;
    p.kind = Provenance::GenDicyclic;
    for (int inv : invariants) p.params.push_back(inv);
    p.params.push_back(t);
    std::ostringstream name;
    name << "GDic(";
    for (size_t i = 0; i < invariants.size(); ++i) name << (i ? "," : "") << invariants[i];
    name << ";" << t << ")";
    return from_table(std::move(tab), name.str(), std::move(p));
}

PQGroup pq_family(PQParams params) {
    long p = params.p, q = params.q, c = params.c, d = params.d;
    if (!is_prime_long(p) || !is_prime_long(q) || p == q)
        throw InvalidParams("p and q must be distinct primes");
    if (c < 1 || d < 1) throw InvalidParams("c and d must be positive");
    long pc = 1;
    for (long i = 0; i < c; ++i) pc *= p;
    long pd = 1;
    for (long i = 0; i < d; ++i) pd *= p;
    long pcd = pc * pd;

    if (params.q_invariants.empty()) params.q_invariants = {int(q)};
    long exp_q = 1, q_order = 1;
    for (int inv : params.q_invariants) {
        long v = inv;
        while (v % q == 0) v /= q;
        if (v != 1 || inv < 2) throw InvalidParams("q_invariants must be powers of q");
        exp_q = std::max(exp_q, long(inv));
        q_order *= inv;
    }
    long p0_order = 1;
    for (int inv : params.p0_invariants) {
        long v = inv;
        while (v % p == 0) v /= p;
        if (v != 1 || inv < 2) throw InvalidParams("p0_invariants must be powers of p");
        if (pd % inv != 0) throw InvalidParams("p0_invariants must divide p^d");
        p0_order *= inv;
    }
    long b_order = 1;
    for (int inv : params.b_invariants) {
        if (inv < 2 || inv % p == 0 || inv % q == 0)
            throw InvalidParams("b_invariants must be coprime to p and q");
        b_order *= inv;
    }
    if (pcd * q_order * p0_order * b_order > kMaxOrder)
        throw OrderBound("pq family order exceeds " + std::to_string(kMaxOrder));
    if ((q - 1) % pc != 0) throw InvalidParams("p^c must divide q-1");
    long q1p = 1;
    for (long r = q - 1; r % p == 0; r /= p) q1p *= p;
    if (pd % q1p != 0) throw InvalidParams("(q-1)_p must divide p^d");
    long k = params.k;
    if (k == 0) {
        for (long cand = 2; cand < exp_q; ++cand) {
            if (std::gcd(cand, exp_q) != 1) continue;
            if (multiplicative_order(cand, exp_q) == pc) { k = cand; break; }
        }
        if (k == 0) throw InvalidParams("no acting exponent of order p^c modulo exp(Q)");
    } else {
        long km = ((k % exp_q) + exp_q) % exp_q;
        if (std::gcd(km, exp_q) != 1 || multiplicative_order(km, exp_q) != pc)
            throw InvalidParams("k has wrong multiplicative order modulo exp(Q)");
    }
    params.k = k;

    // Core <g> ⋉ Q: index = i*|Q| + x encodes g^i x, with x^g = x^k.
    GroupPtr Q = FiniteGroup::abelian(params.q_invariants);
    int nq = Q->order();
    int n = int(pcd) * nq;
    std::vector<uint16_t> t(size_t(n) * n);
    std::vector<long> kpow(pcd);
    kpow[0] = 1;
    for (long i = 1; i < pcd; ++i) kpow[i] = kpow[i - 1] * k % exp_q;
    for (long i1 = 0; i1 < pcd; ++i1)
        for (int x1 = 0; x1 < nq; ++x1)
            for (long i2 = 0; i2 < pcd; ++i2)
                for (int x2 = 0; x2 < nq; ++x2) {
                    long ii = (i1 + i2) % pcd;
                    int xx = Q->mul(Q->pow(x1, kpow[i2]), x2);
                    t[size_t(i1 * nq + x1) * n + (i2 * nq + x2)] = uint16_t(ii * nq + xx);
                }
    Provenance prov;
    prov.kind = Provenance::PQ;
    prov.params = {p, q, c, d, k};
    for (int inv : params.q_invariants) prov.params.push_back(inv);
    std::ostringstream name;
    name << "PQ(" << p << "," << q << "," << c << "," << d << "," << k << ")";
    GroupPtr core = FiniteGroup::from_table(std::move(t), name.str(), std::move(prov));

    GroupPtr G = core;
    if (!params.p0_invariants.empty())
        G = FiniteGroup::direct_product(G, FiniteGroup::abelian(params.p0_invariants));
    if (!params.b_invariants.empty())
        G = FiniteGroup::direct_product(G, FiniteGroup::abelian(params.b_invariants));
    // g = (g, identity, identity); cofactor stride is |P0|*|B|
    int g_index = nq * (G->order() / core->order());
    return PQGroup{G, g_index, std::move(params)};
}

int FiniteGroup::pow(int a, long e) const {
    int ord = elt_order_[a];
    e %= ord;
    if (e < 0) e += ord;
    int r = 0, x = a;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::exponent() const {
    long e = 1;
    for (int a = 0; a < n_; ++a) e = std::lcm(e, long(elt_order_[a]));
    return int(e);
}

const std::vector<std::vector<int>>& FiniteGroup::classes() const {
    if (!classes_.empty()) return classes_;
    class_of_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        if (class_of_[a] >= 0) continue;
        int c = int(classes_.size());
        std::vector<int> cls;
        for (int g = 0; g < n_; ++g) {
            int x = mul(mul(inv_[g], a), g);
            if (class_of_[x] < 0) {
                class_of_[x] = c;
                cls.push_back(x);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
    // canonical order: identity first, then (element order, minimal member)
    std::sort(classes_.begin(), classes_.end(),
              [this](const std::vector<int>& a, const std::vector<int>& b) {
                  int oa = elt_order_[a[0]], ob = elt_order_[b[0]];
                  return oa != ob ? oa < ob : a[0] < b[0];
              });
    for (int c = 0; c < int(classes_.size()); ++c)
        for (int x : classes_[c]) class_of_[x] = c;
    return classes_;
}

const std::vector<int>& FiniteGroup::class_of() const {
    classes();
    return class_of_;
}

int FiniteGroup::inverse_class(int c) const { return class_of()[inv_[class_rep(c)]]; }

int FiniteGroup::power_class(int c, long k) const {
    return class_of()[pow(class_rep(c), k)];
}

std::vector<int> closure(const FiniteGroup& G, std::vector<int> gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            elems.push_back(g);
        }
    for (size_t head = 0; head < elems.size(); ++head)
        for (int g : gens) {
            int x = G.mul(elems[head], g);
            if (!in[x]) {
                in[x] = 1;
                elems.push_back(x);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& G, int g) { return closure(G, {g}); }

bool contains(const std::vector<int>& sorted_elems, int g) {
    return std::binary_search(sorted_elems.begin(), sorted_elems.end(), g);
}

bool is_subgroup_normal(const FiniteGroup& G, const std::vector<int>& elems) {
    for (int s : elems)
        for (int g = 0; g < G.order(); ++g)
            if (!contains(elems, G.mul(G.mul(G.inv(g), s), g))) return false;
    return true;
}

std::vector<int> center(const FiniteGroup& G) {
    std::vector<int> z;
    for (int a = 0; a < G.order(); ++a) {
        bool central = true;
        for (int b = 0; b < G.order() && central; ++b)
            if (G.mul(a, b) != G.mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> derived_subgroup(const FiniteGroup& G) {
    std::vector<int> comms;
    std::vector<char> seen(G.order(), 0);
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) {
            int c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    return closure(G, comms);
}

std::vector<int> squares_subgroup(const FiniteGroup& G) {
    std::vector<int> sq;
    std::vector<char> seen(G.order(), 0);
    for (int a = 0; a < G.order(); ++a) {
        int s = G.mul(a, a);
        if (!seen[s]) {
            seen[s] = 1;
            sq.push_back(s);
        }
    }
    return closure(G, sq);
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace nker
