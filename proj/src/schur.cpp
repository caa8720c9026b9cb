#include "nker/schur.hpp"

#include "nker/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nker {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        default: return "Unknown";
    }
}

bool quaternion_splits_over(long n, QuatVariant variant) {
    if (n < 1 || n % 2 == 0)
        throw EvenConductor("conductor must be odd, got " + std::to_string(n));
    switch (variant) {
        case QuatVariant::Real:
            return false;
        case QuatVariant::Sqrt2Extension:
            return n > 1;
        case QuatVariant::RationalCyclotomic:
        case QuatVariant::TwoAdic:
            return multiplicative_order(2, n) % 2 == 0;
    }
    return false;
}

long m_q_blackburn(long theta_order, long mu_order, long q) {
    long l = multiplicative_order(q, theta_order);
    long k = multiplicative_order(q, mu_order);
    if (k == 0 || l % k != 0)
        throw NonIntegralIndex("l = " + std::to_string(l) + " not divisible by k = " +
                               std::to_string(k));
    return l / k;
}

namespace {

bool all_commute(const FiniteGroup& G, const std::vector<int>& elems) {
    for (int a : elems)
        for (int b : elems)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

long subgroup_exponent(const FiniteGroup& G, const std::vector<int>& elems) {
    long e = 1;
    for (int a : elems) e = std::lcm(e, long(G.element_order(a)));
    return e;
}

long log_prime(long n, long p) {
    long c = 0;
    while (n % p == 0) { n /= p; ++c; }
    return n == 1 ? c : -1;
}

// Subgroup of C of the given order meeting avoid trivially, by backtracking.
std::optional<std::vector<int>> complement_in(const FiniteGroup& G,
                                              const std::vector<int>& C,
                                              const std::vector<int>& avoid,
                                              size_t target) {
    if (target == 1) return std::vector<int>{0};
    std::function<std::optional<std::vector<int>>(const std::vector<int>&, size_t)> rec =
        [&](const std::vector<int>& cur, size_t start) -> std::optional<std::vector<int>> {
        if (cur.size() == target) return cur;
        for (size_t i = start; i < C.size(); ++i) {
            int x = C[i];
            if (x == 0 || contains(cur, x)) continue;
            std::vector<int> gens = cur;
            gens.push_back(x);
            auto ext = closure(G, gens);
            if (ext.size() > target || target % ext.size() != 0) continue;
            if (intersect_sorted(ext, avoid).size() != 1) continue;
            if (auto r = rec(ext, i + 1)) return r;
        }
        return std::nullopt;
    };
    return rec({0}, 0);
}

} // namespace

std::optional<BlackburnShape> blackburn_shape(const FiniteGroup& G) {
    if (G.is_abelian()) return std::nullopt;
    if (r_of_g(G).size() <= 1) return std::nullopt;
    for (int p : primes_dividing(G.order())) {
        auto Aopt = normal_p_complement(G, p);
        if (!Aopt) continue;
        const std::vector<int>& A = *Aopt;
        if (!all_commute(G, A)) continue;
        std::vector<int> P = sylow_subgroup(G, p);
        if (!all_commute(G, P)) continue;

        std::vector<int> B;
        for (int a : A) {
            bool central = true;
            for (int u : P)
                if (G.mul(a, u) != G.mul(u, a)) { central = false; break; }
            if (central) B.push_back(a);
        }

        long q = 0;
        bool bad = false;
        for (int r : primes_dividing(long(A.size()))) {
            bool moved = false;
            for (int a : A)
                if (G.element_order(a) % r == 0 && log_prime(G.element_order(a), r) >= 0 &&
                    !contains(B, a)) { moved = true; break; }
            if (moved) {
                if (q != 0) { bad = true; break; }
                q = r;
            }
        }
        if (bad || q == 0 || q == 2) continue;

        std::vector<int> Q;
        for (int a : A)
            if (log_prime(G.element_order(a), q) >= 0) Q.push_back(a);
        if (Q.size() * B.size() != A.size()) continue;
        if (intersect_sorted(Q, B).size() != 1) continue;

        long expQ = subgroup_exponent(G, Q);
        int z = 0;
        for (int y : Q)
            if (G.element_order(y) == expQ) { z = y; break; }

        // every u in P must act on Q as y -> y^{k_u}
        std::vector<long> ku(size_t(G.order()), -1);
        bool uniform = true;
        for (int u : P) {
            int conj = G.mul(G.mul(G.inv(u), z), u);
            long kcand = -1;
            int acc = 0;
            for (long j = 0; j < expQ; ++j) {
                if (acc == conj) { kcand = j; break; }
                acc = G.mul(acc, z);
            }
            if (kcand < 0) { uniform = false; break; }
            for (int y : Q)
                if (G.mul(G.mul(G.inv(u), y), u) != G.pow(y, kcand)) { uniform = false; break; }
            if (!uniform) break;
            ku[size_t(u)] = kcand;
        }
        if (!uniform) continue;

        std::vector<int> C;
        for (int u : P)
            if (ku[size_t(u)] % expQ == 1 % expQ) C.push_back(u);
        if (C.size() == P.size()) continue;
        long pc = long(P.size() / C.size());
        long c = log_prime(pc, p);
        if (c <= 0) continue;
        long pd = subgroup_exponent(G, C);
        long d = log_prime(pd, p);
        if (d < 0) continue;

        int g = -1;
        for (int u : P) {
            if (multiplicative_order(ku[size_t(u)], expQ) != pc) continue;
            if (G.element_order(G.pow(u, pc)) != pd) continue;
            g = u;
            break;
        }
        if (g < 0) continue;

        std::vector<int> gcyc = cyclic_subgroup(G, g);
        auto P0 = complement_in(G, C, gcyc, P.size() / gcyc.size());
        if (!P0) continue;

        BlackburnShape s;
        s.p = p;
        s.q = q;
        s.c = c;
        s.d = d;
        s.k = ku[size_t(g)];
        s.g = g;
        s.P = std::move(P);
        s.P0 = std::move(*P0);
        s.Q = std::move(Q);
        s.B = std::move(B);
        s.C = std::move(C);
        return s;
    }
    return std::nullopt;
}

VerdictEngine::VerdictEngine(CharacterTable table) : T_(std::move(table)) {}

const QuotientGroup& VerdictEngine::quotient_by_kernel(const std::vector<int>& K) const {
    auto it = quotient_cache_.find(K);
    if (it != quotient_cache_.end()) return it->second;
    QuotientGroup qg;
    if (K.size() == 1) {
        qg.group = T_.group_ptr();
        qg.coset_of.resize(size_t(T_.group().order()));
        for (int i = 0; i < T_.group().order(); ++i) qg.coset_of[size_t(i)] = i;
    } else {
        qg = quotient_group(T_.group(), K);
    }
    return quotient_cache_.emplace(K, std::move(qg)).first->second;
}

const SchurVerdict& VerdictEngine::verdict(int char_id) const {
    auto it = cache_.find(char_id);
    if (it != cache_.end()) return it->second;
    const Character& chi = T_.irreducibles()[size_t(char_id)];
    return cache_.emplace(char_id, analyze(chi)).first->second;
}

SchurVerdict VerdictEngine::analyze(const Character& chi) const {
    SchurVerdict v;
    v.char_id = chi.id;
    v.degree = chi.degree;
    v.fs = T_.fs_indicator(chi);
    v.m_real = (v.fs == -1) ? 2 : 1;
    v.skew_linear["C"] = (chi.degree == 1) ? Verdict::Yes : Verdict::No;
    v.skew_linear["R"] =
        (chi.degree == v.m_real) ? Verdict::Yes : Verdict::No;
    v.skew_linear["Q"] = rational_rules(chi, v);
    if (v.skew_linear["Q"] == Verdict::Yes) v.m_rational = chi.degree;
    return v;
}

namespace {

// Index of H tensor Q(zeta_f); fills the exact local data.  f is the
// conductor of the character field.
long quaternion_block_index(long f, long group_order, SchurVerdict& v) {
    long m;
    if (f % 4 == 0) {
        m = 1; // the field contains i, which splits the quaternions
    } else {
        long fo = (f % 2 == 0) ? f / 2 : f;
        m = quaternion_splits_over(fo, QuatVariant::RationalCyclotomic) ? 1 : 2;
    }
    if (group_order % 2 == 0) v.m_local[2] = m; // ramification only at 2 and infinity
    for (int r : primes_dividing(group_order))
        if (r != 2) v.m_local[r] = 1;
    v.m_rational = m;
    return m;
}

} // namespace

Verdict VerdictEngine::rational_rules(const Character& chi, SchurVerdict& v) const {
    const FiniteGroup& G = T_.group();
    if (chi.degree == 1) {
        v.trace.push_back("linear");
        v.m_rational = 1;
        return Verdict::Yes;
    }

    std::vector<int> K = T_.kernel(chi);
    const QuotientGroup& qt = quotient_by_kernel(K);
    const FiniteGroup& Gq = *qt.group;

    // Faithful character of a Hamiltonian quotient: the block is the
    // rational quaternions tensored with the (cyclotomic) character field.
    if (chi.degree == 2 && hamiltonian_odd_part(Gq)) {
        v.trace.push_back("dedekind_block");
        long f = T_.character_field_conductor(chi.id);
        long m = quaternion_block_index(f, G.order(), v);
        return (m == chi.degree) ? Verdict::Yes : Verdict::No;
    }

    if (auto r = rule_product_tensor(chi, v)) return *r;

    // FS = -1 gives m over R equal to 2, which divides the index over Q,
    // which divides the degree.
    if (chi.degree == 2 && v.fs == -1) {
        v.trace.push_back("real_monotonic");
        return Verdict::Yes;
    }

    // Degree-2 characters of dihedral groups have index 1: the regular
    // action on Q(zeta_n) over Q(zeta_n + zeta_n^-1) realizes them.
    if (chi.degree == 2 && v.fs == 1 && is_dihedral_shape(Gq)) {
        v.trace.push_back("dihedral_quotient");
        v.m_rational = 1;
        return Verdict::No;
    }

    if (auto r = rule_bounds(chi, v)) return *r;

    v.trace.push_back("unknown");
    return Verdict::Unknown;
}

std::optional<Verdict> VerdictEngine::rule_product_tensor(const Character& chi,
                                                          SchurVerdict& v) const {
    const FiniteGroup& G = T_.group();
    const Provenance& prov = G.provenance();
    if (prov.kind != Provenance::Product || prov.factors.size() < 2) return std::nullopt;

    if (factor_engines_.empty()) factor_engines_.resize(prov.factors.size());
    std::vector<long> stride(prov.factors.size(), 1);
    for (size_t i = prov.factors.size() - 1; i-- > 0;)
        stride[i] = stride[i + 1] * prov.factors[i + 1]->order();

    int h_count = 0;
    for (size_t i = 0; i < prov.factors.size(); ++i) {
        if (!factor_engines_[i])
            factor_engines_[i] =
                std::make_unique<VerdictEngine>(CharacterTable::compute(prov.factors[i]));
        const CharacterTable& FT = factor_engines_[i]->table();
        const int ni = prov.factors[i]->order();
        const Character* found = nullptr;
        for (const Character& psi : FT.irreducibles()) {
            if (chi.degree % psi.degree != 0) continue;
            Rational s(chi.degree / psi.degree);
            bool ok = true;
            for (int x = 0; x < ni && ok; ++x)
                ok = T_.value_at(chi, int(x * stride[i])) == FT.value_at(psi, x).scalar_mul(s);
            if (ok) { found = &psi; break; }
        }
        if (!found) return std::nullopt;
        if (found->degree == 1) continue;
        // H-type: the factor block is the rational quaternion algebra, i.e.
        // the character lives on a quaternion quotient of order 8.
        bool h_type = found->degree == 2 && FT.fs_indicator(*found) == -1 &&
                      FT.character_field_conductor(found->id) == 1 &&
                      FT.kernel(*found).size() * 8 == size_t(ni);
        if (!h_type) return std::nullopt;
        ++h_count;
    }
    if (h_count == 0) return std::nullopt;

    // The block is a tensor power of the rational quaternions over the
    // cyclotomic character field; squares of the quaternions split.
    v.trace.push_back("tensor_block");
    long m;
    if (h_count % 2 == 0) {
        m = 1;
        for (int r : primes_dividing(G.order())) v.m_local[r] = 1;
        v.m_rational = 1;
    } else {
        m = quaternion_block_index(T_.character_field_conductor(chi.id), G.order(), v);
    }
    return (m == chi.degree) ? Verdict::Yes : Verdict::No;
}

std::optional<Verdict> VerdictEngine::rule_bounds(const Character& chi,
                                                  SchurVerdict& v) const {
    const FiniteGroup& G = T_.group();
    const long deg = chi.degree;

    std::vector<int> K = T_.kernel(chi);

    std::optional<Verdict> decided;

    // The block of a nonlinear character here is a cyclic algebra
    // (F(lambda)/F, sigma, mu(g^{p^c})) whose extension is unramified away
    // from q and whose defining scalar is a root of unity, so every local
    // index away from q and infinity is 1 and m over Q is lcm(m_real, m_q).
    auto try_shape = [&](const FiniteGroup& H, const std::vector<int>& ker,
                         const std::optional<BlackburnShape>& shape) {
        if (decided || !shape) return;
        long pc = 1;
        for (long i = 0; i < shape->c; ++i) pc *= shape->p;
        if (deg != pc) return;

        // order of an element modulo Ker(chi)
        auto ord_mod = [&](int x) {
            int acc = x;
            long t = 1;
            while (!contains(ker, acc)) { acc = H.mul(acc, x); ++t; }
            return t;
        };
        long pa = ord_mod(H.pow(shape->g, pc)); // p^a, order of the g-part of mu
        long pi = 1;                            // exponent of the P0-part of mu
        for (int u : shape->P0) pi = std::lcm(pi, ord_mod(u));
        long beta = 1; // exponent of the B-part of mu
        for (int b : shape->B) beta = std::lcm(beta, ord_mod(b));

        long theta = std::lcm(pa > 1 ? pc * pa : 1, std::lcm(pi, beta));
        long mu = std::lcm(pa, std::lcm(pi, beta));
        long mq = m_q_blackburn(theta, mu, shape->q);

        v.trace.push_back("blackburn_lk");
        for (int r : primes_dividing(G.order())) v.m_local[r] = 1;
        v.m_local[shape->q] = mq;
        v.m_rational = std::lcm(long(v.m_real), mq);
        decided = (v.m_rational == deg) ? Verdict::Yes : Verdict::No;
    };

    {
        std::vector<int> triv{0};
        auto sit = shape_cache_.find(triv);
        if (sit == shape_cache_.end())
            sit = shape_cache_.emplace(triv, blackburn_shape(G)).first;
        try_shape(G, K, sit->second);
    }
    if (!decided && K.size() > 1) {
        const QuotientGroup& qt = quotient_by_kernel(K);
        const FiniteGroup& Gq = *qt.group;
        auto sit = shape_cache_.find(K);
        if (sit == shape_cache_.end())
            sit = shape_cache_.emplace(K, blackburn_shape(Gq)).first;
        std::vector<int> triv{0};
        try_shape(Gq, triv, sit->second);
    }
    if (decided) return decided;

    std::map<long, long> exact;
    long upper = v.m_real;
    for (int r : primes_dividing(G.order())) {
        long cap = (r == 2) ? ((deg % 2 == 0) ? 2 : 1) : std::gcd(deg, long(r - 1));
        upper = std::lcm(upper, cap);
        if (cap == 1) exact[r] = 1;
    }

    if (upper < deg) {
        v.trace.push_back("local_bounds");
        for (auto& [r, m] : exact) v.m_local[r] = m;
        bool complete = true;
        for (int r : primes_dividing(G.order()))
            if (!exact.count(r)) complete = false;
        if (complete) {
            long m = v.m_real;
            for (auto& [r, mv] : exact) m = std::lcm(m, mv);
            v.m_rational = m;
        }
        return Verdict::No;
    }
    return std::nullopt;
}

Verdict VerdictEngine::skew_linear(int char_id, const std::string& field_tag) const {
    const SchurVerdict& v = verdict(char_id);
    if (field_tag == "C" || field_tag == "R" || field_tag == "Q") {
        auto it = v.skew_linear.find(field_tag);
        return it->second;
    }
    if (field_tag.rfind("Q_", 0) == 0) {
        long q = std::stol(field_tag.substr(2));
        if (v.degree == 1) return Verdict::Yes;
        if (T_.group().order() % q != 0)
            return Verdict::No; // local index 1 away from the group order
        auto it = v.m_local.find(q);
        if (it != v.m_local.end())
            return (it->second == v.degree) ? Verdict::Yes : Verdict::No;
        return Verdict::Unknown;
    }
    throw InvalidParams("unknown field tag: " + field_tag);
}

int VerdictEngine::unknown_count_over_q() const {
    int n = 0;
    for (const Character& chi : T_.irreducibles())
        if (verdict(chi.id).skew_linear.at("Q") == Verdict::Unknown) ++n;
    return n;
}

} // namespace nker
