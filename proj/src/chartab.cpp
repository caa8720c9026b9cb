#include "nker/chartab.hpp"

#include "nker/errors.hpp"
#include "nker/fp.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

namespace nker {

uint64_t splitting_seed() {
    if (const char* s = std::getenv("NKER_SEED")) return std::strtoull(s, nullptr, 0);
    return 0x5EED;
}

const std::vector<int>& ClassData::power_map(long k) const {
    k %= exponent;
    if (k < 0) k += exponent;
    auto it = power_maps_.find(k);
    if (it != power_maps_.end()) return it->second;
    std::vector<int> pm(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) pm[c] = group->power_class(int(c), k);
    return power_maps_.emplace(k, std::move(pm)).first->second;
}

namespace {

ClassData make_class_data(const FiniteGroup& G) {
    ClassData cd;
    cd.group = &G;
    cd.classes = G.classes();
    cd.class_of = G.class_of();
    cd.exponent = G.exponent();
    cd.inverse_class.resize(cd.classes.size());
    for (size_t c = 0; c < cd.classes.size(); ++c) cd.inverse_class[c] = G.inverse_class(int(c));
    return cd;
}

int cmp_cyclotomic(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
    for (int i = 0; i < a.conductor(); ++i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

// One invariant subspace during eigen-splitting, as an echelonized basis.
struct Subspace {
    fp::Matrix basis; // rows span the space, reduced echelon form
    std::vector<int> pivots;
};

Subspace echelonize(const fp::PrimeField& F, fp::Matrix rows) {
    Subspace s;
    s.pivots = fp::row_echelon(F, rows);
    rows.rows = int(s.pivots.size());
    rows.a.resize(size_t(rows.rows) * rows.cols);
    s.basis = std::move(rows);
    return s;
}

// Split one subspace by the action of M; appends the pieces to out.
void split_by(const fp::PrimeField& F, const fp::Matrix& M, const Subspace& V,
              std::vector<Subspace>& out) {
    int k = V.basis.rows, r = V.basis.cols;
    fp::Matrix A(k, k);
    for (int b = 0; b < k; ++b) {
        std::vector<uint64_t> w(r, 0);
        for (int row = 0; row < r; ++row) {
            uint64_t acc = 0;
            for (int j = 0; j < r; ++j) acc = (acc + M.at(row, j) * V.basis.at(b, j)) % F.p;
            w[row] = acc;
        }
        // coordinates read off the pivot columns of the echelon basis
        for (int i = 0; i < k; ++i) A.at(b, i) = w[V.pivots[i]];
    }
    // A is the transpose action: row b holds coords of M*basis_b
    std::vector<uint64_t> cp = fp::charpoly(F, A);
    std::vector<uint64_t> roots = fp::poly_roots(F, cp);
    if (roots.size() <= 1) {
        out.push_back(V);
        return;
    }
    int covered = 0;
    std::vector<Subspace> pieces;
    for (uint64_t lam : roots) {
        fp::Matrix Ashift = A;
        for (int i = 0; i < k; ++i) Ashift.at(i, i) = F.sub(Ashift.at(i, i), lam);
        // right null space of (A - lam)^T = left null space of A - lam;
        // basis rows are coordinate vectors of eigenvectors
        fp::Matrix At(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) At.at(i, j) = Ashift.at(j, i);
        fp::Matrix N = fp::nullspace(F, At);
        if (N.rows == 0) continue;
        fp::Matrix lifted(N.rows, r);
        for (int v = 0; v < N.rows; ++v)
            for (int j = 0; j < r; ++j) {
                uint64_t acc = 0;
                for (int i = 0; i < k; ++i) acc = (acc + N.at(v, i) * V.basis.at(i, j)) % F.p;
                lifted.at(v, j) = acc;
            }
        pieces.push_back(echelonize(F, std::move(lifted)));
        covered += N.rows;
    }
    if (covered != k) {
        // defective numerics cannot happen over a splitting field; keep the
        // space intact and let a later matrix separate it
        out.push_back(V);
        return;
    }
    for (auto& p : pieces) out.push_back(std::move(p));
}

} // namespace

CharacterTable CharacterTable::compute(const GroupPtr& G) {
    const Provenance& prov = G->provenance();
    if (prov.kind == Provenance::Product && prov.factors.size() >= 2) return tensor_product(G);
    return dixon_schneider(G);
}

CharacterTable CharacterTable::dixon_schneider(const GroupPtr& Gp) {
    const FiniteGroup& G = *Gp;
    CharacterTable T;
    T.group_ = Gp;
    T.cd_ = make_class_data(G);
    const int n = G.order();
    const int r = int(T.cd_.classes.size());
    const int e = T.cd_.exponent;

    fp::PrimeField F{fp::find_prime(uint64_t(e), std::max<uint64_t>(2 * n, 2048))};

    // class matrices: (M_i)_{kj} = a_{ikj}, the structure constants of the
    // class sums
    std::vector<fp::Matrix> M(r, fp::Matrix(r, r));
    for (int i = 0; i < r; ++i) {
        std::vector<std::vector<long>> pairs(r, std::vector<long>(r, 0));
        for (int x : T.cd_.classes[i])
            for (int y = 0; y < n; ++y)
                ++pairs[T.cd_.class_of[y]][T.cd_.class_of[G.mul(x, y)]];
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < r; ++j)
                M[i].at(k, j) = uint64_t(pairs[k][j] / long(T.cd_.classes[j].size()));
    }

    std::vector<Subspace> spaces{echelonize(F, fp::Matrix::identity(r))};
    std::mt19937_64 rng(splitting_seed());
    auto split_round = [&](const fp::Matrix& S) {
        std::vector<Subspace> next;
        bool all_done = true;
        for (const Subspace& V : spaces) {
            if (V.basis.rows == 1) {
                next.push_back(V);
                continue;
            }
            all_done = false;
            split_by(F, S, V, next);
        }
        spaces = std::move(next);
        return all_done;
    };
    bool done = false;
    for (int round = 0; round < 8 && !done; ++round) {
        fp::Matrix S(r, r);
        for (int i = 0; i < r; ++i) {
            uint64_t c = rng() % F.p;
            if (c == 0) continue;
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j) S.at(k, j) = F.add(S.at(k, j), F.mul(c, M[i].at(k, j)));
        }
        done = split_round(S);
    }
    for (int i = 0; i < r && !done; ++i) done = split_round(M[i]);
    done = true;
    for (const Subspace& V : spaces)
        if (V.basis.rows != 1) done = false;
    if (!done || int(spaces.size()) != r)
        throw LiftInconsistent("eigenspace splitting did not separate " + G.name());

    // e-th root of unity in F_P fixing the lift embedding
    uint64_t w_e = F.pow(fp::primitive_root(F), (F.p - 1) / e);

    std::vector<Character> chars;
    for (const Subspace& V : spaces) {
        std::vector<uint64_t> v(r);
        uint64_t v0inv = F.inv(V.basis.at(0, 0) ? V.basis.at(0, 0) : 1);
        if (V.basis.at(0, 0) == 0) throw LiftInconsistent("eigenvector vanishes at identity");
        for (int j = 0; j < r; ++j) v[j] = F.mul(V.basis.at(0, j), v0inv);

        uint64_t s = 0;
        for (int j = 0; j < r; ++j) {
            uint64_t t = F.mul(v[j], v[T.cd_.inverse_class[j]]);
            s = F.add(s, F.mul(t, F.inv(uint64_t(T.cd_.classes[j].size()))));
        }
        uint64_t d2 = F.mul(uint64_t(n), F.inv(s));
        long deg = 0;
        for (long d = 1; d * d <= n; ++d)
            if (F.mul(uint64_t(d), uint64_t(d)) == d2) { deg = d; break; }
        if (deg == 0) throw LiftInconsistent("no degree matches eigenvector norm in " + G.name());

        // chi(g) mod P per class
        std::vector<uint64_t> chi_p(r);
        for (int j = 0; j < r; ++j)
            chi_p[j] = F.mul(uint64_t(deg), F.mul(v[j], F.inv(uint64_t(T.cd_.classes[j].size()))));

        Character ch;
        ch.degree = deg;
        ch.values.reserve(r);
        for (int j = 0; j < r; ++j) {
            int rep = T.cd_.classes[j][0];
            int ord = G.element_order(rep);
            uint64_t w_n = F.pow(w_e, uint64_t(e / ord));
            uint64_t n_inv = F.inv(uint64_t(ord));
            Cyclotomic val = Cyclotomic::zero(ord);
            long total = 0;
            std::vector<Rational> coeff(ord);
            for (int t = 0; t < ord; ++t) {
                uint64_t acc = 0;
                for (int sdx = 0; sdx < ord; ++sdx) {
                    int cls = T.cd_.class_of[G.pow(rep, sdx)];
                    uint64_t rot = F.pow(w_n, uint64_t((long(ord) - t) * sdx % ord));
                    acc = F.add(acc, F.mul(chi_p[cls], rot));
                }
                uint64_t m = F.mul(acc, n_inv);
                if (m > uint64_t(deg))
                    throw LiftInconsistent("root multiplicity out of range in " + G.name());
                coeff[t] = Rational(long(m));
                total += long(m);
            }
            if (total != deg)
                throw LiftInconsistent("root multiplicities do not sum to the degree in " +
                                       G.name());
            for (int t = 0; t < ord; ++t)
                if (coeff[t] != 0) val = val + Cyclotomic::root_of_unity(ord, t).scalar_mul(coeff[t]);
            ch.values.push_back(val.reduced());
        }
        chars.push_back(std::move(ch));
    }
    T.irr_ = std::move(chars);
    T.sort_canonically();
    return T;
}

CharacterTable CharacterTable::tensor_product(const GroupPtr& Gp) {
    const FiniteGroup& G = *Gp;
    const std::vector<GroupPtr>& factors = G.provenance().factors;
    CharacterTable T;
    T.group_ = Gp;
    T.cd_ = make_class_data(G);
    const int m = int(factors.size());
    std::vector<CharacterTable> ft;
    ft.reserve(m);
    for (const GroupPtr& f : factors) ft.push_back(compute(f));

    std::vector<int> stride(m, 1);
    for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1]->order();

    const int r = int(T.cd_.classes.size());
    // factor class index of each product class
    std::vector<std::vector<int>> comp_class(r, std::vector<int>(m));
    for (int c = 0; c < r; ++c) {
        int rep = T.cd_.classes[c][0];
        for (int i = 0; i < m; ++i) {
            int comp = (rep / stride[i]) % factors[i]->order();
            comp_class[c][i] = ft[i].cd_.class_of[comp];
        }
    }

    long count = 1;
    for (int i = 0; i < m; ++i) count *= long(ft[i].irr_.size());
    for (long idx = 0; idx < count; ++idx) {
        std::vector<int> pick(m);
        long rem = idx;
        for (int i = m - 1; i >= 0; --i) {
            pick[i] = int(rem % ft[i].irr_.size());
            rem /= ft[i].irr_.size();
        }
        Character ch;
        ch.degree = 1;
        for (int i = 0; i < m; ++i) ch.degree *= ft[i].irr_[pick[i]].degree;
        ch.values.reserve(r);
        for (int c = 0; c < r; ++c) {
            Cyclotomic v(1L);
            for (int i = 0; i < m; ++i) v = v * ft[i].irr_[pick[i]].values[comp_class[c][i]];
            ch.values.push_back(v.reduced());
        }
        T.irr_.push_back(std::move(ch));
    }
    T.sort_canonically();
    return T;
}

void CharacterTable::sort_canonically() {
    std::sort(irr_.begin(), irr_.end(), [](const Character& a, const Character& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t c = 0; c < a.values.size(); ++c) {
            int cmp = cmp_cyclotomic(a.values[c], b.values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    for (size_t i = 0; i < irr_.size(); ++i) irr_[i].id = int(i);
}

std::vector<int> CharacterTable::kernel(const Character& chi) const {
    std::vector<char> in_kernel(cd_.classes.size(), 0);
    Cyclotomic deg(chi.degree);
    for (size_t c = 0; c < cd_.classes.size(); ++c)
        if (chi.values[c] == deg) in_kernel[c] = 1;
    std::vector<int> out;
    for (int g = 0; g < group_->order(); ++g)
        if (in_kernel[cd_.class_of[g]]) out.push_back(g);
    return out;
}

int CharacterTable::fs_indicator(const Character& chi) const {
    const std::vector<int>& sq = cd_.power_map(2);
    Cyclotomic acc;
    acc = Cyclotomic::zero();
    for (size_t c = 0; c < cd_.classes.size(); ++c)
        acc = acc + chi.values[sq[c]].scalar_mul(Rational(long(cd_.classes[c].size())));
    Cyclotomic total = acc.scalar_mul(Rational(1, group_->order()));
    if (!total.is_rational()) throw NotAnIndicator("indicator is irrational");
    Rational v = total.as_rational();
    if (v != -1 && v != 0 && v != 1) throw NotAnIndicator("indicator " + v.get_str());
    return int(v.get_num().get_si());
}

Cyclotomic CharacterTable::inner_product(const std::vector<Cyclotomic>& a,
                                         const std::vector<Cyclotomic>& b) const {
    Cyclotomic acc = Cyclotomic::zero();
    for (size_t c = 0; c < cd_.classes.size(); ++c) {
        Cyclotomic term = a[c] * b[c].conj();
        acc = acc + term.scalar_mul(Rational(long(cd_.classes[c].size())));
    }
    return acc.scalar_mul(Rational(1, group_->order())).reduced();
}

Cyclotomic CharacterTable::en_pairing(const Character& chi, const std::vector<int>& N) const {
    if (!is_subgroup_normal(*group_, N)) throw NotNormal("e_N pairing needs a normal subgroup");
    Cyclotomic acc = Cyclotomic::zero();
    for (int x : N) acc = acc + chi.values[cd_.class_of[x]];
    return acc.scalar_mul(Rational(1, long(N.size()))).reduced();
}

std::vector<int> CharacterTable::galois_orbit(int id) const {
    const Character& chi = irr_[id];
    std::vector<int> orbit;
    for (long k = 1; k < cd_.exponent || (cd_.exponent == 1 && k == 1); ++k) {
        if (std::gcd(k, long(cd_.exponent)) != 1) continue;
        const std::vector<int>& pm = cd_.power_map(k);
        for (const Character& cand : irr_) {
            if (cand.degree != chi.degree) continue;
            bool match = true;
            for (size_t c = 0; c < chi.values.size() && match; ++c)
                if (cmp_cyclotomic(cand.values[c], chi.values[pm[c]]) != 0) match = false;
            if (match) {
                orbit.push_back(cand.id);
                break;
            }
        }
        if (cd_.exponent == 1) break;
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

std::vector<long> CharacterTable::field_stabilizer(int id) const {
    const Character& chi = irr_[id];
    std::vector<long> stab;
    for (long k = 1; k <= cd_.exponent; ++k) {
        if (k == cd_.exponent && cd_.exponent > 1) break;
        if (std::gcd(k, long(cd_.exponent)) != 1) continue;
        const std::vector<int>& pm = cd_.power_map(k);
        bool match = true;
        for (size_t c = 0; c < chi.values.size() && match; ++c)
            if (cmp_cyclotomic(chi.values[c], chi.values[pm[c]]) != 0) match = false;
        if (match) stab.push_back(k);
    }
    return stab;
}

int CharacterTable::character_field_degree(int id) const {
    return euler_phi(cd_.exponent) / int(field_stabilizer(id).size());
}

long CharacterTable::character_field_conductor(int id) const {
    std::vector<long> stab = field_stabilizer(id);
    std::vector<char> in_stab(cd_.exponent + 1, 0);
    for (long k : stab) in_stab[k] = 1;
    for (long f = 1; f <= cd_.exponent; ++f) {
        if (cd_.exponent % f != 0) continue;
        bool fixed = true;
        for (long k = 1; k < cd_.exponent && fixed; ++k) {
            if (std::gcd(k, long(cd_.exponent)) != 1 || k % f != 1 % f) continue;
            if (!in_stab[k]) fixed = false;
        }
        if (fixed) return f;
    }
    return cd_.exponent;
}

std::vector<Cyclotomic> CharacterTable::restrict_to(const Character& chi,
                                                    const SubgroupGroup& H) const {
    const FiniteGroup& HG = *H.group;
    std::vector<Cyclotomic> out;
    out.reserve(HG.classes().size());
    for (const auto& cls : HG.classes()) out.push_back(chi.values[cd_.class_of[H.elements[cls[0]]]]);
    return out;
}

std::vector<std::pair<int, long>> CharacterTable::decompose(
    const std::vector<Cyclotomic>& classfun) const {
    std::vector<std::pair<int, long>> out;
    for (const Character& psi : irr_) {
        Cyclotomic ip = inner_product(classfun, psi.values);
        if (!ip.is_rational()) throw LiftInconsistent("non-rational multiplicity");
        Rational m = ip.as_rational();
        if (m.get_den() != 1 || m < 0)
            throw LiftInconsistent("multiplicity " + m.get_str() + " is not a nonnegative integer");
        long mi = m.get_num().get_si();
        if (mi > 0) out.emplace_back(psi.id, mi);
    }
    return out;
}

} // namespace nker
