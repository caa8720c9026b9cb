#pragma once

// Finite groups of order <= 512 as explicit Cayley tables.  Element 0 is
// always the identity, and numbering is fixed by the construction, so a
// group built twice from the same description is bitwise identical.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nker {

constexpr int kMaxOrder = 512;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// How the group was built; the character-table engine uses Product to take
// tensor shortcuts, the classifiers treat everything uniformly.
struct Provenance {
    enum Kind { Opaque, Cyclic, Product, Dicyclic, GenDicyclic, PQ } kind = Opaque;
    std::vector<GroupPtr> factors; // Product only
    std::vector<long> params;      // Cyclic {n}; Dicyclic {m}; PQ {p,q,c,d,k};
                                   // GenDicyclic: invariants then t index
};

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static GroupPtr from_table(std::vector<uint16_t> table, std::string name,
                               Provenance prov = {});
    static GroupPtr trivial();
    static GroupPtr cyclic(int n);
    // Abelian group with the given cyclic factor orders, in order.
    static GroupPtr abelian(const std::vector<int>& invariants);
    // Closure of the given permutations of {0..deg-1}; throws ClosureTooLarge
    // past kMaxOrder.
    static GroupPtr from_permutations(const std::vector<std::vector<int>>& gens,
                                      std::string name);
    static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
    // Order 4m: <a, g | a^{2m} = 1, g^2 = a^m, a^g = a^{-1}>, m >= 2.
    static GroupPtr dicyclic(int m);
    // A = abelian(invariants), adjoin g with g^2 = t and a^g = a^{-1}.
    // t_index < 0 picks the default t (a power of the first even-order
    // generator).  Throws NotOrderTwo / AbelianResult on bad input.
    static GroupPtr generalized_dicyclic(const std::vector<int>& invariants,
                                         long t_index = -1);
    // See pq_family below.

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int pow(int a, long e) const;
    int element_order(int a) const { return elt_order_[a]; }
    bool is_abelian() const;
    int exponent() const;

    // Conjugacy data (computed on first use).  Class 0 is {identity};
    // classes are ordered by smallest member.
    int num_classes() const { return int(classes().size()); }
    const std::vector<std::vector<int>>& classes() const;
    const std::vector<int>& class_of() const;
    int class_rep(int c) const { return classes()[c][0]; }
    int inverse_class(int c) const;
    // Class of g^k for g in class c (well defined).
    int power_class(int c, long k) const;

    const std::string& name() const { return name_; }
    const Provenance& provenance() const { return prov_; }

private:
    FiniteGroup() = default;
    void finish(); // fills inv_ and element orders, validates the table

    int n_ = 0;
    std::vector<uint16_t> table_;
    std::vector<int> inv_;
    std::vector<int> elt_order_;
    std::string name_;
    Provenance prov_;

    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
};

// Parameters of the semidirect family (P ⋉ Q) × B with P = <g> × P0 abelian,
// ord(g) = p^{c+d}, Q abelian q-group acted on by x -> x^k, and the
// centralizer of Q in P equal to <g^{p^c}> × P0.
struct PQParams {
    long p = 0, q = 0, c = 1, d = 1;
    long k = 0;                    // 0 = smallest valid choice
    std::vector<int> p0_invariants; // prime powers of p, each dividing p^d
    std::vector<int> q_invariants;  // prime powers of q; empty = {q}
    std::vector<int> b_invariants;  // order coprime to p and q
};

struct PQGroup {
    GroupPtr group;
    int g;          // distinguished generator of the acting cyclic factor
    PQParams params; // with k resolved
};

// Throws InvalidParams naming the violated hypothesis, OrderBound past 512.
PQGroup pq_family(PQParams params);

// Subgroup generated by gens, as a sorted element list.
std::vector<int> closure(const FiniteGroup& G, std::vector<int> gens);
std::vector<int> cyclic_subgroup(const FiniteGroup& G, int g);
bool contains(const std::vector<int>& sorted_elems, int g);
bool is_subgroup_normal(const FiniteGroup& G, const std::vector<int>& elems);
std::vector<int> center(const FiniteGroup& G);
std::vector<int> derived_subgroup(const FiniteGroup& G);
// <g^2 : g in G>
std::vector<int> squares_subgroup(const FiniteGroup& G);
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

} // namespace nker
