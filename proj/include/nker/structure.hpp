#pragma once

// Structural analysis on top of the Cayley-table groups: quotients,
// subgroup groups, Sylow subgroups, R(G), and the witness searches the
// classifiers rely on.

#include "nker/group.hpp"

#include <map>
#include <optional>

namespace nker {

struct StructuralScan {
    std::vector<int> center;
    std::vector<int> derived;
    bool abelian = false;
    bool dedekind = false;
    std::map<int, int> order_histogram; // element order -> count
};

StructuralScan structural_scan(const FiniteGroup& G);

// Every subgroup whose cyclic subgroups are all normal is itself normal, so
// intersecting over nonnormal cyclic subgroups gives the intersection of
// all nonnormal subgroups.  Whole group when G is Dedekind.
std::vector<int> r_of_g(const FiniteGroup& G);

// True iff every commutator lies in N.
bool kernel_quotient_is_abelian(const FiniteGroup& G, const std::vector<int>& N);

struct QuotientGroup {
    GroupPtr group;
    std::vector<int> coset_of; // parent element -> quotient element
};
// Throws NotASubgroup / NotNormal.  Coset of the identity is element 0;
// cosets are numbered by smallest member.
QuotientGroup quotient_group(const FiniteGroup& G, const std::vector<int>& N);

struct SubgroupGroup {
    GroupPtr group;
    std::vector<int> elements; // new index -> parent element (sorted)
};
// Throws NotASubgroup.
SubgroupGroup subgroup_as_group(const FiniteGroup& G, std::vector<int> elems);

// Elements of order coprime to p when they form a subgroup of index |G|_p.
std::optional<std::vector<int>> normal_p_complement(const FiniteGroup& G, int p);

// A Sylow p-subgroup, grown through its normalizer.
std::vector<int> sylow_subgroup(const FiniteGroup& G, int p);

// All subgroups of index 2, via hyperplanes of G modulo <G', squares>.
std::vector<std::vector<int>> index_two_subgroups(const FiniteGroup& G);

struct GenDicyclicWitness {
    std::vector<int> A; // abelian index-2 subgroup
    int g;              // g^2 != 1 and a^g = a^{-1} for all a in A
};
std::optional<GenDicyclicWitness> is_generalized_dicyclic(const FiniteGroup& G);

// Invariant factors d_1 | d_2 | ... of an abelian group, largest first.
// Throws InvalidParams on nonabelian input.
std::vector<int> abelian_invariants(const FiniteGroup& G);

// Cyclic subgroup of index 2 inverted by an outside involution.
bool is_dihedral_shape(const FiniteGroup& G);

// Witness (u, x) for G isomorphic to C4 x Q8 x (C2)^r: u central of order
// 4 outside a Q8 subgroup <x,y>, the rest central elementary abelian.
std::optional<std::pair<int, int>> c4_q8_shape(const FiniteGroup& G);
// Witness (x1, x2) for G isomorphic to Q8 x Q8 x (C2)^r: generators of the
// two commuting Q8 factors.
std::optional<std::pair<int, int>> q8_q8_shape(const FiniteGroup& G);

// Dedekind shape data: for nonabelian Dedekind G = Q8 x (C2)^r x A,
// returns |A| (the odd part).  Empty for non-Dedekind or abelian groups.
std::optional<long> hamiltonian_odd_part(const FiniteGroup& G);

std::vector<int> primes_dividing(long n);
long p_part(long n, long p);

} // namespace nker
