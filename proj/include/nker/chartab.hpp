#pragma once

// Exact character tables.  The engine runs Dixon-Schneider over a prime
// field and lifts values to cyclotomics through root-of-unity multiplicity
// vectors; direct products are assembled as tensor products of the factor
// tables instead.  Values are stored reduced mod the cyclotomic polynomial
// at conductor = order of the class representative, so rows are comparable
// entrywise.

#include "nker/cyclotomic.hpp"
#include "nker/group.hpp"
#include "nker/structure.hpp"

#include <map>

namespace nker {

struct ClassData {
    std::vector<std::vector<int>> classes; // from FiniteGroup, canonical order
    std::vector<int> class_of;
    std::vector<int> inverse_class;
    int exponent = 1;
    // class index -> class of rep^k, cached per k
    const std::vector<int>& power_map(long k) const;

    const FiniteGroup* group = nullptr;
    mutable std::map<long, std::vector<int>> power_maps_;
};

struct Character {
    int id = 0;
    long degree = 1;
    std::vector<Cyclotomic> values; // one per class, reduced
};

// Default 0x5EED, overridden by the NKER_SEED environment variable.
uint64_t splitting_seed();

class CharacterTable {
public:
    static CharacterTable compute(const GroupPtr& G);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const ClassData& class_data() const { return cd_; }
    const std::vector<Character>& irreducibles() const { return irr_; }
    int num_classes() const { return int(cd_.classes.size()); }

    Cyclotomic value_at(const Character& chi, int element) const {
        return chi.values[cd_.class_of[element]];
    }

    std::vector<int> kernel(const Character& chi) const;
    int fs_indicator(const Character& chi) const; // throws NotAnIndicator
    // <chi, psi> = (1/|G|) sum |C| chi(C) conj(psi(C)) over any two class
    // functions given per class.
    Cyclotomic inner_product(const std::vector<Cyclotomic>& a,
                             const std::vector<Cyclotomic>& b) const;
    // (1/|N|) sum over N of chi; throws NotNormal.
    Cyclotomic en_pairing(const Character& chi, const std::vector<int>& N) const;

    // Galois action: sigma_k(chi) has values chi(power_map(k)).
    std::vector<int> galois_orbit(int id) const;
    // k in (Z/e)^* fixing the row.
    std::vector<long> field_stabilizer(int id) const;
    int character_field_degree(int id) const;
    // Smallest f | e with every k = 1 mod f fixing the row; the conductor
    // of the character field when that field is cyclotomic.
    long character_field_conductor(int id) const;

    // Values of chi restricted to H, per class of H.group.
    std::vector<Cyclotomic> restrict_to(const Character& chi, const SubgroupGroup& H) const;
    // Decompose an exact class function into irreducibles of this table;
    // throws LiftInconsistent if a multiplicity is not a nonnegative integer.
    std::vector<std::pair<int, long>> decompose(const std::vector<Cyclotomic>& classfun) const;

private:
    GroupPtr group_;
    ClassData cd_;
    std::vector<Character> irr_;

    static CharacterTable dixon_schneider(const GroupPtr& G);
    static CharacterTable tensor_product(const GroupPtr& G);
    void sort_canonically();
};

} // namespace nker
