// Cyclic codes of length n = r1*r2 viewed as two-dimensional abelian codes:
// lifting a defining set through an isomorphism T, suitable representatives,
// the equivalence classes modulo r1 and the M(u) values computed from
// one-dimensional coset sizes only.

#ifndef RMINFOSET_CYCLIC_HPP
#define RMINFOSET_CYCLIC_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "rminfoset/abelian.hpp"
#include "rminfoset/modular.hpp"

namespace rminfoset {

// Defining set of a binary cyclic code: a disjoint union of 2-cyclotomic
// cosets modulo n, kept sorted by leader.
struct CyclicDefiningSet {
    std::uint64_t n = 0;
    std::vector<Coset> cosets;

    // Closure of arbitrary seed residues under doubling mod n.
    static CyclicDefiningSet closure(std::uint64_t n, std::span<const std::uint64_t> seeds);

    // Requires `elements` to be exactly a union of cosets; throws otherwise.
    static CyclicDefiningSet from_elements(std::uint64_t n,
                                           std::span<const std::uint64_t> elements);

    std::size_t coset_count() const { return cosets.size(); }
    std::size_t element_count() const;
    std::vector<std::uint64_t> all_elements() const;  // sorted

    bool operator==(const CyclicDefiningSet&) const = default;
};

// Image T(D*) of a cyclic defining set: every coset maps onto a full 2-orbit.
DefiningSet2D lift(const CyclicDefiningSet& dstar, const GroupIso& iso);

// One representative per coset of D*, chosen so that the image first
// coordinates are the minimum leaders of their cosets mod r1 (hence the
// image is a restricted set of representatives for T(D*)).
struct SuitableReps {
    GroupIso iso;
    std::vector<std::uint64_t> reps;  // aligned with the cosets of D*, leader order
};

SuitableReps suitable_representatives(const CyclicDefiningSet& dstar, const GroupIso& iso);

// Whether `candidate` (one residue per coset of D*, any order) maps to a
// restricted set of representatives under `iso`.
bool is_suitable(const CyclicDefiningSet& dstar, const GroupIso& iso,
                 std::span<const std::uint64_t> candidate);

// Equivalence classes of representatives under a ~ b  <=>  a = b (mod r1).
// The class representative defaults to the smallest member.
struct UClass {
    std::uint64_t rep = 0;
    std::vector<std::uint64_t> members;  // ascending
};
std::vector<UClass> u_classes(const SuitableReps& reps);

// M(u) = (sum of |C_n(v)| over the class of u) / |C_{r1}(u mod r1)|.
// The division is always exact for classes grouped by residue; a failed
// division signals corrupted representatives and throws std::logic_error.
std::uint64_t m_of_u(std::uint64_t u, const SuitableReps& reps);

struct CyclicGamma {
    GammaRegion region;
    std::vector<std::uint64_t> check_positions;  // T^-1 of the region, sorted
};

// Builds the check-position region from the M(u) values and one-dimensional
// coset sizes alone, then pulls it back to Z_n through the isomorphism.
CyclicGamma gamma_from_cyclic(const CyclicDefiningSet& dstar, const GroupIso& iso);

}  // namespace rminfoset

#endif
