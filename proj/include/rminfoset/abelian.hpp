// Two-dimensional abelian codes given by their defining sets: 2-orbits,
// restricted representatives, the M(.) parameters and the staircase region
// of check positions built from the f/g sequences.

#ifndef RMINFOSET_ABELIAN_HPP
#define RMINFOSET_ABELIAN_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rminfoset {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// A 2-orbit modulo (r1, r2): the closure of a pair under simultaneous
// doubling of both coordinates. Elements sorted lexicographically.
struct Orbit2D {
    std::uint64_t r1 = 0, r2 = 0;
    std::vector<Pair> elements;

    Pair leader() const { return elements.front(); }
    std::size_t size() const { return elements.size(); }
    bool contains(const Pair& p) const;

    bool operator==(const Orbit2D&) const = default;
};

Orbit2D q_orbit(std::uint64_t a1, std::uint64_t a2, std::uint64_t r1, std::uint64_t r2);

// A union of pairwise disjoint 2-orbits, i.e. the defining set of an abelian
// code in Z_{r1} x Z_{r2}. Orbits are kept sorted by leader.
struct DefiningSet2D {
    std::uint64_t r1 = 0, r2 = 0;
    std::vector<Orbit2D> orbits;

    // Closure of arbitrary seed pairs under doubling.
    static DefiningSet2D closure(std::uint64_t r1, std::uint64_t r2, std::span<const Pair> seeds);

    // Builds from explicit orbits; throws if any orbit is not doubling-closed
    // or two orbits share an element.
    static DefiningSet2D from_orbits(std::uint64_t r1, std::uint64_t r2,
                                     std::vector<Orbit2D> orbits);

    std::size_t orbit_count() const { return orbits.size(); }
    std::size_t element_count() const;
    std::vector<Pair> all_elements() const;  // sorted lexicographically

    bool operator==(const DefiningSet2D&) const = default;
};

// m(e1) = |C_{r1}(e1)| and m(e1, e2) = |C_{2^m(e1), r2}(e2)|.
struct MParams {
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
};
MParams m_params(std::uint64_t e1, std::uint64_t e2, std::uint64_t r1, std::uint64_t r2);

// One representative per orbit whose first coordinates form a repetition-free
// complete set of coset representatives modulo r1.
struct RestrictedReps {
    std::uint64_t r1 = 0, r2 = 0;
    std::vector<Pair> reps;  // one per orbit, in orbit (leader) order
};

// Canonical choice: the first coordinate of every representative is the
// minimum leader of its coset mod r1, and the representative is the
// lexicographically smallest such pair in its orbit.
RestrictedReps restricted_representatives(const DefiningSet2D& ds);

// Checks the defining property for an arbitrary candidate (any order):
// one representative per orbit, and representatives whose first coordinates
// share a coset mod r1 have equal first coordinates.
bool is_restricted(const DefiningSet2D& ds, std::span<const Pair> candidate);

// M(e1) = sum of m(e1, e2) over representatives with first coordinate e1.
// Throws if e1 does not occur among the representatives' first coordinates.
std::uint64_t big_M(std::uint64_t e1, const RestrictedReps& reps);

struct FGSequences {
    std::vector<std::uint64_t> f;  // distinct M values, strictly decreasing
    std::vector<std::uint64_t> g;  // strictly increasing
};
FGSequences fg_sequences(const RestrictedReps& reps);

// The staircase { (i1, i2) : exists j with f_{j+1} <= i2 < f_j and i1 < g_j },
// stored as its (f, g) sequences; points are materialised on demand.
class GammaRegion {
  public:
    GammaRegion() = default;
    GammaRegion(std::uint64_t r1, std::uint64_t r2, std::vector<std::uint64_t> f,
                std::vector<std::uint64_t> g);

    std::uint64_t r1() const { return r1_; }
    std::uint64_t r2() const { return r2_; }
    const std::vector<std::uint64_t>& f() const { return f_; }
    const std::vector<std::uint64_t>& g() const { return g_; }
    std::size_t steps() const { return f_.size(); }
    bool empty() const { return f_.empty(); }

    std::uint64_t point_count() const;
    bool contains(std::uint64_t i1, std::uint64_t i2) const;
    std::vector<Pair> points() const;  // sorted lexicographically

    bool operator==(const GammaRegion&) const = default;

  private:
    std::uint64_t r1_ = 0, r2_ = 0;
    std::vector<std::uint64_t> f_;
    std::vector<std::uint64_t> g_;
};

// Check-position region of the abelian code with defining set `ds`.
// An empty defining set yields the empty region.
GammaRegion gamma(const DefiningSet2D& ds);

}  // namespace rminfoset

#endif
