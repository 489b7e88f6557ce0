// Reed-Muller specialisation: defining sets from binary weights, weight-K
// normal forms, the epsilon invariant of weight-2 residues, closed-form
// check-position regions for first and second order, and the structural
// statistics of the representative classes.

#ifndef RMINFOSET_REED_MULLER_HPP
#define RMINFOSET_REED_MULLER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "rminfoset/abelian.hpp"
#include "rminfoset/cyclic.hpp"
#include "rminfoset/modular.hpp"

namespace rminfoset {

std::uint64_t binomial(std::uint32_t n, std::uint32_t k);

// R(rho, m): length 2^m, order rho with 1 <= rho <= m-2 (the orders 0, m-1
// and m are the trivial cases and are rejected).
struct RMCode {
    std::uint32_t m = 0;
    std::uint32_t rho = 0;

    RMCode(std::uint32_t m, std::uint32_t rho);

    std::uint64_t n() const { return (std::uint64_t{1} << m) - 1; }
    std::uint64_t length() const { return std::uint64_t{1} << m; }
    std::uint64_t dimension() const;
};

// A factorisation n = 2^m - 1 = r1 * r2 with coprime odd factors > 1.
// a is the order of 2 modulo r1 (always a divisor of m), b = m / a.
// mersenne_r1 records whether r1 = 2^a - 1, the extra hypothesis needed by
// the second-order closed form.
struct RMFactorization {
    std::uint32_t m = 0;
    std::uint64_t r1 = 0, r2 = 0;
    std::uint32_t a = 0, b = 0;
    bool mersenne_r1 = false;

    RMFactorization(std::uint32_t m, std::uint64_t r1);
};

// All factorisations usable for the given order: every coprime pair with
// 1 < r1 < r2 when require_mersenne is false, only those with r1 = 2^a - 1
// otherwise. Sorted by r1 ascending; may be empty.
std::vector<RMFactorization> rm_factorizations(std::uint32_t m, bool require_mersenne);

// All residues 0 < j < 2^m - 1 of binary weight K, sorted.
std::vector<std::uint64_t> omega(std::uint32_t k, std::uint32_t m);

struct RMDefiningSet {
    std::vector<std::uint64_t> full;  // contains 0, sorted
    CyclicDefiningSet punctured;      // full minus {0}, grouped into cosets
};

// Defining set { i : wt(i) < m - rho } of R(rho, m), and its punctured part.
RMDefiningSet rm_defining_set(const RMCode& code);

// A member of C_n(e) of the form 1 + 2^{t_1} + ... + 2^{t_{K-1}} with
// t_i <= floor(i*m/K), found by scanning all m rotations of e. Unique for
// K = 2; the smallest qualifying value is returned for K > 2.
std::uint64_t normalize_weight_k(std::uint64_t e, std::uint32_t m, std::uint32_t k);

// For e = 2^{t1} + 2^{t2} (t1 < t2): min{t2 - t1, m - t2 + t1}, the unique
// s <= floor(m/2) with 1 + 2^s in the coset of e.
std::uint32_t epsilon_wt2(std::uint64_t e, std::uint32_t m);

// Closed-form coset sizes |C_n(e)| and |C_{r1}(e)| for weight-2 residues.
// Requires fact.mersenne_r1.
struct Wt2CosetSizes {
    std::uint64_t size_n = 0;
    std::uint64_t size_r1 = 0;
};
Wt2CosetSizes coset_sizes_wt2(std::uint64_t e, const RMFactorization& fact);

// First order: the a x (m/a) rectangle, valid for any coprime odd
// factorisation with r1, r2 > 1 (a = ord of 2 mod r1 divides m).
GammaRegion gamma_rm1(std::uint64_t r1, std::uint64_t r2, std::uint32_t m);
GammaRegion gamma_rm1(const RMFactorization& fact);

// Second order: f = [b^2, b(b+1)/2], g = [a(a-1)/2, a(a+1)/2].
// Requires fact.mersenne_r1.
GammaRegion gamma_rm2(const RMFactorization& fact);

// A coordinate of the length-2^m ambient space: either the extended position
// (the group identity, a distinct sentinel) or the exponent i of alpha^i.
struct Position {
    bool is_ext = false;
    std::uint64_t exponent = 0;

    static Position ext() { return {true, 0}; }
    static Position exp(std::uint64_t i) { return {false, i}; }

    // Column index in the fixed order [ext, alpha^0, ..., alpha^{n-1}].
    std::size_t column_index() const { return is_ext ? 0 : static_cast<std::size_t>(exponent) + 1; }

    friend auto operator<=>(const Position& lhs, const Position& rhs) {
        // ext sorts first
        if (lhs.is_ext != rhs.is_ext) return rhs.is_ext <=> lhs.is_ext;
        return lhs.exponent <=> rhs.exponent;
    }
    friend bool operator==(const Position&, const Position&) = default;
};

// The computed set {ext} u { exponent i : i in T^-1(Gamma) }. It is at once
// an information set for R(rho, m) and a set of check positions for the dual
// R(m-rho-1, m); the complement is an information set for the dual.
struct RMInfoSet {
    std::uint32_t m = 0;
    std::uint32_t rho = 0;
    RMFactorization fact;
    GroupIso iso;
    GammaRegion region;
    std::vector<std::uint64_t> exponents;  // T^-1 of the region, sorted

    std::vector<Position> info_positions() const;
    std::vector<Position> check_positions() const { return info_positions(); }
    std::vector<Position> complement_positions() const;  // information set for the dual
};

// Closed-form construction; rho must be 1 or 2 (use info_set_rm_generic for
// other orders). rho = 2 requires fact.mersenne_r1.
RMInfoSet info_set_rm(const RMCode& code, const RMFactorization& fact, const GroupIso& iso);

// Same output through the generic pipeline on the defining set of
// R*(m-rho-1, m); works for every 1 <= rho <= m-2 and any factorisation.
RMInfoSet info_set_rm_generic(const RMCode& code, const RMFactorization& fact,
                              const GroupIso& iso);

// Statistics of the representative classes of Omega(1) u Omega(2), with the
// class representatives re-chosen by the fixed convention: the class of the
// weight-1 coset is represented by its suitable representative; when m is
// even the class of the coset of 1 + 2^{m/2} is represented by that coset's
// representative (unless it coincides with the weight-1 class); when a is
// even likewise for 1 + 2^{a/2} (unless its class is the previous one).
struct UClassInfo {
    std::uint64_t rep = 0;
    std::vector<std::uint64_t> members;        // suitable representatives, ascending
    std::vector<std::uint64_t> coset_sizes_n;  // |C_n(member)|, aligned with members
    std::uint64_t coset_size_r1 = 0;           // |C_{r1}(rep mod r1)|
    bool contains_weight_one = false;
    std::optional<std::uint32_t> rep_epsilon;  // for weight-2 representatives
};

struct StructuralStats {
    std::uint32_t m = 0, a = 0, b = 0;
    std::size_t class_count = 0;            // |U|
    std::size_t weight_one_class_size = 0;  // |O(1)|
    std::vector<UClassInfo> classes;        // weight-1 class first, then by rep
};

// Requires `reps` built for the defining set Omega(1) u Omega(2) of
// R*(m-3, m) over the moduli of `fact`.
StructuralStats structural_stats(const RMFactorization& fact, const SuitableReps& reps);

}  // namespace rminfoset

#endif
