// Exact modular arithmetic: multiplicative orders, cyclotomic cosets and
// the group isomorphisms Z_n -> Z_{r1} x Z_{r2} used throughout the library.
//
// All values are immutable after construction and every function is pure,
// so everything here is safe for unrestricted concurrent use.

#ifndef RMINFOSET_MODULAR_HPP
#define RMINFOSET_MODULAR_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace rminfoset {

// Moduli are capped well above any Reed-Muller instance of interest (m <= 24)
// so that all intermediate products fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Inverse of a modulo m; throws std::invalid_argument when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

// 2^k mod r for arbitrary k >= 0 (r odd, r >= 1).
std::uint64_t pow2_mod(std::uint64_t k, std::uint64_t r);

// Smallest a >= 1 with 2^a = 1 (mod r). Requires r odd, r > 1.
std::uint64_t ord2_mod(std::uint64_t r);

// A 2^gamma-cyclotomic coset modulo r: the orbit of an integer under
// multiplication by 2^gamma. Elements are sorted ascending and the leader is
// the minimum, which makes the representation canonical.
struct Coset {
    std::uint64_t modulus = 0;
    std::uint32_t gamma = 1;
    std::vector<std::uint64_t> elements;

    std::uint64_t leader() const { return elements.front(); }
    std::size_t size() const { return elements.size(); }
    bool contains(std::uint64_t x) const;

    bool operator==(const Coset&) const = default;
};

// Orbit of `a` under multiplication by 2^gamma modulo r.
Coset cyclotomic_coset(std::uint64_t a, std::uint64_t r, std::uint32_t gamma = 1);

// |cyclotomic_coset(a, r, gamma)| without materialising the elements.
std::uint64_t coset_size(std::uint64_t a, std::uint64_t r, std::uint32_t gamma = 1);

// Disjoint cosets covering Z_r exactly once, ordered by leader ascending.
std::vector<Coset> coset_partition(std::uint64_t r, std::uint32_t gamma = 1);

// An isomorphism T : Z_n -> Z_{r1} x Z_{r2} for odd coprime r1, r2,
// determined by T(1) = (delta1, delta2) with both deltas units.
class GroupIso {
  public:
    GroupIso(std::uint64_t r1, std::uint64_t r2, std::uint64_t delta1, std::uint64_t delta2);

    std::uint64_t n() const { return n_; }
    std::uint64_t r1() const { return r1_; }
    std::uint64_t r2() const { return r2_; }
    std::uint64_t delta1() const { return delta1_; }
    std::uint64_t delta2() const { return delta2_; }

    // e |-> (e * delta1 mod r1, e * delta2 mod r2); requires 0 <= e < n.
    std::pair<std::uint64_t, std::uint64_t> apply(std::uint64_t e) const;

    // Unique e in Z_n with apply(e) == (a1, a2).
    std::uint64_t invert(std::uint64_t a1, std::uint64_t a2) const;
    std::uint64_t invert(const std::pair<std::uint64_t, std::uint64_t>& a) const {
        return invert(a.first, a.second);
    }

    bool operator==(const GroupIso& other) const {
        return r1_ == other.r1_ && r2_ == other.r2_ && delta1_ == other.delta1_ &&
               delta2_ == other.delta2_;
    }

  private:
    std::uint64_t r1_, r2_, n_, delta1_, delta2_;
    std::uint64_t inv_delta1_, inv_delta2_;
    std::uint64_t crt1_, crt2_;  // r2*(r2^-1 mod r1) mod n and r1*(r1^-1 mod r2) mod n
};

// The reduction map e |-> (e mod r1, e mod r2), i.e. T(1) = (1, 1).
GroupIso crt_iso(std::uint64_t r1, std::uint64_t r2);

// Units of Z_r in ascending order.
std::vector<std::uint64_t> units_mod(std::uint64_t r);

// All phi(r1)*phi(r2) isomorphisms, ordered lexicographically by (delta1, delta2).
std::vector<GroupIso> enumerate_isos(std::uint64_t r1, std::uint64_t r2);

}  // namespace rminfoset

#endif
