#include "rminfoset/modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rminfoset {

namespace {

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

void check_modulus(std::uint64_t r) {
    require(r >= 1, "modulus must be positive");
    require(r % 2 == 1, "modulus must be odd");
    require(r < kMaxModulus, "modulus exceeds the supported range");
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    require(m >= 2, "inverse needs modulus >= 2");
    // extended Euclid on (a mod m, m)
    std::int64_t old_r = static_cast<std::int64_t>(a % m);
    std::int64_t r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    require(old_r == 1, "element is not invertible modulo m");
    std::int64_t inv = old_s % static_cast<std::int64_t>(m);
    if (inv < 0) inv += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(inv);
}

std::uint64_t pow2_mod(std::uint64_t k, std::uint64_t r) {
    check_modulus(r);
    if (r == 1) return 0;
    std::uint64_t result = 1;
    std::uint64_t base = 2 % r;
    while (k > 0) {
        if (k & 1) result = (result * base) % r;
        base = (base * base) % r;
        k >>= 1;
    }
    return result;
}

std::uint64_t ord2_mod(std::uint64_t r) {
    require(r > 1, "order of 2 requires modulus > 1");
    check_modulus(r);
    std::uint64_t x = 2 % r;
    std::uint64_t order = 1;
    while (x != 1) {
        x = (x * 2) % r;
        ++order;
        if (order > r) throw std::logic_error("order search exceeded the modulus");
    }
    return order;
}

bool Coset::contains(std::uint64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Coset cyclotomic_coset(std::uint64_t a, std::uint64_t r, std::uint32_t gamma) {
    check_modulus(r);
    require(gamma >= 1, "gamma must be positive");
    require(a < r, "residue out of range");

    const std::uint64_t mult = pow2_mod(gamma, r);
    std::vector<std::uint64_t> elems;
    std::uint64_t x = a;
    do {
        elems.push_back(x);
        x = (x * mult) % r;
    } while (x != a);
    std::sort(elems.begin(), elems.end());
    return Coset{r, gamma, std::move(elems)};
}

std::uint64_t coset_size(std::uint64_t a, std::uint64_t r, std::uint32_t gamma) {
    check_modulus(r);
    require(gamma >= 1, "gamma must be positive");
    require(a < r, "residue out of range");

    const std::uint64_t mult = pow2_mod(gamma, r);
    std::uint64_t x = (a * mult) % r;
    std::uint64_t size = 1;
    while (x != a) {
        x = (x * mult) % r;
        ++size;
    }
    return size;
}

std::vector<Coset> coset_partition(std::uint64_t r, std::uint32_t gamma) {
    check_modulus(r);
    require(gamma >= 1, "gamma must be positive");

    std::vector<bool> seen(r, false);
    std::vector<Coset> cosets;
    for (std::uint64_t a = 0; a < r; ++a) {
        if (seen[a]) continue;
        Coset coset = cyclotomic_coset(a, r, gamma);
        for (std::uint64_t x : coset.elements) seen[x] = true;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

GroupIso::GroupIso(std::uint64_t r1, std::uint64_t r2, std::uint64_t delta1, std::uint64_t delta2)
    : r1_(r1), r2_(r2), delta1_(delta1), delta2_(delta2) {
    check_modulus(r1);
    check_modulus(r2);
    require(r1 > 1 && r2 > 1, "factors must exceed 1");
    require(gcd_u64(r1, r2) == 1, "factors must be coprime");
    require(r1 * r2 < kMaxModulus, "product modulus exceeds the supported range");
    require(delta1 > 0 && delta1 < r1 && gcd_u64(delta1, r1) == 1, "delta1 must be a unit");
    require(delta2 > 0 && delta2 < r2 && gcd_u64(delta2, r2) == 1, "delta2 must be a unit");

    n_ = r1 * r2;
    inv_delta1_ = mod_inverse(delta1, r1);
    inv_delta2_ = mod_inverse(delta2, r2);
    crt1_ = (r2 * mod_inverse(r2 % r1, r1)) % n_;
    crt2_ = (r1 * mod_inverse(r1 % r2, r2)) % n_;
}

std::pair<std::uint64_t, std::uint64_t> GroupIso::apply(std::uint64_t e) const {
    if (e >= n_) throw std::invalid_argument("element out of range for the isomorphism");
    return {(e * delta1_) % r1_, (e * delta2_) % r2_};
}

std::uint64_t GroupIso::invert(std::uint64_t a1, std::uint64_t a2) const {
    if (a1 >= r1_ || a2 >= r2_) throw std::invalid_argument("coordinates out of range");
    const std::uint64_t x1 = (a1 * inv_delta1_) % r1_;
    const std::uint64_t x2 = (a2 * inv_delta2_) % r2_;
    return ((x1 * crt1_) % n_ + (x2 * crt2_) % n_) % n_;
}

GroupIso crt_iso(std::uint64_t r1, std::uint64_t r2) { return GroupIso(r1, r2, 1, 1); }

std::vector<std::uint64_t> units_mod(std::uint64_t r) {
    check_modulus(r);
    std::vector<std::uint64_t> units;
    for (std::uint64_t u = 1; u < r; ++u) {
        if (gcd_u64(u, r) == 1) units.push_back(u);
    }
    return units;
}

std::vector<GroupIso> enumerate_isos(std::uint64_t r1, std::uint64_t r2) {
    const std::vector<std::uint64_t> u1 = units_mod(r1);
    const std::vector<std::uint64_t> u2 = units_mod(r2);
    std::vector<GroupIso> isos;
    isos.reserve(u1.size() * u2.size());
    for (std::uint64_t d1 : u1) {
        for (std::uint64_t d2 : u2) {
            isos.emplace_back(r1, r2, d1, d2);
        }
    }
    return isos;
}

}  // namespace rminfoset
