// Embedded reference tables. Regenerating these from scratch is the test;
// the copies here are the reference. Row order is preserved as published.

#ifndef RMINFOSET_GOLDEN_TABLES_HPP
#define RMINFOSET_GOLDEN_TABLES_HPP

#include <cstdint>
#include <vector>

namespace rminfoset::golden {

// Tables I and IV: one row per isomorphism of Z_15 -> Z_3 x Z_5, keyed by
// T(1) = (delta1, delta2); exponent set I such that {0} u {alpha^i : i in I}
// is an information set for R(1,4) (Table I) or R(2,4) (Table IV).
struct IsoRow {
    std::uint64_t delta1, delta2;
    std::vector<std::uint64_t> exponents;
};

// Tables II and V: one row per factorisation of 2^8 - 1, CRT isomorphism;
// exponent sets for R(1,8) (Table II) and R(2,8) (Table V).
struct FactorRow {
    std::uint64_t r1, r2;
    std::uint32_t a;
    std::vector<std::uint64_t> exponents;
};

// Table III: first-order parameters up to length 2048.
struct ParamRow1 {
    std::uint32_t m;
    std::uint64_t n, r1, r2;
    std::uint32_t a;
};

// Table VI: second-order parameters up to length 4096.
struct ParamRow2 {
    std::uint32_t m;
    std::uint64_t n, r1, r2;
    std::uint32_t a, b;
};

const std::vector<IsoRow>& table_i();
const std::vector<FactorRow>& table_ii();
const std::vector<ParamRow1>& table_iii();
const std::vector<IsoRow>& table_iv();
const std::vector<FactorRow>& table_v();
const std::vector<ParamRow2>& table_vi();

}  // namespace rminfoset::golden

#endif
