// Brute-force verification over GF(2): finite field tables, bit-packed
// matrices with rank/nullspace support, parity-check and evaluation
// constructions of the codes, and information-set certification.

#ifndef RMINFOSET_GF2_HPP
#define RMINFOSET_GF2_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rminfoset/abelian.hpp"
#include "rminfoset/cyclic.hpp"

namespace rminfoset {

// GF(2^m) in the polynomial basis with log/antilog tables. alpha, the class
// of x, is a primitive element; elements are coefficient bit masks.
class FieldGf2m {
  public:
    // Field with the lexicographically smallest primitive modulus of degree m
    // (smallest coefficient bit string read as an integer); 2 <= m <= 16.
    static FieldGf2m build(std::uint32_t m);

    // Field with an explicit modulus; throws unless `poly` is primitive.
    static FieldGf2m with_modulus(std::uint32_t m, std::uint32_t poly);

    // All primitive polynomials of degree m, ascending.
    static std::vector<std::uint32_t> primitive_polynomials(std::uint32_t m);

    std::uint32_t degree() const { return m_; }
    std::uint32_t modulus() const { return poly_; }
    std::uint64_t group_order() const { return n_; }  // 2^m - 1

    std::uint32_t alpha_pow(std::uint64_t i) const { return antilog_[i % n_]; }
    std::uint64_t log(std::uint32_t element) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  private:
    FieldGf2m(std::uint32_t m, std::uint32_t poly);

    std::uint32_t m_ = 0;
    std::uint32_t poly_ = 0;
    std::uint64_t n_ = 0;
    std::vector<std::uint32_t> antilog_;  // antilog_[i] = alpha^i, i in [0, n)
    std::vector<std::uint64_t> log_;      // log_[antilog_[i]] = i; log_[0] unused
};

// Dense matrix over GF(2), rows packed into 64-bit words.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void xor_row_into(std::size_t src, std::size_t dst);  // dst ^= src
    void swap_rows(std::size_t r1, std::size_t r2);

    std::size_t rank() const;

    // Rank together with indices of input rows forming a row basis
    // (deterministic pivot choice: first qualifying row per column).
    std::pair<std::size_t, std::vector<std::size_t>> rank_with_pivot_rows() const;

    // Basis of { x : A x = 0 }, one vector per row; rows() - rank() == 0
    // yields a 0 x cols matrix.
    BinaryMatrix nullspace_basis() const;

    BinaryMatrix select_columns(std::span<const std::size_t> columns) const;
    BinaryMatrix vstack(const BinaryMatrix& below) const;

    bool same_row_space(const BinaryMatrix& other) const;
    static bool orthogonal(const BinaryMatrix& a, const BinaryMatrix& b);  // A B^T = 0

    // Plain-text export: first line "rows cols", then one 0/1 string per row.
    std::string to_plain_text() const;
    static BinaryMatrix from_plain_text(std::string_view text);

    bool operator==(const BinaryMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;

    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
};

FieldGf2m build_field(std::uint32_t m);

// phi_s applied to a coefficient vector over the positions
// [ext, alpha^0, ..., alpha^{n-1}] (the ext position holds the group
// identity 0, with 0^0 = 1). coeffs.size() must be 2^m; s in [0, n].
std::uint32_t phi_map(const FieldGf2m& field, std::span<const std::uint8_t> coeffs,
                      std::uint64_t s);

// Binary parity-check matrix of the affine-invariant code with the given
// full defining set (doubling-closed, containing 0). s = 0 contributes the
// single all-ones row; every s >= 1 contributes m rows. The nullspace is the
// code, columns ordered [ext, alpha^0, ..., alpha^{n-1}].
BinaryMatrix parity_check_matrix(const FieldGf2m& field,
                                 std::span<const std::uint64_t> full_defining_set);

// Rows = evaluations of all monomials of degree <= rho in the m coordinate
// functions at [0, alpha^0, ..., alpha^{n-1}]; the row space is R(rho, m).
BinaryMatrix evaluation_generator(const FieldGf2m& field, std::uint32_t rho);

struct InfoSetCheck {
    bool ok = false;
    std::size_t code_dimension = 0;        // rank of the generator
    std::size_t selected = 0;              // number of positions tested
    std::size_t restricted_rank = 0;       // rank of the selected columns
    std::vector<std::size_t> pivot_rows;   // row basis certificate on success

    std::size_t rank_deficit() const { return selected - restricted_rank; }
};

// True iff |columns| equals the code dimension and the restricted generator
// has full column rank.
InfoSetCheck is_information_set(const BinaryMatrix& generator,
                                std::span<const std::size_t> columns);

// Row spaces of evaluation_generator(rho) and evaluation_generator(m-rho-1)
// are orthogonal complements (1 <= rho <= m-2).
bool verify_duality(const FieldGf2m& field, std::uint32_t rho);

// Parity-check matrix of the cyclic code of length n with the given defining
// set, built over GF(2^t) with t the order of 2 mod n; columns are the
// positions 0..n-1. The nullspace is the cyclic code.
BinaryMatrix cyclic_parity_check(const CyclicDefiningSet& dstar);

// Parity-check matrix of the abelian code in Z_{r1} x Z_{r2} with the given
// defining set; column index of position (i1, i2) is i1*r2 + i2.
BinaryMatrix abelian_parity_check(const DefiningSet2D& ds);

}  // namespace rminfoset

#endif
