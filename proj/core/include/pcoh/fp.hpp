#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pcoh {

/// Residue in [0, p).
using Fp = std::uint32_t;

bool is_prime(std::uint32_t n);

/// Multiplicative inverse mod p (p prime, a != 0 mod p).
Fp fp_inv(Fp a, std::uint32_t p);

/// Dense row-major matrix over the prime field F_p.
///
/// Every entry is kept reduced mod p.  The modulus travels with the matrix
/// and binary operations refuse to mix moduli.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static FpMatrix identity(std::uint32_t p, std::size_t n);
    /// Build from integer rows; entries are reduced mod p (negatives allowed).
    static FpMatrix from_rows(std::uint32_t p,
                              const std::vector<std::vector<long long>>& rows,
                              std::size_t cols_if_empty = 0);

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fp operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Fp v) { a_[i * cols_ + j] = v % p_; }

    std::span<const Fp> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::span<Fp> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix scaled(Fp c) const;
    FpMatrix transposed() const;

    bool operator==(const FpMatrix& rhs) const = default;
    bool is_zero() const;

    /// m · v for a column vector v.
    std::vector<Fp> apply(std::span<const Fp> v) const;

    /// Copy `b` into this matrix with top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b);
    FpMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
    FpMatrix column(std::size_t j) const;

    std::uint64_t fingerprint() const;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Fp> a_;
};

/// Stack the rows of `a` on top of the rows of `b` (same width, same p).
FpMatrix stack_rows(const FpMatrix& a, const FpMatrix& b);

struct RrefResult {
    FpMatrix reduced;                 ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column per pivot row
    std::size_t rank = 0;
};

/// Reduced row echelon form; deterministic (first nonzero in column order).
RrefResult rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Rows form the canonical basis of { v : m v^T = 0 }.
FpMatrix kernel_basis(const FpMatrix& m);

/// Some x with a x = b, free variables pinned to 0; nullopt if inconsistent.
std::optional<std::vector<Fp>> solve(const FpMatrix& a, std::span<const Fp> b);

/// Columnwise solve a X = B; nullopt if any column is inconsistent.
std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b);

/// Nonzero rows of rref(m): canonical basis of the row space.
FpMatrix row_space_basis(const FpMatrix& m);

/// Canonical coset representative of v modulo the row space of `basis`
/// (`basis` must be in reduced row echelon form).
std::vector<Fp> reduce_mod_rows(const FpMatrix& basis, std::span<const Fp> v);

bool in_row_space(const FpMatrix& basis, std::span<const Fp> v);

/// A (n-k) x n matrix whose kernel is exactly the row space of `basis`
/// (k rows, in rref).  Gives canonical coordinates on the quotient space.
FpMatrix quotient_map(const FpMatrix& basis, std::size_t ambient_dim);

std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Incremental rank of a wide matrix fed row by row (rows given sparsely).
/// Keeps only the echelon basis; packed words when p = 2.
class RankAccumulator {
public:
    RankAccumulator(std::uint32_t p, std::size_t cols);
    void add_row(const std::vector<std::pair<std::size_t, Fp>>& entries);
    std::size_t rank() const { return rank_; }

private:
    std::uint32_t p_;
    std::size_t cols_, words_;
    std::size_t rank_ = 0;
    // pivot column -> stored row (dense F_p or packed F_2)
    std::vector<std::ptrdiff_t> pivot_row_;
    std::vector<std::vector<Fp>> rows_fp_;
    std::vector<std::vector<std::uint64_t>> rows_f2_;
};

/// Residue mod p^2; carries the degree-1 Bockstein lift arithmetic.
struct Zp2Scalar {
    std::uint32_t p = 2;
    std::uint32_t value = 0;  ///< in [0, p^2)

    Zp2Scalar() = default;
    Zp2Scalar(std::uint32_t p, std::int64_t v);

    Zp2Scalar operator+(const Zp2Scalar& o) const;
    Zp2Scalar operator-(const Zp2Scalar& o) const;
    Zp2Scalar operator*(const Zp2Scalar& o) const;
    bool operator==(const Zp2Scalar& o) const = default;

    /// Reduction mod p.
    Fp mod_p() const { return value % p; }
    /// True when the residue is divisible by p.
    bool divisible_by_p() const { return value % p == 0; }
    /// value / p, defined when divisible_by_p(); lands in [0, p).
    Fp quotient_by_p() const;
};

} // namespace pcoh
