#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nlcodim/prime_field.hpp"

namespace nlcodim::galg {

/// Dense row-major matrix over F_p. Graded pieces at desk scale stay below
/// a few thousand columns, where dense elimination wins.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    std::span<std::uint64_t> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

    void append_row(std::span<const std::uint64_t> v);

    static FpMatrix identity(std::size_t n);

    bool operator==(const FpMatrix&) const = default;
};

/// In-place reduced row echelon form with fixed pivoting: columns are
/// scanned left to right, the first nonzero entry at or below the current
/// row is the pivot. Returns the pivot columns (strictly increasing); the
/// rank is their count. The result is the canonical RREF of the row space.
std::vector<std::size_t> reduced_row_echelon(const PrimeField& F, FpMatrix& A);

std::size_t echelon_rank(const PrimeField& F, FpMatrix A);

/// One solution of A x = b (free variables set to 0), or nullopt when the
/// system is inconsistent. Throws std::invalid_argument on shape mismatch.
std::optional<std::vector<std::uint64_t>> solve_linear(const PrimeField& F, const FpMatrix& A,
                                                       std::span<const std::uint64_t> b);

std::size_t kernel_dim(const PrimeField& F, const FpMatrix& A);

/// Canonical (echelonized) basis of the right kernel of A, one row per basis
/// vector.
FpMatrix kernel_basis(const PrimeField& F, const FpMatrix& A);

} // namespace nlcodim::galg
