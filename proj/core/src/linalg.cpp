#include "nlcodim/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlcodim::galg {

void FpMatrix::append_row(std::span<const std::uint64_t> v) {
    if (cols == 0 && rows == 0) cols = v.size();
    if (v.size() != cols) throw std::invalid_argument("row length mismatch");
    data.insert(data.end(), v.begin(), v.end());
    ++rows;
}

FpMatrix FpMatrix::identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<std::size_t> reduced_row_echelon(const PrimeField& F, FpMatrix& A) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t sel = r;
        while (sel < A.rows && A.at(sel, c) == 0) ++sel;
        if (sel == A.rows) continue;
        if (sel != r) {
            for (std::size_t j = c; j < A.cols; ++j) std::swap(A.at(r, j), A.at(sel, j));
        }
        const std::uint64_t piv_inv = F.inv(A.at(r, c));
        if (piv_inv != 1) {
            for (std::size_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), piv_inv);
        }
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            const std::uint64_t f = A.at(i, c);
            if (f == 0) continue;
            // Rows at or below r are zero left of column c, but rows above
            // carry earlier pivots, so eliminate from column c only; entries
            // left of c in row r are zero, leaving earlier columns intact.
            for (std::size_t j = c; j < A.cols; ++j) {
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t echelon_rank(const PrimeField& F, FpMatrix A) {
    return reduced_row_echelon(F, A).size();
}

std::optional<std::vector<std::uint64_t>> solve_linear(const PrimeField& F, const FpMatrix& A,
                                                       std::span<const std::uint64_t> b) {
    if (b.size() != A.rows) throw std::invalid_argument("rhs length does not match row count");
    FpMatrix aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::copy(A.row(i).begin(), A.row(i).end(), aug.row(i).begin());
        aug.at(i, A.cols) = b[i] % F.modulus();
    }
    const auto pivots = reduced_row_echelon(F, aug);
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    std::vector<std::uint64_t> x(A.cols, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug.at(t, A.cols);
    return x;
}

std::size_t kernel_dim(const PrimeField& F, const FpMatrix& A) {
    return A.cols - echelon_rank(F, A);
}

FpMatrix kernel_basis(const PrimeField& F, const FpMatrix& A) {
    FpMatrix R = A;
    const auto pivots = reduced_row_echelon(F, R);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    FpMatrix K(A.cols - pivots.size(), A.cols);
    std::size_t k = 0;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        K.at(k, f) = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            K.at(k, pivots[t]) = F.neg(R.at(t, f));
        }
        ++k;
    }
    reduced_row_echelon(F, K);
    return K;
}

} // namespace nlcodim::galg
