#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nlcodim/linalg.hpp"
#include "nlcodim/polynomial.hpp"

namespace nlcodim::galg {

/// A subspace of one graded piece S_m, held as the canonical reduced row
/// echelon basis over the canonical monomial basis. Two GradedBasis objects
/// are equal iff they present the same subspace.
class GradedBasis {
public:
    /// The zero subspace of S_m.
    GradedBasis(int n_vars, int degree);

    /// Echelonize arbitrary spanning rows (coordinates over the canonical
    /// monomial basis of S_degree).
    static GradedBasis from_rows(const PrimeField& F, int n_vars, int degree, FpMatrix rows);
    static GradedBasis full_space(const PrimeField& F, int n_vars, int degree);

    int n_vars() const noexcept { return n_vars_; }
    int ambient_degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return rows_.rows; }
    std::size_t ambient_dimension() const noexcept { return basis_->size(); }
    std::size_t codimension() const noexcept { return ambient_dimension() - dimension(); }

    const FpMatrix& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    /// Non-pivot columns: the standard monomials representing the quotient.
    const std::vector<std::size_t>& standard_columns() const noexcept { return standard_; }
    const MonomialBasis& monomial_basis() const noexcept { return *basis_; }

    /// Residual of v after eliminating every pivot coordinate; the result is
    /// supported on the standard columns and is the canonical representative
    /// of v's class mod this subspace.
    std::vector<std::uint64_t> reduce(const PrimeField& F, std::vector<std::uint64_t> v) const;
    /// Coordinates of v's class in the standard-monomial basis of the
    /// quotient.
    std::vector<std::uint64_t> quotient_coordinates(const PrimeField& F,
                                                    std::span<const std::uint64_t> v) const;

    bool contains_vector(const PrimeField& F, std::span<const std::uint64_t> v) const;
    bool contains(const PrimeField& F, const SparsePolynomial& p) const;

    /// The basis rows as polynomials.
    std::vector<SparsePolynomial> row_polynomials(const PrimeField& F) const;

    bool operator==(const GradedBasis& rhs) const noexcept {
        return n_vars_ == rhs.n_vars_ && degree_ == rhs.degree_ && rows_ == rhs.rows_;
    }

private:
    int n_vars_;
    int degree_;
    std::shared_ptr<const MonomialBasis> basis_;
    FpMatrix rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> standard_;

    void rebuild_standard_columns();
};

/// The degree-m piece of the ideal generated by homogeneous polynomials:
/// span{ mu * g : g a generator of degree d_g <= m, mu a monomial of degree
/// m - d_g }. Generators of degree > m contribute nothing and are skipped,
/// zero generators are ignored, an inhomogeneous generator is an error. An
/// empty generator list yields the zero subspace.
GradedBasis graded_span(const PrimeField& F, std::span<const SparsePolynomial> generators, int m);

} // namespace nlcodim::galg
