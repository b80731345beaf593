#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nlcodim/monomial.hpp"
#include "nlcodim/prime_field.hpp"

namespace nlcodim::galg {

/// A polynomial over F_p stored as its set of nonzero terms, ordered by the
/// canonical monomial order. Invariants: no duplicate monomials, no zero
/// coefficients. The arithmetic context is passed explicitly; a polynomial
/// only stores residues of the field it was built with.
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, std::uint64_t, CanonicalLess>;

    explicit SparsePolynomial(int n_vars);

    static SparsePolynomial zero(int n_vars) { return SparsePolynomial(n_vars); }
    static SparsePolynomial term(const PrimeField& F, Monomial m, std::uint64_t coeff);
    /// x_index as a polynomial.
    static SparsePolynomial variable(const PrimeField& F, int n_vars, int index);

    int n_vars() const noexcept { return n_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Max total degree of a term; -1 for the zero polynomial.
    int degree() const noexcept;
    /// True when all terms share one total degree (the zero polynomial counts
    /// as homogeneous).
    bool is_homogeneous() const noexcept;
    /// The shared degree when the polynomial is homogeneous and nonzero.
    std::optional<int> homogeneous_degree() const noexcept;

    std::uint64_t coefficient(const Monomial& m) const noexcept;
    /// Accumulate c * m into the polynomial, dropping the term if it cancels.
    void add_term(const PrimeField& F, const Monomial& m, std::uint64_t c);

    SparsePolynomial plus(const PrimeField& F, const SparsePolynomial& rhs) const;
    SparsePolynomial minus(const PrimeField& F, const SparsePolynomial& rhs) const;
    SparsePolynomial times(const PrimeField& F, const SparsePolynomial& rhs) const;
    SparsePolynomial times_monomial(const PrimeField& F, const Monomial& m) const;
    SparsePolynomial scaled(const PrimeField& F, std::uint64_t c) const;
    SparsePolynomial partial_derivative(const PrimeField& F, int var) const;

    /// Coordinate vector over a graded monomial basis; throws if a term does
    /// not live in that graded piece.
    std::vector<std::uint64_t> coordinates(const MonomialBasis& basis) const;
    static SparsePolynomial from_coordinates(const PrimeField& F, const MonomialBasis& basis,
                                             std::span<const std::uint64_t> coords);

    bool operator==(const SparsePolynomial& rhs) const noexcept {
        return n_vars_ == rhs.n_vars_ && terms_ == rhs.terms_;
    }

private:
    int n_vars_;
    TermMap terms_;
};

/// Sum of pointwise products; throws on length mismatch. This is the paper
/// pattern F = P_1 Q_1 + ... + P_t Q_t.
SparsePolynomial inner_product(const PrimeField& F, std::span<const SparsePolynomial> a,
                               std::span<const SparsePolynomial> b);

} // namespace nlcodim::galg
