#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace nlcodim::galg {

/// A monomial in a fixed number of variables, stored as its exponent vector.
/// The canonical order on monomials is graded (lower total degree first),
/// then descending graded-reverse-lexicographic within a degree; this fixes
/// the monomial basis of every graded piece S_m once and for all, so echelon
/// forms are reproducible.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int n_vars);
    static Monomial variable(int n_vars, int index);

    int n_vars() const noexcept { return static_cast<int>(exponents_.size()); }
    int degree() const noexcept { return degree_; }
    int exponent(int i) const { return exponents_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& exponents() const noexcept { return exponents_; }

    Monomial operator*(const Monomial& rhs) const;

    /// Three-way comparison in the canonical basis order: negative when a is
    /// listed before b. Within one degree, a precedes b exactly when a is
    /// grevlex-greater, i.e. when the last nonzero entry of a - b is negative.
    static int canonical_compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& rhs) const noexcept { return exponents_ == rhs.exponents_; }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Strict-weak-order functor: "comes earlier in the canonical basis".
struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::canonical_compare(a, b) < 0;
    }
};

/// All monomials of the given total degree, in canonical order. Empty for
/// negative degree; the constant monomial for degree 0. The list has
/// C(m + n_vars - 1, n_vars - 1) entries.
std::vector<Monomial> monomials_of_degree(int n_vars, int degree);

/// The canonical ordered monomial basis of one graded piece S_m, with an
/// index for converting polynomials to coordinate vectors.
class MonomialBasis {
public:
    MonomialBasis(int n_vars, int degree);

    int n_vars() const noexcept { return n_vars_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return list_.size(); }
    const Monomial& operator[](std::size_t i) const { return list_.at(i); }
    const std::vector<Monomial>& monomials() const noexcept { return list_; }

    /// Position of m in the basis; throws std::invalid_argument if m does not
    /// belong to this graded piece.
    std::size_t index_of(const Monomial& m) const;

private:
    int n_vars_;
    int degree_;
    std::vector<Monomial> list_;
    std::map<Monomial, std::size_t, CanonicalLess> index_;
};

} // namespace nlcodim::galg
