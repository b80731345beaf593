#include "nlcodim/polynomial.hpp"

#include <stdexcept>

namespace nlcodim::galg {

SparsePolynomial::SparsePolynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
}

SparsePolynomial SparsePolynomial::term(const PrimeField& F, Monomial m, std::uint64_t coeff) {
    SparsePolynomial p(m.n_vars());
    p.add_term(F, m, coeff);
    return p;
}

SparsePolynomial SparsePolynomial::variable(const PrimeField& F, int n_vars, int index) {
    return term(F, Monomial::variable(n_vars, index), 1);
}

int SparsePolynomial::degree() const noexcept {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool SparsePolynomial::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

std::optional<int> SparsePolynomial::homogeneous_degree() const noexcept {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::uint64_t SparsePolynomial::coefficient(const Monomial& m) const noexcept {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::add_term(const PrimeField& F, const Monomial& m, std::uint64_t c) {
    if (m.n_vars() != n_vars_) throw std::invalid_argument("term variable count mismatch");
    c %= F.modulus();
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::plus(const PrimeField& F, const SparsePolynomial& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("polynomial variable count mismatch");
    SparsePolynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(F, m, c);
    return out;
}

SparsePolynomial SparsePolynomial::minus(const PrimeField& F, const SparsePolynomial& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("polynomial variable count mismatch");
    SparsePolynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(F, m, F.neg(c));
    return out;
}

SparsePolynomial SparsePolynomial::times(const PrimeField& F, const SparsePolynomial& rhs) const {
    if (n_vars_ != rhs.n_vars_) throw std::invalid_argument("polynomial variable count mismatch");
    SparsePolynomial out(n_vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(F, ma * mb, F.mul(ca, cb));
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::times_monomial(const PrimeField& F, const Monomial& m) const {
    SparsePolynomial out(n_vars_);
    for (const auto& [mm, c] : terms_) out.add_term(F, mm * m, c);
    return out;
}

SparsePolynomial SparsePolynomial::scaled(const PrimeField& F, std::uint64_t c) const {
    SparsePolynomial out(n_vars_);
    c %= F.modulus();
    if (c == 0) return out;
    for (const auto& [m, cc] : terms_) out.add_term(F, m, F.mul(cc, c));
    return out;
}

SparsePolynomial SparsePolynomial::partial_derivative(const PrimeField& F, int var) const {
    if (var < 0 || var >= n_vars_) throw std::invalid_argument("variable index out of range");
    SparsePolynomial out(n_vars_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<std::size_t>(var)] = e - 1;
        out.add_term(F, Monomial(std::move(exps)), F.mul(c, F.reduce(e)));
    }
    return out;
}

std::vector<std::uint64_t> SparsePolynomial::coordinates(const MonomialBasis& basis) const {
    if (basis.n_vars() != n_vars_) throw std::invalid_argument("basis variable count mismatch");
    std::vector<std::uint64_t> v(basis.size(), 0);
    for (const auto& [m, c] : terms_) v[basis.index_of(m)] = c;
    return v;
}

SparsePolynomial SparsePolynomial::from_coordinates(const PrimeField& F, const MonomialBasis& basis,
                                                    std::span<const std::uint64_t> coords) {
    if (coords.size() != basis.size()) throw std::invalid_argument("coordinate length mismatch");
    SparsePolynomial out(basis.n_vars());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) out.add_term(F, basis[i], coords[i]);
    }
    return out;
}

SparsePolynomial inner_product(const PrimeField& F, std::span<const SparsePolynomial> a,
                               std::span<const SparsePolynomial> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("inner_product needs two lists of equal positive length");
    SparsePolynomial out(a[0].n_vars());
    for (std::size_t i = 0; i < a.size(); ++i) out = out.plus(F, a[i].times(F, b[i]));
    return out;
}

} // namespace nlcodim::galg
