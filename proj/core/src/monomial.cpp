#include "nlcodim/monomial.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace nlcodim::galg {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("monomial needs at least one variable");
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::one(int n_vars) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(n_vars), 0));
}

Monomial Monomial::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (n_vars() != rhs.n_vars()) throw std::invalid_argument("monomial variable count mismatch");
    std::vector<int> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exponents_[i];
    return Monomial(std::move(e));
}

int Monomial::canonical_compare(const Monomial& a, const Monomial& b) {
    if (a.n_vars() != b.n_vars()) throw std::invalid_argument("monomial variable count mismatch");
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    for (std::size_t i = a.exponents_.size(); i-- > 0;) {
        if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] < b.exponents_[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void generate(int n_vars, int degree, std::vector<int>& current, std::vector<Monomial>& out) {
    if (n_vars == 1) {
        current[0] = degree;
        out.emplace_back(current);
        return;
    }
    // Ascending exponent of the last variable enumerates the fixed-degree
    // slice in descending grevlex order.
    for (int t = 0; t <= degree; ++t) {
        current[static_cast<std::size_t>(n_vars) - 1] = t;
        generate(n_vars - 1, degree - t, current, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n_vars, int degree) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> current(static_cast<std::size_t>(n_vars), 0);
    generate(n_vars, degree, current, out);
    return out;
}

MonomialBasis::MonomialBasis(int n_vars, int degree)
    : n_vars_(n_vars), degree_(degree), list_(monomials_of_degree(n_vars, degree)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::invalid_argument("monomial of degree " + std::to_string(m.degree()) +
                                    " is not in the degree-" + std::to_string(degree_) + " basis");
    return it->second;
}

} // namespace nlcodim::galg
