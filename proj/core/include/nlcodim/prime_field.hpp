#pragma once

#include <cstdint>
#include <string_view>

namespace nlcodim::galg {

/// Returns true iff n is prime (deterministic Miller-Rabin, valid for all
/// 64-bit inputs).
bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic context for the prime field F_p. Elements are residues stored
/// as std::uint64_t in [0, p); every operation is exact. The context is the
/// shared part of the spec's PrimeFieldElement: polynomials and matrices
/// store bare residues and all arithmetic goes through a PrimeField.
class PrimeField {
public:
    /// 2^31 - 1, a Mersenne prime. Large enough that random instances are
    /// generic with failure probability O(1/p).
    static constexpr std::uint64_t default_prime = 2147483647ULL;

    explicit PrimeField(std::uint64_t p = default_prime);

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    /// a^e by square-and-multiply.
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; throws std::domain_error on 0.
    std::uint64_t inv(std::uint64_t a) const;

    /// Reduce a signed integer into [0, p).
    std::uint64_t reduce(std::int64_t v) const noexcept;
    /// Reduce a decimal string (optional leading '-') into [0, p). The string
    /// may exceed 64 bits; digits are folded in one at a time. Throws
    /// std::invalid_argument on malformed input.
    std::uint64_t parse_decimal(std::string_view s) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

} // namespace nlcodim::galg
