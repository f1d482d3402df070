#pragma once

#include <cstdint>
#include <vector>

#include "specht/errors.hpp"

namespace specht {

/// Largest modulus accepted anywhere in the library (exclusive).
inline constexpr std::int64_t kMaxPrime = 1 << 15;

/// A validated prime modulus.  Construction is the single place where
/// primality is checked; everything downstream takes a Prime.
class Prime {
public:
    explicit Prime(std::int64_t p);

    [[nodiscard]] std::int64_t value() const noexcept { return p_; }
    operator std::int64_t() const noexcept { return p_; }  // NOLINT(google-explicit-constructor)

    friend bool operator==(Prime, Prime) = default;

private:
    std::int64_t p_;
};

[[nodiscard]] bool is_prime(std::int64_t n) noexcept;

/// Base-p expansion, little-endian.  Zero has no digits.
struct PDigits {
    std::vector<std::int64_t> digits;
    std::int64_t p = 2;

    /// Digit at position i, zero past the end.
    [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept {
        return i < digits.size() ? digits[i] : 0;
    }
    [[nodiscard]] std::int64_t evaluate() const;
};

[[nodiscard]] PDigits digits_base_p(std::int64_t a, Prime p);

/// i-th base-p digit of a.
[[nodiscard]] std::int64_t digit(std::int64_t a, int i, Prime p) noexcept;

/// Index of the top nonzero digit.  Throws DomainError for a < 1.
[[nodiscard]] int len_p(std::int64_t a, Prime p);

/// Exponent of the largest power of p dividing a.  Throws DomainError for a < 1.
[[nodiscard]] int val_p(std::int64_t a, Prime p);

/// p^k.  Throws DomainError on overflow of int64.
[[nodiscard]] std::int64_t ipow(Prime p, int k);

/// C(a, b) mod p by Lucas's formula, as a canonical residue in [0, p).
/// Negative b, or b > a, gives 0.
[[nodiscard]] std::int64_t binom_mod_p(std::int64_t a, std::int64_t b, Prime p);

/// C(a, b) != 0 mod p, i.e. every base-p digit of b is at most the
/// corresponding digit of a.
[[nodiscard]] bool binom_nonzero(std::int64_t a, std::int64_t b, Prime p);

/// Arithmetic in F_p with canonical residues.  Holds factorial tables so
/// that digit binomials are O(1).
class PrimeField {
public:
    explicit PrimeField(Prime p);

    [[nodiscard]] Prime prime() const noexcept { return p_; }
    [[nodiscard]] std::uint32_t modulus() const noexcept { return static_cast<std::uint32_t>(p_.value()); }

    [[nodiscard]] std::uint32_t reduce(std::int64_t x) const noexcept {
        const auto m = static_cast<std::int64_t>(modulus());
        const std::int64_t r = x % m;
        return static_cast<std::uint32_t>(r < 0 ? r + m : r);
    }
    [[nodiscard]] std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        const std::uint32_t s = x + y;
        return s >= modulus() ? s - modulus() : s;
    }
    [[nodiscard]] std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
        return x >= y ? x - y : x + modulus() - y;
    }
    [[nodiscard]] std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : modulus() - x; }
    [[nodiscard]] std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * y) % modulus());
    }
    /// Multiplicative inverse; x must be nonzero.
    [[nodiscard]] std::uint32_t inv(std::uint32_t x) const;

    [[nodiscard]] std::uint32_t binom(std::int64_t a, std::int64_t b) const noexcept;

private:
    Prime p_;
    std::vector<std::uint32_t> fact_;
    std::vector<std::uint32_t> inv_fact_;
};

} // namespace specht
