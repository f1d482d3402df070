#include "specht/padic.hpp"

#include <limits>
#include <string>

namespace specht {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
    if (p >= kMaxPrime || !is_prime(p)) {
        throw InvalidModulus("modulus must be a prime below 2^15, got " + std::to_string(p));
    }
}

std::int64_t PDigits::evaluate() const {
    std::int64_t value = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * p + *it;
    return value;
}

PDigits digits_base_p(std::int64_t a, Prime p) {
    if (a < 0) throw DomainError("digits_base_p: negative argument " + std::to_string(a));
    PDigits out{{}, p.value()};
    for (; a > 0; a /= p) out.digits.push_back(a % p);
    return out;
}

std::int64_t digit(std::int64_t a, int i, Prime p) noexcept {
    for (int k = 0; k < i && a > 0; ++k) a /= p;
    return a % p;
}

int len_p(std::int64_t a, Prime p) {
    if (a < 1) throw DomainError("len_p is undefined for " + std::to_string(a));
    int l = -1;
    for (; a > 0; a /= p) ++l;
    return l;
}

int val_p(std::int64_t a, Prime p) {
    if (a < 1) throw DomainError("val_p is undefined for " + std::to_string(a));
    int v = 0;
    for (; a % p == 0; a /= p) ++v;
    return v;
}

std::int64_t ipow(Prime p, int k) {
    if (k < 0) throw DomainError("ipow: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / p) throw DomainError("ipow: overflow");
        r *= p;
    }
    return r;
}

std::int64_t binom_mod_p(std::int64_t a, std::int64_t b, Prime p) {
    // A one-off field is cheap for the small primes used in practice.
    return PrimeField(p).binom(a, b);
}

bool binom_nonzero(std::int64_t a, std::int64_t b, Prime p) {
    if (b < 0 || b > a) return false;
    for (; b > 0; a /= p, b /= p) {
        if (b % p > a % p) return false;
    }
    return true;
}

PrimeField::PrimeField(Prime p) : p_(p) {
    const auto m = static_cast<std::size_t>(p.value());
    fact_.resize(m);
    inv_fact_.resize(m);
    fact_[0] = 1;
    for (std::size_t i = 1; i < m; ++i) fact_[i] = mul(fact_[i - 1], static_cast<std::uint32_t>(i));
    inv_fact_[m - 1] = inv(fact_[m - 1]);
    for (std::size_t i = m - 1; i > 0; --i) inv_fact_[i - 1] = mul(inv_fact_[i], static_cast<std::uint32_t>(i));
}

std::uint32_t PrimeField::inv(std::uint32_t x) const {
    if (x % modulus() == 0) throw DomainError("inverse of zero in F_p");
    // Fermat: x^(p-2).
    std::uint32_t result = 1;
    std::uint32_t base = x % modulus();
    for (std::uint64_t e = modulus() - 2; e > 0; e >>= 1) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::uint32_t PrimeField::binom(std::int64_t a, std::int64_t b) const noexcept {
    if (b < 0 || b > a) return 0;
    const auto m = static_cast<std::int64_t>(modulus());
    std::uint32_t result = 1;
    for (; b > 0; a /= m, b /= m) {
        const auto ad = static_cast<std::size_t>(a % m);
        const auto bd = static_cast<std::size_t>(b % m);
        if (bd > ad) return 0;
        result = mul(result, mul(fact_[ad], mul(inv_fact_[bd], inv_fact_[ad - bd])));
    }
    return result;
}

} // namespace specht
