#pragma once

#include "harmonia/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace harmonia {

/// Arithmetic in Z/pZ for primes p < 2^62.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p) : p_(p), inv_(1.0L / static_cast<long double>(p)) {}
    std::uint64_t prime() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    /// Product via a long double quotient estimate; exact for p < 2^62 and reduced inputs.
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        auto q = static_cast<std::uint64_t>(static_cast<long double>(a) * static_cast<long double>(b) * inv_);
        auto r = static_cast<std::int64_t>(a * b - q * p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        else if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t from_int(long v) const;
    /// Image of a rational; nullopt when p divides the denominator.
    std::optional<std::uint64_t> from_rational(const Rational& r) const;
    std::uint64_t from_mpz(const mpz_class& z) const;

  private:
    std::uint64_t p_;
    long double inv_;
};

/// i-th prime below 2^62 (descending, deterministic).
std::uint64_t large_prime(std::size_t index);

/// Rational reconstruction of a residue modulo m (Wang's bound); nullopt if none exists.
std::optional<Rational> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus);

/// Accumulates residues of a fixed-size vector over several primes by CRT.
class CrtAccumulator {
  public:
    void add(const std::vector<std::uint64_t>& residues, std::uint64_t prime);
    const mpz_class& modulus() const { return modulus_; }
    std::size_t prime_count() const { return count_; }
    /// Reconstructs every entry; nullopt if any entry fails.
    std::optional<std::vector<Rational>> reconstruct() const;

  private:
    mpz_class modulus_ = 1;
    std::vector<mpz_class> values_;
    std::size_t count_ = 0;
};

}  // namespace harmonia
