#include "harmonia/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace harmonia {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<std::uint64_t>(r);
}

namespace {
static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "64-bit unsigned long required");

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

mpz_class u64_to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    PrimeField f(n);
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = f.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = f.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}
}  // namespace

std::optional<std::uint64_t> PrimeField::from_rational(const Rational& r) const {
    std::uint64_t d = mpz_mod_u64(r.den(), p_);
    if (d == 0) return std::nullopt;
    std::uint64_t n = mpz_mod_u64(r.num(), p_);
    return mul(n, inv(d));
}

std::uint64_t PrimeField::from_mpz(const mpz_class& z) const { return mpz_mod_u64(z, p_); }

std::uint64_t large_prime(std::size_t index) {
    static std::mutex mu;
    static std::vector<std::uint64_t> primes;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        if (candidate % 2 == 0) --candidate;
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

std::optional<Rational> rational_reconstruct(const mpz_class& residue, const mpz_class& modulus) {
    mpz_class a = residue % modulus;
    if (a < 0) a += modulus;
    if (a == 0) return Rational(0);
    // Bound N = D = floor(sqrt(m/2)).
    mpz_class bound;
    mpz_class half = modulus / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = modulus, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpq_class q(r1, t1);
    q.canonicalize();
    return Rational(q);
}

void CrtAccumulator::add(const std::vector<std::uint64_t>& residues, std::uint64_t prime) {
    mpz_class p = u64_to_mpz(prime);
    if (count_ == 0) {
        values_.resize(residues.size());
        for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = u64_to_mpz(residues[i]);
        modulus_ = p;
        count_ = 1;
        return;
    }
    if (residues.size() != values_.size()) throw std::invalid_argument("CrtAccumulator: size mismatch");
    // x = v + M * ((r - v) * M^{-1} mod p)
    mpz_class minv;
    mpz_class mmod = modulus_ % p;
    mpz_invert(minv.get_mpz_t(), mmod.get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = 0; i < residues.size(); ++i) {
        mpz_class diff = u64_to_mpz(residues[i]) - values_[i] % p;
        mpz_class k = (diff * minv) % p;
        if (k < 0) k += p;
        values_[i] += modulus_ * k;
    }
    modulus_ *= p;
    ++count_;
}

std::optional<std::vector<Rational>> CrtAccumulator::reconstruct() const {
    std::vector<Rational> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
        auto r = rational_reconstruct(v, modulus_);
        if (!r) return std::nullopt;
        out.push_back(std::move(*r));
    }
    return out;
}

}  // namespace harmonia
