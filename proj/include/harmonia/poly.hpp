#pragma once

#include "harmonia/cyclotomic.hpp"
#include "harmonia/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmonia {

/// Packed exponent vector: up to 8 variables, 8 bits each, variable 0 in the top byte.
/// With total degree <= 255 the byte sum never overflows, so addition of packed words is
/// monomial multiplication and integer comparison is lexicographic comparison.
using Mono = std::uint64_t;

inline constexpr int kMaxVars = 8;
inline constexpr unsigned kMaxDegree = 255;

namespace mono {

inline constexpr int shift(int i) { return 56 - 8 * i; }
inline unsigned exp(Mono m, int i) { return static_cast<unsigned>((m >> shift(i)) & 0xffU); }
inline Mono unit(int i) { return Mono{1} << shift(i); }
inline unsigned degree(Mono m) { return static_cast<unsigned>((m * 0x0101010101010101ULL) >> 56); }

Mono from_exponents(const std::vector<unsigned>& e);
std::vector<unsigned> to_exponents(Mono m, int nvars);

/// Product with overflow check on the total degree.
Mono mul(Mono a, Mono b);
/// a / b when b divides a.
inline bool divides(Mono b, Mono a) {
    for (int i = 0; i < kMaxVars; ++i)
        if (exp(b, i) > exp(a, i)) return false;
    return true;
}

/// Graded lexicographic order: higher degree first, then lexicographic.
inline bool grlex_greater(Mono a, Mono b) {
    unsigned da = degree(a), db = degree(b);
    return da != db ? da > db : a > b;
}

/// All monomials of total degree d in n variables, in descending grlex order.
std::vector<Mono> of_degree(int nvars, unsigned d);

}  // namespace mono

/// Sparse multivariate polynomial over F (Rational or Cyclo).
///
/// Terms are kept sorted in descending graded-lex order with no zero coefficients, so two
/// equal polynomials have identical representations.
template <class F>
class Poly {
  public:
    using Term = std::pair<Mono, F>;

    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) { check_nvars(); }

    static Poly constant(int nvars, const F& c);
    static Poly variable(int nvars, int i, const F& c = F(1));
    static Poly monomial(int nvars, Mono m, const F& c = F(1));
    /// Linear form sum_i coeffs[i] * x_i.
    static Poly linear(const std::vector<F>& coeffs);
    /// Builds from arbitrary (possibly repeated, unsorted) terms.
    static Poly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return n_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const { return t_.empty() ? -1 : static_cast<int>(mono::degree(t_.front().first)); }
    int low_degree() const { return t_.empty() ? -1 : static_cast<int>(mono::degree(t_.back().first)); }
    bool is_homogeneous() const { return t_.empty() || degree() == low_degree(); }
    Poly homogeneous_part(int d) const;
    F coeff(Mono m) const;
    const Term& leading() const { return t_.front(); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const F& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    friend Poly operator*(Poly a, const F& c) { return a *= c; }
    friend Poly operator*(const F& c, Poly a) { return a *= c; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

    Poly pow(unsigned e) const;
    /// Partial derivative in variable i.
    Poly derivative(int i) const;
    /// Directional derivative sum_i xi[i] d/dx_i.
    Poly derivative(const std::vector<F>& xi) const;
    /// Applies the monomial operator d^beta (beta packed like a monomial).
    Poly derivative_multi(Mono beta) const;

    /// p(images[0], ..., images[n-1]); the result lives in the images' variable count.
    Poly substitute(const std::vector<Poly>& images) const;
    F evaluate(const std::vector<F>& point) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

  private:
    static Poly mul(const Poly& a, const Poly& b);
    void check_nvars() const {
        if (n_ < 0 || n_ > kMaxVars) throw std::invalid_argument("Poly: at most 8 variables");
    }
    void normalise();

    int n_ = 0;
    std::vector<Term> t_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
template <class F>
std::optional<Poly<F>> divide_exact(const Poly<F>& a, const Poly<F>& b);

/// Product of falling factorials prod_i e_i (e_i - 1) ... (e_i - b_i + 1), the scalar of d^b x^e.
Rational falling_factor(Mono e, Mono b);

/// Default variable names x1..xn.
std::vector<std::string> default_names(int nvars);

using QPoly = Poly<Rational>;
using CPoly = Poly<Cyclo>;

}  // namespace harmonia

#include "harmonia/poly_impl.hpp"
