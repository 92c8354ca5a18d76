#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonia {

/// Field descriptor shared by all exact scalars. order == 1 is Q, order k > 2 is Q(zeta_k).
/// (Q(zeta_2) = Q, so order 2 is normalised to 1.)
struct FieldSpec {
    int order = 1;

    bool is_rational() const { return order <= 2; }
    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.is_rational() ? b.is_rational() : a.order == b.order;
    }
    std::string to_string() const;
};

class FieldMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact rational number (canonical: reduced, positive denominator).
class Rational {
  public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(v) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}

    /// Parses "p" or "p/q".
    static Rational parse(std::string_view text);

    static FieldSpec field() { return {1}; }
    FieldSpec field_of() const { return {1}; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1);
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(r);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Rational part of the value, for interface symmetry with Cyclo.
    const Rational& rational_part() const { return *this; }
    bool is_rational() const { return true; }
    Rational conjugate() const { return *this; }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace harmonia
