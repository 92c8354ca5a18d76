#pragma once

#include "harmonia/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace harmonia {

/// Coefficients of the cyclotomic polynomial Phi_k, lowest degree first (integer valued).
const std::vector<long>& cyclotomic_polynomial(int k);

/// Euler totient of k (= degree of Phi_k).
int euler_phi(int k);

/// Element of Q(zeta_k), stored as rational coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(k)-1}, reduced modulo Phi_k.
///
/// An element built from an integer or Rational carries order 0 ("field not yet
/// fixed") and adopts the field of the other operand in mixed arithmetic.  Two
/// elements with different nonzero orders never mix: that raises FieldMismatch.
class Cyclo {
  public:
    Cyclo() : coords_(1) {}
    Cyclo(int v) : coords_{Rational(v)} {}
    Cyclo(long v) : coords_{Rational(v)} {}
    Cyclo(const Rational& r) : coords_{r} {}

    /// Element with explicit coordinates (length phi(order)); reduced on construction.
    Cyclo(int order, std::vector<Rational> coords);

    /// zeta_order^power.
    static Cyclo root_of_unity(int order, long power = 1);
    static Cyclo rational_in(int order, const Rational& r);

    /// Parses "[a0,a1,...]@k" or a plain rational.
    static Cyclo parse(std::string_view text);

    int order() const { return order_; }
    FieldSpec field_of() const { return {order_ == 0 ? 1 : order_}; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coordinate; only meaningful when is_rational().
    const Rational& rational_part() const { return coords_[0]; }

    /// Complex conjugation zeta -> zeta^{-1}.
    Cyclo conjugate() const;
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    Cyclo operator-() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);

    std::string to_string() const;

  private:
    void adopt(int order);
    void reduce();

    int order_ = 0;
    std::vector<Rational> coords_;
};

/// Primitive root zeta_k as an element of Q(zeta_k).
inline Cyclo cyclo(int k) { return Cyclo::root_of_unity(k, 1); }

}  // namespace harmonia
