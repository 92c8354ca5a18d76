#pragma once

#include "harmonia/coxeter.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

/// Raised when an identity that must hold by theory fails; indicates a bug, not bad input.
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Partition = std::vector<int>;

/// Partitions of n in decreasing lexicographic order, (n) first.
std::vector<Partition> partitions(int n);
std::string partition_label(const Partition& p);

struct BoxData {
    int row, col;
    int hook, leg, arm;
};

struct HookData {
    std::vector<BoxData> boxes;  // row-major
    mpz_class dim;               // n! / prod hooks
};

HookData hooks_legs_arms(const Partition& lambda);
mpz_class sn_dimension(const Partition& lambda);

/// chi_lambda at an element of cycle type mu (Murnaghan-Nakayama).
long character_sn(const Partition& lambda, const Partition& mu);

/// Integer polynomial in t with nonnegative coefficients, lowest degree first.
struct PoincarePoly {
    std::vector<long> c;

    PoincarePoly() = default;
    explicit PoincarePoly(std::vector<long> coeffs) : c(std::move(coeffs)) { trim(); }
    static PoincarePoly monomial(int degree, long coeff = 1);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    int low_degree() const;
    long at(int d) const { return d >= 0 && d < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(d)] : 0; }
    long value_at_one() const;
    /// P'(1)/P(1).
    Rational log_derivative_at_one() const;
    /// t^M P(1/t).
    PoincarePoly reversed(int M) const;
    PoincarePoly shifted(int k) const;

    PoincarePoly& operator+=(const PoincarePoly& o);
    friend PoincarePoly operator+(PoincarePoly a, const PoincarePoly& b) { return a += b; }
    friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b);
    friend PoincarePoly operator*(long k, PoincarePoly a);
    friend bool operator==(const PoincarePoly& a, const PoincarePoly& b) { return a.c == b.c; }

    /// "1 + 2t^4 + 2t^5 + t^9".
    std::string to_string() const;
    void trim();
};

/// prod_k (1 - t^{d_k}) / (1 - t), one factor per degree.
PoincarePoly classical_poincare(const std::vector<int>& degrees);

/// Kirillov product formula for P_lambda(H_0, t).
PoincarePoly kirillov_PH0(const Partition& lambda);

enum class IrrepKind { Partition, Trivial, Sign, TwoDim, Plus, Minus };

struct Irrep {
    IrrepKind kind = IrrepKind::Partition;
    Partition partition;  // S_n
    int j = 0;            // TwoDim index
    int dim = 1;
    std::string name;
};

/// Character table over the conjugacy classes of a supported group.
struct CharacterTable {
    GroupKind kind = GroupKind::A;
    int param = 0;
    std::size_t order = 0;
    std::vector<int> degrees;                    // ambient basic-invariant degrees
    std::vector<ElementClass> classes;
    std::vector<Irrep> irreps;
    std::vector<std::vector<Cyclo>> chi;         // [irrep][class]
    std::vector<std::size_t> reflection_class;   // conjugacy class of each reflection class a
    std::vector<std::size_t> reflection_sizes;   // N_a

    std::size_t num_reflection_classes() const { return reflection_sizes.size(); }
    std::size_t find(const std::string& name) const;
    /// Index of the irrep whose character equals chi_j times the given linear character.
    std::size_t tensor_linear(std::size_t j, const std::vector<Cyclo>& linear) const;
    /// chi_a: -1 on C_a, +1 on the other reflection classes.
    std::vector<Cyclo> linear_character(const std::vector<int>& signs_per_reflection_class) const;
    std::size_t sign_index() const;
    std::size_t dual(std::size_t j) const;           // j* = j tensor sign
    std::size_t tensor_class(std::size_t j, std::size_t a) const;  // j tensor chi_a
    Rational reflection_character(std::size_t j, std::size_t a) const;
};

template <class F>
CharacterTable character_table(const Group<F>& g);

/// P_j(H_0, t) from closed forms (Kirillov for S_n, explicit dihedral formulas).
PoincarePoly dihedral_PH0(const Irrep& irrep, int N);
PoincarePoly poincare_H0(const CharacterTable& t, std::size_t j);

/// Molien series (1/|G|) sum_g chi(g^{-1}) / det(1 - g t), computed from element matrices.
/// Returned as numerator over prod_k (1 - t^{d_k}); the numerator is P_j(H_0, t).
struct MolienSeries {
    std::vector<Rational> numerator;
    std::vector<int> denominator_degrees;
};
template <class F>
MolienSeries molien_PS(const Group<F>& g, const CharacterTable& t, std::size_t j);

/// d_a^-(V_j) = N_a (dim - chi(s)) / dim; throws if not an integer.
long d_minus(const CharacterTable& t, std::size_t j, std::size_t a);
long d_plus(const CharacterTable& t, std::size_t j, std::size_t a);
/// Kirillov's closed form sum(leg - arm) + n(n-1)/2 for S_n.
long d_minus_kirillov(const Partition& lambda);

/// Label permutation pi_m on irreps.
std::size_t pi_m(const CharacterTable& t, const std::vector<long>& m, std::size_t j);

PoincarePoly poincare_Hm(const CharacterTable& t, const std::vector<long>& m, std::size_t j);
/// Total Poincare polynomial; runs the duality, palindrome and degree self-checks.
PoincarePoly poincare_Hm_total(const CharacterTable& t, const std::vector<long>& m);
/// Top degree sum_a N_a (2 m_a + 1).
long top_degree(const CharacterTable& t, const std::vector<long>& m);

Rational solomon_d(const PoincarePoly& p);
Rational twisted_solomon_d(const PoincarePoly& pj, const PoincarePoly& pj_twisted, long Na);

}  // namespace harmonia
