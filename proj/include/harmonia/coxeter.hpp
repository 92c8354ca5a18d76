#pragma once

#include "harmonia/diffops.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace harmonia {

class UnsupportedGroup : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A linear realization of the group: coordinates, form, element matrices, roots and invariants.
template <class F>
struct Realization {
    int dim = 0;
    BilinearForm<F> form;
    std::vector<Dense<F>> elements;       // action on coordinate vectors
    std::vector<Dense<F>> inverses;
    std::vector<std::vector<F>> roots;    // one root vector per reflection
    std::vector<Poly<F>> root_forms;      // x -> (alpha, x)
    std::vector<Poly<F>> sigma;           // basic invariants of positive degree
    std::vector<int> degrees;             // their degrees

    /// p o g^{-1}.
    Poly<F> act(std::size_t g, const Poly<F>& p) const { return compose_linear(p, inverses[g]); }
    /// Product of all root forms (w0 up to normalisation).
    Poly<F> discriminant() const {
        Poly<F> w = Poly<F>::constant(dim, F(1));
        for (const auto& a : root_forms) w = w * a;
        return w;
    }
};

enum class GroupKind { A, I2 };

/// Conjugacy class of group elements.
struct ElementClass {
    std::string name;
    std::size_t size = 0;
    std::size_t representative = 0;
    std::vector<int> cycle_type;  // S_n: partition; dihedral: {k} for rotation r^k, {-1,parity} for reflections
};

/// Enumerated finite Coxeter group.
///
/// `ambient` is the defining realization (S_n on C^n, dihedral on C^2).  `work` is the essential
/// one used for computation: for S_n the quotient by the fixed line, with coordinates
/// y_i = x_i - x_n.  Functions on `work` are pulled back by `to_ambient`; ambient functions are
/// restricted by `to_work`.  Element indices agree between the two.
template <class F>
struct Group {
    std::string name;
    GroupKind kind = GroupKind::A;
    int param = 0;         // n for S_n, N for I2(N)
    int field_order = 0;   // 0 for Q, 2N for dihedral
    std::size_t order = 0;

    Realization<F> ambient;
    Realization<F> work;
    std::vector<Poly<F>> to_ambient;  // work coordinate i as an ambient polynomial
    std::vector<Poly<F>> to_work;     // ambient coordinate j restricted to the work space

    std::vector<std::vector<int>> perms;  // S_n: permutation of {0..n-1}; dihedral: {rotation, reflection bit}
    std::vector<int> sign;                // det(g)
    std::vector<std::size_t> reflection_element;  // per root
    std::vector<int> root_class;                   // per root, reflection class id
    std::vector<std::size_t> class_sizes;          // N_a per reflection class
    std::vector<std::size_t> element_class;        // per element, index into classes
    std::vector<ElementClass> classes;
    std::vector<std::size_t> generators;

    std::size_t num_reflections() const { return work.roots.size(); }
    std::size_t num_reflection_classes() const { return class_sizes.size(); }
    std::size_t identity() const { return 0; }
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    /// Ambient realization helpers.
    Poly<F> pull_back(const Poly<F>& p) const { return p.substitute(to_ambient); }
    Poly<F> restrict(const Poly<F>& p) const { return p.substitute(to_work); }
    std::vector<std::string> ambient_names() const;
    std::vector<std::string> work_names() const;

    /// Multiplicity per root from a per-class vector.
    std::vector<long> root_multiplicities(const std::vector<long>& m) const;

  private:
    friend Group<Rational> build_symmetric(int n);
    friend Group<Cyclo> build_dihedral(int N);
    std::map<std::vector<int>, std::size_t> index_;
};

using AnyGroup = std::variant<Group<Rational>, Group<Cyclo>>;

/// S_n acting on C^n (Coxeter type A_{n-1}).
Group<Rational> build_symmetric(int n);
/// Dihedral group of order 2N in complex coordinates (z, w).
Group<Cyclo> build_dihedral(int N);

/// Parses A<k>, I2(<N>), B2, G2; throws UnsupportedGroup otherwise.
AnyGroup build_group(const std::string& name);

struct GroupName {
    GroupKind kind;
    int param;  // n for S_n (= k + 1), N for I2(N)
};
GroupName parse_group_name(const std::string& name);

/// Result of the structural self-checks on a group.
struct GroupCheck {
    bool closure = false;
    bool form_invariant = false;
    bool reflections_ok = false;
    bool roots_permuted = false;
    bool invariants_ok = false;
    bool discriminant_skew = false;
    bool reflection_count = false;
    bool jacobian_rank = false;
    bool all() const {
        return closure && form_invariant && reflections_ok && roots_permuted && invariants_ok && discriminant_skew &&
               reflection_count && jacobian_rank;
    }
};

template <class F>
GroupCheck check_group(const Group<F>& g);

/// p o g^{-1} in the ambient realization.
template <class F>
Poly<F> reflection_action(const Group<F>& g, std::size_t element, const Poly<F>& p) {
    return g.ambient.act(element, p);
}

}  // namespace harmonia
