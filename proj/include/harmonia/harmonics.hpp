#pragma once

#include "harmonia/coxeter.hpp"
#include "harmonia/graded.hpp"
#include "harmonia/reptheory.hpp"

#include <memory>

namespace harmonia {

/// Classical harmonics H_0 of a group, identified with M = S/I(0).
///
/// Everything is expressed in the work coordinates of the group; ambient helpers restrict
/// ambient polynomials first (restriction kills the invariant linear form, so it is compatible
/// with the quotient).  Elements of M are coordinate vectors in the harmonic basis, either per
/// degree or flattened over all degrees (degree 0 first).
template <class F>
class Harmonics {
  public:
    explicit Harmonics(std::shared_ptr<const Group<F>> g);

    const Group<F>& group() const { return *g_; }
    int nvars() const { return g_->work.dim; }
    /// Number of reflections = degree of w0.
    int top() const { return top_; }

    const std::vector<Poly<F>>& basis(int d) const { return basis_.at(static_cast<std::size_t>(d)); }
    std::size_t dim(int d) const { return d < 0 || d > top_ ? 0 : basis(d).size(); }
    std::size_t offset(int d) const { return offsets_.at(static_cast<std::size_t>(d)); }
    std::size_t total_dim() const { return offsets_.back(); }
    int degree_of(std::size_t flat_index) const;
    const Poly<F>& element(std::size_t flat_index) const;
    const Poly<F>& w0() const { return basis_.back().front(); }
    PoincarePoly poincare() const;

    /// Coordinates of the degree-d component of p modulo I(0).
    Vec<F> reduce(const Poly<F>& p, int d) const;
    /// Flattened coordinates of p modulo I(0).
    Vec<F> reduce_full(const Poly<F>& p) const;
    Vec<F> reduce_ambient(const Poly<F>& p) const { return reduce_full(g_->restrict(p)); }
    /// sum_b v_b h_b for degree d.
    Poly<F> combine(const Vec<F>& v, int d) const;

    /// Multiplication by a linear polynomial, M^d -> M^{d+1}; rows index M^{d+1}.
    Dense<F> mult_by(const Poly<F>& linear, int d) const;
    /// Multiplication by the linear form (xi, x) for a work-space vector xi, flattened |G| x |G|.
    Dense<F> pi_full(const std::vector<F>& xi) const;
    /// Action of group element g on M^d: v -> coordinates of (sum v_b h_b) o g^{-1}.
    Dense<F> action(std::size_t g, int d) const;
    /// Flattened action of g on all of M.
    Dense<F> action_full(std::size_t g) const;

    /// mu(p) = <p, w0>.
    F mu(const Poly<F>& p) const;
    /// (p, q)_0 = <p q, w0>.
    F form0(const Poly<F>& p, const Poly<F>& q) const;
    /// Gram matrix of ( , )_0 on the flattened harmonic basis.
    Dense<F> form0_gram() const;

  private:
    std::shared_ptr<const Group<F>> g_;
    int top_ = 0;
    std::vector<std::vector<Poly<F>>> basis_;
    std::vector<std::size_t> offsets_;
    std::vector<MonomialBasis> monos_;
    std::vector<Dense<F>> projector_;  // per degree: rows = harmonic coordinates, cols = monomials
};

/// Joint kernel of sigma_i(d), degree by degree, in the work coordinates of g.
/// The top degree is normalised to w0 = prod of root forms.
template <class F>
std::vector<std::vector<Poly<F>>> harmonic_basis(const Group<F>& g);

}  // namespace harmonia
