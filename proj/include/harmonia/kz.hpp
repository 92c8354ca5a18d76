#pragma once

#include "harmonia/dunkl.hpp"
#include "harmonia/harmonics.hpp"

namespace harmonia {

/// M-valued polynomial psi(x) = sum_b c_b(x) h_b, flattened over the harmonic basis of M.
template <class F>
struct ModulePoly {
    std::vector<Poly<F>> coeffs;
    int filtration = 0;  // lowest M-degree with a nonzero component
    int delta = 0;       // total degree: deg c_b = delta + deg h_b
};

struct PredictedDegree {
    std::size_t irrep = 0;
    std::string name;
    long multiplicity = 0;  // copies of V_j in M^d
    long degree = 0;        // x-degree of the lowest component
};

/// The KZ connection at lambda = 0 with values in M = S/I(0).  Reflections act on values only.
/// Every identity is evaluated after multiplying through by the product of root forms.
template <class F>
class KZSystem {
  public:
    KZSystem(std::shared_ptr<const Harmonics<F>> h, std::vector<long> m_per_class);

    const Harmonics<F>& harmonics() const { return *h_; }
    const Group<F>& group() const { return h_->group(); }
    const CharacterTable& table() const { return table_; }
    const std::vector<long>& m_per_class() const { return m_class_; }
    int nvars() const { return h_->nvars(); }
    int top() const { return h_->top(); }

    /// Basis of homogeneous M^d-valued solutions of degree k of the system without the pi term.
    std::vector<ModulePoly<F>> kz0_solve(int d, int k) const;
    /// Irreps occurring in M^d with their multiplicities and the predicted solution degree.
    std::vector<PredictedDegree> predicted_degrees(int d) const;
    /// Full solution whose lowest component is the given kz0 solution; canonical particular lifts.
    ModulePoly<F> lift(const ModulePoly<F>& low) const;
    /// phi = <psi(x), w0>.
    Poly<F> mc_map(const ModulePoly<F>& psi) const;

    /// Full KZ equations in every coordinate direction.
    bool is_solution(const ModulePoly<F>& psi) const;
    /// E psi = sum_alpha m_alpha (s_alpha + 1) psi.
    bool euler_identity(const ModulePoly<F>& psi) const;
    /// Numerator of nabla_i nabla_j psi - nabla_j nabla_i psi over (prod alpha)^2.
    std::vector<Poly<F>> curvature(int i, int j, const std::vector<Poly<F>>& psi) const;
    /// Character of the action psi -> g . psi(g^{-1} x) on the span of kz0 solutions, per class.
    std::vector<F> solution_character(int d, const std::vector<ModulePoly<F>>& sols) const;

  private:
    // Numerator over D^{p+1} of nabla_i applied to N / D^p; flattened M coordinates.
    std::vector<Poly<F>> nabla_numerator(int i, const std::vector<Poly<F>>& num, int p, bool with_pi) const;
    Matrix<F> kz0_matrix(int d, const MonomialBasis& in, const MonomialBasis& out) const;

    std::shared_ptr<const Harmonics<F>> h_;
    CharacterTable table_;
    std::vector<long> m_class_;
    std::vector<long> m_root_;
    Poly<F> disc_;                          // prod of root forms
    std::vector<Poly<F>> cofactor_;         // prod of the other root forms, per root
    std::vector<Dense<F>> refl_full_;       // s_alpha + 1 on M, per root
    std::vector<Dense<F>> pi_unit_;         // pi(e_i) on M
};

/// For each d, each predicted degree: kz0_solve, lift and mc_map.  When a reference basis is
/// given, the graded spans must agree.
template <class F>
GradedBasis<F> construct_Hm_kz(const KZSystem<F>& kz, const GradedBasis<F>* reference = nullptr);

/// Per-degree comparison of two graded bases: true when every degree has equal spans.
template <class F>
bool same_graded_span(const GradedBasis<F>& a, const GradedBasis<F>& b, int nvars);

}  // namespace harmonia
