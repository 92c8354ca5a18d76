#pragma once

#include "harmonia/coxeter.hpp"
#include "harmonia/graded.hpp"
#include "harmonia/reptheory.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace harmonia {

/// The direction family handed to the verifier does not span the invariants it must.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// D_{xi,d} in common-denominator form: sum_beta C'_beta d^beta / prod alpha^E.
template <class F>
struct CommonOp {
    std::vector<int> poles;
    std::vector<std::pair<Mono, Poly<F>>> coeffs;
    int degree_shift = 0;  // total pole order minus d: result degree = input degree + shift
    /// Numerator of the operator applied to phi.
    Poly<F> numerator(const Poly<F>& phi) const;
};

struct RankCheck {
    int degree = 0;
    std::size_t required = 0;  // dim S^d cap S^G
    std::size_t achieved = 0;  // rank of span {p_{xi,d}}
    bool ok() const { return achieved == required; }
};

struct Certificate {
    bool harmonic = false;
    int dmax = 0;
    std::vector<RankCheck> checks;
    std::vector<std::pair<std::size_t, int>> tested;    // (direction index, d)
    std::vector<std::pair<std::size_t, int>> failures;  // nonzero numerators
};

/// Dunkl operators of a group with a fixed multiplicity, with a memo of D^(d) operators.
/// Polynomials live in the work coordinates of the group.
template <class F>
class DunklContext {
  public:
    DunklContext(std::shared_ptr<const Group<F>> g, std::vector<long> m_per_class);

    const Group<F>& group() const { return *g_; }
    const std::vector<long>& m_per_class() const { return m_class_; }
    const std::vector<long>& m_per_root() const { return m_root_; }
    int nvars() const { return g_->work.dim; }
    const typename RatDiffOp<F>::Forms& forms() const { return forms_; }

    /// D_xi p = d_xi p + sum_alpha m_alpha (alpha, xi) (p(s_alpha x) - p(x)) / (alpha, x).
    Poly<F> dunkl_apply(const std::vector<F>& xi, const Poly<F>& p) const;
    /// D^(d)_xi.
    RatDiffOp<F> build_Dd(const std::vector<F>& xi, int d) const;
    /// D_{xi,d} = sum over the orbit of xi of D^(d), in common form.  (The sum over all of G is
    /// a fixed positive multiple, which does not change kernels.)
    const CommonOp<F>& Dxid(const std::vector<F>& xi, int d) const;
    RatValue<F> apply_Dxid(const std::vector<F>& xi, int d, const Poly<F>& phi) const;

    /// Orbit of a work-space vector.
    std::vector<std::vector<F>> orbit(const std::vector<F>& xi) const;
    /// p_{xi,d} = sum over the orbit of (eta, x)^d.
    Poly<F> orbit_power_sum(const std::vector<F>& xi, int d) const;

    /// Largest basic-invariant degree.
    int default_dmax() const;
    /// Candidate directions, greedily extended until every rank check passes up to dmax.
    std::vector<std::vector<F>> default_directions(int dmax) const;
    std::vector<RankCheck> rank_checks(const std::vector<std::vector<F>>& dirs, int dmax) const;
    /// (direction, d) pairs of a validated family, cheapest first.
    std::vector<std::pair<std::size_t, int>> family(const std::vector<std::vector<F>>& dirs, int dmax) const;

    Certificate verify_m_harmonic(const Poly<F>& phi, int dmax, const std::vector<std::vector<F>>& dirs) const;
    Certificate verify_m_harmonic(const Poly<F>& phi) const;
    /// Verifies an ambient polynomial: invariance along the fixed line, then the work certificate.
    Certificate verify_ambient(const Poly<F>& phi) const;

    /// Numerator of (Laplacian - sum 2 m_alpha / (alpha,x) d_alpha) phi after clearing prod alpha.
    Poly<F> L1_numerator(const Poly<F>& phi) const;

  private:
    struct OrbitMemo {
        std::vector<std::vector<F>> members;
        std::vector<std::vector<RatDiffOp<F>>> levels;  // levels[d][member]
    };
    OrbitMemo& memo_for(const std::vector<F>& xi, std::size_t& member) const;
    std::string key(const std::vector<F>& v) const;

    std::shared_ptr<const Group<F>> g_;
    std::vector<long> m_class_;
    std::vector<long> m_root_;
    typename RatDiffOp<F>::Forms forms_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::string, std::shared_ptr<OrbitMemo>> orbits_;
    mutable std::map<std::string, std::string> orbit_of_;  // direction key -> orbit key
    mutable std::map<std::pair<std::string, int>, std::shared_ptr<CommonOp<F>>> common_;
};

/// One element of a graded basis of H_m, in work coordinates.
template <class F>
struct GradedEntry {
    Poly<F> poly;
    int degree = 0;
    std::string provenance;  // "direct" or "kz"
    std::optional<int> filtration;
    std::string irrep;
};

template <class F>
struct GradedBasis {
    std::vector<GradedEntry<F>> entries;
    PoincarePoly poincare() const;
    /// Entries of one degree.
    std::vector<Poly<F>> of_degree(int e) const;
    int top_degree() const;
};

/// Joint kernel of the validated D_{xi,d} family, degree by degree.
template <class F>
GradedBasis<F> construct_Hm_direct(const DunklContext<F>& ctx);

/// Kernel of the stacked conditions on homogeneous polynomials of degree e.
template <class F>
std::vector<Poly<F>> joint_kernel(const DunklContext<F>& ctx, const std::vector<const CommonOp<F>*>& ops, int e);

}  // namespace harmonia
