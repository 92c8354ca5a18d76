#pragma once

#include "harmonia/cyclotomic.hpp"
#include "harmonia/modular.hpp"
#include "harmonia/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmonia {

template <class F>
using SparseRow = std::vector<std::pair<std::size_t, F>>;  // sorted by column, no zeros

template <class F>
using Vec = std::vector<F>;

/// Exact matrix stored as sparse rows.  Entries share one field.
template <class F>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t cols) : cols_(cols) {}
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static Matrix from_dense(const std::vector<std::vector<F>>& dense);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Appends a row given as (column, value) pairs in any order; duplicates are summed.
    void add_row(std::vector<std::pair<std::size_t, F>> entries);
    void add_dense_row(const std::vector<F>& row);
    const SparseRow<F>& row(std::size_t i) const { return rows_[i]; }

    F at(std::size_t r, std::size_t c) const;
    std::vector<std::vector<F>> to_dense() const;
    Vec<F> apply(const Vec<F>& v) const;

  private:
    std::size_t cols_ = 0;
    std::vector<SparseRow<F>> rows_;
};

/// Reduced row echelon form over an exact field: pivot columns and fully reduced pivot rows.
template <class F>
struct Echelon {
    std::size_t cols = 0;
    std::vector<std::size_t> pivots;   // ascending
    std::vector<SparseRow<F>> rows;    // rows[i] has leading 1 at pivots[i]

    std::size_t rank() const { return pivots.size(); }
    /// Canonical kernel basis: one vector per free column, 1 there and 0 on other free columns.
    std::vector<Vec<F>> kernel() const;
};

template <class F>
Echelon<F> echelon(const Matrix<F>& a);

/// Basis of ker(A), canonical (RREF) and deterministic.  For Q, large matrices are handled by
/// a multimodular computation whose result is certified by exact substitution.
template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& a);

template <class F>
std::size_t rank(const Matrix<F>& a);

/// Canonical solution of A x = b (free variables set to 0), or nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b);

// Always-exact variants (plain elimination over F), used as oracles and for small systems.
template <class F>
std::vector<Vec<F>> nullspace_exact(const Matrix<F>& a);
template <class F>
std::optional<Vec<F>> solve_exact(const Matrix<F>& a, const Vec<F>& b);

// ---------------------------------------------------------------------------
// Modular machinery (Q only)

/// Dense RREF over Z/pZ.
struct ModEchelon {
    std::uint64_t prime = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint64_t>> rows;  // dense, fully reduced
};

/// Incremental modular eliminator: feed rows, read back the reduced echelon form.
class ModEliminator {
  public:
    ModEliminator(std::uint64_t prime, std::size_t cols);
    /// Returns true when the row increased the rank.
    bool add_row(std::vector<std::uint64_t> row);
    std::size_t rank() const { return pivots_.size(); }
    ModEchelon finish() &&;

  private:
    PrimeField f_;
    std::size_t cols_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<long> pivot_of_col_;
};

/// Kernel search by reduction modulo primes and rational reconstruction.
///
/// `build(prime)` returns the rows of a matrix whose kernel over Z/pZ contains the reduction of
/// the sought rational kernel (it may be the reduction of an exact matrix, or any relaxation of
/// it).  Candidates are reconstructed from the canonical RREF kernel and handed to `verify`,
/// which must check them exactly.  Because dim ker_p >= dim ker_Q, a verified candidate set of
/// dimension dim ker_p is exactly ker_Q.  Returns nullopt if no certified answer was found within
/// `max_primes`.
struct ModularKernelProblem {
    std::size_t cols = 0;
    std::function<std::optional<std::vector<std::vector<std::uint64_t>>>(std::uint64_t prime)> build;
    std::function<bool(const std::vector<Vec<Rational>>&)> verify;
    std::size_t max_primes = 40;
};
std::optional<std::vector<Vec<Rational>>> modular_kernel(const ModularKernelProblem& problem);

std::vector<Vec<Rational>> nullspace_multimodular(const Matrix<Rational>& a);
std::optional<Vec<Rational>> solve_multimodular(const Matrix<Rational>& a, const Vec<Rational>& b);

/// Columns above which Q-matrices use the multimodular path.
inline constexpr std::size_t kMultimodularThreshold = 48;

}  // namespace harmonia

#include "harmonia/linalg_impl.hpp"
