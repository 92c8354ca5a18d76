#include "harmonia/linalg.hpp"

namespace harmonia {

ModEliminator::ModEliminator(std::uint64_t prime, std::size_t cols)
    : f_(prime), cols_(cols), pivot_of_col_(cols, -1) {}

bool ModEliminator::add_row(std::vector<std::uint64_t> row) {
    if (row.size() != cols_) throw std::invalid_argument("ModEliminator: width mismatch");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        long pr = pivot_of_col_[c];
        if (pr < 0) {
            std::uint64_t inv = f_.inv(row[c]);
            for (std::size_t k = c; k < cols_; ++k)
                if (row[k]) row[k] = f_.mul(row[k], inv);
            pivot_of_col_[c] = static_cast<long>(rows_.size());
            pivots_.push_back(c);
            rows_.push_back(std::move(row));
            return true;
        }
        const auto& p = rows_[static_cast<std::size_t>(pr)];
        std::uint64_t factor = row[c];
        for (std::size_t k = c; k < cols_; ++k)
            if (p[k]) row[k] = f_.sub(row[k], f_.mul(factor, p[k]));
    }
    return false;
}

ModEchelon ModEliminator::finish() && {
    // Sort pivots ascending and clear entries above each pivot.
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    ModEchelon e;
    e.prime = f_.prime();
    e.cols = cols_;
    for (auto i : order) {
        e.pivots.push_back(pivots_[i]);
        e.rows.push_back(std::move(rows_[i]));
    }
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        const std::size_t pc = e.pivots[i];
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t factor = e.rows[j][pc];
            if (!factor) continue;
            for (std::size_t k = pc; k < cols_; ++k)
                if (e.rows[i][k]) e.rows[j][k] = f_.sub(e.rows[j][k], f_.mul(factor, e.rows[i][k]));
        }
    }
    return e;
}

namespace {

std::vector<std::size_t> free_columns(const ModEchelon& e) {
    std::vector<bool> is_pivot(e.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < e.cols; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

// Canonical kernel residues, flattened: for each free column f, the pivot entries -row[f].
std::vector<std::uint64_t> kernel_residues(const ModEchelon& e, const std::vector<std::size_t>& frees) {
    PrimeField f(e.prime);
    std::vector<std::uint64_t> out;
    out.reserve(frees.size() * e.pivots.size());
    for (auto fc : frees)
        for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(f.neg(e.rows[i][fc]));
    return out;
}

std::vector<Vec<Rational>> assemble_kernel(const ModEchelon& e, const std::vector<std::size_t>& frees,
                                           const std::vector<Rational>& values) {
    std::vector<Vec<Rational>> basis;
    std::size_t idx = 0;
    for (auto fc : frees) {
        Vec<Rational> v(e.cols, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = values[idx++];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::optional<std::vector<Vec<Rational>>> modular_kernel(const ModularKernelProblem& problem) {
    CrtAccumulator crt;
    std::vector<std::size_t> best_pivots;
    bool have = false;
    std::optional<std::vector<Rational>> previous;
    for (std::size_t pi = 0; pi < problem.max_primes; ++pi) {
        std::uint64_t p = large_prime(pi);
        auto rows = problem.build(p);
        if (!rows) continue;
        ModEliminator elim(p, problem.cols);
        for (auto& r : *rows) {
            elim.add_row(std::move(r));
            if (elim.rank() == problem.cols) break;
        }
        ModEchelon e = std::move(elim).finish();
        if (have) {
            // Higher rank wins: a lower rank means p divides some minor.
            if (e.pivots.size() < best_pivots.size()) continue;
            if (e.pivots.size() > best_pivots.size() || e.pivots != best_pivots) {
                if (e.pivots.size() == best_pivots.size() && e.pivots > best_pivots) continue;
                crt = CrtAccumulator();
                previous.reset();
            }
        }
        best_pivots = e.pivots;
        have = true;
        auto frees = free_columns(e);
        if (frees.empty()) return std::vector<Vec<Rational>>{};
        crt.add(kernel_residues(e, frees), p);
        auto values = crt.reconstruct();
        if (!values) continue;
        // Exact verification only once the reconstruction has stabilised over one more prime.
        if (!previous || *previous != *values) {
            previous = std::move(values);
            continue;
        }
        auto basis = assemble_kernel(e, frees, *values);
        if (problem.verify(basis)) return basis;
    }
    return std::nullopt;
}

namespace {

// Row scaled to integers by the lcm of its denominators.
struct IntRow {
    std::vector<std::pair<std::size_t, mpz_class>> entries;
};

std::vector<IntRow> integer_rows(const Matrix<Rational>& a) {
    std::vector<IntRow> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        mpz_class l = 1;
        for (const auto& [c, v] : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den_mpz_t());
        for (const auto& [c, v] : a.row(r)) out[r].entries.emplace_back(c, v.num() * (l / v.den()));
    }
    return out;
}

std::vector<mpz_class> integer_vector(const Vec<Rational>& v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
    std::vector<mpz_class> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].num() * (l / v[i].den());
    return out;
}

bool annihilates(const std::vector<IntRow>& rows, const Vec<Rational>& v) {
    auto iv = integer_vector(v);
    mpz_class acc;
    for (const auto& row : rows) {
        acc = 0;
        for (const auto& [c, x] : row.entries)
            if (sgn(iv[c]) != 0) mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), iv[c].get_mpz_t());
        if (sgn(acc) != 0) return false;
    }
    return true;
}

std::optional<std::vector<std::vector<std::uint64_t>>> reduce_int_rows(const std::vector<IntRow>& rows,
                                                                       std::size_t cols, std::uint64_t p) {
    PrimeField f(p);
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<std::uint64_t> r(cols, 0);
        for (const auto& [c, x] : row.entries) r[c] = f.from_mpz(x);
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<std::vector<std::vector<std::uint64_t>>> reduce_rows(const Matrix<Rational>& a, std::uint64_t p,
                                                                   const Vec<Rational>* rhs) {
    PrimeField f(p);
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(a.rows());
    const std::size_t width = a.cols() + (rhs ? 1 : 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<std::uint64_t> row(width, 0);
        for (const auto& [c, v] : a.row(r)) {
            auto x = f.from_rational(v);
            if (!x) return std::nullopt;
            row[c] = *x;
        }
        if (rhs) {
            auto x = f.from_rational((*rhs)[r]);
            if (!x) return std::nullopt;
            row[a.cols()] = *x;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::vector<Vec<Rational>> nullspace_multimodular(const Matrix<Rational>& a) {
    // Scaling rows by integers changes neither the kernel nor, for primes not dividing the
    // scale, the kernel modulo p.
    const auto rows = integer_rows(a);
    ModularKernelProblem problem;
    problem.cols = a.cols();
    problem.build = [&](std::uint64_t p) { return reduce_int_rows(rows, a.cols(), p); };
    problem.verify = [&](const std::vector<Vec<Rational>>& basis) {
        for (const auto& v : basis)
            if (!annihilates(rows, v)) return false;
        return true;
    };
    if (auto k = modular_kernel(problem)) return *k;
    return nullspace_exact(a);
}

std::optional<Vec<Rational>> solve_multimodular(const Matrix<Rational>& a, const Vec<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    const std::size_t n = a.cols();
    CrtAccumulator crt;
    std::vector<std::size_t> best;
    bool have = false;
    for (std::size_t pi = 0; pi < 40; ++pi) {
        std::uint64_t p = large_prime(pi);
        auto rows = reduce_rows(a, p, &b);
        if (!rows) continue;
        ModEliminator elim(p, n + 1);
        for (auto& r : *rows) elim.add_row(std::move(r));
        ModEchelon e = std::move(elim).finish();
        if (!e.pivots.empty() && e.pivots.back() == n) break;  // looks inconsistent: decide exactly
        if (have) {
            if (e.pivots.size() < best.size()) continue;
            if (e.pivots != best) {
                if (e.pivots.size() == best.size() && e.pivots > best) continue;
                crt = CrtAccumulator();
            }
        }
        best = e.pivots;
        have = true;
        std::vector<std::uint64_t> res;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) res.push_back(e.rows[i][n]);
        crt.add(res, p);
        auto values = crt.reconstruct();
        if (!values) continue;
        Vec<Rational> x(n, Rational(0));
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = (*values)[i];
        if (a.apply(x) == b) return x;
    }
    return solve_exact(a, b);
}

}  // namespace harmonia
