#pragma once

#include "harmonia/linalg.hpp"
#include "harmonia/poly.hpp"

#include <map>
#include <memory>

namespace harmonia {

using DenseMatrix = std::vector<std::vector<Rational>>;
template <class F>
using Dense = std::vector<std::vector<F>>;

template <class F>
Dense<F> dense_inverse(const Dense<F>& a) {
    const std::size_t n = a.size();
    Matrix<F> m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<F> row(a[i]);
        row.resize(2 * n, F(0));
        row[n + i] = F(1);
        m.add_dense_row(row);
    }
    Echelon<F> e = echelon(m);
    if (e.rank() != n || e.pivots.back() >= n) throw std::domain_error("dense_inverse: singular matrix");
    Dense<F> inv(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [c, v] : e.rows[i])
            if (c >= n) inv[e.pivots[i]][c - n] = v;
    return inv;
}

template <class F>
Dense<F> dense_mul(const Dense<F>& a, const Dense<F>& b) {
    Dense<F> r(a.size(), std::vector<F>(b.empty() ? 0 : b[0].size(), F(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

template <class F>
std::vector<F> dense_apply(const Dense<F>& a, const std::vector<F>& v) {
    std::vector<F> r(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
    return r;
}

template <class F>
Dense<F> dense_identity(std::size_t n) {
    Dense<F> r(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = F(1);
    return r;
}

/// Symmetric nondegenerate bilinear form ( , ) on V in working coordinates.
///
/// A vector xi has the linear form (xi, x) with coefficient vector G xi; a coordinate function x_j
/// therefore acts as the derivation sum_i (G^-1)_{ij} d_i.
template <class F>
struct BilinearForm {
    Dense<F> gram;
    Dense<F> gram_inv;

    static BilinearForm from_gram(Dense<F> g) {
        BilinearForm f;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (!(g[i][j] == g[j][i])) throw std::invalid_argument("BilinearForm: Gram matrix not symmetric");
        f.gram_inv = dense_inverse(g);
        f.gram = std::move(g);
        return f;
    }
    static BilinearForm standard(int n) { return from_gram(dense_identity<F>(static_cast<std::size_t>(n))); }

    int dim() const { return static_cast<int>(gram.size()); }
    F pair(const std::vector<F>& u, const std::vector<F>& v) const {
        F s(0);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!gram[i][j].is_zero()) s += u[i] * gram[i][j] * v[j];
        return s;
    }
    std::vector<F> covector(const std::vector<F>& xi) const { return dense_apply(gram, xi); }
    std::vector<F> vector_of(const std::vector<F>& form) const { return dense_apply(gram_inv, form); }
    Poly<F> linear_form(const std::vector<F>& xi) const { return Poly<F>::linear(covector(xi)); }

    /// p with each x_j replaced by its derivation, as a polynomial in the symbols d_i.
    Poly<F> as_operator(const Poly<F>& p) const {
        if (p.nvars() != dim()) throw std::invalid_argument("BilinearForm: variable count mismatch");
        std::vector<Poly<F>> images;
        for (int j = 0; j < dim(); ++j) {
            std::vector<F> c(static_cast<std::size_t>(dim()), F(0));
            for (int i = 0; i < dim(); ++i) c[i] = gram_inv[i][j];
            images.push_back(Poly<F>::linear(c));
        }
        return p.substitute(images);
    }
};

/// q -> op(d) q for an operator written in the symbols d_i.
template <class F>
Poly<F> apply_const_op(const Poly<F>& op, const Poly<F>& q) {
    if (op.nvars() != q.nvars()) throw std::invalid_argument("apply_const_op: variable count mismatch");
    Poly<F> r(q.nvars());
    for (const auto& [beta, c] : op.terms()) r += q.derivative_multi(beta) * c;
    return r;
}

/// p(d) q through the bilinear form.
template <class F>
Poly<F> apply_diffop(const Poly<F>& p, const Poly<F>& q, const BilinearForm<F>& form) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("apply_diffop: variable count mismatch");
    return apply_const_op(form.as_operator(p), q);
}

/// <p, q> = p(d) q at 0.
template <class F>
F pairing(const Poly<F>& p, const Poly<F>& q, const BilinearForm<F>& form) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("pairing: variable count mismatch");
    Poly<F> op = form.as_operator(p);
    F s(0);
    for (const auto& [beta, c] : op.terms()) {
        F qc = q.coeff(beta);
        if (!qc.is_zero()) s += c * qc * F(falling_factor(beta, beta));
    }
    return s;
}

/// Images of the coordinates under the linear map with matrix a: x_i -> sum_j a_ij x_j.
template <class F>
std::vector<Poly<F>> linear_images(const Dense<F>& a) {
    std::vector<Poly<F>> images;
    for (const auto& row : a) images.push_back(Poly<F>::linear(row));
    return images;
}

/// u o a, i.e. x -> u(a x).
template <class F>
Poly<F> compose_linear(const Poly<F>& u, const Dense<F>& a) {
    return u.substitute(linear_images(a));
}

/// (u(s x) - u(x)) / alpha(x); the division must be exact.
template <class F>
Poly<F> divided_difference(const Poly<F>& u, const Dense<F>& s, const Poly<F>& alpha) {
    Poly<F> diff = compose_linear(u, s) - u;
    auto q = divide_exact(diff, alpha);
    if (!q) throw std::invalid_argument("divided_difference: reflection and form are inconsistent");
    return *q;
}

/// Integral over t from lower to upper of sum_k coeffs[k] t^k.
template <class F>
Poly<F> integrate_t(const std::vector<Poly<F>>& coeffs, const Poly<F>& lower, const Poly<F>& upper) {
    Poly<F> r(lower.nvars());
    Poly<F> up = upper, lo = lower;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        // up, lo hold upper^{k+1}, lower^{k+1}
        if (!coeffs[k].is_zero()) r += coeffs[k] * (up - lo) * F(Rational(1, static_cast<long>(k + 1)));
        up = up * upper;
        lo = lo * lower;
    }
    return r;
}

// ---------------------------------------------------------------------------

/// Rational function num / prod_k forms[k]^poles[k].
template <class F>
struct RatValue {
    Poly<F> num;
    std::vector<int> poles;
    bool is_zero() const { return num.is_zero(); }
};

/// Differential operator sum_beta (C_beta / prod_k alpha_k^{e_beta,k}) d^beta with poles only on a
/// fixed list of hyperplane forms.  One term per derivative multi-index beta.
template <class F>
class RatDiffOp {
  public:
    using Forms = std::shared_ptr<const std::vector<Poly<F>>>;
    struct Term {
        Poly<F> num;
        std::vector<int> poles;
    };

    RatDiffOp() = default;
    RatDiffOp(Forms forms, int nvars) : forms_(std::move(forms)), n_(nvars) {}

    static RatDiffOp identity(Forms forms, int nvars) {
        RatDiffOp op(forms, nvars);
        op.terms_.emplace(Mono{0}, Term{Poly<F>::constant(nvars, F(1)), std::vector<int>(forms->size(), 0)});
        return op;
    }
    /// The derivation d_xi.
    static RatDiffOp derivation(Forms forms, const std::vector<F>& xi) {
        const int n = static_cast<int>(xi.size());
        RatDiffOp op(forms, n);
        for (int i = 0; i < n; ++i)
            if (!xi[i].is_zero())
                op.add_term(mono::unit(i), Term{Poly<F>::constant(n, xi[i]), std::vector<int>(forms->size(), 0)});
        return op;
    }

    int nvars() const { return n_; }
    const std::map<Mono, Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    RatDiffOp& operator+=(const RatDiffOp& o) {
        for (const auto& [beta, t] : o.terms_) add_term(beta, t);
        return *this;
    }
    RatDiffOp& operator-=(const RatDiffOp& o) { return *this += o * F(-1); }
    friend RatDiffOp operator+(RatDiffOp a, const RatDiffOp& b) { return a += b; }
    friend RatDiffOp operator-(RatDiffOp a, const RatDiffOp& b) { return a -= b; }
    friend RatDiffOp operator*(RatDiffOp a, const F& c) {
        if (c.is_zero()) {
            a.terms_.clear();
            return a;
        }
        for (auto& [beta, t] : a.terms_) t.num *= c;
        return a;
    }

    /// (1 / alpha_k) * this.
    RatDiffOp divided_by_form(std::size_t k) const {
        RatDiffOp r = *this;
        for (auto& [beta, t] : r.terms_) ++t.poles[k];
        return r;
    }

    /// d_xi o this.
    RatDiffOp compose_derivation(const std::vector<F>& xi) const {
        RatDiffOp r(forms_, n_);
        for (const auto& [beta, t] : terms_) {
            // derivative of the coefficient
            Poly<F> dc = t.num.derivative(xi);
            if (!dc.is_zero()) r.add_term(beta, Term{dc, t.poles});
            for (std::size_t k = 0; k < t.poles.size(); ++k) {
                if (t.poles[k] == 0) continue;
                F slope = (*forms_)[k].derivative(xi).coeff(0);
                if (slope.is_zero()) continue;
                Term u{t.num * (slope * F(static_cast<long>(-t.poles[k]))), t.poles};
                ++u.poles[k];
                r.add_term(beta, std::move(u));
            }
            // coefficient times d_xi d^beta
            for (int i = 0; i < n_; ++i)
                if (!xi[i].is_zero()) r.add_term(beta + mono::unit(i), Term{t.num * xi[i], t.poles});
        }
        return r;
    }

    /// Cancels hyperplane factors shared by numerators and denominators.
    void simplify() {
        for (auto& [beta, t] : terms_) reduce(t.num, t.poles);
    }

    /// Exact application to a polynomial, returned in lowest pole order.
    RatValue<F> apply(const Poly<F>& phi) const {
        auto [poles, coeffs] = common_form();
        Poly<F> num(n_);
        for (const auto& [beta, c] : coeffs) {
            Poly<F> d = phi.derivative_multi(beta);
            if (!d.is_zero()) num += c * d;
        }
        reduce(num, poles);
        return {std::move(num), std::move(poles)};
    }

    /// Common denominator form: poles E and numerators C'_beta with this = sum C'_beta / alpha^E d^beta.
    /// Hyperplane factors shared by every C'_beta are cancelled.
    std::pair<std::vector<int>, std::map<Mono, Poly<F>>> common_form() const {
        std::vector<int> e(forms_->size(), 0);
        for (const auto& [beta, t] : terms_)
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(e[k], t.poles[k]);
        std::map<Mono, Poly<F>> coeffs;
        for (const auto& [beta, t] : terms_) coeffs.emplace(beta, raise(t.num, t.poles, e));
        for (std::size_t k = 0; k < e.size(); ++k) {
            while (e[k] > 0) {
                std::map<Mono, Poly<F>> divided;
                bool ok = true;
                for (const auto& [beta, c] : coeffs) {
                    auto q = divide_exact(c, (*forms_)[k]);
                    if (!q) {
                        ok = false;
                        break;
                    }
                    divided.emplace(beta, std::move(*q));
                }
                if (!ok) break;
                coeffs = std::move(divided);
                --e[k];
            }
        }
        return {e, coeffs};
    }

    /// Order of the operator (largest |beta|).
    int order() const {
        int o = 0;
        for (const auto& [beta, t] : terms_) o = std::max(o, static_cast<int>(mono::degree(beta)));
        return o;
    }

  private:
    Poly<F> raise(const Poly<F>& num, const std::vector<int>& from, const std::vector<int>& to) const {
        Poly<F> r = num;
        for (std::size_t k = 0; k < from.size(); ++k)
            if (to[k] > from[k]) r = r * (*forms_)[k].pow(static_cast<unsigned>(to[k] - from[k]));
        return r;
    }

    void reduce(Poly<F>& num, std::vector<int>& poles) const {
        if (num.is_zero()) {
            std::fill(poles.begin(), poles.end(), 0);
            return;
        }
        for (std::size_t k = 0; k < poles.size(); ++k) {
            while (poles[k] > 0) {
                auto q = divide_exact(num, (*forms_)[k]);
                if (!q) break;
                num = std::move(*q);
                --poles[k];
            }
        }
    }

    void add_term(Mono beta, Term t) {
        if (t.num.is_zero()) return;
        auto it = terms_.find(beta);
        if (it == terms_.end()) {
            terms_.emplace(beta, std::move(t));
            return;
        }
        Term& cur = it->second;
        std::vector<int> e(cur.poles.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(cur.poles[k], t.poles[k]);
        Poly<F> sum = raise(cur.num, cur.poles, e) + raise(t.num, t.poles, e);
        if (sum.is_zero()) {
            terms_.erase(it);
            return;
        }
        cur.num = std::move(sum);
        cur.poles = std::move(e);
    }

    Forms forms_;
    int n_ = 0;
    std::map<Mono, Term> terms_;
};

}  // namespace harmonia
