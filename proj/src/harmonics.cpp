#include "harmonia/harmonics.hpp"

#include <map>

namespace harmonia {

template <class F>
std::vector<std::vector<Poly<F>>> harmonic_basis(const Group<F>& g) {
    const auto& w = g.work;
    const int r = w.dim;
    const int N = static_cast<int>(w.roots.size());
    std::vector<Poly<F>> ops;
    for (const auto& s : w.sigma) ops.push_back(w.form.as_operator(s));
    const PoincarePoly expected = classical_poincare(w.degrees);

    std::vector<std::vector<Poly<F>>> out;
    for (int d = 0; d <= N; ++d) {
        MonomialBasis mb(r, static_cast<unsigned>(d));
        std::map<std::pair<std::size_t, Mono>, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, F>>> rows;
        for (std::size_t c = 0; c < mb.size(); ++c) {
            Poly<F> m = Poly<F>::monomial(r, mb.monos[c]);
            for (std::size_t i = 0; i < ops.size(); ++i) {
                if (w.degrees[i] > d) continue;
                const Poly<F> image = apply_const_op(ops[i], m);
                for (const auto& [mono, coef] : image.terms()) {
                    auto [it, fresh] = row_of.emplace(std::make_pair(i, mono), rows.size());
                    if (fresh) rows.emplace_back();
                    rows[it->second].emplace_back(c, coef);
                }
            }
        }
        Matrix<F> a(mb.size());
        for (auto& row : rows) a.add_row(std::move(row));
        std::vector<Poly<F>> level;
        for (const auto& v : nullspace(a)) level.push_back(mb.poly(v));
        if (static_cast<long>(level.size()) != expected.at(d))
            throw ConsistencyError("harmonic_basis: dimension of H_0 in degree " + std::to_string(d) +
                                   " disagrees with the product formula");
        out.push_back(std::move(level));
    }
    // The top degree is spanned by the discriminant.
    Poly<F> w0 = w.discriminant();
    for (const auto& op : ops)
        if (!apply_const_op(op, w0).is_zero()) throw ConsistencyError("harmonic_basis: w0 is not harmonic");
    out.back() = {w0};
    return out;
}

template <class F>
Harmonics<F>::Harmonics(std::shared_ptr<const Group<F>> g) : g_(std::move(g)) {
    const auto& w = g_->work;
    const int r = w.dim;
    top_ = static_cast<int>(w.roots.size());
    basis_ = harmonic_basis(*g_);
    offsets_.push_back(0);
    for (const auto& level : basis_) offsets_.push_back(offsets_.back() + level.size());
    if (offsets_.back() != g_->order) throw ConsistencyError("Harmonics: dim H_0 != |G|");

    for (int d = 0; d <= top_; ++d) {
        MonomialBasis mb(r, static_cast<unsigned>(d));
        // Basis of I(0) in degree d from sigma_i times monomials.
        Matrix<F> ideal(mb.size());
        for (std::size_t i = 0; i < w.sigma.size(); ++i) {
            if (w.degrees[i] > d) continue;
            for (Mono m : mono::of_degree(r, static_cast<unsigned>(d - w.degrees[i])))
                ideal.add_dense_row(mb.coords(w.sigma[i] * Poly<F>::monomial(r, m)));
        }
        Dense<F> full;
        for (const auto& h : basis(d)) full.push_back(mb.coords(h));
        const Echelon<F> ech = echelon(ideal);
        for (const auto& row : ech.rows) {
            Vec<F> v(mb.size(), F(0));
            for (const auto& [c, x] : row) v[c] = x;
            full.push_back(std::move(v));
        }
        if (full.size() != mb.size()) throw ConsistencyError("Harmonics: S^d != H^d + I^d");
        Dense<F> inv = dense_inverse(full);
        const std::size_t k = basis(d).size();
        Dense<F> proj(k, Vec<F>(mb.size(), F(0)));
        for (std::size_t m = 0; m < mb.size(); ++m)
            for (std::size_t b = 0; b < k; ++b) proj[b][m] = inv[m][b];
        projector_.push_back(std::move(proj));
        monos_.push_back(std::move(mb));
    }
}

template <class F>
int Harmonics<F>::degree_of(std::size_t flat) const {
    for (int d = 0; d <= top_; ++d)
        if (flat < offsets_[static_cast<std::size_t>(d) + 1]) return d;
    throw std::out_of_range("Harmonics: index out of range");
}

template <class F>
const Poly<F>& Harmonics<F>::element(std::size_t flat) const {
    int d = degree_of(flat);
    return basis(d)[flat - offset(d)];
}

template <class F>
PoincarePoly Harmonics<F>::poincare() const {
    std::vector<long> c;
    for (const auto& level : basis_) c.push_back(static_cast<long>(level.size()));
    return PoincarePoly(std::move(c));
}

template <class F>
Vec<F> Harmonics<F>::reduce(const Poly<F>& p, int d) const {
    if (d < 0 || d > top_) return {};
    const auto& mb = monos_[static_cast<std::size_t>(d)];
    return dense_apply(projector_[static_cast<std::size_t>(d)], mb.coords(p));
}

template <class F>
Vec<F> Harmonics<F>::reduce_full(const Poly<F>& p) const {
    Vec<F> out;
    out.reserve(total_dim());
    for (int d = 0; d <= top_; ++d) {
        auto v = reduce(p, d);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

template <class F>
Poly<F> Harmonics<F>::combine(const Vec<F>& v, int d) const {
    Poly<F> p(nvars());
    for (std::size_t b = 0; b < v.size(); ++b)
        if (!v[b].is_zero()) p += basis(d)[b] * v[b];
    return p;
}

template <class F>
Dense<F> Harmonics<F>::mult_by(const Poly<F>& linear, int d) const {
    Dense<F> m(dim(d + 1), Vec<F>(dim(d), F(0)));
    if (dim(d + 1) == 0) return m;
    for (std::size_t b = 0; b < dim(d); ++b) {
        auto col = reduce(linear * basis(d)[b], d + 1);
        for (std::size_t i = 0; i < col.size(); ++i) m[i][b] = col[i];
    }
    return m;
}

template <class F>
Dense<F> Harmonics<F>::pi_full(const std::vector<F>& xi) const {
    const Poly<F> l = g_->work.form.linear_form(xi);
    Dense<F> out(total_dim(), Vec<F>(total_dim(), F(0)));
    for (int d = 0; d < top_; ++d) {
        auto m = mult_by(l, d);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[i].size(); ++j) out[offset(d + 1) + i][offset(d) + j] = m[i][j];
    }
    return out;
}

template <class F>
Dense<F> Harmonics<F>::action(std::size_t g, int d) const {
    Dense<F> m(dim(d), Vec<F>(dim(d), F(0)));
    for (std::size_t b = 0; b < dim(d); ++b) {
        auto col = reduce(g_->work.act(g, basis(d)[b]), d);
        for (std::size_t i = 0; i < col.size(); ++i) m[i][b] = col[i];
    }
    return m;
}

template <class F>
Dense<F> Harmonics<F>::action_full(std::size_t g) const {
    Dense<F> out(total_dim(), Vec<F>(total_dim(), F(0)));
    for (int d = 0; d <= top_; ++d) {
        auto m = action(g, d);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[i].size(); ++j) out[offset(d) + i][offset(d) + j] = m[i][j];
    }
    return out;
}

template <class F>
F Harmonics<F>::mu(const Poly<F>& p) const {
    return pairing(p, w0(), g_->work.form);
}

template <class F>
F Harmonics<F>::form0(const Poly<F>& p, const Poly<F>& q) const {
    return pairing(p * q, w0(), g_->work.form);
}

template <class F>
Dense<F> Harmonics<F>::form0_gram() const {
    Dense<F> gm(total_dim(), Vec<F>(total_dim(), F(0)));
    for (std::size_t i = 0; i < total_dim(); ++i)
        for (std::size_t j = 0; j < total_dim(); ++j)
            if (degree_of(i) + degree_of(j) == top_) gm[i][j] = form0(element(i), element(j));
    return gm;
}

template std::vector<std::vector<Poly<Rational>>> harmonic_basis(const Group<Rational>&);
template std::vector<std::vector<Poly<Cyclo>>> harmonic_basis(const Group<Cyclo>&);
template class Harmonics<Rational>;
template class Harmonics<Cyclo>;

}  // namespace harmonia
