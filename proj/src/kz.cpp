#include "harmonia/kz.hpp"

#include <algorithm>
#include <map>

namespace harmonia {

namespace {

template <class F>
std::vector<Poly<F>> apply_matrix(const Dense<F>& a, const std::vector<Poly<F>>& v, int nvars) {
    std::vector<Poly<F>> r(a.size(), Poly<F>(nvars));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += v[j] * a[i][j];
    return r;
}

template <class F>
bool all_zero(const std::vector<Poly<F>>& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly<F>& p) { return p.is_zero(); });
}

// Shifts every monomial of p by mu and scatters c * coefficient into a row map.
template <class F>
void scatter(std::map<std::size_t, std::vector<std::pair<std::size_t, F>>>& rows, std::size_t row_base,
             const MonomialBasis& out, const Poly<F>& p, Mono shift, const F& c, std::size_t col) {
    for (const auto& [m, a] : p.terms()) rows[row_base + out.index.at(m + shift)].emplace_back(col, a * c);
}

}  // namespace

template <class F>
KZSystem<F>::KZSystem(std::shared_ptr<const Harmonics<F>> h, std::vector<long> m_per_class)
    : h_(std::move(h)), table_(character_table(h_->group())), m_class_(std::move(m_per_class)) {
    const auto& g = h_->group();
    const auto& w = g.work;
    m_root_ = g.root_multiplicities(m_class_);
    disc_ = w.discriminant();
    const std::size_t R = w.roots.size();
    for (std::size_t a = 0; a < R; ++a) {
        Poly<F> c = Poly<F>::constant(nvars(), F(1));
        for (std::size_t b = 0; b < R; ++b)
            if (b != a) c = c * w.root_forms[b];
        cofactor_.push_back(std::move(c));
        Dense<F> s = h_->action_full(g.reflection_element[a]);
        for (std::size_t i = 0; i < s.size(); ++i) s[i][i] += F(1);
        refl_full_.push_back(std::move(s));
    }
    for (int i = 0; i < nvars(); ++i) {
        std::vector<F> e(static_cast<std::size_t>(nvars()), F(0));
        e[static_cast<std::size_t>(i)] = F(1);
        pi_unit_.push_back(h_->pi_full(e));
    }
}

template <class F>
Matrix<F> KZSystem<F>::kz0_matrix(int d, const MonomialBasis& in, const MonomialBasis& out) const {
    const auto& w = group().work;
    const std::size_t dim = h_->dim(d), off = h_->offset(d);
    const std::size_t nin = in.size(), nout = out.size();
    std::map<std::size_t, std::vector<std::pair<std::size_t, F>>> rows;
    for (int i = 0; i < nvars(); ++i) {
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t u = 0; u < nin; ++u) {
                const std::size_t col = b * nin + u;
                const Mono mu = in.monos[u];
                // prod alpha * d_i x^mu
                const unsigned e = mono::exp(mu, i);
                if (e > 0)
                    scatter(rows, (static_cast<std::size_t>(i) * dim + b) * nout, out, disc_, mu - mono::unit(i),
                            F(static_cast<long>(e)), col);
                // - sum m (alpha, e_i) prod_{beta != alpha} beta (s_alpha + 1) x^mu
                for (std::size_t a = 0; a < w.roots.size(); ++a) {
                    if (m_root_[a] == 0) continue;
                    F c = w.root_forms[a].coeff(mono::unit(i));
                    if (c.is_zero()) continue;
                    c = c * F(Rational(-m_root_[a]));
                    for (std::size_t bp = 0; bp < dim; ++bp) {
                        const F& s = refl_full_[a][off + bp][off + b];
                        if (s.is_zero()) continue;
                        scatter(rows, (static_cast<std::size_t>(i) * dim + bp) * nout, out, cofactor_[a], mu, c * s, col);
                    }
                }
            }
    }
    Matrix<F> m(dim * nin);
    const std::size_t nrows = static_cast<std::size_t>(nvars()) * dim * nout;
    for (std::size_t r = 0; r < nrows; ++r) {
        auto it = rows.find(r);
        m.add_row(it == rows.end() ? std::vector<std::pair<std::size_t, F>>{} : std::move(it->second));
    }
    return m;
}

template <class F>
std::vector<ModulePoly<F>> KZSystem<F>::kz0_solve(int d, int k) const {
    if (d < 0 || d > top()) throw std::invalid_argument("kz0_solve: M-degree out of range");
    if (k < 0) return {};
    const int R = static_cast<int>(group().work.roots.size());
    MonomialBasis in(nvars(), static_cast<unsigned>(k));
    MonomialBasis out(nvars(), static_cast<unsigned>(k - 1 + R));
    Matrix<F> m = kz0_matrix(d, in, out);
    const std::size_t dim = h_->dim(d), off = h_->offset(d);
    std::vector<ModulePoly<F>> sols;
    for (const auto& v : nullspace(m)) {
        ModulePoly<F> psi;
        psi.coeffs.assign(h_->total_dim(), Poly<F>(nvars()));
        for (std::size_t b = 0; b < dim; ++b)
            psi.coeffs[off + b] = in.poly(Vec<F>(v.begin() + static_cast<long>(b * in.size()),
                                                 v.begin() + static_cast<long>((b + 1) * in.size())));
        psi.filtration = d;
        psi.delta = k - d;
        sols.push_back(std::move(psi));
    }
    return sols;
}

template <class F>
std::vector<PredictedDegree> KZSystem<F>::predicted_degrees(int d) const {
    std::vector<PredictedDegree> out;
    for (std::size_t j = 0; j < table_.irreps.size(); ++j) {
        long mult = poincare_H0(table_, j).at(d);
        if (mult == 0) continue;
        long deg = 0;
        for (std::size_t a = 0; a < table_.num_reflection_classes(); ++a) deg += m_class_[a] * d_plus(table_, j, a);
        out.push_back({j, table_.irreps[j].name, mult, deg});
    }
    return out;
}

template <class F>
ModulePoly<F> KZSystem<F>::lift(const ModulePoly<F>& low) const {
    ModulePoly<F> psi = low;
    const int R = static_cast<int>(group().work.roots.size());
    int k = low.delta + low.filtration;  // x-degree of the current component
    for (int e = low.filtration + 1; e <= top(); ++e) {
        ++k;
        MonomialBasis in(nvars(), static_cast<unsigned>(k));
        MonomialBasis out(nvars(), static_cast<unsigned>(k - 1 + R));
        Matrix<F> m = kz0_matrix(e, in, out);
        const std::size_t dim = h_->dim(e), off = h_->offset(e);
        Vec<F> rhs(m.rows(), F(0));
        for (int i = 0; i < nvars(); ++i) {
            auto pi = apply_matrix(pi_unit_[static_cast<std::size_t>(i)], psi.coeffs, nvars());
            for (std::size_t b = 0; b < dim; ++b) {
                Poly<F> t = disc_ * pi[off + b];
                for (const auto& [mon, c] : t.terms())
                    rhs[(static_cast<std::size_t>(i) * dim + b) * out.size() + out.index.at(mon)] = c;
            }
        }
        auto x = solve(m, rhs);
        if (!x) throw ConsistencyError("lift: the system at M-degree " + std::to_string(e) + " is inconsistent");
        for (std::size_t b = 0; b < dim; ++b)
            psi.coeffs[off + b] = in.poly(Vec<F>(x->begin() + static_cast<long>(b * in.size()),
                                                 x->begin() + static_cast<long>((b + 1) * in.size())));
    }
    return psi;
}

template <class F>
Poly<F> KZSystem<F>::mc_map(const ModulePoly<F>& psi) const {
    Poly<F> phi(nvars());
    const int N = top();
    for (std::size_t b = 0; b < h_->dim(N); ++b) {
        const std::size_t f = h_->offset(N) + b;
        if (psi.coeffs[f].is_zero()) continue;
        phi += psi.coeffs[f] * h_->mu(h_->element(f));
    }
    return phi;
}

template <class F>
std::vector<Poly<F>> KZSystem<F>::nabla_numerator(int i, const std::vector<Poly<F>>& num, int p, bool with_pi) const {
    const auto& w = group().work;
    const std::size_t n = num.size();
    std::vector<Poly<F>> r(n, Poly<F>(nvars()));
    Poly<F> dD = disc_.derivative(i);
    for (std::size_t b = 0; b < n; ++b) {
        if (num[b].is_zero()) continue;
        r[b] += disc_ * num[b].derivative(i);
        if (p != 0) r[b] -= dD * num[b] * F(static_cast<long>(p));
    }
    for (std::size_t a = 0; a < w.roots.size(); ++a) {
        if (m_root_[a] == 0) continue;
        F c = w.root_forms[a].coeff(mono::unit(i));
        if (c.is_zero()) continue;
        auto s = apply_matrix(refl_full_[a], num, nvars());
        for (std::size_t b = 0; b < n; ++b)
            if (!s[b].is_zero()) r[b] -= cofactor_[a] * s[b] * (c * F(Rational(m_root_[a])));
    }
    if (with_pi) {
        auto s = apply_matrix(pi_unit_[static_cast<std::size_t>(i)], num, nvars());
        for (std::size_t b = 0; b < n; ++b)
            if (!s[b].is_zero()) r[b] -= disc_ * s[b];
    }
    return r;
}

template <class F>
bool KZSystem<F>::is_solution(const ModulePoly<F>& psi) const {
    for (int i = 0; i < nvars(); ++i)
        if (!all_zero(nabla_numerator(i, psi.coeffs, 0, true))) return false;
    return true;
}

template <class F>
bool KZSystem<F>::euler_identity(const ModulePoly<F>& psi) const {
    const auto& w = group().work;
    std::vector<Poly<F>> rhs(psi.coeffs.size(), Poly<F>(nvars()));
    for (std::size_t a = 0; a < w.roots.size(); ++a) {
        if (m_root_[a] == 0) continue;
        auto s = apply_matrix(refl_full_[a], psi.coeffs, nvars());
        for (std::size_t b = 0; b < s.size(); ++b) rhs[b] += s[b] * F(Rational(m_root_[a]));
    }
    for (std::size_t b = 0; b < psi.coeffs.size(); ++b) {
        Poly<F> e(nvars());
        for (int i = 0; i < nvars(); ++i) e += Poly<F>::variable(nvars(), i) * psi.coeffs[b].derivative(i);
        if (!(e == rhs[b])) return false;
    }
    return true;
}

template <class F>
std::vector<Poly<F>> KZSystem<F>::curvature(int i, int j, const std::vector<Poly<F>>& psi) const {
    auto a = nabla_numerator(j, nabla_numerator(i, psi, 0, true), 1, true);
    auto b = nabla_numerator(i, nabla_numerator(j, psi, 0, true), 1, true);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

template <class F>
std::vector<F> KZSystem<F>::solution_character(int d, const std::vector<ModulePoly<F>>& sols) const {
    const auto& g = group();
    if (sols.empty()) return std::vector<F>(g.classes.size(), F(0));
    const int k = sols.front().delta + d;
    MonomialBasis mb(nvars(), static_cast<unsigned>(k));
    const std::size_t dim = h_->dim(d), off = h_->offset(d);
    auto flatten = [&](const std::vector<Poly<F>>& c) {
        Vec<F> v;
        for (std::size_t b = 0; b < dim; ++b) {
            Vec<F> x = mb.coords(c[off + b]);
            v.insert(v.end(), x.begin(), x.end());
        }
        return v;
    };
    std::vector<Vec<F>> cols;
    for (const auto& s : sols) cols.push_back(flatten(s.coeffs));
    Matrix<F> basis(sols.size());
    for (std::size_t r = 0; r < cols.front().size(); ++r) {
        std::vector<F> row;
        for (const auto& c : cols) row.push_back(c[r]);
        basis.add_dense_row(row);
    }
    std::vector<F> chi;
    for (const auto& cls : g.classes) {
        const std::size_t e = cls.representative;
        Dense<F> act = h_->action_full(e);
        F tr(0);
        for (std::size_t s = 0; s < sols.size(); ++s) {
            std::vector<Poly<F>> moved;
            for (const auto& c : sols[s].coeffs) moved.push_back(g.work.act(e, c));
            auto x = solve(basis, flatten(apply_matrix(act, moved, nvars())));
            if (!x) throw ConsistencyError("solution_character: solution space is not G-stable");
            tr += (*x)[s];
        }
        chi.push_back(tr);
    }
    return chi;
}

template <class F>
bool same_graded_span(const GradedBasis<F>& a, const GradedBasis<F>& b, int nvars) {
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int e = 0; e <= top; ++e) {
        auto pa = a.of_degree(e), pb = b.of_degree(e);
        if (pa.size() != pb.size()) return false;
        if (pa.empty()) continue;
        MonomialBasis mb(nvars, static_cast<unsigned>(e));
        Matrix<F> ma(mb.size()), mab(mb.size());
        for (const auto& p : pa) {
            ma.add_dense_row(mb.coords(p));
            mab.add_dense_row(mb.coords(p));
        }
        for (const auto& p : pb) mab.add_dense_row(mb.coords(p));
        const std::size_t r = rank(ma);
        if (r != pa.size() || rank(mab) != r) return false;
    }
    return true;
}

template <class F>
GradedBasis<F> construct_Hm_kz(const KZSystem<F>& kz, const GradedBasis<F>* reference) {
    const int N = kz.top();
    const auto& t = kz.table();
    GradedBasis<F> out;
    for (int d = 0; d <= N; ++d) {
        std::map<long, std::vector<PredictedDegree>> by_degree;
        for (const auto& p : kz.predicted_degrees(d)) by_degree[p.degree].push_back(p);
        for (const auto& [k, preds] : by_degree) {
            long expected = 0;
            std::string label;
            for (const auto& p : preds) {
                expected += p.multiplicity * t.irreps[p.irrep].dim;
                if (!label.empty()) label += ",";
                label += p.name;
            }
            auto sols = kz.kz0_solve(d, static_cast<int>(k));
            if (static_cast<long>(sols.size()) != expected)
                throw ConsistencyError("construct_Hm_kz: " + std::to_string(sols.size()) + " solutions at M-degree " +
                                       std::to_string(d) + ", x-degree " + std::to_string(k) + "; expected " +
                                       std::to_string(expected));
            for (const auto& s : sols) {
                ModulePoly<F> full = kz.lift(s);
                Poly<F> phi = kz.mc_map(full);
                const int deg = full.delta + N;
                if (phi.is_zero() || !phi.is_homogeneous() || phi.degree() != deg)
                    throw ConsistencyError("construct_Hm_kz: Matsuo-Cherednik image has the wrong shape");
                out.entries.push_back({std::move(phi), deg, "kz", d, label});
            }
        }
    }
    if (out.entries.size() != kz.group().order)
        throw ConsistencyError("construct_Hm_kz: found " + std::to_string(out.entries.size()) + " polynomials, expected " +
                               std::to_string(kz.group().order));
    if (reference && !same_graded_span(out, *reference, kz.nvars()))
        throw ConsistencyError("construct_Hm_kz: graded span differs from the reference basis");
    return out;
}

template class KZSystem<Rational>;
template class KZSystem<Cyclo>;
template GradedBasis<Rational> construct_Hm_kz(const KZSystem<Rational>&, const GradedBasis<Rational>*);
template GradedBasis<Cyclo> construct_Hm_kz(const KZSystem<Cyclo>&, const GradedBasis<Cyclo>*);
template bool same_graded_span(const GradedBasis<Rational>&, const GradedBasis<Rational>&, int);
template bool same_graded_span(const GradedBasis<Cyclo>&, const GradedBasis<Cyclo>&, int);

}  // namespace harmonia
