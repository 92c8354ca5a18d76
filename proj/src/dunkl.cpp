#include "harmonia/dunkl.hpp"

#include "harmonia/modular.hpp"

#include <algorithm>
#include <sstream>

namespace harmonia {

namespace {

std::string scalar_key(const Rational& r) { return r.to_string(); }
std::string scalar_key(const Cyclo& c) { return c.is_rational() ? c.rational_part().to_string() : c.to_string(); }

// Coefficient of t^d in prod_k 1/(1 - t^{d_k}).
std::vector<std::size_t> invariant_dims(const std::vector<int>& degrees, int dmax) {
    std::vector<std::size_t> c(static_cast<std::size_t>(dmax) + 1, 0);
    c[0] = 1;
    for (int dk : degrees)
        for (int d = dk; d <= dmax; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - dk)];
    return c;
}

template <class F>
std::size_t poly_rank(const std::vector<Poly<F>>& ps, int nvars, int d) {
    MonomialBasis mb(nvars, static_cast<unsigned>(d));
    Matrix<F> m(mb.size());
    for (const auto& p : ps) m.add_dense_row(mb.coords(p));
    return rank(m);
}

template <class F>
std::vector<std::vector<F>> candidate_directions(const Group<F>& g);

template <>
std::vector<std::vector<Rational>> candidate_directions(const Group<Rational>& g) {
    const int n = g.param;
    std::vector<std::vector<long>> amb;
    auto pad = [n](std::vector<long> v) {
        v.resize(static_cast<std::size_t>(n), 0);
        return v;
    };
    amb.push_back(pad({1}));
    amb.push_back(pad({1, 1}));
    amb.push_back(pad({1, 2}));
    amb.push_back(pad({1, 2, 3}));
    amb.push_back(pad({1, 2, 3, 4}));
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19};
    amb.push_back(pad(std::vector<long>(primes.begin(), primes.begin() + n)));
    std::vector<long> squares;
    for (int i = 0; i < n; ++i) squares.push_back((i + 1) * (i + 1));
    amb.push_back(squares);
    // Ambient vectors map to work coordinates by y_i = x_i - x_n.
    std::vector<std::vector<Rational>> out;
    for (const auto& v : amb) {
        std::vector<Rational> w;
        for (int i = 0; i + 1 < n; ++i) w.emplace_back(v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(n - 1)]);
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); })) continue;
        out.push_back(std::move(w));
    }
    return out;
}

template <>
std::vector<std::vector<Cyclo>> candidate_directions(const Group<Cyclo>&) {
    std::vector<std::vector<Cyclo>> out;
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {1, 5}})
        out.push_back({Cyclo(Rational(a)), Cyclo(Rational(b))});
    return out;
}

std::string describe(const std::vector<RankCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        if (!c.ok()) os << " degree " << c.degree << ": rank " << c.achieved << " of " << c.required << ";";
    return os.str();
}

}  // namespace

template <class F>
Poly<F> CommonOp<F>::numerator(const Poly<F>& phi) const {
    Poly<F> r(phi.nvars());
    for (const auto& [beta, c] : coeffs) {
        Poly<F> d = phi.derivative_multi(beta);
        if (!d.is_zero()) r += c * d;
    }
    return r;
}

template <class F>
DunklContext<F>::DunklContext(std::shared_ptr<const Group<F>> g, std::vector<long> m_per_class)
    : g_(std::move(g)), m_class_(std::move(m_per_class)) {
    m_root_ = g_->root_multiplicities(m_class_);
    forms_ = std::make_shared<const std::vector<Poly<F>>>(g_->work.root_forms);
}

template <class F>
std::string DunklContext<F>::key(const std::vector<F>& v) const {
    std::string k;
    for (const auto& x : v) k += scalar_key(x) + ",";
    return k;
}

template <class F>
Poly<F> DunklContext<F>::dunkl_apply(const std::vector<F>& xi, const Poly<F>& p) const {
    const auto& w = g_->work;
    Poly<F> r = p.derivative(xi);
    for (std::size_t k = 0; k < w.roots.size(); ++k) {
        if (m_root_[k] == 0) continue;
        F c = w.form.pair(w.roots[k], xi);
        if (c.is_zero()) continue;
        Poly<F> dd = divided_difference(p, w.elements[g_->reflection_element[k]], w.root_forms[k]);
        r += dd * (c * F(Rational(m_root_[k])));
    }
    return r;
}

template <class F>
std::vector<std::vector<F>> DunklContext<F>::orbit(const std::vector<F>& xi) const {
    std::vector<std::vector<F>> out;
    std::map<std::string, bool> seen;
    for (const auto& m : g_->work.elements) {
        auto v = dense_apply(m, xi);
        if (seen.emplace(key(v), true).second) out.push_back(std::move(v));
    }
    return out;
}

template <class F>
Poly<F> DunklContext<F>::orbit_power_sum(const std::vector<F>& xi, int d) const {
    Poly<F> r(nvars());
    for (const auto& eta : orbit(xi)) r += g_->work.form.linear_form(eta).pow(static_cast<unsigned>(d));
    return r;
}

template <class F>
typename DunklContext<F>::OrbitMemo& DunklContext<F>::memo_for(const std::vector<F>& xi, std::size_t& member) const {
    const std::string k = key(xi);
    auto it = orbit_of_.find(k);
    if (it == orbit_of_.end()) {
        auto memo = std::make_shared<OrbitMemo>();
        memo->members = orbit(xi);
        std::vector<RatDiffOp<F>> level0;
        for (std::size_t i = 0; i < memo->members.size(); ++i) level0.push_back(RatDiffOp<F>::identity(forms_, nvars()));
        memo->levels.push_back(std::move(level0));
        const std::string ok = key(memo->members.front());
        for (const auto& m : memo->members) orbit_of_[key(m)] = ok;
        orbits_[ok] = memo;
        it = orbit_of_.find(k);
    }
    OrbitMemo& memo = *orbits_.at(it->second);
    member = memo.members.size();
    for (std::size_t i = 0; i < memo.members.size(); ++i)
        if (key(memo.members[i]) == k) member = i;
    return memo;
}

template <class F>
RatDiffOp<F> DunklContext<F>::build_Dd(const std::vector<F>& xi, int d) const {
    if (d < 0) throw std::invalid_argument("build_Dd: negative order");
    std::lock_guard lock(mu_);
    std::size_t member = 0;
    OrbitMemo& memo = memo_for(xi, member);
    const auto& w = g_->work;
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < memo.members.size(); ++i) pos[key(memo.members[i])] = i;
    while (static_cast<int>(memo.levels.size()) <= d) {
        const auto& prev = memo.levels.back();
        std::vector<RatDiffOp<F>> next;
        for (std::size_t i = 0; i < memo.members.size(); ++i) {
            const auto& eta = memo.members[i];
            RatDiffOp<F> op = prev[i].compose_derivation(eta);
            for (std::size_t k = 0; k < w.roots.size(); ++k) {
                if (m_root_[k] == 0) continue;
                F c = w.form.pair(w.roots[k], eta);
                if (c.is_zero()) continue;
                std::size_t j = pos.at(key(dense_apply(w.elements[g_->reflection_element[k]], eta)));
                op += (prev[j] - prev[i]).divided_by_form(k) * (c * F(Rational(m_root_[k])));
            }
            op.simplify();
            next.push_back(std::move(op));
        }
        memo.levels.push_back(std::move(next));
    }
    return memo.levels[static_cast<std::size_t>(d)][member];
}

template <class F>
const CommonOp<F>& DunklContext<F>::Dxid(const std::vector<F>& xi, int d) const {
    std::lock_guard lock(mu_);
    std::size_t member = 0;
    memo_for(xi, member);
    const std::string ok = orbit_of_.at(key(xi));
    auto it = common_.find({ok, d});
    if (it != common_.end()) return *it->second;
    build_Dd(xi, d);
    const OrbitMemo& memo = *orbits_.at(ok);
    RatDiffOp<F> sum(forms_, nvars());
    for (const auto& op : memo.levels[static_cast<std::size_t>(d)]) sum += op;
    sum.simplify();
    auto [e, coeffs] = sum.common_form();
    auto c = std::make_shared<CommonOp<F>>();
    int total = 0;
    for (int x : e) total += x;
    c->poles = std::move(e);
    c->degree_shift = total - d;
    for (auto& [beta, p] : coeffs) c->coeffs.emplace_back(beta, std::move(p));
    return *common_.emplace(std::make_pair(ok, d), std::move(c)).first->second;
}

template <class F>
RatValue<F> DunklContext<F>::apply_Dxid(const std::vector<F>& xi, int d, const Poly<F>& phi) const {
    const CommonOp<F>& op = Dxid(xi, d);
    RatValue<F> v{op.numerator(phi), op.poles};
    if (v.num.is_zero()) {
        std::fill(v.poles.begin(), v.poles.end(), 0);
        return v;
    }
    for (std::size_t k = 0; k < v.poles.size(); ++k)
        while (v.poles[k] > 0) {
            auto q = divide_exact(v.num, (*forms_)[k]);
            if (!q) break;
            v.num = std::move(*q);
            --v.poles[k];
        }
    return v;
}

template <class F>
int DunklContext<F>::default_dmax() const {
    const auto& deg = g_->work.degrees;
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

template <class F>
std::vector<RankCheck> DunklContext<F>::rank_checks(const std::vector<std::vector<F>>& dirs, int dmax) const {
    auto dims = invariant_dims(g_->work.degrees, dmax);
    std::vector<RankCheck> out;
    for (int d = 1; d <= dmax; ++d) {
        RankCheck c;
        c.degree = d;
        c.required = dims[static_cast<std::size_t>(d)];
        if (c.required > 0) {
            std::vector<Poly<F>> ps;
            for (const auto& xi : dirs) ps.push_back(orbit_power_sum(xi, d));
            c.achieved = poly_rank(ps, nvars(), d);
        }
        out.push_back(c);
    }
    return out;
}

template <class F>
std::vector<std::vector<F>> DunklContext<F>::default_directions(int dmax) const {
    std::vector<std::vector<F>> dirs;
    auto score = [&](const std::vector<std::vector<F>>& ds) {
        std::size_t s = 0;
        for (const auto& c : rank_checks(ds, dmax)) s += c.achieved;
        return s;
    };
    auto all_ok = [&](const std::vector<std::vector<F>>& ds) {
        auto cs = rank_checks(ds, dmax);
        return std::all_of(cs.begin(), cs.end(), [](const RankCheck& c) { return c.ok(); });
    };
    std::size_t current = 0;
    for (const auto& cand : candidate_directions(*g_)) {
        if (all_ok(dirs)) break;
        auto trial = dirs;
        trial.push_back(cand);
        std::size_t s = score(trial);
        if (s > current) {
            dirs = std::move(trial);
            current = s;
        }
    }
    if (!all_ok(dirs))
        throw ConsistencyError("no candidate direction family spans the invariants:" + describe(rank_checks(dirs, dmax)));
    return dirs;
}

template <class F>
std::vector<std::pair<std::size_t, int>> DunklContext<F>::family(const std::vector<std::vector<F>>& dirs, int dmax) const {
    auto dims = invariant_dims(g_->work.degrees, dmax);
    std::vector<std::pair<std::size_t, int>> out;
    for (int d = 1; d <= dmax; ++d) {
        if (dims[static_cast<std::size_t>(d)] == 0) continue;
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (!orbit_power_sum(dirs[i], d).is_zero()) out.emplace_back(i, d);
    }
    return out;
}

template <class F>
Certificate DunklContext<F>::verify_m_harmonic(const Poly<F>& phi, int dmax, const std::vector<std::vector<F>>& dirs) const {
    if (phi.nvars() != nvars()) throw std::invalid_argument("verify_m_harmonic: polynomial is not in work coordinates");
    if (dmax < default_dmax())
        throw PreconditionError("verify_m_harmonic: dmax " + std::to_string(dmax) + " is below the largest invariant degree " +
                                std::to_string(default_dmax()));
    Certificate cert;
    cert.dmax = dmax;
    cert.checks = rank_checks(dirs, dmax);
    if (!std::all_of(cert.checks.begin(), cert.checks.end(), [](const RankCheck& c) { return c.ok(); }))
        throw PreconditionError("verify_m_harmonic: direction family does not span the invariants:" + describe(cert.checks));
    for (const auto& [i, d] : family(dirs, dmax)) {
        cert.tested.emplace_back(i, d);
        if (!Dxid(dirs[i], d).numerator(phi).is_zero()) cert.failures.emplace_back(i, d);
    }
    cert.harmonic = cert.failures.empty();
    return cert;
}

template <class F>
Certificate DunklContext<F>::verify_m_harmonic(const Poly<F>& phi) const {
    const int dmax = default_dmax();
    return verify_m_harmonic(phi, dmax, default_directions(dmax));
}

template <class F>
Certificate DunklContext<F>::verify_ambient(const Poly<F>& phi) const {
    const auto& g = *g_;
    if (phi.nvars() != g.ambient.dim) throw std::invalid_argument("verify_ambient: polynomial is not in ambient coordinates");
    if (g.ambient.dim == g.work.dim) return verify_m_harmonic(g.restrict(phi));
    // The degree-one invariant acts as the derivative along the fixed line.
    std::vector<F> ones(static_cast<std::size_t>(g.ambient.dim), F(1));
    bool fixed_ok = phi.derivative(ones).is_zero();
    Certificate cert = verify_m_harmonic(g.restrict(phi));
    if (!fixed_ok) {
        cert.failures.insert(cert.failures.begin(), {0, 1});
        cert.harmonic = false;
    }
    return cert;
}

template <class F>
Poly<F> DunklContext<F>::L1_numerator(const Poly<F>& phi) const {
    const auto& w = g_->work;
    const int n = nvars();
    Poly<F> q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const F& c = w.form.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!c.is_zero()) q += Poly<F>::variable(n, i) * Poly<F>::variable(n, j) * c;
        }
    Poly<F> disc = w.discriminant();
    Poly<F> r = apply_diffop(q, phi, w.form) * disc;
    for (std::size_t k = 0; k < w.roots.size(); ++k) {
        if (m_root_[k] == 0) continue;
        Poly<F> others = Poly<F>::constant(n, F(1));
        for (std::size_t l = 0; l < w.roots.size(); ++l)
            if (l != k) others = others * w.root_forms[l];
        r -= others * phi.derivative(w.roots[k]) * F(Rational(2 * m_root_[k]));
    }
    return r;
}

template <class F>
PoincarePoly GradedBasis<F>::poincare() const {
    std::vector<long> c;
    for (const auto& e : entries) {
        if (static_cast<int>(c.size()) <= e.degree) c.resize(static_cast<std::size_t>(e.degree) + 1, 0);
        ++c[static_cast<std::size_t>(e.degree)];
    }
    return PoincarePoly(std::move(c));
}

template <class F>
std::vector<Poly<F>> GradedBasis<F>::of_degree(int e) const {
    std::vector<Poly<F>> out;
    for (const auto& x : entries)
        if (x.degree == e) out.push_back(x.poly);
    return out;
}

template <class F>
int GradedBasis<F>::top_degree() const {
    int t = -1;
    for (const auto& e : entries) t = std::max(t, e.degree);
    return t;
}

namespace {

// Dense block of one operator on degree-e monomials: rows index result monomials.
template <class F>
void op_rows(const CommonOp<F>& op, const MonomialBasis& mb, int nvars, std::vector<std::vector<F>>& out) {
    const int rdeg = static_cast<int>(mb.degree) + op.degree_shift;
    if (rdeg < 0) return;
    MonomialBasis res(nvars, static_cast<unsigned>(rdeg));
    std::vector<std::vector<F>> block(res.size(), std::vector<F>(mb.size(), F(0)));
    for (std::size_t c = 0; c < mb.size(); ++c) {
        const Mono m = mb.monos[c];
        for (const auto& [beta, coeff] : op.coeffs) {
            if (!mono::divides(beta, m)) continue;
            F ff(falling_factor(m, beta));
            const Mono rest = m - beta;
            for (const auto& [mu, a] : coeff.terms()) block[res.index.at(mu + rest)][c] += a * ff;
        }
    }
    for (auto& row : block)
        if (std::any_of(row.begin(), row.end(), [](const F& x) { return !x.is_zero(); })) out.push_back(std::move(row));
}

template <class F>
std::vector<Poly<F>> exact_kernel(const std::vector<const CommonOp<F>*>& ops, const MonomialBasis& mb, int nvars) {
    std::vector<std::vector<F>> rows;
    for (const auto* op : ops) op_rows(*op, mb, nvars, rows);
    Matrix<F> m(mb.size());
    for (const auto& r : rows) m.add_dense_row(r);
    std::vector<Poly<F>> out;
    for (const auto& v : nullspace_exact(m)) out.push_back(mb.poly(v));
    return out;
}

std::vector<Poly<Rational>> modular_path(const std::vector<const CommonOp<Rational>*>& ops, const MonomialBasis& mb, int nvars) {
    // Precompute per-column structure once; only the coefficient reduction depends on the prime.
    struct Entry {
        std::size_t row;
        std::size_t col;
        const Rational* a;
        Rational ff;
    };
    struct Block {
        std::size_t rows = 0;
        std::vector<Entry> entries;
    };
    std::vector<Block> blocks;
    for (const auto* op : ops) {
        const int rdeg = static_cast<int>(mb.degree) + op->degree_shift;
        if (rdeg < 0) continue;
        MonomialBasis res(nvars, static_cast<unsigned>(rdeg));
        Block b;
        b.rows = res.size();
        for (std::size_t c = 0; c < mb.size(); ++c) {
            const Mono m = mb.monos[c];
            for (const auto& [beta, coeff] : op->coeffs) {
                if (!mono::divides(beta, m)) continue;
                Rational ff = falling_factor(m, beta);
                const Mono rest = m - beta;
                for (const auto& [mu, a] : coeff.terms()) b.entries.push_back({res.index.at(mu + rest), c, &a, ff});
            }
        }
        blocks.push_back(std::move(b));
    }

    ModularKernelProblem prob;
    prob.cols = mb.size();
    prob.build = [&](std::uint64_t p) -> std::optional<std::vector<std::vector<std::uint64_t>>> {
        PrimeField f(p);
        std::vector<std::vector<std::uint64_t>> rows;
        for (const auto& b : blocks) {
            std::vector<std::vector<std::uint64_t>> block(b.rows, std::vector<std::uint64_t>(mb.size(), 0));
            for (const auto& e : b.entries) {
                auto a = f.from_rational(*e.a);
                auto ff = f.from_rational(e.ff);
                if (!a || !ff) return std::nullopt;
                block[e.row][e.col] = f.add(block[e.row][e.col], f.mul(*a, *ff));
            }
            for (auto& r : block)
                if (std::any_of(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; })) rows.push_back(std::move(r));
        }
        return rows;
    };
    prob.verify = [&](const std::vector<Vec<Rational>>& cands) {
        for (const auto& v : cands) {
            // Clear denominators so the check runs over the integers.
            mpz_class l = 1;
            for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
            std::vector<mpz_class> iv;
            for (const auto& x : v) iv.push_back(x.num() * (l / x.den()));
            for (const auto& b : blocks) {
                // Entries may carry rational coefficients; scale each block by a common denominator.
                std::vector<Rational> acc(b.rows, Rational(0));
                for (const auto& e : b.entries)
                    if (iv[e.col] != 0) acc[e.row] += *e.a * e.ff * Rational(iv[e.col]);
                for (const auto& x : acc)
                    if (!x.is_zero()) return false;
            }
        }
        return true;
    };
    auto ker = modular_kernel(prob);
    if (!ker) {
        std::vector<const CommonOp<Rational>*> all(ops.begin(), ops.end());
        return exact_kernel(all, mb, nvars);
    }
    std::vector<Poly<Rational>> out;
    for (const auto& v : *ker) out.push_back(mb.poly(v));
    return out;
}

template <class F>
std::vector<Poly<F>> kernel_dispatch(const std::vector<const CommonOp<F>*>& ops, const MonomialBasis& mb, int nvars) {
    if constexpr (std::is_same_v<F, Rational>) {
        if (mb.size() > kMultimodularThreshold) return modular_path(ops, mb, nvars);
    }
    return exact_kernel(ops, mb, nvars);
}

}  // namespace

template <class F>
std::vector<Poly<F>> joint_kernel(const DunklContext<F>& ctx, const std::vector<const CommonOp<F>*>& ops, int e) {
    if (e < 0) return {};
    MonomialBasis mb(ctx.nvars(), static_cast<unsigned>(e));
    return kernel_dispatch(ops, mb, ctx.nvars());
}

template <class F>
GradedBasis<F> construct_Hm_direct(const DunklContext<F>& ctx) {
    const auto& g = ctx.group();
    const int dmax = ctx.default_dmax();
    auto dirs = ctx.default_directions(dmax);
    std::vector<const CommonOp<F>*> ops;
    for (const auto& [i, d] : ctx.family(dirs, dmax)) ops.push_back(&ctx.Dxid(dirs[i], d));
    long M = 0;
    for (long m : ctx.m_per_root()) M += 2 * m + 1;
    GradedBasis<F> out;
    for (int e = 0; e <= M; ++e)
        for (auto& p : joint_kernel(ctx, ops, e)) out.entries.push_back({std::move(p), e, "direct", std::nullopt, ""});
    if (out.entries.size() != g.order)
        throw ConsistencyError("construct_Hm_direct: found " + std::to_string(out.entries.size()) + " basis elements, expected " +
                               std::to_string(g.order));
    return out;
}

template struct CommonOp<Rational>;
template struct CommonOp<Cyclo>;
template class DunklContext<Rational>;
template class DunklContext<Cyclo>;
template struct GradedBasis<Rational>;
template struct GradedBasis<Cyclo>;
template GradedBasis<Rational> construct_Hm_direct(const DunklContext<Rational>&);
template GradedBasis<Cyclo> construct_Hm_direct(const DunklContext<Cyclo>&);
template std::vector<Poly<Rational>> joint_kernel(const DunklContext<Rational>&, const std::vector<const CommonOp<Rational>*>&, int);
template std::vector<Poly<Cyclo>> joint_kernel(const DunklContext<Cyclo>&, const std::vector<const CommonOp<Cyclo>*>&, int);

}  // namespace harmonia
