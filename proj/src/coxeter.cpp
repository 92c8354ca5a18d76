#include "harmonia/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

namespace harmonia {

template <class F>
std::size_t Group<F>::multiply(std::size_t a, std::size_t b) const {
    std::vector<int> key;
    if (kind == GroupKind::A) {
        const auto& pa = perms[a];
        const auto& pb = perms[b];
        key.resize(pa.size());
        for (std::size_t j = 0; j < pa.size(); ++j) key[j] = pa[static_cast<std::size_t>(pb[j])];
    } else {
        int ra = perms[a][0], ea = perms[a][1], rb = perms[b][0], eb = perms[b][1];
        int rot = ((ra + (ea ? -rb : rb)) % param + param) % param;
        key = {rot, (ea + eb) % 2};
    }
    return index_.at(key);
}

template <class F>
std::size_t Group<F>::inverse(std::size_t a) const {
    if (kind == GroupKind::A) {
        std::vector<int> inv(perms[a].size());
        for (std::size_t j = 0; j < inv.size(); ++j) inv[static_cast<std::size_t>(perms[a][j])] = static_cast<int>(j);
        return index_.at(inv);
    }
    int r = perms[a][0], e = perms[a][1];
    if (e) return a;
    return index_.at({(param - r) % param, 0});
}

template <class F>
std::vector<std::string> Group<F>::ambient_names() const {
    if (kind == GroupKind::I2) return {"z", "w"};
    return default_names(ambient.dim);
}

template <class F>
std::vector<std::string> Group<F>::work_names() const {
    if (kind == GroupKind::I2) return {"z", "w"};
    std::vector<std::string> names;
    for (int i = 0; i < work.dim; ++i) names.push_back("y" + std::to_string(i + 1));
    return names;
}

template <class F>
std::vector<long> Group<F>::root_multiplicities(const std::vector<long>& m) const {
    if (m.size() != num_reflection_classes())
        throw std::invalid_argument("multiplicity: expected one value per reflection class");
    std::vector<long> out;
    for (int c : root_class) out.push_back(m[static_cast<std::size_t>(c)]);
    return out;
}

template struct Group<Rational>;
template struct Group<Cyclo>;

namespace {

template <class F>
void fill_inverses(Realization<F>& r) {
    r.inverses.clear();
    for (const auto& g : r.elements) r.inverses.push_back(dense_inverse(g));
}

template <class F>
void fill_root_forms(Realization<F>& r) {
    r.root_forms.clear();
    for (const auto& a : r.roots) r.root_forms.push_back(r.form.linear_form(a));
}

std::vector<int> cycle_type(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string partition_name(const std::vector<int>& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "+" : "") + std::to_string(mu[i]);
    return s;
}

}  // namespace

Group<Rational> build_symmetric(int n) {
    if (n < 2) throw UnsupportedGroup("S_n requires n >= 2");
    if (n > kMaxVars) throw UnsupportedGroup("S_n supported for n <= 8");
    Group<Rational> g;
    g.name = "A" + std::to_string(n - 1);
    g.kind = GroupKind::A;
    g.param = n;
    g.field_order = 0;

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        g.index_[p] = g.perms.size();
        g.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    g.order = g.perms.size();

    auto& amb = g.ambient;
    amb.dim = n;
    amb.form = BilinearForm<Rational>::standard(n);
    for (const auto& perm : g.perms) {
        Dense<Rational> m(n, std::vector<Rational>(n, Rational(0)));
        for (int j = 0; j < n; ++j) m[perm[j]][j] = 1;
        amb.elements.push_back(std::move(m));
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        g.sign.push_back(inversions % 2 ? -1 : 1);
    }
    fill_inverses(amb);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> a(n, Rational(0));
            a[i] = 1;
            a[j] = -1;
            amb.roots.push_back(a);
            std::vector<int> t(static_cast<std::size_t>(n));
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[i], t[j]);
            g.reflection_element.push_back(g.index_.at(t));
            g.root_class.push_back(0);
        }
    fill_root_forms(amb);
    for (int k = 1; k <= n; ++k) {
        QPoly s(n);
        for (int i = 0; i < n; ++i) s += QPoly::monomial(n, mono::unit(i) * static_cast<Mono>(k));
        amb.sigma.push_back(s);
        amb.degrees.push_back(k);
    }
    g.class_sizes = {amb.roots.size()};
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> t(static_cast<std::size_t>(n));
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[i], t[i + 1]);
        g.generators.push_back(g.index_.at(t));
    }

    // Conjugacy classes by cycle type, identity first.
    std::map<std::vector<int>, std::size_t> by_type;
    for (const auto& perm : g.perms) by_type[cycle_type(perm)] = 0;
    for (auto& [mu, idx] : by_type) {
        idx = g.classes.size();
        g.classes.push_back({partition_name(mu), 0, 0, mu});
    }
    g.element_class.resize(g.order);
    for (std::size_t e = 0; e < g.order; ++e) {
        std::size_t c = by_type.at(cycle_type(g.perms[e]));
        g.element_class[e] = c;
        if (g.classes[c].size++ == 0) g.classes[c].representative = e;
    }

    // Essential realization: y_i = x_i - x_n on the sum-zero hyperplane.
    const int r = n - 1;
    Dense<Rational> B(r, std::vector<Rational>(n, Rational(0)));
    Dense<Rational> T(n, std::vector<Rational>(r, Rational(0)));
    for (int i = 0; i < r; ++i) {
        B[i][i] = 1;
        B[i][n - 1] = -1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < r; ++i) T[k][i] = Rational(k == i ? n - 1 : -1, n);
    Dense<Rational> Tt(r, std::vector<Rational>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < r; ++i) Tt[i][k] = T[k][i];

    auto& w = g.work;
    w.dim = r;
    w.form = BilinearForm<Rational>::from_gram(dense_mul(dense_mul(Tt, amb.form.gram), T));
    for (const auto& m : amb.elements) w.elements.push_back(dense_mul(dense_mul(B, m), T));
    fill_inverses(w);
    for (const auto& a : amb.roots) w.roots.push_back(dense_apply(B, a));
    fill_root_forms(w);

    for (int i = 0; i < r; ++i) g.to_ambient.push_back(QPoly::variable(n, i) - QPoly::variable(n, n - 1));
    for (int k = 0; k < n; ++k) g.to_work.push_back(QPoly::linear(T[k]));
    for (std::size_t k = 0; k < amb.sigma.size(); ++k) {
        QPoly s = g.restrict(amb.sigma[k]);
        if (s.is_constant()) continue;
        w.sigma.push_back(s);
        w.degrees.push_back(amb.degrees[k]);
    }
    return g;
}

Group<Cyclo> build_dihedral(int N) {
    if (N < 3) throw UnsupportedGroup("I2(N) requires N >= 3");
    Group<Cyclo> g;
    g.name = "I2(" + std::to_string(N) + ")";
    g.kind = GroupKind::I2;
    g.param = N;
    g.field_order = 2 * N;
    const int K = 2 * N;
    auto zeta = [K](long e) { return Cyclo::root_of_unity(K, e); };
    auto zetaN = [K](long e) { return Cyclo::root_of_unity(K, 2 * e); };

    auto& amb = g.ambient;
    amb.dim = 2;
    Dense<Cyclo> gram{{Cyclo(0), Cyclo::rational_in(K, Rational(1, 2))}, {Cyclo::rational_in(K, Rational(1, 2)), Cyclo(0)}};
    amb.form = BilinearForm<Cyclo>::from_gram(gram);
    for (int e = 0; e < 2; ++e)
        for (int a = 0; a < N; ++a) {
            g.index_[{a, e}] = g.perms.size();
            g.perms.push_back({a, e});
            Dense<Cyclo> m(2, std::vector<Cyclo>(2, Cyclo::rational_in(K, Rational(0))));
            if (e == 0) {
                m[0][0] = zetaN(a);
                m[1][1] = zetaN(-a);
            } else {
                m[0][1] = zetaN(a);
                m[1][0] = zetaN(-a);
            }
            amb.elements.push_back(std::move(m));
            g.sign.push_back(e ? -1 : 1);
        }
    g.order = g.perms.size();
    fill_inverses(amb);
    for (int j = 0; j < N; ++j) {
        std::vector<Cyclo> form{zeta(-j), -zeta(j)};
        amb.roots.push_back(amb.form.vector_of(form));
        g.reflection_element.push_back(g.index_.at({j, 1}));
        g.root_class.push_back(N % 2 == 0 ? j % 2 : 0);
    }
    fill_root_forms(amb);
    CPoly z = CPoly::variable(2, 0), w = CPoly::variable(2, 1);
    amb.sigma = {z * w, z.pow(static_cast<unsigned>(N)) + w.pow(static_cast<unsigned>(N))};
    amb.degrees = {2, N};
    if (N % 2 == 0)
        g.class_sizes = {static_cast<std::size_t>(N / 2), static_cast<std::size_t>(N / 2)};
    else
        g.class_sizes = {static_cast<std::size_t>(N)};
    g.generators = {g.index_.at({0, 1}), g.index_.at({1, 1})};

    // Classes: identity, rotation pairs, then reflections.
    g.element_class.assign(g.order, 0);
    g.classes.push_back({"e", 1, 0, {0}});
    for (int k = 1; k <= N / 2; ++k) {
        std::size_t c = g.classes.size();
        std::size_t size = (2 * k == N) ? 1 : 2;
        g.classes.push_back({"r^" + std::to_string(k), size, g.index_.at({k, 0}), {k}});
        g.element_class[g.index_.at({k, 0})] = c;
        g.element_class[g.index_.at({(N - k) % N, 0})] = c;
    }
    if (N % 2 == 1) {
        std::size_t c = g.classes.size();
        g.classes.push_back({"s", static_cast<std::size_t>(N), g.index_.at({0, 1}), {-1, 0}});
        for (int j = 0; j < N; ++j) g.element_class[g.index_.at({j, 1})] = c;
    } else {
        for (int parity = 0; parity < 2; ++parity) {
            std::size_t c = g.classes.size();
            g.classes.push_back({parity == 0 ? "s_even" : "s_odd", static_cast<std::size_t>(N / 2),
                                 g.index_.at({parity, 1}), {-1, parity}});
            for (int j = parity; j < N; j += 2) g.element_class[g.index_.at({j, 1})] = c;
        }
    }

    g.work = amb;
    g.to_ambient = {z, w};
    g.to_work = {z, w};
    return g;
}

GroupName parse_group_name(const std::string& raw) {
    std::string name;
    for (char c : raw)
        if (c != ' ') name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == "B2") return {GroupKind::I2, 4};
    if (name == "G2") return {GroupKind::I2, 6};
    std::smatch m;
    static const std::regex a_re("A([0-9]+)");
    static const std::regex i_re("I2\\(([0-9]+)\\)");
    if (std::regex_match(name, m, a_re)) {
        int k = std::stoi(m[1]);
        if (k < 1) throw UnsupportedGroup("A_k requires k >= 1");
        return {GroupKind::A, k + 1};
    }
    if (std::regex_match(name, m, i_re)) {
        int N = std::stoi(m[1]);
        if (N < 3) throw UnsupportedGroup("I2(N) requires N >= 3");
        return {GroupKind::I2, N};
    }
    throw UnsupportedGroup("unsupported group '" + raw + "' (supported: A<k>, I2(<N>), B2, G2)");
}

AnyGroup build_group(const std::string& name) {
    GroupName g = parse_group_name(name);
    if (g.kind == GroupKind::A) return build_symmetric(g.param);
    return build_dihedral(g.param);
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
bool vec_eq(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

template <class F>
bool mat_eq(const Dense<F>& a, const Dense<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!vec_eq(a[i], b[i])) return false;
    return true;
}

template <class F>
Dense<F> transpose(const Dense<F>& a) {
    Dense<F> t(a.empty() ? 0 : a[0].size(), std::vector<F>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

template <class F>
std::size_t point_rank(const std::vector<Poly<F>>& sigma, int dim, const std::vector<F>& point) {
    Matrix<F> jac(static_cast<std::size_t>(dim));
    for (const auto& s : sigma) {
        std::vector<F> row;
        for (int j = 0; j < dim; ++j) row.push_back(s.derivative(j).evaluate(point));
        jac.add_dense_row(row);
    }
    return echelon(jac).rank();
}

template <class F>
bool check_realization(const Group<F>& g, const Realization<F>& r, GroupCheck& out, bool full) {
    const std::size_t n = g.order;
    std::vector<std::size_t> left = g.generators;
    if (full) {
        left.resize(n);
        std::iota(left.begin(), left.end(), 0);
    }
    bool closure = mat_eq(r.elements[0], dense_identity<F>(static_cast<std::size_t>(r.dim)));
    for (auto a : left)
        for (std::size_t b = 0; b < n && closure; ++b)
            closure = mat_eq(dense_mul(r.elements[a], r.elements[b]), r.elements[g.multiply(a, b)]);
    out.closure = out.closure && closure;

    bool form_ok = true;
    for (auto a : g.generators)
        form_ok = form_ok && mat_eq(dense_mul(dense_mul(transpose(r.elements[a]), r.form.gram), r.elements[a]), r.form.gram);
    out.form_invariant = out.form_invariant && form_ok;

    bool refl = true;
    for (std::size_t k = 0; k < r.roots.size() && refl; ++k) {
        const auto& a = r.roots[k];
        const auto& s = r.elements[g.reflection_element[k]];
        F aa = r.form.pair(a, a);
        for (int i = 0; i < r.dim; ++i) {
            std::vector<F> v(static_cast<std::size_t>(r.dim), F(0));
            v[i] = F(1);
            F c = F(2) * r.form.pair(a, v) / aa;
            std::vector<F> expect = v;
            for (int j = 0; j < r.dim; ++j) expect[j] -= c * a[j];
            refl = refl && vec_eq(dense_apply(s, v), expect);
        }
        std::vector<F> neg = a;
        for (auto& x : neg) x = -x;
        refl = refl && vec_eq(dense_apply(s, a), neg);
    }
    out.reflections_ok = out.reflections_ok && refl;

    bool perm_ok = true;
    for (auto gen : g.generators)
        for (std::size_t k = 0; k < r.roots.size() && perm_ok; ++k) {
            auto img = dense_apply(r.elements[gen], r.roots[k]);
            bool found = false;
            for (std::size_t l = 0; l < r.roots.size() && !found; ++l) {
                if (g.root_class[l] != g.root_class[k]) continue;
                std::vector<F> neg = r.roots[l];
                for (auto& x : neg) x = -x;
                found = vec_eq(img, r.roots[l]) || vec_eq(img, neg);
            }
            perm_ok = found;
        }
    out.roots_permuted = out.roots_permuted && perm_ok;

    bool inv_ok = true;
    for (auto gen : g.generators)
        for (const auto& s : r.sigma) inv_ok = inv_ok && r.act(gen, s) == s;
    out.invariants_ok = out.invariants_ok && inv_ok;

    Poly<F> w = r.discriminant();
    bool skew = true;
    for (auto gen : g.generators) skew = skew && r.act(gen, w) == w * F(static_cast<long>(g.sign[gen]));
    out.discriminant_skew = out.discriminant_skew && skew;

    int needed = 0;
    for (int d : r.degrees) needed += d - 1;
    out.reflection_count = out.reflection_count && needed == static_cast<int>(r.roots.size());

    bool jac = false;
    for (int trial = 0; trial < 4 && !jac; ++trial) {
        std::vector<F> pt;
        for (int i = 0; i < r.dim; ++i) pt.push_back(F(static_cast<long>(2 + i * i + 3 * trial * (i + 1))));
        jac = point_rank(r.sigma, r.dim, pt) == static_cast<std::size_t>(r.dim) &&
              r.sigma.size() == static_cast<std::size_t>(r.dim);
    }
    out.jacobian_rank = out.jacobian_rank && jac;
    return out.all();
}

}  // namespace

template <class F>
GroupCheck check_group(const Group<F>& g) {
    GroupCheck c{true, true, true, true, true, true, true, true};
    const bool full = g.order <= 120;
    check_realization(g, g.ambient, c, full);
    check_realization(g, g.work, c, full);
    return c;
}

template GroupCheck check_group(const Group<Rational>&);
template GroupCheck check_group(const Group<Cyclo>&);

}  // namespace harmonia
