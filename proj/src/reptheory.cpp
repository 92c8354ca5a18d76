#include "harmonia/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace harmonia {

// ---------------------------------------------------------------------------
// Partitions and hooks

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_label(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

HookData hooks_legs_arms(const Partition& lambda) {
    HookData h;
    int n = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        if (lambda[r] <= 0 || (r && lambda[r] > lambda[r - 1])) throw std::invalid_argument("invalid partition");
        n += lambda[r];
    }
    mpz_class prod = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c) {
            int arm = lambda[r] - c - 1;
            int leg = 0;
            for (std::size_t k = r + 1; k < lambda.size() && lambda[k] > c; ++k) ++leg;
            h.boxes.push_back({static_cast<int>(r), c, arm + leg + 1, leg, arm});
            prod *= arm + leg + 1;
        }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    h.dim = fact / prod;
    return h;
}

mpz_class sn_dimension(const Partition& lambda) { return hooks_legs_arms(lambda).dim; }

long character_sn(const Partition& lambda, const Partition& mu) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    if (n != std::accumulate(mu.begin(), mu.end(), 0)) throw std::invalid_argument("character_sn: size mismatch");
    // Beta numbers: removing a rim hook of length r moves one bead down by r.
    const int L = static_cast<int>(lambda.size());
    std::vector<int> beta;
    for (int i = 0; i < L; ++i) beta.push_back(lambda[static_cast<std::size_t>(i)] + L - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
    std::function<long(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& b, std::size_t k) -> long {
        if (k == mu.size()) return 1;
        auto key = std::make_pair(b, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const int r = mu[k];
        long total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            int target = b[i] - r;
            if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
            int between = 0;
            for (int x : b)
                if (x > target && x < b[i]) ++between;
            std::vector<int> nb = b;
            nb[i] = target;
            std::sort(nb.rbegin(), nb.rend());
            total += (between % 2 ? -1 : 1) * rec(nb, k + 1);
        }
        memo[key] = total;
        return total;
    };
    return rec(beta, 0);
}

// ---------------------------------------------------------------------------
// PoincarePoly

PoincarePoly PoincarePoly::monomial(int degree, long coeff) {
    std::vector<long> c(static_cast<std::size_t>(degree + 1), 0);
    c.back() = coeff;
    return PoincarePoly(std::move(c));
}

void PoincarePoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int PoincarePoly::low_degree() const {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) return static_cast<int>(i);
    return -1;
}

long PoincarePoly::value_at_one() const { return std::accumulate(c.begin(), c.end(), 0L); }

Rational PoincarePoly::log_derivative_at_one() const {
    long p1 = value_at_one();
    if (p1 == 0) throw std::domain_error("log derivative: P(1) = 0");
    long d = 0;
    for (std::size_t i = 1; i < c.size(); ++i) d += static_cast<long>(i) * c[i];
    return Rational(d, p1);
}

PoincarePoly PoincarePoly::reversed(int M) const {
    if (degree() > M) throw std::invalid_argument("reversed: degree exceeds M");
    std::vector<long> r(static_cast<std::size_t>(M + 1), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r[static_cast<std::size_t>(M) - i] = c[i];
    return PoincarePoly(std::move(r));
}

PoincarePoly PoincarePoly::shifted(int k) const {
    if (c.empty()) return *this;
    std::vector<long> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c.begin(), c.end());
    return PoincarePoly(std::move(r));
}

PoincarePoly& PoincarePoly::operator+=(const PoincarePoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    std::vector<long> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return PoincarePoly(std::move(r));
}

PoincarePoly operator*(long k, PoincarePoly a) {
    for (auto& x : a.c) x *= k;
    a.trim();
    return a;
}

std::string PoincarePoly::to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i]) continue;
        long v = c[i];
        if (!s.empty()) s += v < 0 ? " - " : " + ";
        else if (v < 0) s += "-";
        long a = v < 0 ? -v : v;
        if (i == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s;
}

namespace {

// Exact quotient of an integer polynomial by (1 - t^h).
std::vector<long> divide_one_minus(const std::vector<long>& num, int h) {
    const int D = static_cast<int>(num.size()) - 1;
    if (D < h) throw ConsistencyError("product formula: division is not exact");
    std::vector<long> q(static_cast<std::size_t>(D - h + 1), 0);
    auto qat = [&](int i) { return i >= 0 && i <= D - h ? q[static_cast<std::size_t>(i)] : 0L; };
    for (int i = 0; i <= D - h; ++i) q[static_cast<std::size_t>(i)] = num[static_cast<std::size_t>(i)] + qat(i - h);
    for (int i = D - h + 1; i <= D; ++i)
        if (num[static_cast<std::size_t>(i)] + qat(i - h) != 0) throw ConsistencyError("product formula: division is not exact");
    return q;
}

std::vector<long> product_one_minus(const std::vector<int>& exps) {
    std::vector<long> p{1};
    for (int k : exps) {
        std::vector<long> r(p.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i] += p[i];
            r[i + static_cast<std::size_t>(k)] -= p[i];
        }
        p = std::move(r);
    }
    return p;
}

}  // namespace

PoincarePoly classical_poincare(const std::vector<int>& degrees) {
    std::vector<long> p = product_one_minus(degrees);
    for (std::size_t k = 0; k < degrees.size(); ++k) p = divide_one_minus(p, 1);
    return PoincarePoly(std::move(p));
}

PoincarePoly kirillov_PH0(const Partition& lambda) {
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    auto hd = hooks_legs_arms(lambda);
    std::vector<int> ks(static_cast<std::size_t>(n));
    std::iota(ks.begin(), ks.end(), 1);
    std::vector<long> num = product_one_minus(ks);
    int legs = 0;
    for (const auto& b : hd.boxes) legs += b.leg;
    num.insert(num.begin(), static_cast<std::size_t>(legs), 0);
    for (const auto& b : hd.boxes) num = divide_one_minus(num, b.hook);
    return PoincarePoly(std::move(num));
}

// ---------------------------------------------------------------------------
// Character tables

std::size_t CharacterTable::find(const std::string& name) const {
    for (std::size_t j = 0; j < irreps.size(); ++j)
        if (irreps[j].name == name) return j;
    throw std::invalid_argument("unknown irrep label '" + name + "'");
}

std::size_t CharacterTable::tensor_linear(std::size_t j, const std::vector<Cyclo>& linear) const {
    std::vector<Cyclo> row;
    for (std::size_t c = 0; c < classes.size(); ++c) row.push_back(chi[j][c] * linear[c]);
    for (std::size_t k = 0; k < irreps.size(); ++k)
        if (chi[k] == row) return k;
    throw ConsistencyError("tensor product with a linear character is not irreducible");
}

std::vector<Cyclo> CharacterTable::linear_character(const std::vector<int>& s) const {
    if (s.size() != num_reflection_classes()) throw std::invalid_argument("linear_character: one sign per class");
    std::vector<Cyclo> out;
    for (const auto& cl : classes) {
        long v = 1;
        if (kind == GroupKind::A) {
            int n = param;
            v = ((n - static_cast<int>(cl.cycle_type.size())) % 2) ? s[0] : 1;
        } else if (cl.cycle_type[0] == -1) {
            int parity = cl.cycle_type[1];
            v = s[s.size() == 1 ? 0 : static_cast<std::size_t>(parity)];
        } else {
            // r^k = s_k s_0
            int k = cl.cycle_type[0];
            v = s[0] * s[s.size() == 1 ? 0 : static_cast<std::size_t>(k % 2)];
        }
        out.emplace_back(v);
    }
    return out;
}

std::size_t CharacterTable::sign_index() const {
    return tensor_linear(0, linear_character(std::vector<int>(num_reflection_classes(), -1)));
}

std::size_t CharacterTable::dual(std::size_t j) const {
    return tensor_linear(j, linear_character(std::vector<int>(num_reflection_classes(), -1)));
}

std::size_t CharacterTable::tensor_class(std::size_t j, std::size_t a) const {
    std::vector<int> s(num_reflection_classes(), 1);
    s.at(a) = -1;
    return tensor_linear(j, linear_character(s));
}

Rational CharacterTable::reflection_character(std::size_t j, std::size_t a) const {
    const Cyclo& v = chi[j][reflection_class.at(a)];
    if (!v.is_rational()) throw ConsistencyError("irrational character value at a reflection");
    return v.rational_part();
}

template <class F>
CharacterTable character_table(const Group<F>& g) {
    CharacterTable t;
    t.kind = g.kind;
    t.param = g.param;
    t.order = g.order;
    t.degrees = g.ambient.degrees;
    t.classes = g.classes;
    t.reflection_sizes = g.class_sizes;
    if (g.kind == GroupKind::A) {
        const int n = g.param;
        for (const auto& lambda : partitions(n)) {
            Irrep ir;
            ir.kind = IrrepKind::Partition;
            ir.partition = lambda;
            ir.dim = static_cast<int>(sn_dimension(lambda).get_si());
            ir.name = partition_label(lambda);
            std::vector<Cyclo> row;
            for (const auto& cl : g.classes) row.emplace_back(character_sn(lambda, cl.cycle_type));
            t.irreps.push_back(ir);
            t.chi.push_back(std::move(row));
        }
        Partition transposition(static_cast<std::size_t>(n - 1), 1);
        transposition[0] = 2;
        for (std::size_t c = 0; c < g.classes.size(); ++c)
            if (g.classes[c].cycle_type == transposition) t.reflection_class.push_back(c);
        return t;
    }

    const int N = g.param;
    const int K = 2 * N;
    auto add = [&](IrrepKind kind, int j, int dim, std::string name, auto value) {
        Irrep ir;
        ir.kind = kind;
        ir.j = j;
        ir.dim = dim;
        ir.name = std::move(name);
        std::vector<Cyclo> row;
        for (const auto& cl : g.classes) {
            bool refl = cl.cycle_type[0] == -1;
            int k = refl ? cl.cycle_type[1] : cl.cycle_type[0];
            row.push_back(value(refl, k));
        }
        t.irreps.push_back(ir);
        t.chi.push_back(std::move(row));
    };
    add(IrrepKind::Trivial, 0, 1, "triv", [](bool, int) { return Cyclo(1); });
    add(IrrepKind::Sign, 0, 1, "sign", [](bool refl, int) { return Cyclo(refl ? -1 : 1); });
    if (N % 2 == 0) {
        // plus: +1 on the class of s_0; minus: -1 there.
        add(IrrepKind::Plus, N / 2, 1, "plus", [](bool, int k) { return Cyclo(k % 2 ? -1 : 1); });
        add(IrrepKind::Minus, N / 2, 1, "minus",
            [](bool refl, int k) { return Cyclo(refl ? (k % 2 ? 1 : -1) : (k % 2 ? -1 : 1)); });
    }
    for (int j = 1; 2 * j < N; ++j)
        add(IrrepKind::TwoDim, j, 2, "two_dim(" + std::to_string(j) + ")", [j, K](bool refl, int k) {
            if (refl) return Cyclo(0);
            return Cyclo::root_of_unity(K, 2L * j * k) + Cyclo::root_of_unity(K, -2L * j * k);
        });
    for (std::size_t c = 0; c < g.classes.size(); ++c)
        if (g.classes[c].cycle_type[0] == -1) t.reflection_class.push_back(c);
    return t;
}

template CharacterTable character_table(const Group<Rational>&);
template CharacterTable character_table(const Group<Cyclo>&);

PoincarePoly dihedral_PH0(const Irrep& irrep, int N) {
    switch (irrep.kind) {
        case IrrepKind::Trivial: return PoincarePoly::monomial(0);
        case IrrepKind::Sign: return PoincarePoly::monomial(N);
        case IrrepKind::TwoDim: return PoincarePoly::monomial(irrep.j) + PoincarePoly::monomial(N - irrep.j);
        case IrrepKind::Plus:
        case IrrepKind::Minus: return PoincarePoly::monomial(N / 2);
        default: throw std::invalid_argument("dihedral_PH0: not a dihedral label");
    }
}

PoincarePoly poincare_H0(const CharacterTable& t, std::size_t j) {
    const Irrep& ir = t.irreps.at(j);
    if (t.kind == GroupKind::A) return kirillov_PH0(ir.partition);
    return dihedral_PH0(ir, t.param);
}

// ---------------------------------------------------------------------------
// Molien series

namespace {

using CPolyT = std::vector<Cyclo>;  // univariate, lowest degree first

Cyclo as_cyclo(const Rational& r) { return Cyclo(r); }
Cyclo as_cyclo(const Cyclo& c) { return c; }

CPolyT upoly_mul(const CPolyT& a, const CPolyT& b) {
    CPolyT r(a.size() + b.size() - 1, Cyclo(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient of a by b, where b(0) != 0.
CPolyT upoly_div(const CPolyT& a, CPolyT b) {
    while (b.size() > 1 && b.back().is_zero()) b.pop_back();
    if (a.size() < b.size()) throw ConsistencyError("Molien: inexact division");
    const std::size_t qn = a.size() - b.size() + 1;
    CPolyT q(qn, Cyclo(0));
    Cyclo inv0 = b[0].inverse();
    for (std::size_t i = 0; i < qn; ++i) {
        Cyclo s = a[i];
        for (std::size_t k = 1; k < b.size() && k <= i; ++k) s -= b[k] * q[i - k];
        q[i] = s * inv0;
    }
    for (std::size_t i = qn; i < a.size(); ++i) {
        Cyclo s = a[i];
        for (std::size_t k = 1; k < b.size() && k <= i; ++k)
            if (i - k < qn) s -= b[k] * q[i - k];
        if (!s.is_zero()) throw ConsistencyError("Molien: inexact division");
    }
    return q;
}

// det(1 - t A) by Faddeev-LeVerrier.
template <class F>
CPolyT det_one_minus(const Dense<F>& a) {
    const std::size_t n = a.size();
    Dense<F> m(n, std::vector<F>(n, F(0)));
    std::vector<F> c{F(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        Dense<F> am = dense_mul(a, m);
        for (std::size_t i = 0; i < n; ++i) am[i][i] += c.back();
        m = std::move(am);
        Dense<F> prod = dense_mul(a, m);
        F tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += prod[i][i];
        c.push_back(-tr * F(Rational(1, static_cast<long>(k))));
    }
    CPolyT out;
    for (const auto& x : c) out.push_back(as_cyclo(x));
    return out;
}

}  // namespace

template <class F>
MolienSeries molien_PS(const Group<F>& g, const CharacterTable& t, std::size_t j) {
    CPolyT D{Cyclo(1)};
    for (int d : g.ambient.degrees) {
        CPolyT f(static_cast<std::size_t>(d) + 1, Cyclo(0));
        f[0] = Cyclo(1);
        f.back() = Cyclo(-1);
        D = upoly_mul(D, f);
    }
    CPolyT sum(D.size(), Cyclo(0));
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        std::size_t rep = g.classes[c].representative;
        Cyclo chi_inv = t.chi[j][g.element_class[g.inverse(rep)]];
        CPolyT q = upoly_div(D, det_one_minus(g.ambient.elements[rep]));
        Cyclo w = chi_inv * Cyclo(static_cast<long>(g.classes[c].size));
        for (std::size_t i = 0; i < q.size(); ++i) sum[i] += w * q[i];
    }
    MolienSeries out;
    out.denominator_degrees = g.ambient.degrees;
    Cyclo inv_order = Cyclo(Rational(1, static_cast<long>(g.order)));
    for (auto& x : sum) {
        x *= inv_order;
        if (!x.is_rational()) throw ConsistencyError("Molien: non-rational coefficient");
        out.numerator.push_back(x.rational_part());
    }
    while (!out.numerator.empty() && out.numerator.back().is_zero()) out.numerator.pop_back();
    return out;
}

template MolienSeries molien_PS(const Group<Rational>&, const CharacterTable&, std::size_t);
template MolienSeries molien_PS(const Group<Cyclo>&, const CharacterTable&, std::size_t);

// ---------------------------------------------------------------------------
// Degree shifts and the Poincare engine

long d_minus(const CharacterTable& t, std::size_t j, std::size_t a) {
    const long dim = t.irreps.at(j).dim;
    Rational v = Rational(static_cast<long>(t.reflection_sizes.at(a))) * (Rational(dim) - t.reflection_character(j, a)) /
                 Rational(dim);
    if (v.den() != 1) throw ConsistencyError("d^- is not an integer");
    return v.num().get_si();
}

long d_plus(const CharacterTable& t, std::size_t j, std::size_t a) {
    return 2 * static_cast<long>(t.reflection_sizes.at(a)) - d_minus(t, j, a);
}

long d_minus_kirillov(const Partition& lambda) {
    const long n = std::accumulate(lambda.begin(), lambda.end(), 0L);
    long s = n * (n - 1) / 2;
    for (const auto& b : hooks_legs_arms(lambda).boxes) s += b.leg - b.arm;
    return s;
}

namespace {

void check_m(const CharacterTable& t, const std::vector<long>& m) {
    if (m.size() != t.num_reflection_classes())
        throw std::invalid_argument("multiplicity: expected " + std::to_string(t.num_reflection_classes()) + " values");
    for (long x : m)
        if (x < 0) throw std::invalid_argument("multiplicity must be nonnegative");
}

long shift(const CharacterTable& t, const std::vector<long>& m, std::size_t j) {
    long s = 0;
    for (std::size_t a = 0; a < m.size(); ++a) s += m[a] * d_minus(t, j, a);
    return s;
}

}  // namespace

std::size_t pi_m(const CharacterTable& t, const std::vector<long>& m, std::size_t j) {
    check_m(t, m);
    if (t.kind == GroupKind::A || t.param % 2 == 1 || t.irreps.at(j).dim != 2) return j;
    std::vector<int> s;
    for (long x : m) s.push_back(x % 2 ? -1 : 1);
    return t.tensor_linear(j, t.linear_character(s));
}

long top_degree(const CharacterTable& t, const std::vector<long>& m) {
    check_m(t, m);
    long M = 0;
    for (std::size_t a = 0; a < m.size(); ++a) M += static_cast<long>(t.reflection_sizes[a]) * (2 * m[a] + 1);
    return M;
}

PoincarePoly poincare_Hm(const CharacterTable& t, const std::vector<long>& m, std::size_t j) {
    check_m(t, m);
    return poincare_H0(t, pi_m(t, m, j)).shifted(static_cast<int>(shift(t, m, j)));
}

PoincarePoly poincare_Hm_total(const CharacterTable& t, const std::vector<long>& m) {
    check_m(t, m);
    const long M = top_degree(t, m);
    PoincarePoly total;
    for (std::size_t j = 0; j < t.irreps.size(); ++j)
        total += static_cast<long>(t.irreps[j].dim) * poincare_H0(t, j).shifted(static_cast<int>(shift(t, m, j)));
    if (total.value_at_one() != static_cast<long>(t.order)) throw ConsistencyError("P(H_m,1) != |G|");
    if (total.degree() != M) throw ConsistencyError("deg P(H_m,t) != M");
    if (!(total.reversed(static_cast<int>(M)) == total)) throw ConsistencyError("P(H_m,t) is not palindromic");
    for (std::size_t j = 0; j < t.irreps.size(); ++j)
        if (!(poincare_Hm(t, m, t.dual(j)) == poincare_Hm(t, m, j).reversed(static_cast<int>(M))))
            throw ConsistencyError("Poincare duality fails for " + t.irreps[j].name);
    return total;
}

Rational solomon_d(const PoincarePoly& p) { return Rational(2) * p.log_derivative_at_one(); }

Rational twisted_solomon_d(const PoincarePoly& pj, const PoincarePoly& pj_twisted, long Na) {
    return Rational(Na) + pj.log_derivative_at_one() - pj_twisted.log_derivative_at_one();
}

}  // namespace harmonia
