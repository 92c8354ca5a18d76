#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/harmonics.hpp"

#include <random>

using namespace harmonia;

namespace {

template <class F>
F trace(const Dense<F>& m) {
    F s(0);
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i][i];
    return s;
}

template <class F>
bool is_zero_matrix(const Dense<F>& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

QPoly random_qpoly(std::mt19937_64& rng, int n, unsigned d) {
    std::uniform_int_distribution<long> c(-3, 3);
    QPoly p(n);
    for (Mono m : mono::of_degree(n, d)) p += QPoly::monomial(n, m, Rational(c(rng)));
    return p;
}

template <class F>
void check_structure(const Harmonics<F>& h) {
    const auto& g = h.group();
    CHECK(h.total_dim() == g.order);
    CHECK(h.poincare() == classical_poincare(g.work.degrees));
    // harmonic in the ambient coordinates, with ambient operators
    for (int d = 0; d <= h.top(); ++d)
        for (const auto& b : h.basis(d)) {
            Poly<F> amb = g.pull_back(b);
            for (const auto& s : g.ambient.sigma) CHECK(apply_diffop(s, amb, g.ambient.form).is_zero());
        }
    // nondegenerate (,)_0
    auto gram = h.form0_gram();
    CHECK(rank(Matrix<F>::from_dense(gram)) == h.total_dim());
    // representation and regular character
    for (std::size_t a : g.generators)
        for (std::size_t b = 0; b < g.order; b += 1 + g.order / 7)
            CHECK(dense_mul(h.action_full(a), h.action_full(b)) == h.action_full(g.multiply(a, b)));
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        F tr = trace(h.action_full(g.classes[c].representative));
        CHECK(tr == F(c == 0 ? static_cast<long>(g.order) : 0L));
    }
    // commuting multiplication maps
    std::vector<Dense<F>> pis;
    for (int i = 0; i < h.nvars(); ++i) {
        std::vector<F> e(static_cast<std::size_t>(h.nvars()), F(0));
        e[static_cast<std::size_t>(i)] = F(1);
        pis.push_back(h.pi_full(e));
    }
    for (const auto& p : pis)
        for (const auto& q : pis) CHECK(dense_mul(p, q) == dense_mul(q, p));
    // mu vanishes below the top degree
    for (int d = 0; d < h.top(); ++d)
        for (const auto& b : h.basis(d)) CHECK(h.mu(b).is_zero());
    CHECK(!h.mu(h.w0()).is_zero());
}

}  // namespace

TEST_CASE("S2 harmonics") {
    auto g = std::make_shared<const Group<Rational>>(build_symmetric(2));
    Harmonics<Rational> h(g);
    CHECK(h.poincare() == PoincarePoly({1, 1}));
    QPoly x1 = QPoly::variable(2, 0), x2 = QPoly::variable(2, 1);
    CHECK(g->pull_back(h.basis(0)[0]) == QPoly::constant(2, 1));
    CHECK(g->pull_back(h.w0()) == x1 - x2);
    CHECK(h.mu(QPoly::constant(1, 1)).is_zero());
    CHECK(h.mu(h.w0()) == Rational(2));
    CHECK(h.reduce_ambient(x1) == Vec<Rational>{Rational(0), Rational(1, 2)});
    auto pi = h.mult_by(g->restrict(x1), 0);
    CHECK(pi == Dense<Rational>{{Rational(1, 2)}});
    CHECK(h.mult_by(g->restrict(x1), 1).empty());
    CHECK(h.form0_gram() == Dense<Rational>{{Rational(0), Rational(2)}, {Rational(2), Rational(0)}});
    check_structure(h);
}

TEST_CASE("S3 harmonics") {
    auto g = std::make_shared<const Group<Rational>>(build_symmetric(3));
    Harmonics<Rational> h(g);
    CHECK(h.poincare() == PoincarePoly({1, 2, 2, 1}));
    QPoly x1 = QPoly::variable(3, 0), x2 = QPoly::variable(3, 1), x3 = QPoly::variable(3, 2);
    CHECK(g->pull_back(h.w0()) == (x1 - x2) * (x1 - x3) * (x2 - x3));
    check_structure(h);
}

TEST_CASE("reduction modulo I(0)") {
    std::mt19937_64 rng(3);
    for (int n : {2, 3, 4}) {
        auto g = std::make_shared<const Group<Rational>>(build_symmetric(n));
        Harmonics<Rational> h(g);
        const int r = n - 1;
        for (int d = 0; d <= h.top(); ++d) {
            // harmonic elements reduce to unit vectors
            for (std::size_t b = 0; b < h.dim(d); ++b) {
                Vec<Rational> e(h.dim(d), Rational(0));
                e[b] = 1;
                CHECK(h.reduce(h.basis(d)[b], d) == e);
            }
        }
        for (int trial = 0; trial < 4; ++trial) {
            unsigned d = 1 + static_cast<unsigned>(trial) % static_cast<unsigned>(h.top());
            QPoly q = random_qpoly(rng, r, d - 1 < 1 ? 0 : d - 1);
            for (const auto& s : g->work.sigma) {
                auto v = h.reduce_full(s * q);
                for (const auto& x : v) CHECK(x.is_zero());
            }
            // p - combine(reduce p) lies in I(0): its reduction is zero, and equivariance holds
            QPoly p = random_qpoly(rng, r, d);
            auto v = h.reduce(p, static_cast<int>(d));
            CHECK(h.reduce(p - h.combine(v, static_cast<int>(d)), static_cast<int>(d)) ==
                  Vec<Rational>(v.size(), Rational(0)));
            for (std::size_t k : g->generators)
                CHECK(h.reduce(g->work.act(k, p), static_cast<int>(d)) == dense_apply(h.action(k, static_cast<int>(d)), v));
        }
        check_structure(h);
    }
}

TEST_CASE("dihedral harmonics") {
    for (int N = 3; N <= 8; ++N) {
        auto g = std::make_shared<const Group<Cyclo>>(build_dihedral(N));
        Harmonics<Cyclo> h(g);
        check_structure(h);
        // pi maps the top degree to zero
        CHECK(h.mult_by(CPoly::variable(2, 0), h.top()).empty());
    }
}
