#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/dunkl.hpp"

#include <chrono>
#include <random>

using namespace harmonia;

namespace {

QPoly random_qpoly(std::mt19937_64& rng, int n, unsigned d) {
    std::uniform_int_distribution<long> c(-3, 3);
    QPoly p(n);
    for (Mono m : mono::of_degree(n, d)) p += QPoly::monomial(n, m, Rational(c(rng)));
    return p;
}

// Ambient Dunkl operator for S_n written out with transpositions, independent of the group tables.
QPoly ambient_dunkl(const std::vector<Rational>& v, const QPoly& p, long m) {
    const int n = p.nvars();
    QPoly r = p.derivative(v);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational c = v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            std::vector<QPoly> images;
            for (int k = 0; k < n; ++k) images.push_back(QPoly::variable(n, k == i ? j : k == j ? i : k));
            QPoly diff = p.substitute(images) - p;
            QPoly a = QPoly::variable(n, i) - QPoly::variable(n, j);
            r += *divide_exact(diff, a) * (c * Rational(m));
        }
    return r;
}

std::vector<Rational> to_work(const std::vector<Rational>& v) {
    std::vector<Rational> w;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) w.push_back(v[i] - v.back());
    return w;
}

template <class F>
std::shared_ptr<const Group<F>> share(Group<F> g) {
    return std::make_shared<const Group<F>>(std::move(g));
}

template <class F>
PoincarePoly expected_total(const Group<F>& g, const std::vector<long>& m) {
    return poincare_Hm_total(character_table(g), m);
}

}  // namespace

TEST_CASE("work Dunkl operators agree with ambient ones on S_n") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 4; ++n) {
        auto g = share(build_symmetric(n));
        for (long m : {0L, 1L, 2L}) {
            DunklContext<Rational> ctx(g, {m});
            for (int trial = 0; trial < 3; ++trial) {
                QPoly phi = random_qpoly(rng, n - 1, 3);
                std::vector<Rational> v;
                for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng() % 5) - 2);
                QPoly amb = ambient_dunkl(v, g->pull_back(phi), m);
                CHECK(g->restrict(amb) == ctx.dunkl_apply(to_work(v), phi));
            }
        }
    }
}

TEST_CASE("S2 basics") {
    auto g = share(build_symmetric(2));
    DunklContext<Rational> c0(g, {0});
    QPoly y = QPoly::variable(1, 0);
    CHECK(c0.dunkl_apply({Rational(1)}, y.pow(3)) == y.pow(2) * Rational(3));
    DunklContext<Rational> c1(g, {1});
    // in ambient terms D_{e1} x1 = 1 - 1 = 0 for m = 1
    CHECK(ambient_dunkl({Rational(1), Rational(0)}, QPoly::variable(2, 0), 1).is_zero());
    // (x1 - x2)^3 is 1-harmonic, x1 - x2 is not
    CHECK(c1.apply_Dxid({Rational(1)}, 2, y.pow(3)).is_zero());
    CHECK(!c1.apply_Dxid({Rational(1)}, 2, y).is_zero());
    CHECK(c1.verify_ambient(g->pull_back(y.pow(3))).harmonic);
    CHECK(!c1.verify_ambient(QPoly::variable(2, 0)).harmonic);
}

TEST_CASE("D^(1) is the derivative and D^(d) acts as D^d on invariants") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 4; ++n) {
        auto g = share(build_symmetric(n));
        DunklContext<Rational> ctx(g, {1});
        std::vector<Rational> amb(static_cast<std::size_t>(n), Rational(0));
        amb[0] = 1;
        amb[1] = 2;
        std::vector<Rational> xi = to_work(amb);
        QPoly phi = random_qpoly(rng, n - 1, 3);
        CHECK(ctx.build_Dd(xi, 1).apply(phi).num == phi.derivative(xi));
        QPoly inv = QPoly::constant(n - 1, Rational(1));
        for (const auto& s : g->work.sigma) inv = inv * s;
        inv += g->work.sigma.back().pow(2);
        for (int d = 1; d <= 3; ++d) {
            QPoly direct = inv;
            for (int k = 0; k < d; ++k) direct = ctx.dunkl_apply(xi, direct);
            RatValue<Rational> v = ctx.build_Dd(xi, d).apply(inv);
            QPoly lhs = v.num;
            for (std::size_t k = 0; k < v.poles.size(); ++k)
                CHECK(v.poles[k] == 0);
            CHECK(lhs == direct);
        }
    }
}

TEST_CASE("Dunkl operators commute and are equivariant") {
    std::mt19937_64 rng(3);
    auto g = share(build_symmetric(4));
    DunklContext<Rational> ctx(g, {2});
    std::vector<Rational> a{1, 0, 2}, b{0, 3, -1};
    for (int t = 0; t < 3; ++t) {
        QPoly p = random_qpoly(rng, 3, 4);
        CHECK(ctx.dunkl_apply(a, ctx.dunkl_apply(b, p)) == ctx.dunkl_apply(b, ctx.dunkl_apply(a, p)));
        for (std::size_t e = 0; e < g->order; e += 5) {
            auto ga = dense_apply(g->work.elements[e], a);
            CHECK(g->work.act(e, ctx.dunkl_apply(a, p)) == ctx.dunkl_apply(ga, g->work.act(e, p)));
        }
    }
    auto d = share(build_dihedral(5));
    DunklContext<Cyclo> cd(d, {1});
    Poly<Cyclo> q = Poly<Cyclo>::variable(2, 0).pow(3) + Poly<Cyclo>::variable(2, 1) * Poly<Cyclo>::variable(2, 0);
    std::vector<Cyclo> u{Cyclo(1), Cyclo(2)}, w{Cyclo(3), Cyclo(-1)};
    CHECK(cd.dunkl_apply(u, cd.dunkl_apply(w, q)) == cd.dunkl_apply(w, cd.dunkl_apply(u, q)));
}

TEST_CASE("operators do not depend on root normalisation") {
    // scaling xi scales D^(d)_xi by the d-th power
    auto g = share(build_symmetric(3));
    DunklContext<Rational> ctx(g, {1});
    std::vector<Rational> xi{1, 2}, xi3{3, 6};
    QPoly p = QPoly::variable(2, 0).pow(4) - QPoly::variable(2, 1).pow(2) * QPoly::variable(2, 0);
    for (int d = 1; d <= 3; ++d) {
        auto a = ctx.build_Dd(xi, d).apply(p);
        auto b = ctx.build_Dd(xi3, d).apply(p);
        CHECK(b.poles == a.poles);
        CHECK(b.num == a.num * Rational(3).pow(d));
    }
}

TEST_CASE("S2 direct construction") {
    auto g = share(build_symmetric(2));
    for (long m = 0; m <= 3; ++m) {
        DunklContext<Rational> ctx(g, {m});
        auto basis = construct_Hm_direct(ctx);
        REQUIRE(basis.entries.size() == 2);
        CHECK(basis.entries[0].degree == 0);
        CHECK(basis.entries[1].degree == 2 * m + 1);
        CHECK(basis.entries[1].poly.size() == 1);
        CHECK(basis.poincare() == expected_total(*g, {m}));
    }
}

TEST_CASE("A2 with m = 1") {
    auto g = share(build_symmetric(3));
    DunklContext<Rational> ctx(g, {1});
    auto basis = construct_Hm_direct(ctx);
    CHECK(basis.poincare().to_string() == "1 + 2t^4 + 2t^5 + t^9");
    CHECK(basis.poincare() == expected_total(*g, {1}));
    for (const auto& e : basis.entries) {
        CHECK(ctx.L1_numerator(e.poly).is_zero());
        CHECK(ctx.verify_m_harmonic(e.poly).harmonic);
        CHECK(ctx.verify_ambient(g->pull_back(e.poly)).harmonic);
    }
    // a harmonic polynomial of H_0 in degree 1 is not 1-harmonic
    CHECK(!ctx.L1_numerator(QPoly::variable(2, 0)).is_zero());
}

TEST_CASE("rank precondition") {
    auto g = share(build_symmetric(4));
    DunklContext<Rational> ctx(g, {1});
    QPoly one = QPoly::constant(3, Rational(1));
    std::vector<std::vector<Rational>> single{to_work({1, 0, 0, 0})};
    CHECK_THROWS_AS(ctx.verify_m_harmonic(one, 4, single), PreconditionError);
    CHECK_THROWS_AS(ctx.verify_m_harmonic(one, 3, ctx.default_directions(4)), PreconditionError);
    auto checks = ctx.rank_checks(ctx.default_directions(4), 4);
    for (const auto& c : checks) CHECK(c.ok());
    CHECK(checks[3].required == 2);
}

TEST_CASE("dihedral direct construction") {
    for (int N = 3; N <= 6; ++N) {
        auto g = share(build_dihedral(N));
        std::vector<std::vector<long>> ms;
        if (N % 2) ms = {{0}, {1}, {2}};
        else ms = {{0, 0}, {1, 0}, {0, 1}, {1, 2}};
        for (const auto& m : ms) {
            DunklContext<Cyclo> ctx(g, m);
            auto basis = construct_Hm_direct(ctx);
            CHECK(basis.poincare() == expected_total(*g, m));
            for (const auto& e : basis.entries) CHECK(ctx.L1_numerator(e.poly).is_zero());
        }
    }
}

TEST_CASE("A3 direct construction") {
    auto g = share(build_symmetric(4));
    for (long m : {1L, 2L}) {
        auto t0 = std::chrono::steady_clock::now();
        DunklContext<Rational> ctx(g, {m});
        auto basis = construct_Hm_direct(ctx);
        CHECK(basis.poincare() == expected_total(*g, {m}));
        MESSAGE("A3 m=" << m << " in " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s");
    }
}
