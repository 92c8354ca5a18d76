#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/dunkl.hpp"
#include "harmonia/snspecial.hpp"

#include <cmath>
#include <random>

using namespace harmonia;

namespace {

// Brute-force Schensted insertion with explicit bumping paths.
Partition naive_rsk(std::vector<int> perm) {
    std::vector<std::vector<int>> t;
    for (int x : perm) {
        std::size_t r = 0;
        while (true) {
            if (r == t.size()) {
                t.push_back({x});
                break;
            }
            std::size_t pos = t[r].size();
            for (std::size_t c = 0; c < t[r].size(); ++c)
                if (t[r][c] > x) {
                    pos = c;
                    break;
                }
            if (pos == t[r].size()) {
                t[r].push_back(x);
                break;
            }
            std::swap(x, t[r][pos]);
            ++r;
        }
    }
    Partition p;
    for (const auto& row : t) p.push_back(static_cast<int>(row.size()));
    return p;
}

std::size_t longest_increasing(const std::vector<int>& p) {
    std::vector<std::size_t> best(p.size(), 1);
    std::size_t m = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (p[j] < p[i]) best[i] = std::max(best[i], best[j] + 1);
        m = std::max(m, best[i]);
    }
    return m;
}

}  // namespace

TEST_CASE("lowest harmonics n = 2, m = 1") {
    auto b = lowest_harmonics(2, 1);
    QPoly d = QPoly::variable(2, 1) - QPoly::variable(2, 0);
    REQUIRE(b.polys.size() == 1);
    CHECK(b.polys[0] == d.pow(3) * Rational(1, 6));
    CHECK_THROWS_AS(lowest_harmonics(3, 0), std::invalid_argument);
}

TEST_CASE("lowest harmonics: defining equations and m-harmonicity") {
    for (auto [n, m] : std::vector<std::pair<int, long>>{{3, 1}, {3, 2}, {4, 1}, {2, 2}}) {
        auto b = lowest_harmonics(n, m);
        auto g = std::make_shared<const Group<Rational>>(build_symmetric(n));
        DunklContext<Rational> ctx(g, {m});
        for (int j = 2; j <= n; ++j) {
            auto psi = lowest_psi(n, m, j);
            for (int i = 0; i < n; ++i) CHECK(b.polys[static_cast<std::size_t>(j - 2)].derivative(i) == psi[static_cast<std::size_t>(i)]);
        }
        for (const auto& phi : b.polys) {
            CHECK(phi.is_homogeneous());
            CHECK(phi.degree() == n * m + 1);
            QPoly s(n);
            for (int i = 0; i < n; ++i) s += phi.derivative(i);
            CHECK(s.is_zero());
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) {
                    if (i == k) continue;
                    QPoly e = (QPoly::variable(n, i) - QPoly::variable(n, k)) * phi.derivative(k).derivative(i) +
                              (phi.derivative(i) - phi.derivative(k)) * Rational(m);
                    CHECK(e.is_zero());
                }
            CHECK(ctx.verify_ambient(phi).harmonic);
        }
        // diagonal leading matrix with the exact constant
        auto L = leading_matrix(b);
        for (std::size_t j = 0; j < L.size(); ++j)
            for (std::size_t k = 0; k < L.size(); ++k)
                CHECK(L[j][k] == (j == k ? leading_constant(n, m) : Rational(0)));
        // S_n-stable span of dimension n - 1 carrying the standard character
        MonomialBasis mb(n, static_cast<unsigned>(n * m + 1));
        Matrix<Rational> span(mb.size());
        for (const auto& phi : b.polys) span.add_dense_row(mb.coords(phi));
        CHECK(rank(span) == static_cast<std::size_t>(n - 1));
        Matrix<Rational> cols = Matrix<Rational>::from_dense([&] {
            std::vector<std::vector<Rational>> d(mb.size(), std::vector<Rational>(b.polys.size(), Rational(0)));
            for (std::size_t k = 0; k < b.polys.size(); ++k) {
                auto v = mb.coords(b.polys[k]);
                for (std::size_t r = 0; r < v.size(); ++r) d[r][k] = v[r];
            }
            return d;
        }());
        CharacterTable t = character_table(*g);
        std::size_t standard = 0;
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            if (t.irreps[j].partition == Partition{n - 1, 1}) standard = j;
        for (std::size_t c = 0; c < g->classes.size(); ++c) {
            const std::size_t e = g->classes[c].representative;
            Rational tr(0);
            for (std::size_t k = 0; k < b.polys.size(); ++k) {
                auto x = solve(cols, mb.coords(g->ambient.act(e, b.polys[k])));
                REQUIRE(x);
                tr += (*x)[k];
            }
            CHECK(Cyclo(tr) == t.chi[standard][c]);
        }
    }
}

TEST_CASE("leading constant against the Beta integral") {
    // integral_0^1 t^a (t - 1)^b dt by expanding (t - 1)^b
    for (int n = 2; n <= 5; ++n)
        for (long m = 1; m <= 3; ++m) {
            const long a = (n - 1) * m, bexp = m - 1;
            Rational s(0);
            mpz_class binom;
            for (long i = 0; i <= bexp; ++i) {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(bexp), static_cast<unsigned long>(i));
                Rational term = Rational(binom) / Rational(a + i + 1);
                s += (bexp - i) % 2 ? -term : term;
            }
            CHECK(leading_constant(n, m) == s / Rational(1 + n * m));
        }
    CHECK(leading_constant(2, 1) == Rational(1, 6));
}

TEST_CASE("RSK") {
    CHECK(rsk_shape({1, 2, 3, 4}) == Partition{4});
    CHECK(rsk_shape({4, 3, 2, 1}) == Partition{1, 1, 1, 1});
    CHECK(rsk_shape({2, 1, 4, 3}) == Partition{2, 2});
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> p(9);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        Partition s = rsk_shape(p);
        CHECK(s == naive_rsk(p));
        CHECK(static_cast<std::size_t>(s[0]) == longest_increasing(p));
    }
    // shape counts over S_5 are dim^2
    std::vector<int> p{0, 1, 2, 3, 4};
    std::map<Partition, long> count;
    do ++count[rsk_shape(p)];
    while (std::next_permutation(p.begin(), p.end()));
    for (const auto& w : plancherel_exact(5)) CHECK(Rational(count[w.shape], 120) == w.weight);
}

TEST_CASE("Plancherel weights") {
    auto w3 = plancherel_exact(3);
    REQUIRE(w3.size() == 3);
    CHECK(w3[0].weight == Rational(1, 6));
    CHECK(w3[1].weight == Rational(4, 6));
    CHECK(w3[2].weight == Rational(1, 6));
    for (int n = 1; n <= 10; ++n) {
        Rational s(0);
        for (const auto& w : plancherel_exact(n)) s += w.weight;
        CHECK(s == Rational(1));
    }
    for (const auto& w : plancherel_exact(4))
        if (w.shape == Partition{2, 2}) CHECK(w.weight == Rational(4, 24));
}

TEST_CASE("degree distribution at finite n") {
    auto d2 = degree_distribution_check(2);
    CHECK(d2.ok);
    CHECK(d2.from_poincare == std::map<long, Rational>{{0, Rational(1, 2)}, {2, Rational(1, 2)}});
    auto d3 = degree_distribution_check(3);
    CHECK(d3.ok);
    CHECK(d3.from_poincare == std::map<long, Rational>{{0, Rational(1, 6)}, {3, Rational(4, 6)}, {6, Rational(1, 6)}});
    for (int n = 4; n <= 6; ++n) {
        auto d = degree_distribution_check(n);
        CHECK(d.ok);
        CHECK(d.basis_size == static_cast<std::size_t>(std::tgamma(n + 1) + 0.5));
    }
}

TEST_CASE("Kerov statistic") {
    CHECK(kerov_statistic({10}) == doctest::Approx(9 / std::sqrt(2.0)));
    auto a = kerov_statistic_sample(20, 500, 42);
    auto b = kerov_statistic_sample(20, 500, 42, 3);
    CHECK(a.statistics == b.statistics);
    CHECK(a.shapes == b.shapes);
    CHECK(ks_distance_normal(std::vector<std::pair<double, double>>{{0.0, 1.0}}) == doctest::Approx(0.5));
    // KS distance of a sample to itself as a weighted law matches the unweighted form
    std::vector<std::pair<double, double>> w;
    for (double x : a.statistics) w.emplace_back(x, 1.0 / 500);
    CHECK(ks_distance_normal(w) == doctest::Approx(a.ks));
}
