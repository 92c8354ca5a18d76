#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/linalg.hpp"

#include <random>

using namespace harmonia;

namespace {

Rational rnd_rational(std::mt19937_64& rng, long range = 9) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 5);
    return Rational(num(rng), den(rng));
}

Cyclo rnd_cyclo(std::mt19937_64& rng, int k) {
    std::vector<Rational> c;
    for (int i = 0; i < euler_phi(k); ++i) c.push_back(rnd_rational(rng));
    return Cyclo(k, c);
}

// Rank by plain dense Gaussian elimination on a copy, as an oracle.
template <class F>
std::size_t dense_rank(std::vector<std::vector<F>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c].is_zero()) continue;
            F f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rationals parse and compare") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("cyclotomic reduction examples") {
    CHECK(cyclo(4) * cyclo(4) == Cyclo(-1));
    CHECK(cyclo(6) * cyclo(6) == cyclo(6) - Cyclo(1));
    Cyclo z = cyclo(10);
    Cyclo re = z + z.conjugate();
    CHECK(re.conjugate() == re);
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(12) == 4);
}

TEST_CASE("zeta_k has multiplicative order exactly k") {
    for (int k = 3; k <= 24; ++k) {
        Cyclo z = cyclo(k);
        Cyclo p(1);
        for (int j = 1; j <= k; ++j) {
            p *= z;
            if (j < k)
                CHECK_FALSE(p.is_one());
            else
                CHECK(p.is_one());
        }
    }
}

TEST_CASE("cyclotomic field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int k : {5, 8, 10, 12, 16}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclo a = rnd_cyclo(rng, k), b = rnd_cyclo(rng, k), c = rnd_cyclo(rng, k);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        }
    }
}

TEST_CASE("canonical representation and parsing") {
    Cyclo a = cyclo(12).pow(5) + cyclo(12).pow(7);
    Cyclo b = Cyclo::parse(a.to_string());
    CHECK(a == b);
    CHECK(a.coords() == b.coords());
    CHECK(Cyclo::parse("3/4") == Cyclo(Rational(3, 4)));
}

TEST_CASE("mixing cyclotomic fields is an error") {
    CHECK_THROWS_AS(cyclo(5) + cyclo(7), FieldMismatch);
    Matrix<Cyclo> m(2);
    m.add_row({{0, cyclo(5)}});
    m.add_row({{1, cyclo(7)}});
    CHECK_THROWS_AS(nullspace(m), FieldMismatch);
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(Matrix<Rational>::identity(3)).empty());
    Matrix<Rational> zero(2, 2);
    CHECK(nullspace(zero).size() == 2);
    auto k = nullspace(Matrix<Rational>::from_dense({{1, 1}, {1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("exact and multimodular kernels agree and satisfy rank-nullity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t rows = 40 + 7 * trial, cols = 60 + 5 * trial;
        // Low-rank product so the kernel is large and entries are nontrivial.
        const std::size_t r = 20 + trial;
        std::vector<std::vector<Rational>> u(rows, std::vector<Rational>(r)), v(r, std::vector<Rational>(cols));
        for (auto& row : u)
            for (auto& x : row) x = rnd_rational(rng, 3);
        for (auto& row : v)
            for (auto& x : row) x = rnd_rational(rng, 3);
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] += u[i][k] * v[k][j];
        auto m = Matrix<Rational>::from_dense(a);
        auto exact = nullspace_exact(m);
        auto modular = nullspace_multimodular(m);
        CHECK(exact == modular);
        CHECK(exact.size() + dense_rank(a) == cols);
        for (const auto& vec : modular)
            for (const auto& x : m.apply(vec)) CHECK(x.is_zero());
    }
}

TEST_CASE("solve reproduces the right-hand side") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 55;
        Matrix<Rational> m(n);
        for (std::size_t i = 0; i < n - 3; ++i) {
            std::vector<Rational> row(n);
            for (auto& x : row) x = rnd_rational(rng, 4);
            m.add_dense_row(row);
        }
        Vec<Rational> x(n);
        for (auto& e : x) e = rnd_rational(rng);
        Vec<Rational> b = m.apply(x);
        auto s = solve(m, b);
        REQUIRE(s.has_value());
        CHECK(m.apply(*s) == b);
        auto se = solve_exact(m, b);
        CHECK(*se == *s);
    }
    Matrix<Rational> m = Matrix<Rational>::from_dense({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(m, Vec<Rational>{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("cyclotomic nullspace") {
    // rows (1, zeta), (zeta, zeta^2) have rank 1 over Q(zeta_8)
    Cyclo z = cyclo(8);
    auto m = Matrix<Cyclo>::from_dense({{Cyclo(1), z}, {z, z * z}});
    auto k = nullspace(m);
    REQUIRE(k.size() == 1);
    for (const auto& x : m.apply(k[0])) CHECK(x.is_zero());
    CHECK(dense_rank(m.to_dense()) == 1);
}

TEST_CASE("rational reconstruction and CRT") {
    CrtAccumulator crt;
    std::vector<Rational> vals{Rational(355, 113), Rational(-22, 7), Rational(0), Rational(1, 1000003)};
    for (std::size_t i = 0; i < 3; ++i) {
        PrimeField f(large_prime(i));
        std::vector<std::uint64_t> res;
        for (const auto& v : vals) res.push_back(*f.from_rational(v));
        crt.add(res, f.prime());
    }
    auto r = crt.reconstruct();
    REQUIRE(r.has_value());
    CHECK(*r == vals);
}
