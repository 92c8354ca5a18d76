#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/reptheory.hpp"

#include <functional>
#include <numeric>

using namespace harmonia;

namespace {

// Standard Young tableaux counted by removing corners recursively.
long count_syt(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return 1;
    long total = 0;
    for (std::size_t r = 0; r < p.size(); ++r) {
        bool corner = r + 1 == p.size() || p[r + 1] < p[r];
        if (!corner) continue;
        Partition q = p;
        --q[r];
        total += count_syt(q);
    }
    return total;
}

std::vector<long> as_longs(const std::vector<Rational>& v) {
    std::vector<long> out;
    for (const auto& x : v) {
        REQUIRE(x.den() == 1);
        out.push_back(x.num().get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("hooks, legs and arms") {
    auto h = hooks_legs_arms({2, 1});
    std::vector<int> hooks, legs, arms;
    for (const auto& b : h.boxes) {
        hooks.push_back(b.hook);
        legs.push_back(b.leg);
        arms.push_back(b.arm);
        CHECK(b.hook == b.arm + b.leg + 1);
    }
    CHECK(hooks == std::vector<int>{3, 1, 1});
    CHECK(legs == std::vector<int>{1, 0, 0});
    CHECK(arms == std::vector<int>{1, 0, 0});
    CHECK(h.dim == 2);
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions(n)) CHECK(sn_dimension(p) == count_syt(p));
    CHECK(sn_dimension({5}) == 1);
    CHECK(sn_dimension({1, 1, 1, 1}) == 1);
}

TEST_CASE("partition counts") {
    std::vector<std::size_t> expected{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(partitions(n).size() == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("Murnaghan-Nakayama characters") {
    CHECK(character_sn({2, 1}, {2, 1}) == 0);
    CHECK(character_sn({2, 1}, {3}) == -1);
    CHECK(character_sn({1, 1, 1}, {2, 1}) == -1);
    for (int n = 2; n <= 6; ++n) {
        auto g = build_symmetric(n);
        auto t = character_table(g);
        // row orthogonality over classes
        for (std::size_t i = 0; i < t.irreps.size(); ++i) {
            CHECK(t.chi[i][0] == Cyclo(static_cast<long>(t.irreps[i].dim)));
            for (std::size_t j = 0; j < t.irreps.size(); ++j) {
                long s = 0;
                for (std::size_t c = 0; c < t.classes.size(); ++c)
                    s += static_cast<long>(t.classes[c].size) * t.chi[i][c].rational_part().num().get_si() *
                         t.chi[j][c].rational_part().num().get_si();
                CHECK(s == (i == j ? static_cast<long>(g.order) : 0));
            }
        }
        for (const auto& p : partitions(n)) CHECK(character_sn(Partition(p), Partition(static_cast<std::size_t>(n), 1)) == sn_dimension(p));
    }
}

TEST_CASE("dihedral character tables are orthonormal") {
    for (int N = 3; N <= 9; ++N) {
        auto g = build_dihedral(N);
        auto t = character_table(g);
        CHECK(t.irreps.size() == t.classes.size());
        long sumsq = 0;
        for (const auto& ir : t.irreps) sumsq += ir.dim * ir.dim;
        CHECK(sumsq == static_cast<long>(g.order));
        for (std::size_t i = 0; i < t.irreps.size(); ++i)
            for (std::size_t j = 0; j < t.irreps.size(); ++j) {
                Cyclo s(0);
                for (std::size_t c = 0; c < t.classes.size(); ++c)
                    s += Cyclo(static_cast<long>(t.classes[c].size)) * t.chi[i][c] * t.chi[j][c].conjugate();
                CHECK(s == Cyclo(i == j ? static_cast<long>(g.order) : 0L));
            }
    }
}

TEST_CASE("Kirillov product formula") {
    CHECK(kirillov_PH0({2, 1}) == PoincarePoly({0, 1, 1}));
    CHECK(kirillov_PH0({3}) == PoincarePoly({1}));
    CHECK(kirillov_PH0({1, 1, 1}) == PoincarePoly::monomial(3));
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : partitions(n)) CHECK(kirillov_PH0(p).value_at_one() == sn_dimension(p).get_si());
}

TEST_CASE("dihedral closed forms") {
    auto t5 = character_table(build_dihedral(5));
    CHECK(poincare_H0(t5, t5.find("two_dim(2)")) == PoincarePoly({0, 0, 1, 1}));
    auto t6 = character_table(build_dihedral(6));
    CHECK(poincare_H0(t6, t6.find("plus")) == PoincarePoly::monomial(3));
}

TEST_CASE("regular module sums to the classical Poincare polynomial") {
    for (int n = 2; n <= 6; ++n) {
        auto t = character_table(build_symmetric(n));
        PoincarePoly s;
        for (std::size_t j = 0; j < t.irreps.size(); ++j) s += static_cast<long>(t.irreps[j].dim) * poincare_H0(t, j);
        CHECK(s == classical_poincare(t.degrees));
        // duality at m = 0
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            CHECK(poincare_H0(t, t.dual(j)) == poincare_H0(t, j).reversed(n * (n - 1) / 2));
    }
    for (int N = 3; N <= 9; ++N) {
        auto t = character_table(build_dihedral(N));
        PoincarePoly s;
        for (std::size_t j = 0; j < t.irreps.size(); ++j) s += static_cast<long>(t.irreps[j].dim) * poincare_H0(t, j);
        CHECK(s == classical_poincare({2, N}));
    }
    CHECK(classical_poincare({1, 2, 3}) == PoincarePoly({1, 2, 2, 1}));
}

TEST_CASE("Molien series") {
    auto g2 = build_symmetric(2);
    auto t2 = character_table(g2);
    auto m = molien_PS(g2, t2, t2.find("[2]"));
    CHECK(as_longs(m.numerator) == std::vector<long>{1});
    CHECK(m.denominator_degrees == std::vector<int>{1, 2});
    auto g3 = build_symmetric(3);
    auto t3 = character_table(g3);
    CHECK(PoincarePoly(as_longs(molien_PS(g3, t3, t3.find("[1,1,1]")).numerator)) == PoincarePoly::monomial(3));
    for (int n = 1 + 1; n <= 5; ++n) {
        auto g = build_symmetric(n);
        auto t = character_table(g);
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            CHECK(PoincarePoly(as_longs(molien_PS(g, t, j).numerator)) == kirillov_PH0(t.irreps[j].partition));
    }
    for (int N = 3; N <= 8; ++N) {
        auto g = build_dihedral(N);
        auto t = character_table(g);
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            CHECK(PoincarePoly(as_longs(molien_PS(g, t, j).numerator)) == dihedral_PH0(t.irreps[j], N));
    }
}

TEST_CASE("degree shifts") {
    auto t3 = character_table(build_symmetric(3));
    CHECK(d_minus(t3, t3.find("[3]"), 0) == 0);
    CHECK(d_minus(t3, t3.find("[1,1,1]"), 0) == 6);
    CHECK(d_minus(t3, t3.find("[2,1]"), 0) == 3);
    for (int n = 2; n <= 6; ++n) {
        auto t = character_table(build_symmetric(n));
        for (std::size_t j = 0; j < t.irreps.size(); ++j) {
            CHECK(d_minus(t, j, 0) == d_minus_kirillov(t.irreps[j].partition));
            CHECK(d_minus(t, j, 0) + d_plus(t, j, 0) == n * (n - 1));
            CHECK(d_plus(t, j, 0) == d_minus(t, t.dual(j), 0));
        }
    }
}

TEST_CASE("pi_m rule") {
    auto t4 = character_table(build_symmetric(4));
    for (std::size_t j = 0; j < t4.irreps.size(); ++j) CHECK(pi_m(t4, {1}, j) == j);
    auto t6 = character_table(build_dihedral(6));
    std::size_t v1 = t6.find("two_dim(1)"), v2 = t6.find("two_dim(2)");
    CHECK(pi_m(t6, {1, 0}, v1) == v2);
    CHECK(pi_m(t6, {1, 0}, v2) == v1);
    CHECK(pi_m(t6, {1, 1}, v1) == v1);
    for (int N = 3; N <= 10; ++N) {
        auto t = character_table(build_dihedral(N));
        std::vector<std::vector<long>> ms{{1}, {2}};
        if (N % 2 == 0) ms = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
        for (const auto& m : ms)
            for (std::size_t j = 0; j < t.irreps.size(); ++j) {
                std::size_t p = pi_m(t, m, j);
                CHECK(pi_m(t, m, p) == j);
                CHECK(t.irreps[p].dim == t.irreps[j].dim);
                for (std::size_t a = 0; a < t.num_reflection_classes(); ++a)
                    CHECK(t.reflection_character(p, a) == t.reflection_character(j, a));
                CHECK(t.dual(p) == pi_m(t, m, t.dual(j)));
            }
    }
}

TEST_CASE("Poincare polynomials of H_m") {
    auto t3 = character_table(build_symmetric(3));
    auto total = poincare_Hm_total(t3, {1});
    CHECK(total.to_string() == "1 + 2t^4 + 2t^5 + t^9");
    auto t2 = character_table(build_symmetric(2));
    for (long m = 0; m <= 4; ++m) CHECK(poincare_Hm_total(t2, {m}) == PoincarePoly::monomial(0) + PoincarePoly::monomial(static_cast<int>(2 * m + 1)));
    for (int n = 2; n <= 5; ++n) {
        auto t = character_table(build_symmetric(n));
        CHECK(poincare_Hm_total(t, {0}) == classical_poincare(t.degrees));
        CHECK(poincare_Hm_total(t, {2}).degree() == top_degree(t, {2}));
    }
    for (int N = 3; N <= 8; ++N) {
        auto t = character_table(build_dihedral(N));
        std::vector<long> m0(t.num_reflection_classes(), 0);
        CHECK(poincare_Hm_total(t, m0) == classical_poincare({2, N}));
        if (N % 2 == 0) {
            auto p = poincare_Hm_total(t, {1, 0});
            CHECK(p.degree() == N / 2 * 3 + N / 2);
        }
    }
    CHECK_THROWS_AS(poincare_Hm_total(t3, {1, 1}), std::invalid_argument);
}

TEST_CASE("Solomon formula and its twisted form") {
    CHECK(solomon_d(PoincarePoly({0, 1, 1})) == Rational(3));
    CHECK(solomon_d(PoincarePoly({1})) == Rational(0));
    for (int n = 2; n <= 6; ++n) {
        auto t = character_table(build_symmetric(n));
        for (std::size_t j = 0; j < t.irreps.size(); ++j) CHECK(solomon_d(poincare_H0(t, j)) == Rational(d_minus(t, j, 0)));
    }
    for (int N = 3; N <= 9; N += 2) {
        auto t = character_table(build_dihedral(N));
        for (std::size_t j = 0; j < t.irreps.size(); ++j) CHECK(solomon_d(poincare_H0(t, j)) == Rational(d_minus(t, j, 0)));
    }
    for (int N : {4, 6, 8}) {
        auto t = character_table(build_dihedral(N));
        for (std::size_t j = 0; j < t.irreps.size(); ++j)
            for (std::size_t a = 0; a < 2; ++a) {
                auto tw = t.tensor_class(j, a);
                CHECK(twisted_solomon_d(poincare_H0(t, j), poincare_H0(t, tw), static_cast<long>(t.reflection_sizes[a])) ==
                      Rational(d_minus(t, j, a)));
            }
    }
    auto t4 = character_table(build_dihedral(4));
    std::size_t v1 = t4.find("two_dim(1)");
    CHECK(t4.tensor_class(v1, 0) == v1);
    CHECK(twisted_solomon_d(poincare_H0(t4, v1), poincare_H0(t4, v1), 2) == Rational(2));
}
