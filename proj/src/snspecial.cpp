#include "harmonia/snspecial.hpp"

#include "harmonia/diffops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

namespace harmonia {

namespace {

// Polynomial in t with coefficients in Q[x1..xn], lowest power first.
using TPoly = std::vector<QPoly>;

TPoly tmul(const TPoly& a, const TPoly& b, int n) {
    TPoly r(a.size() + b.size() - 1, QPoly(n));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    return r;
}

// t - x_k
TPoly tlinear(int n, int k) { return {-QPoly::variable(n, k), QPoly::constant(n, Rational(1))}; }

Rational factorial(long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(f);
}

}  // namespace

LowestBasis lowest_harmonics(int n, long m) {
    if (n < 2 || n > kMaxVars) throw std::invalid_argument("lowest_harmonics: need 2 <= n <= 8");
    if (m < 1) throw std::invalid_argument("lowest_harmonics: m must be positive (the integrand is not polynomial at m = 0)");
    TPoly power{QPoly::constant(n, Rational(1))};  // prod_k (t - x_k)^(m-1)
    for (int k = 0; k < n; ++k)
        for (long e = 1; e < m; ++e) power = tmul(power, tlinear(n, k), n);
    TPoly sum{QPoly(n)};
    for (int i = 0; i < n; ++i) {
        TPoly term{QPoly::variable(n, i)};
        for (int k = 0; k < n; ++k)
            if (k != i) term = tmul(term, tlinear(n, k), n);
        if (sum.size() < term.size()) sum.resize(term.size(), QPoly(n));
        for (std::size_t d = 0; d < term.size(); ++d) sum[d] += term[d];
    }
    TPoly integrand = tmul(sum, power, n);
    LowestBasis b{n, m, {}};
    const Rational scale(1, 1 + n * m);
    for (int j = 2; j <= n; ++j)
        b.polys.push_back(integrate_t(integrand, QPoly::variable(n, 0), QPoly::variable(n, j - 1)) * scale);
    return b;
}

std::vector<QPoly> lowest_psi(int n, long m, int j) {
    if (n < 2 || n > kMaxVars || j < 2 || j > n) throw std::invalid_argument("lowest_psi: need 2 <= j <= n <= 8");
    if (m < 1) throw std::invalid_argument("lowest_psi: m must be positive");
    std::vector<QPoly> psi;
    for (int i = 0; i < n; ++i) {
        TPoly integrand{QPoly::constant(n, Rational(1))};
        for (int k = 0; k < n; ++k)
            for (long e = (k == i ? 1 : 0); e < m; ++e) integrand = tmul(integrand, tlinear(n, k), n);
        psi.push_back(integrate_t(integrand, QPoly::variable(n, 0), QPoly::variable(n, j - 1)));
    }
    return psi;
}

std::vector<std::vector<Rational>> leading_matrix(const LowestBasis& b) {
    const auto deg = static_cast<unsigned>(b.n * b.m + 1);
    std::vector<std::vector<Rational>> L;
    for (int j = 2; j <= b.n; ++j) {
        std::vector<Rational> row;
        const Mono top = mono::unit(j - 1) * deg;
        for (const auto& phi : b.polys) row.push_back(phi.coeff(top));
        L.push_back(std::move(row));
    }
    return L;
}

Rational leading_constant(int n, long m) {
    Rational c = factorial((n - 1) * m) * factorial(m - 1) / (factorial(n * m) * Rational(1 + n * m));
    return m % 2 ? c : -c;
}

Partition rsk_shape(const std::vector<int>& perm) {
    std::vector<std::vector<int>> rows;
    for (int x : perm) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
            if (it == rows[r].end()) {
                rows[r].push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    Partition shape;
    for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
    return shape;
}

std::vector<PlancherelWeight> plancherel_exact(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("plancherel_exact: need 1 <= n <= 12");
    const Rational nf = factorial(n);
    std::vector<PlancherelWeight> out;
    for (const auto& p : partitions(n)) {
        mpz_class d = sn_dimension(p);
        out.push_back({p, Rational(mpz_class(d * d)) / nf});
    }
    return out;
}

DegreeDistribution degree_distribution_check(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("degree_distribution_check: need 2 <= n <= 8");
    auto g = build_symmetric(n);
    CharacterTable t = character_table(g);
    const Rational nf = factorial(n);
    DegreeDistribution r;
    r.n = n;
    bool ok = true;
    for (std::size_t j = 0; j < t.irreps.size(); ++j) {
        const long dm = d_minus(t, j, 0);
        PoincarePoly p1 = poincare_Hm(t, {1}, j), p2 = poincare_Hm(t, {2}, j);
        // the m-slope of the degrees of this isotypic component
        const long slope = p2.low_degree() - p1.low_degree();
        if (slope != dm || p2 != p1.shifted(dm) || dm != d_minus_kirillov(t.irreps[j].partition)) ok = false;
        const long dim = t.irreps[j].dim;
        r.from_poincare[slope] += Rational(dim * p1.value_at_one()) / nf;
        r.basis_size += static_cast<std::size_t>(dim * p1.value_at_one());
        mpz_class d = sn_dimension(t.irreps[j].partition);
        r.from_plancherel[dm] += Rational(mpz_class(d * d)) / nf;
    }
    r.ok = ok && r.from_poincare == r.from_plancherel && Rational(static_cast<long>(r.basis_size)) == nf;
    return r;
}

double kerov_statistic(const Partition& lambda) {
    const long n = std::accumulate(lambda.begin(), lambda.end(), 0L);
    return static_cast<double>(n * (n - 1) - 2 * d_minus_kirillov(lambda)) / (std::sqrt(2.0) * static_cast<double>(n));
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

KerovSample kerov_statistic_sample(int n, std::size_t samples, std::uint64_t seed, unsigned threads) {
    if (n < 1) throw std::invalid_argument("kerov_statistic_sample: n must be positive");
    if (samples < 1) throw std::invalid_argument("kerov_statistic_sample: need at least one sample");
    KerovSample s;
    s.n = n;
    s.seed = seed;
    s.shapes.resize(samples);
    s.statistics.resize(samples);
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (std::size_t i = begin; i < end; ++i) {
            std::mt19937_64 rng(splitmix64(seed, i));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            s.shapes[i] = rsk_shape(perm);
            s.statistics[i] = kerov_statistic(s.shapes[i]);
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples)));
    if (threads == 1) {
        work(0, samples);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(work, samples * w / threads, samples * (w + 1) / threads);
        for (auto& t : pool) t.join();
    }
    double sum = 0;
    for (double x : s.statistics) sum += x;
    s.mean = sum / static_cast<double>(samples);
    double sq = 0;
    for (double x : s.statistics) sq += (x - s.mean) * (x - s.mean);
    s.variance = samples > 1 ? sq / static_cast<double>(samples - 1) : 0.0;
    s.ks = ks_distance_normal(s.statistics);
    return s;
}

namespace {
double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
}  // namespace

double ks_distance_normal(std::vector<double> xs) {
    std::vector<std::pair<double, double>> w;
    const double p = 1.0 / static_cast<double>(xs.size());
    for (double x : xs) w.emplace_back(x, p);
    return ks_distance_normal(std::move(w));
}

double ks_distance_normal(std::vector<std::pair<double, double>> weighted) {
    std::sort(weighted.begin(), weighted.end());
    double below = 0, d = 0;
    for (std::size_t i = 0; i < weighted.size();) {
        // atoms at the same value jump together
        std::size_t j = i;
        double mass = 0;
        while (j < weighted.size() && weighted[j].first == weighted[i].first) mass += weighted[j++].second;
        const double f = normal_cdf(weighted[i].first);
        d = std::max({d, std::abs(f - below), std::abs(below + mass - f)});
        below += mass;
        i = j;
    }
    return d;
}

}  // namespace harmonia
