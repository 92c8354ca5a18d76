#pragma once

#include "harmonia/reptheory.hpp"

#include <cstdint>
#include <map>

namespace harmonia {

/// phi^(2..n) for S_n in ambient coordinates x1..xn.
struct LowestBasis {
    int n = 0;
    long m = 0;
    std::vector<QPoly> polys;  // polys[j - 2] = phi^(j)
};

/// phi^(j) = 1/(1+nm) * integral from x1 to xj of sum_i x_i prod_{k != i} (t - x_k) prod_k (t - x_k)^(m-1) dt.
LowestBasis lowest_harmonics(int n, long m);

/// psi_i = integral from x1 to xj of prod_k (t - x_k)^m / (t - x_i) dt for i = 1..n; d(phi^(j))/dx_i = psi_i.
std::vector<QPoly> lowest_psi(int n, long m, int j);

/// Coefficient of x_j^{nm+1} in phi^(k), for j, k in 2..n.
std::vector<std::vector<Rational>> leading_matrix(const LowestBasis& b);

/// Exact-limit constant (-1)^(m-1) ((n-1)m)! (m-1)! / ((nm)! (1+nm)) of the diagonal.
Rational leading_constant(int n, long m);

/// Schensted row-insertion shape of a permutation of 0..n-1 (or 1..n).
Partition rsk_shape(const std::vector<int>& perm);

struct PlancherelWeight {
    Partition shape;
    Rational weight;  // dim^2 / n!
};
std::vector<PlancherelWeight> plancherel_exact(int n);

/// Finite-n form of the degree distribution statement: the m-slopes of the basis degrees of H_m,
/// each weighted 1/n!, have the law of d^-(lambda) under Plancherel measure.
struct DegreeDistribution {
    int n = 0;
    std::map<long, Rational> from_poincare;   // slope -> sum dim * P_lambda(H_m, 1) / n!
    std::map<long, Rational> from_plancherel; // slope -> Plancherel mass of {d^- = slope}
    std::size_t basis_size = 0;
    bool ok = false;
};
DegreeDistribution degree_distribution_check(int n);

/// (n(n-1) - 2 d^-(lambda)) / (sqrt(2) n).
double kerov_statistic(const Partition& lambda);

struct KerovSample {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<Partition> shapes;
    std::vector<double> statistics;
    double mean = 0, variance = 0, ks = 0;
};

/// Shapes of uniformly random permutations under RSK.  Sample i draws its permutation from a
/// generator seeded with splitmix64(seed, i), so the output does not depend on `threads`.
KerovSample kerov_statistic_sample(int n, std::size_t samples, std::uint64_t seed, unsigned threads = 1);

/// Kolmogorov-Smirnov distance between the empirical law of xs and the standard normal.
double ks_distance_normal(std::vector<double> xs);
/// Same for a finite distribution given as (value, probability) pairs.
double ks_distance_normal(std::vector<std::pair<double, double>> weighted);

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);

}  // namespace harmonia
