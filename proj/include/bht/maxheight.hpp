#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bht/poly.hpp"
#include "bht/specs.hpp"

namespace bht {

/// Streams MaxHeightRecords for n = 1..n_max using the all-(-1) coefficient
/// recurrence  p_{n,j} = p_{n-1,j-1} + sum_{k=1}^{n-j} p_{n-k,j}.
/// Memory stays O(n): one coefficient row plus running column prefix sums
/// S_j = sum_{m<n} p_{m,j}, so that p_{n,j} = p_{n-1,j-1} + S_j.
void tau_mu_stream(int n_max, const std::function<void(const MaxHeightRecord&)>& sink);

/// Convenience: collect the stream into a table (index i holds n = i+1).
std::vector<MaxHeightRecord> tau_mu_table(int n_max);

/// Number of order-n ternary family members attaining the maximal
/// characteristic height: 2 * 3^mu_n. Requires n >= 2.
mpz_class count_max_height(int n);

struct CensusResult {
    mpz_class tau;
    std::uint64_t count = 0;
    std::vector<ToeplitzSpec> witnesses;  // sorted by entry vector
};

/// Exhaustive census over all 3^n members (subdiagonal +1): maximal height,
/// number of members attaining it, and the attaining specs. Capped at
/// n <= 12; workers = 0 picks the hardware concurrency.
CensusResult brute_force_max_height_census(int n, int workers = 0);

/// Height-maximizing entry pattern(s) over a finite population F of integers
/// with a = min F, b = max F: all-a when |a| >= |b|, the alternation
/// (b, a, b, a, ...) when |b| >= |a|, both when |a| = |b|.
std::vector<std::vector<long>> max_height_pattern(const std::vector<long>& population, int n);

/// log tau_{n+1} - log tau_n (natural log) for n = 1..n_max-1; entry i holds
/// the ratio at n = i+1. The log conversion is the only floating-point step.
std::vector<double> growth_ratios(int n_max);

/// Natural log of a positive big integer, accurate to ~15 significant digits.
double log_mpz(const mpz_class& v);

/// Exact floor(m / (phi + 2)) where phi is the golden ratio, for m >= 0.
/// Uses m/(phi+2) = (5m - sqrt(5 m^2))/10 and an exact integer square root;
/// irrationality of sqrt(5 m^2) for m > 0 settles the boundary cases without
/// any floating point.
mpz_class floor_div_golden(const mpz_class& m);

/// Generalized Fibonacci word: a(n) = floor((n+2)/(phi+2)) - floor((n+1)/(phi+2)).
int fibword_a(long n);

/// Closed formula floor((n+327)/(phi+2)) - 90 for mu_n; requires n > 2.
long mu_formula(long n);

}  // namespace bht
