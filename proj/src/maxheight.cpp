#include "bht/maxheight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bht/charpoly.hpp"

namespace bht {

void tau_mu_stream(int n_max, const std::function<void(const MaxHeightRecord&)>& sink) {
    if (n_max < 1) throw std::invalid_argument("tau_mu_stream: n_max must be positive");
    // row[j] = p_{n,j}; sums[j] = sum of p_{m,j} over m < n
    std::vector<mpz_class> row{mpz_class(1)};
    std::vector<mpz_class> sums{mpz_class(1)};
    for (int n = 1; n <= n_max; ++n) {
        row.resize(static_cast<std::size_t>(n) + 1);
        sums.resize(static_cast<std::size_t>(n) + 1);
        for (int j = n; j >= 1; --j)
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + sums[static_cast<std::size_t>(j)];
        row[0] = sums[0];
        MaxHeightRecord rec{n, 0, 0};
        for (int j = 0; j <= n; ++j) {
            const mpz_class& c = row[static_cast<std::size_t>(j)];
            sums[static_cast<std::size_t>(j)] += c;
            if (c >= rec.tau) {
                rec.tau = c;
                rec.mu = j;
            }
        }
        sink(rec);
    }
}

std::vector<MaxHeightRecord> tau_mu_table(int n_max) {
    std::vector<MaxHeightRecord> table;
    table.reserve(static_cast<std::size_t>(n_max));
    tau_mu_stream(n_max, [&](const MaxHeightRecord& rec) { table.push_back(rec); });
    return table;
}

mpz_class count_max_height(int n) {
    if (n < 2) throw std::domain_error("count_max_height: requires n >= 2");
    int mu = tau_mu_table(n).back().mu;
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), 3, static_cast<unsigned long>(mu));
    return 2 * count;
}

CensusResult brute_force_max_height_census(int n, int workers) {
    if (n < 1) throw std::invalid_argument("brute_force_max_height_census: order must be positive");
    if (n > 12) throw std::length_error("brute_force_max_height_census: capped at n <= 12");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    const std::uint64_t total = family_size(n, false);
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));

    std::vector<CensusResult> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        std::uint64_t end = total * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(workers);
        pool.emplace_back([n, begin, end, &result = partial[static_cast<std::size_t>(w)]] {
            FamilyCharpolyScanner scanner(n, false);
            scanner.scan(begin, end, [n, &result](std::uint64_t, const std::vector<long>& t,
                                                  const std::vector<mpz_class>& coeffs) {
                mpz_class h = 0;
                for (const mpz_class& c : coeffs) {
                    mpz_class a = abs(c);
                    if (a > h) h = a;
                }
                if (h > result.tau) {
                    result.tau = h;
                    result.count = 0;
                    result.witnesses.clear();
                }
                if (h == result.tau) {
                    ++result.count;
                    result.witnesses.push_back(ToeplitzSpec{n, t, +1});
                }
            });
        });
    }
    for (auto& th : pool) th.join();

    CensusResult merged;
    for (auto& part : partial) {
        if (part.tau > merged.tau) {
            merged.tau = part.tau;
            merged.count = 0;
            merged.witnesses.clear();
        }
        if (part.tau == merged.tau) {
            merged.count += part.count;
            merged.witnesses.insert(merged.witnesses.end(),
                                    std::make_move_iterator(part.witnesses.begin()),
                                    std::make_move_iterator(part.witnesses.end()));
        }
    }
    std::sort(merged.witnesses.begin(), merged.witnesses.end(),
              [](const ToeplitzSpec& a, const ToeplitzSpec& b) { return a.t < b.t; });
    return merged;
}

std::vector<std::vector<long>> max_height_pattern(const std::vector<long>& population, int n) {
    if (population.size() < 2)
        throw std::domain_error("max_height_pattern: population needs at least two values");
    if (n < 1) throw std::invalid_argument("max_height_pattern: order must be positive");
    long a = *std::min_element(population.begin(), population.end());
    long b = *std::max_element(population.begin(), population.end());
    std::vector<std::vector<long>> patterns;
    if (std::labs(a) >= std::labs(b))
        patterns.emplace_back(static_cast<std::size_t>(n), a);
    if (std::labs(b) >= std::labs(a)) {
        std::vector<long> alternating(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) alternating[static_cast<std::size_t>(k) - 1] = (k & 1) ? b : a;
        patterns.push_back(std::move(alternating));
    }
    return patterns;
}

double log_mpz(const mpz_class& v) {
    if (v <= 0) throw std::domain_error("log_mpz: argument must be positive");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::vector<double> growth_ratios(int n_max) {
    if (n_max < 2) throw std::invalid_argument("growth_ratios: n_max must be at least 2");
    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(n_max));
    tau_mu_stream(n_max, [&](const MaxHeightRecord& rec) { logs.push_back(log_mpz(rec.tau)); });
    std::vector<double> ratios(logs.size() - 1);
    for (std::size_t i = 0; i + 1 < logs.size(); ++i) ratios[i] = logs[i + 1] - logs[i];
    return ratios;
}

mpz_class floor_div_golden(const mpz_class& m) {
    if (m < 0) throw std::domain_error("floor_div_golden: argument must be non-negative");
    if (m == 0) return 0;
    // m/(phi+2) = (5m - sqrt(5 m^2)) / 10, and sqrt(5 m^2) is irrational:
    // with k = floor(sqrt(5 m^2)), the floor is (5m-k)/10 - 1 when 10 | 5m-k,
    // else floor((5m-k)/10).
    mpz_class k = sqrt(5 * m * m);
    mpz_class num = 5 * m - k;
    mpz_class q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), 10);
    if (r == 0) q -= 1;
    return q;
}

int fibword_a(long n) {
    if (n < 0) throw std::domain_error("fibword_a: argument must be non-negative");
    mpz_class diff = floor_div_golden(mpz_class(n) + 2) - floor_div_golden(mpz_class(n) + 1);
    return static_cast<int>(diff.get_si());
}

long mu_formula(long n) {
    if (n <= 2) throw std::domain_error("mu_formula: requires n > 2");
    mpz_class v = floor_div_golden(mpz_class(n) + 327) - 90;
    return v.get_si();
}

}  // namespace bht
