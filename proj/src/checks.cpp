#include "bht/checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "bht/charpoly.hpp"
#include "bht/combinatorics.hpp"
#include "bht/maxheight.hpp"
#include "bht/poly.hpp"
#include "bht/specs.hpp"
#include "bht/spectra.hpp"

namespace bht {

namespace {

CheckResult pass(std::string name, std::string detail) {
    return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

std::string spec_to_string(const ToeplitzSpec& spec) {
    std::ostringstream out;
    out << "n=" << spec.n << " s=" << (spec.subdiag > 0 ? "+1" : "-1") << " t=(";
    for (std::size_t i = 0; i < spec.t.size(); ++i) {
        if (i) out << ",";
        out << spec.t[i];
    }
    out << ")";
    return out.str();
}

bool four_way_agrees(const ToeplitzSpec& spec, std::string& mismatch) {
    IntPolynomial a = charpoly_toeplitz(spec);
    IntPolynomial b = charpoly_coeffs(spec);
    IntPolynomial c = charpoly_hessenberg(HessenbergSpec::from_toeplitz(spec));
    if (a != b || a != c) {
        mismatch = "recurrences disagree on " + spec_to_string(spec);
        return false;
    }
    if (spec.n <= 8) {
        IntPolynomial d = leibniz_oracle(HessenbergSpec::from_toeplitz(spec));
        if (a != d) {
            mismatch = "permutation-sum oracle disagrees on " + spec_to_string(spec);
            return false;
        }
    }
    return true;
}

ToeplitzSpec all_minus_one(int n) {
    return ToeplitzSpec{n, std::vector<long>(static_cast<std::size_t>(n), -1), +1};
}

}  // namespace

CheckResult check_four_way_agreement(int exhaustive_max, int random_min, int random_max,
                                     int samples, unsigned seed) {
    const std::string name = "four-way charpoly agreement";
    std::string mismatch;
    std::uint64_t tested = 0;
    for (int n = 1; n <= exhaustive_max; ++n) {
        for (std::uint64_t index = 0; index < family_size(n, false); ++index) {
            for (int s : {+1, -1}) {
                ToeplitzSpec spec = family_spec_at(n, false, index);
                spec.subdiag = s;
                if (!four_way_agrees(spec, mismatch)) return fail(name, mismatch);
                ++tested;
            }
        }
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-1, 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int n = random_min; n <= random_max; ++n) {
        for (int sample = 0; sample < samples; ++sample) {
            ToeplitzSpec spec;
            spec.n = n;
            spec.subdiag = coin(rng) ? +1 : -1;
            spec.t.resize(static_cast<std::size_t>(n));
            for (auto& v : spec.t) v = entry(rng);
            if (!four_way_agrees(spec, mismatch)) return fail(name, mismatch);
            ++tested;
        }
    }
    std::ostringstream detail;
    detail << tested << " members (exhaustive n<=" << exhaustive_max;
    if (samples > 0 && random_max >= random_min)
        detail << ", " << samples << " random per n for " << random_min << "<=n<=" << random_max;
    detail << ")";
    return pass(name, detail.str());
}

CheckResult check_cardinality(int n_max) {
    const std::string name = "cardinality 3^n";
    for (int n = 1; n <= n_max; ++n) {
        std::vector<IntPolynomial> polys;
        polys.reserve(family_size(n, false));
        FamilyCharpolyScanner scanner(n, false);
        scanner.scan(0, family_size(n, false),
                     [&](std::uint64_t, const std::vector<long>&, const std::vector<mpz_class>& coeffs) {
                         polys.emplace_back(std::vector<mpz_class>(coeffs));
                     });
        std::sort(polys.begin(), polys.end());
        auto last = std::unique(polys.begin(), polys.end());
        std::uint64_t distinct = static_cast<std::uint64_t>(std::distance(polys.begin(), last));
        if (distinct != family_size(n, false)) {
            std::ostringstream detail;
            detail << "n=" << n << ": " << distinct << " distinct polynomials, expected "
                   << family_size(n, false);
            return fail(name, detail.str());
        }
    }
    std::ostringstream detail;
    detail << "3^n distinct characteristic polynomials for n<=" << n_max;
    return pass(name, detail.str());
}

CheckResult check_census(int n_max, int workers) {
    const std::string name = "max-height census";
    auto table = tau_mu_table(n_max);
    for (int n = 2; n <= n_max; ++n) {
        CensusResult census = brute_force_max_height_census(n, workers);
        const auto& rec = table[static_cast<std::size_t>(n) - 1];
        if (census.tau != rec.tau)
            return fail(name, "n=" + std::to_string(n) + ": census tau " + census.tau.get_str() +
                                  " != streamed tau " + rec.tau.get_str());
        if (mpz_class(static_cast<unsigned long>(census.count)) != count_max_height(n))
            return fail(name, "n=" + std::to_string(n) + ": census count " +
                                  std::to_string(census.count) + " != 2*3^mu = " +
                                  count_max_height(n).get_str());
        std::vector<long> all_minus(static_cast<std::size_t>(n), -1);
        std::vector<long> alternating(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) alternating[static_cast<std::size_t>(k) - 1] = (k & 1) ? 1 : -1;
        bool has_minus = false, has_alt = false;
        for (const auto& w : census.witnesses) {
            if (w.t == all_minus) has_minus = true;
            if (w.t == alternating) has_alt = true;
        }
        if (!has_minus || !has_alt)
            return fail(name, "n=" + std::to_string(n) + ": expected witness pattern missing");
    }
    return pass(name, "count = 2*3^mu_n with both witnesses, 2<=n<=" + std::to_string(n_max));
}

CheckResult check_closed_form(int n_max) {
    const std::string name = "closed form vs recurrence";
    auto ladder = charpoly_toeplitz_ladder(all_minus_one(n_max));
    for (int n = 0; n <= n_max; ++n) {
        if (closed_form_maxheight(n) != ladder[static_cast<std::size_t>(n)])
            return fail(name, "mismatch at n=" + std::to_string(n));
    }
    return pass(name, "matrix-power route equals recurrence for n<=" + std::to_string(n_max));
}

CheckResult check_binomial_form(int n_max) {
    const std::string name = "binomial double sum";
    auto ladder = charpoly_toeplitz_ladder(all_minus_one(n_max));
    for (int n = 0; n <= n_max; ++n) {
        for (long zi = -5; zi <= 5; ++zi) {
            mpz_class z(zi);
            mpq_class value = closed_form_binomial_eval(n, z);
            if (value.get_den() != 1)
                return fail(name, "non-integer value at n=" + std::to_string(n) +
                                      ", z=" + std::to_string(zi));
            if (value.get_num() != poly_eval(ladder[static_cast<std::size_t>(n)], z))
                return fail(name, "mismatch at n=" + std::to_string(n) + ", z=" + std::to_string(zi));
        }
    }
    return pass(name, "agrees with the polynomial at z in [-5,5], n<=" + std::to_string(n_max));
}

CheckResult check_positivity_and_constant_term(int n_max) {
    const std::string name = "positivity and constant term";
    auto ladder = charpoly_toeplitz_ladder(all_minus_one(n_max));
    mpz_class power = 1;  // 2^(n-1)
    for (int n = 1; n <= n_max; ++n) {
        const IntPolynomial& p = ladder[static_cast<std::size_t>(n)];
        for (int j = 0; j <= p.degree(); ++j)
            if (p.coeff(j) <= 0)
                return fail(name, "non-positive coefficient at n=" + std::to_string(n) +
                                      ", degree " + std::to_string(j));
        if (p.coeff(0) != power)
            return fail(name, "p_{n,0} != 2^(n-1) at n=" + std::to_string(n));
        power *= 2;
    }
    return pass(name, "all coefficients positive, p_{n,0} = 2^(n-1), n<=" + std::to_string(n_max));
}

CheckResult check_sequence_identities(int n_max) {
    const std::string name = "golden-ratio sequence identities";
    auto table = tau_mu_table(n_max + 1);
    mpz_class power = 1;  // 2^(n-1)
    for (int n = 1; n <= n_max; ++n) {
        if (table[static_cast<std::size_t>(n) - 1].tau < power)
            return fail(name, "tau_n < 2^(n-1) at n=" + std::to_string(n));
        power *= 2;
    }
    std::vector<int> increments;
    for (int n = 3; n <= n_max; ++n) {
        int mu_n = table[static_cast<std::size_t>(n) - 1].mu;
        int mu_next = table[static_cast<std::size_t>(n)].mu;
        int delta = mu_next - mu_n;
        if (delta != 0 && delta != 1)
            return fail(name, "mu step outside {0,1} at n=" + std::to_string(n));
        if (delta != fibword_a(n + 326))
            return fail(name, "mu_{n+1} - mu_n != a(n+326) at n=" + std::to_string(n));
        if (mu_formula(n) != mu_n)
            return fail(name, "mu_n != floor((n+327)/(phi+2)) - 90 at n=" + std::to_string(n));
        if (delta == 1) increments.push_back(n);
    }
    for (std::size_t i = 1; i < increments.size(); ++i) {
        int run = increments[i] - increments[i - 1];
        if (run != 3 && run != 4)
            return fail(name, "mu plateau of length " + std::to_string(run) + " ending at n=" +
                                  std::to_string(increments[i]));
    }
    return pass(name, "fibword + closed formula + plateaus in {3,4}, 3<=n<=" + std::to_string(n_max));
}

CheckResult check_growth_window(int n_lo, int n_hi, double tol) {
    const std::string name = "growth ratio convergence";
    const double limit = std::log((3.0 + std::sqrt(5.0)) / 2.0);  // log(1 + phi)
    std::vector<double> ratios = growth_ratios(n_hi + 1);
    double worst = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
        double err = std::abs(ratios[static_cast<std::size_t>(n) - 1] - limit);
        worst = std::max(worst, err);
        if (err > tol)
            return fail(name, "|ratio - log(1+phi)| = " + std::to_string(err) + " at n=" +
                                  std::to_string(n));
    }
    std::ostringstream detail;
    detail << "max |ratio - log(1+phi)| = " << worst << " for " << n_lo << "<=n<=" << n_hi;
    return pass(name, detail.str());
}

CheckResult check_shift_decomposition(int n_max) {
    const std::string name = "shift decomposition";
    for (int n = 1; n <= n_max; ++n)
        if (!shift_decomposition_check(n)) return fail(name, "multiset mismatch at n=" + std::to_string(n));
    return pass(name, "full family = three shifted zero-diagonal copies, n<=" + std::to_string(n_max));
}

CheckResult check_pattern_witnesses(int n_max) {
    const std::string name = "max-height pattern witnesses";
    auto table = tau_mu_table(n_max);
    for (int n = 2; n <= n_max; ++n) {
        auto patterns = max_height_pattern({-1, 0, 1}, n);
        if (patterns.size() != 2) return fail(name, "expected both patterns at n=" + std::to_string(n));
        for (const auto& t : patterns) {
            ToeplitzSpec spec{n, t, +1};
            if (height(charpoly_toeplitz(spec)).height != table[static_cast<std::size_t>(n) - 1].tau)
                return fail(name, "pattern misses tau_n for " + spec_to_string(spec));
        }
    }
    return pass(name, "all-(-1) and alternating patterns attain tau_n, n<=" + std::to_string(n_max));
}

CheckResult check_height_independence(int n_max) {
    const std::string name = "height independence of trailing entries";
    auto table = tau_mu_table(n_max);
    for (int n = 2; n <= n_max; ++n) {
        const auto& rec = table[static_cast<std::size_t>(n) - 1];
        std::uint64_t combos = 1;
        for (int i = 0; i < rec.mu; ++i) combos *= 3;
        for (const auto& base : max_height_pattern({-1, 0, 1}, n)) {
            for (std::uint64_t combo = 0; combo < combos; ++combo) {
                ToeplitzSpec spec{n, base, +1};
                std::uint64_t rest = combo;
                for (int j = n - rec.mu + 1; j <= n; ++j) {
                    spec.t[static_cast<std::size_t>(j) - 1] = static_cast<long>(rest % 3) - 1;
                    rest /= 3;
                }
                if (height(charpoly_toeplitz(spec)).height != rec.tau)
                    return fail(name, "perturbation changed the height: " + spec_to_string(spec));
            }
        }
    }
    return pass(name, "t_j free for j > n - mu_n, 2<=n<=" + std::to_string(n_max));
}

CheckResult check_negation_invariance(int n_max) {
    const std::string name = "negation height invariance";
    for (int n = 1; n <= n_max; ++n) {
        for (std::uint64_t index = 0; index < family_size(n, false); ++index) {
            ToeplitzSpec spec = family_spec_at(n, false, index);
            ToeplitzSpec negated = spec;
            for (int k = 1; k <= n; ++k)
                if (k & 1) negated.t[static_cast<std::size_t>(k) - 1] *= -1;
            IntPolynomial p = charpoly_toeplitz(spec);
            IntPolynomial q = charpoly_toeplitz(negated);
            for (int j = 0; j <= n; ++j) {
                mpz_class expected = ((n - j) & 1) ? -p.coeff(j) : p.coeff(j);
                if (q.coeff(j) != expected)
                    return fail(name, "coefficient map failed for " + spec_to_string(spec));
            }
            HeightResult hp = height(p), hq = height(q);
            if (hp.height != hq.height || hp.mu != hq.mu)
                return fail(name, "height changed under negation for " + spec_to_string(spec));
        }
    }
    return pass(name, "t_k -> (-1)^k t_k maps p_{n,j} -> (-1)^(n-j) p_{n,j}, n<=" + std::to_string(n_max));
}

CheckResult check_coefficient_independence(int n_max) {
    const std::string name = "coefficient prefix independence";
    for (int n = 1; n <= n_max; ++n) {
        // p_{n,i} may depend only on t_1..t_{n-i}; bucket members by prefix
        for (int i = 0; i <= n; ++i) {
            std::map<std::vector<long>, mpz_class> by_prefix;
            FamilyCharpolyScanner scanner(n, false);
            bool ok = true;
            scanner.scan(0, family_size(n, false),
                         [&](std::uint64_t, const std::vector<long>& t, const std::vector<mpz_class>& coeffs) {
                             if (!ok) return;
                             std::vector<long> prefix(t.begin(), t.begin() + (n - i));
                             auto [it, inserted] = by_prefix.emplace(std::move(prefix), coeffs[static_cast<std::size_t>(i)]);
                             if (!inserted && it->second != coeffs[static_cast<std::size_t>(i)]) ok = false;
                         });
            if (!ok)
                return fail(name, "p_{n,i} depends on a trailing entry at n=" + std::to_string(n) +
                                      ", i=" + std::to_string(i));
        }
    }
    return pass(name, "p_{n,i} determined by t_1..t_{n-i}, n<=" + std::to_string(n_max));
}

CheckResult check_composition_identities(int comp_max, int tri_max, int gen_i_max, int gen_len,
                                          unsigned seed) {
    const std::string name = "composition and series identities";
    // composition correspondence
    for (int n = 1; n <= comp_max; ++n) {
        auto comps = compositions(n);
        mpz_class expected_count;
        mpz_ui_pow_ui(expected_count.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
        if (mpz_class(static_cast<unsigned long>(comps.size())) != expected_count)
            return fail(name, "composition count != 2^(n-1) at n=" + std::to_string(n));
        std::map<std::vector<int>, mpz_class> by_multiset;
        for (auto parts : comps) {
            std::sort(parts.begin(), parts.end());
            by_multiset[parts] += 1;
        }
        CompositionPolynomial sym = symbolic_p_n0(n);
        if (sym.terms().size() != by_multiset.size())
            return fail(name, "term count mismatch at n=" + std::to_string(n));
        for (const auto& [monomial, coefficient] : sym.terms()) {
            auto it = by_multiset.find(monomial);
            if (it == by_multiset.end() || it->second != coefficient)
                return fail(name, "coefficient != composition count at n=" + std::to_string(n));
        }
        if (sym.eval(std::vector<mpz_class>(static_cast<std::size_t>(n), 1)) != expected_count)
            return fail(name, "evaluation at all-ones != 2^(n-1) at n=" + std::to_string(n));
    }
    // triangle and generating-function identities against the coefficient recurrence
    int ladder_max = std::max(tri_max * 2, gen_i_max + gen_len);
    auto ladder = charpoly_toeplitz_ladder(all_minus_one(ladder_max));
    for (int i = 0; i <= tri_max; ++i)
        for (int n = 0; n <= tri_max; ++n)
            if (T_closed_form(n + i + 1, i + 1) != ladder[static_cast<std::size_t>(i + n)].coeff(i))
                return fail(name, "triangle identity fails at i=" + std::to_string(i) +
                                      ", n=" + std::to_string(n));
    for (int i = 0; i <= gen_i_max; ++i) {
        auto series = genfun_coeffs(i, gen_len);
        for (int l = 0; l < gen_len; ++l)
            if (series[static_cast<std::size_t>(l)] != ladder[static_cast<std::size_t>(i + l)].coeff(i))
                return fail(name, "generating function fails at i=" + std::to_string(i) +
                                      ", l=" + std::to_string(l));
    }
    // sign bridge: symbolic p_{n,0} at t_k = -t'_k equals the subdiag +1
    // constant term of t' (the (-1)^n factors cancel)
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int n = 1; n <= 8; ++n) {
        CompositionPolynomial sym = symbolic_p_n0(n);
        for (int sample = 0; sample < 50; ++sample) {
            ToeplitzSpec spec;
            spec.n = n;
            spec.subdiag = +1;
            spec.t.resize(static_cast<std::size_t>(n));
            std::vector<mpz_class> negated(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                spec.t[static_cast<std::size_t>(k)] = entry(rng);
                negated[static_cast<std::size_t>(k)] = -spec.t[static_cast<std::size_t>(k)];
            }
            if (sym.eval(negated) != charpoly_coeffs(spec).coeff(0))
                return fail(name, "sign bridge fails for " + spec_to_string(spec));
        }
    }
    std::ostringstream detail;
    detail << "compositions n<=" << comp_max << ", triangle i,n<=" << tri_max << ", series i<="
           << gen_i_max << " len " << gen_len << ", sign bridge n<=8";
    return pass(name, detail.str());
}

CheckResult check_extended_sequences(int n_max) {
    const std::string name = "extended sequence identities";
    // the floor formulas are known to break at exactly these indices
    auto fib_exception = [](int n) { return n == 24148 || n == 24149; };
    auto mu_exception = [](int n) { return n == 24149; };
    std::vector<int> mu_values;
    mu_values.reserve(static_cast<std::size_t>(n_max) + 1);
    tau_mu_stream(n_max + 1, [&](const MaxHeightRecord& rec) { mu_values.push_back(rec.mu); });
    for (int n = 3; n <= n_max; ++n) {
        int delta = mu_values[static_cast<std::size_t>(n)] - mu_values[static_cast<std::size_t>(n) - 1];
        bool fib_ok = (delta == fibword_a(n + 326));
        if (fib_ok == fib_exception(n))
            return fail(name, std::string("fibword identity ") + (fib_ok ? "unexpectedly holds" : "fails") +
                                  " at n=" + std::to_string(n));
        bool mu_ok = (mu_formula(n) == mu_values[static_cast<std::size_t>(n) - 1]);
        if (mu_ok == mu_exception(n))
            return fail(name, std::string("mu formula ") + (mu_ok ? "unexpectedly holds" : "fails") +
                                  " at n=" + std::to_string(n));
    }
    std::ostringstream detail;
    detail << "identities hold up to n=" << n_max;
    if (n_max >= 24148) detail << " apart from the known exceptions at 24148/24149";
    return pass(name, detail.str());
}

VerifyLevel verify_level_from_name(const std::string& name) {
    if (name == "quick") return VerifyLevel::quick;
    if (name == "full") return VerifyLevel::full;
    if (name == "extended") return VerifyLevel::extended;
    throw std::invalid_argument("unknown verify level: " + name);
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    if (options.level == VerifyLevel::quick) {
        results.push_back(check_four_way_agreement(5, 0, -1, 0, options.seed));
        results.push_back(check_cardinality(5));
        results.push_back(check_census(6, options.workers));
        results.push_back(check_closed_form(60));
        results.push_back(check_binomial_form(20));
        results.push_back(check_positivity_and_constant_term(120));
        results.push_back(check_sequence_identities(300));
        results.push_back(check_shift_decomposition(5));
        results.push_back(check_pattern_witnesses(8));
        results.push_back(check_height_independence(8));
        results.push_back(check_negation_invariance(5));
        results.push_back(check_coefficient_independence(5));
        results.push_back(check_composition_identities(8, 10, 8, 16, options.seed));
        return results;
    }
    results.push_back(check_four_way_agreement(5, 6, 8, 1000, options.seed));
    results.push_back(check_cardinality(8));
    results.push_back(check_census(10, options.workers));
    results.push_back(check_closed_form(200));
    results.push_back(check_binomial_form(40));
    results.push_back(check_positivity_and_constant_term(500));
    results.push_back(check_sequence_identities(2000));
    results.push_back(check_growth_window(500, 1000, 1e-2));
    results.push_back(check_shift_decomposition(8));
    results.push_back(check_pattern_witnesses(12));
    results.push_back(check_height_independence(10));
    results.push_back(check_negation_invariance(6));
    results.push_back(check_coefficient_independence(6));
    results.push_back(check_composition_identities(12, 20, 15, 30, options.seed));
    if (options.level == VerifyLevel::extended)
        results.push_back(check_extended_sequences(options.extended_nmax));
    return results;
}

}  // namespace bht
