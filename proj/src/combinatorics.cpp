#include "bht/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bht {

mpz_class T_closed_form(long n, long k) {
    if (k < 1 || k > n) throw std::domain_error("T_closed_form: requires 1 <= k <= n");
    if (k == n) return 1;
    mpz_class sum = 0, left, right;
    for (long j = 0; j <= n - k - 1; ++j) {
        mpz_bin_uiui(left.get_mpz_t(), static_cast<unsigned long>(k + j), static_cast<unsigned long>(k - 1));
        mpz_bin_uiui(right.get_mpz_t(), static_cast<unsigned long>(n - k - 1), static_cast<unsigned long>(j));
        sum += left * right;
    }
    return sum;
}

std::vector<mpz_class> genfun_coeffs(int i, int len) {
    if (i < 0) throw std::domain_error("genfun_coeffs: column index must be non-negative");
    if (len < 1) throw std::domain_error("genfun_coeffs: length must be positive");
    // base series (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
    std::vector<mpz_class> base(static_cast<std::size_t>(len));
    base[0] = 1;
    for (int l = 1; l < len; ++l) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(l - 1));
        base[static_cast<std::size_t>(l)] = p;
    }
    // raise to the (i+1)-th power by repeated truncated multiplication
    std::vector<mpz_class> acc(static_cast<std::size_t>(len));
    acc[0] = 1;
    for (int power = 0; power <= i; ++power) {
        std::vector<mpz_class> next(static_cast<std::size_t>(len));
        for (int a = 0; a < len; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; a + b < len; ++b)
                next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * base[static_cast<std::size_t>(b)];
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        prefix.push_back(part);
        compositions_rec(remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n) {
    if (n < 1) throw std::domain_error("compositions: requires n >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

void CompositionPolynomial::add_term(std::vector<int> monomial, const mpz_class& coefficient) {
    if (coefficient == 0) return;
    std::sort(monomial.begin(), monomial.end());
    auto it = terms_.find(monomial);
    if (it == terms_.end()) {
        terms_.emplace(std::move(monomial), coefficient);
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class CompositionPolynomial::eval(const std::vector<mpz_class>& values) const {
    mpz_class total = 0;
    for (const auto& [monomial, coefficient] : terms_) {
        mpz_class product = coefficient;
        for (int part : monomial) {
            if (part < 1 || static_cast<std::size_t>(part) > values.size())
                throw std::out_of_range("CompositionPolynomial::eval: missing value for a symbol");
            product *= values[static_cast<std::size_t>(part) - 1];
        }
        total += product;
    }
    return total;
}

std::string CompositionPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [monomial, coefficient] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool printed = false;
        if (monomial.empty() || coefficient != 1) {
            out << coefficient.get_str();
            printed = true;
        }
        // run-length encode the sorted parts into t<part>^<exponent> factors
        std::size_t pos = 0;
        while (pos < monomial.size()) {
            std::size_t run = pos;
            while (run < monomial.size() && monomial[run] == monomial[pos]) ++run;
            if (printed) out << "*";
            out << "t" << monomial[pos];
            if (run - pos > 1) out << "^" << (run - pos);
            printed = true;
            pos = run;
        }
    }
    return out.str();
}

CompositionPolynomial symbolic_p_n0(int n) {
    if (n < 0) throw std::domain_error("symbolic_p_n0: requires n >= 0");
    std::vector<CompositionPolynomial> p(static_cast<std::size_t>(n) + 1);
    p[0].add_term({}, 1);
    for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= m; ++k) {
            for (const auto& [monomial, coefficient] : p[static_cast<std::size_t>(m - k)].terms()) {
                std::vector<int> extended = monomial;
                extended.push_back(k);
                p[static_cast<std::size_t>(m)].add_term(std::move(extended), coefficient);
            }
        }
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace bht
