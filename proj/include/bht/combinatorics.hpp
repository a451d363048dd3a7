#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace bht {

/// Entry T_{n,k} of the directed column-convex polyomino triangle:
///   sum_{j} C(k+j, k-1) C(n-k-1, j)  for k < n,  1 for k = n.
/// Satisfies p_{n,k} = T_{n+1,k+1} for the all-(-1) family coefficients.
/// Requires 1 <= k <= n.
mpz_class T_closed_form(long n, long k);

/// First `len` power-series coefficients of G_i(x) = ((1-x)/(1-2x))^(i+1),
/// by truncated exact integer series arithmetic. Coefficient l equals
/// p_{i+l,i} of the all-(-1) family.
std::vector<mpz_class> genfun_coeffs(int i, int len);

/// All ordered compositions of n >= 1, in lexicographic order.
std::vector<std::vector<int>> compositions(int n);

/// Sparse polynomial in the symbols t_1..t_n. A monomial is the sorted
/// multiset of part indices (e.g. {1,1,2} is t_1^2 t_2); coefficients are
/// positive integers, zero terms are never stored.
class CompositionPolynomial {
  public:
    struct MonomialOrder {
        // total degree descending, then ascending lexicographic part order
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        }
    };
    using TermMap = std::map<std::vector<int>, mpz_class, MonomialOrder>;

    CompositionPolynomial() = default;

    void add_term(std::vector<int> monomial, const mpz_class& coefficient);
    const TermMap& terms() const { return terms_; }

    /// Substitutes values[k-1] for t_k and sums the terms exactly.
    mpz_class eval(const std::vector<mpz_class>& values) const;

    /// Canonical text, e.g. "t1^4 + 3*t1^2*t2 + 2*t1*t3 + t2^2 + t4".
    /// The zero polynomial prints as "0", the empty monomial as "1".
    std::string to_string() const;

    bool operator==(const CompositionPolynomial& other) const { return terms_ == other.terms_; }

  private:
    TermMap terms_;
};

/// The multivariate constant term p_{n,0} = sum_{k=1}^n t_k p_{n-k,0} with
/// p_{0,0} = 1 (subdiagonal -1 convention). Grouping the compositions of n
/// by part multiset reproduces exactly these terms.
CompositionPolynomial symbolic_p_n0(int n);

}  // namespace bht
