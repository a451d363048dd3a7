#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bht/poly.hpp"
#include "bht/specs.hpp"

namespace bht {

/// Characteristic polynomial det(zI - M_n) of an upper Hessenberg Toeplitz
/// matrix, via the polynomial recurrence
///   P_n = z P_{n-1} - sum_{k=1}^n s^(k-1) t_k P_{n-k},   P_0 = 1.
IntPolynomial charpoly_toeplitz(const ToeplitzSpec& spec);

/// Same, but returning the whole ladder P_0..P_n. P_m is the characteristic
/// polynomial of the order-m leading principal submatrix.
std::vector<IntPolynomial> charpoly_toeplitz_ladder(const ToeplitzSpec& spec);

/// Characteristic polynomial via the coefficient recurrence
///   p_{n,n} = 1,
///   p_{n,j} = p_{n-1,j-1} - sum_{k=1}^{n-j} s^(k-1) t_k p_{n-k,j},
///   p_{n,0} = -sum_{k=1}^{n} s^(k-1) t_k p_{n-k,0},
///   p_{0,0} = 1.
/// Agrees with charpoly_toeplitz on every input.
IntPolynomial charpoly_coeffs(const ToeplitzSpec& spec);

/// Characteristic polynomial of a general upper Hessenberg matrix:
///   Q_n = z Q_{n-1} - sum_{k=1}^n s^(k-1) h_{n-k+1,n} Q_{n-k},   Q_0 = 1.
IntPolynomial charpoly_hessenberg(const HessenbergSpec& spec);

/// Independent oracle: det(zI - H) expanded as the signed permutation sum,
/// with exact degree-<=1 polynomial entries. No recurrence involved.
/// Capped at n <= 8; throws std::length_error beyond.
IntPolynomial leibniz_oracle(const HessenbergSpec& spec);

/// Characteristic polynomial of the all-(-1) member (the maximal-height
/// family), computed as the integer-polynomial matrix power
/// [[z,1],[z,2]]^n applied to (1,1), reading off the first component.
IntPolynomial closed_form_maxheight(int n);

/// The same polynomial evaluated at an integer point through the explicit
/// binomial double sum
///   sum_l C(n,2l) (z/2+1)^(n-2l) (1+z^2/4)^l
///   + (z/2) sum_l C(n,2l+1) (z/2+1)^(n-2l-1) (1+z^2/4)^l
/// over exact rationals. The result is always an integer.
mpq_class closed_form_binomial_eval(int n, const mpz_class& z);

/// Sequential charpoly scan over an index range of the ternary family in
/// odometer order. Between consecutive indices only the recurrence rows below
/// the first changed entry are recomputed, so a full sweep costs far less
/// than independent per-member evaluations.
class FamilyCharpolyScanner {
  public:
    FamilyCharpolyScanner(int n, bool zero_diag);

    /// Calls visit(index, t, coeffs) for every index in [begin, end).
    /// `coeffs` are the characteristic polynomial coefficients in ascending
    /// degree order (monic, degree n); the buffers are reused between calls.
    void scan(std::uint64_t begin, std::uint64_t end,
              const std::function<void(std::uint64_t, const std::vector<long>&,
                                       const std::vector<mpz_class>&)>& visit);

  private:
    void recompute_rows(int from);

    int n_;
    bool zero_diag_;
    std::vector<long> t_;
    std::vector<std::vector<mpz_class>> rows_;  // rows_[m][j] = p_{m,j}
};

}  // namespace bht
