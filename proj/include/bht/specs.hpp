#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace bht {

/// Upper Hessenberg Toeplitz matrix descriptor. t[k-1] holds t_k, the value of
/// the (k-1)-th superdiagonal (t_1 is the main diagonal); the subdiagonal is
/// constant subdiag in {+1, -1}.
struct ToeplitzSpec {
    int n = 0;
    std::vector<long> t;
    int subdiag = +1;

    /// Throws std::invalid_argument unless n >= 0, t.size() == n and
    /// subdiag in {+1, -1}.
    void validate() const;

    bool operator==(const ToeplitzSpec& other) const = default;
};

/// General upper Hessenberg matrix: upper triangle plus diagonal entries, with
/// constant subdiagonal s in {+1, -1}. Entries below the subdiagonal are zero.
struct HessenbergSpec {
    int n = 0;
    std::vector<long> upper;  // packed row-major, entries (i,j) with 0 <= i <= j < n
    int subdiag = +1;

    long upper_at(int i, int j) const;  // requires 0 <= i <= j < n
    long& upper_at(int i, int j);
    void validate() const;

    static HessenbergSpec from_toeplitz(const ToeplitzSpec& spec);
};

struct MaxHeightRecord {
    int n;
    mpz_class tau;
    int mu;
};

/// Number of members of the order-n ternary family (entries in {-1,0,+1},
/// subdiagonal +1): 3^n, or 3^(n-1) when the diagonal is pinned to zero.
std::uint64_t family_size(int n, bool zero_diag);

/// Member `index` of the family in odometer order: index written in base 3
/// with t_1 as the most significant digit and digits mapped 0 -> -1, 1 -> 0,
/// 2 -> +1. With zero_diag, t_1 = 0 and the digits cover t_2..t_n.
ToeplitzSpec family_spec_at(int n, bool zero_diag, std::uint64_t index);

}  // namespace bht
