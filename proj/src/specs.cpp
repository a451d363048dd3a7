#include "bht/specs.hpp"

#include <stdexcept>

namespace bht {

namespace {

std::size_t packed_index(int n, int i, int j) {
    // row i of the upper triangle starts after i full rows of shrinking width
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 +
           static_cast<std::size_t>(j - i);
}

}  // namespace

void ToeplitzSpec::validate() const {
    if (n < 0) throw std::invalid_argument("ToeplitzSpec: order must be non-negative");
    if (static_cast<int>(t.size()) != n)
        throw std::invalid_argument("ToeplitzSpec: entry vector length must equal the order");
    if (subdiag != 1 && subdiag != -1)
        throw std::invalid_argument("ToeplitzSpec: subdiagonal must be +1 or -1");
}

long HessenbergSpec::upper_at(int i, int j) const {
    return upper[packed_index(n, i, j)];
}

long& HessenbergSpec::upper_at(int i, int j) {
    return upper[packed_index(n, i, j)];
}

void HessenbergSpec::validate() const {
    if (n < 0) throw std::invalid_argument("HessenbergSpec: order must be non-negative");
    if (upper.size() != static_cast<std::size_t>(n) * (n + 1) / 2)
        throw std::invalid_argument("HessenbergSpec: upper triangle has wrong size");
    if (subdiag != 1 && subdiag != -1)
        throw std::invalid_argument("HessenbergSpec: subdiagonal must be +1 or -1");
}

HessenbergSpec HessenbergSpec::from_toeplitz(const ToeplitzSpec& spec) {
    spec.validate();
    HessenbergSpec h;
    h.n = spec.n;
    h.subdiag = spec.subdiag;
    h.upper.resize(static_cast<std::size_t>(spec.n) * (spec.n + 1) / 2);
    for (int i = 0; i < spec.n; ++i)
        for (int j = i; j < spec.n; ++j) h.upper_at(i, j) = spec.t[static_cast<std::size_t>(j - i)];
    return h;
}

std::uint64_t family_size(int n, bool zero_diag) {
    if (n < 1) throw std::invalid_argument("family_size: order must be positive");
    int digits = zero_diag ? n - 1 : n;
    std::uint64_t size = 1;
    for (int i = 0; i < digits; ++i) size *= 3;
    return size;
}

ToeplitzSpec family_spec_at(int n, bool zero_diag, std::uint64_t index) {
    std::uint64_t size = family_size(n, zero_diag);
    if (index >= size) throw std::out_of_range("family_spec_at: index out of range");
    ToeplitzSpec spec;
    spec.n = n;
    spec.subdiag = +1;
    spec.t.assign(static_cast<std::size_t>(n), 0);
    int first = zero_diag ? 1 : 0;  // t_1 stays 0 when the diagonal is pinned
    for (int pos = n - 1; pos >= first; --pos) {
        spec.t[static_cast<std::size_t>(pos)] = static_cast<long>(index % 3) - 1;
        index /= 3;
    }
    return spec;
}

}  // namespace bht
