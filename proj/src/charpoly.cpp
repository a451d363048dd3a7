#include "bht/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace bht {

namespace {

// acc -= c * x, exact
void submul_long(mpz_class& acc, const mpz_class& x, long c) {
    if (c == 0) return;
    if (c > 0)
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
    else
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
}

// s^(k-1) for s in {+1,-1}
int sign_pow(int s, int k) {
    return ((k - 1) & 1) ? s : 1;
}

}  // namespace

std::vector<IntPolynomial> charpoly_toeplitz_ladder(const ToeplitzSpec& spec) {
    spec.validate();
    const int n = spec.n;
    std::vector<std::vector<mpz_class>> ladder(static_cast<std::size_t>(n) + 1);
    ladder[0] = {mpz_class(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<mpz_class> acc(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i < m; ++i) acc[static_cast<std::size_t>(i) + 1] = ladder[m - 1][static_cast<std::size_t>(i)];
        for (int k = 1; k <= m; ++k) {
            long c = sign_pow(spec.subdiag, k) * spec.t[static_cast<std::size_t>(k) - 1];
            if (c == 0) continue;
            const auto& pk = ladder[static_cast<std::size_t>(m - k)];
            for (std::size_t i = 0; i < pk.size(); ++i) submul_long(acc[i], pk[i], c);
        }
        ladder[static_cast<std::size_t>(m)] = std::move(acc);
    }
    std::vector<IntPolynomial> out;
    out.reserve(ladder.size());
    for (auto& row : ladder) out.emplace_back(IntPolynomial(std::move(row)));
    return out;
}

IntPolynomial charpoly_toeplitz(const ToeplitzSpec& spec) {
    return charpoly_toeplitz_ladder(spec).back();
}

IntPolynomial charpoly_coeffs(const ToeplitzSpec& spec) {
    spec.validate();
    const int n = spec.n;
    std::vector<std::vector<mpz_class>> p(static_cast<std::size_t>(n) + 1);
    p[0] = {mpz_class(1)};
    for (int m = 1; m <= n; ++m) {
        auto& row = p[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(m) + 1, mpz_class(0));
        row[static_cast<std::size_t>(m)] = 1;
        for (int j = m - 1; j >= 0; --j) {
            mpz_class& acc = row[static_cast<std::size_t>(j)];
            if (j > 0) acc = p[static_cast<std::size_t>(m) - 1][static_cast<std::size_t>(j) - 1];
            for (int k = 1; k <= m - j; ++k) {
                long c = sign_pow(spec.subdiag, k) * spec.t[static_cast<std::size_t>(k) - 1];
                submul_long(acc, p[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(j)], c);
            }
        }
    }
    return IntPolynomial(std::move(p[static_cast<std::size_t>(n)]));
}

IntPolynomial charpoly_hessenberg(const HessenbergSpec& spec) {
    spec.validate();
    const int n = spec.n;
    std::vector<std::vector<mpz_class>> q(static_cast<std::size_t>(n) + 1);
    q[0] = {mpz_class(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<mpz_class> acc(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i < m; ++i) acc[static_cast<std::size_t>(i) + 1] = q[m - 1][static_cast<std::size_t>(i)];
        for (int k = 1; k <= m; ++k) {
            long c = sign_pow(spec.subdiag, k) * spec.upper_at(m - k, m - 1);
            if (c == 0) continue;
            const auto& qk = q[static_cast<std::size_t>(m - k)];
            for (std::size_t i = 0; i < qk.size(); ++i) submul_long(acc[i], qk[i], c);
        }
        q[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return IntPolynomial(std::move(q[static_cast<std::size_t>(n)]));
}

namespace {

struct LeibnizState {
    const HessenbergSpec* spec;
    int n;
    std::uint32_t used_cols = 0;
    std::vector<mpz_class> total;

    // partial is the product of the entries chosen so far, ascending degree
    void expand(int row, int inversions, const std::vector<mpz_class>& partial) {
        if (row == n) {
            bool negate = (inversions & 1) != 0;
            for (std::size_t i = 0; i < partial.size(); ++i) {
                if (negate)
                    total[i] -= partial[i];
                else
                    total[i] += partial[i];
            }
            return;
        }
        // entries of zI - H in this row: the subdiagonal column and j >= row
        for (int col = std::max(0, row - 1); col < n; ++col) {
            if (col == row - 1) {
                descend(row, col, inversions, partial, -spec->subdiag, false);
            } else if (col == row) {
                descend(row, col, inversions, partial, -spec->upper_at(row, col), true);
            } else {
                long h = spec->upper_at(row, col);
                if (h != 0) descend(row, col, inversions, partial, -h, false);
            }
        }
    }

    void descend(int row, int col, int inversions, const std::vector<mpz_class>& partial,
                 long constant, bool add_z) {
        if ((used_cols >> col) & 1u) return;
        if (constant == 0 && !add_z) return;
        std::vector<mpz_class> next(partial.size() + (add_z ? 1 : 0));
        for (std::size_t i = 0; i < partial.size(); ++i) {
            if (add_z) next[i + 1] = partial[i];
            submul_long(next[i], partial[i], -constant);
        }
        int added = std::popcount(used_cols >> (col + 1));
        used_cols |= 1u << col;
        expand(row + 1, inversions + added, next);
        used_cols &= ~(1u << col);
    }
};

}  // namespace

IntPolynomial leibniz_oracle(const HessenbergSpec& spec) {
    spec.validate();
    if (spec.n > 8) throw std::length_error("leibniz_oracle: capped at n <= 8");
    LeibnizState state;
    state.spec = &spec;
    state.n = spec.n;
    state.total.assign(static_cast<std::size_t>(spec.n) + 1, mpz_class(0));
    state.expand(0, 0, {mpz_class(1)});
    return IntPolynomial(std::move(state.total));
}

IntPolynomial closed_form_maxheight(int n) {
    if (n < 0) throw std::domain_error("closed_form_maxheight: order must be non-negative");
    // (P, T) <- ([[z,1],[z,2]]) (P, T), starting from (1, 1)
    std::vector<mpz_class> p{mpz_class(1)}, t{mpz_class(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<mpz_class> zp(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) zp[i + 1] = p[i];
        std::vector<mpz_class> np(zp.size()), nt(zp.size());
        for (std::size_t i = 0; i < zp.size(); ++i) {
            np[i] = zp[i];
            nt[i] = zp[i];
            if (i < t.size()) {
                np[i] += t[i];
                nt[i] += 2 * t[i];
            }
        }
        p = std::move(np);
        t = std::move(nt);
    }
    return IntPolynomial(std::move(p));
}

mpq_class closed_form_binomial_eval(int n, const mpz_class& z) {
    if (n < 0) throw std::domain_error("closed_form_binomial_eval: order must be non-negative");
    mpq_class a(z + 2, 2);
    a.canonicalize();
    mpq_class b(z * z + 4, 4);
    b.canonicalize();

    std::vector<mpq_class> apow(static_cast<std::size_t>(n) + 1), bpow(static_cast<std::size_t>(n) / 2 + 1);
    apow[0] = 1;
    for (std::size_t i = 1; i < apow.size(); ++i) apow[i] = apow[i - 1] * a;
    bpow[0] = 1;
    for (std::size_t i = 1; i < bpow.size(); ++i) bpow[i] = bpow[i - 1] * b;

    mpz_class binom;
    mpq_class even_sum = 0;
    for (int l = 0; 2 * l <= n; ++l) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * l));
        even_sum += mpq_class(binom) * apow[static_cast<std::size_t>(n - 2 * l)] * bpow[static_cast<std::size_t>(l)];
    }
    mpq_class odd_sum = 0;
    for (int l = 0; 2 * l + 1 <= n; ++l) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * l + 1));
        odd_sum += mpq_class(binom) * apow[static_cast<std::size_t>(n - 2 * l - 1)] * bpow[static_cast<std::size_t>(l)];
    }
    mpq_class half_z(z, 2);
    half_z.canonicalize();
    return even_sum + half_z * odd_sum;
}

FamilyCharpolyScanner::FamilyCharpolyScanner(int n, bool zero_diag) : n_(n), zero_diag_(zero_diag) {
    if (n < 1) throw std::invalid_argument("FamilyCharpolyScanner: order must be positive");
    t_.assign(static_cast<std::size_t>(n), 0);
    rows_.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) rows_[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, mpz_class(0));
    rows_[0][0] = 1;
}

void FamilyCharpolyScanner::recompute_rows(int from) {
    for (int m = std::max(from, 1); m <= n_; ++m) {
        auto& row = rows_[static_cast<std::size_t>(m)];
        const auto& prev = rows_[static_cast<std::size_t>(m) - 1];
        row[static_cast<std::size_t>(m)] = 1;
        for (int j = m - 1; j >= 0; --j) {
            mpz_class& acc = row[static_cast<std::size_t>(j)];
            if (j > 0)
                acc = prev[static_cast<std::size_t>(j) - 1];
            else
                acc = 0;
            for (int k = 1; k <= m - j; ++k) {
                long tk = t_[static_cast<std::size_t>(k) - 1];
                if (tk == 0) continue;
                const mpz_class& src = rows_[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(j)];
                if (tk > 0)
                    mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), src.get_mpz_t());
                else
                    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), src.get_mpz_t());
            }
        }
    }
}

void FamilyCharpolyScanner::scan(std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(std::uint64_t, const std::vector<long>&,
                                                          const std::vector<mpz_class>&)>& visit) {
    if (begin >= end) return;
    if (end > family_size(n_, zero_diag_))
        throw std::out_of_range("FamilyCharpolyScanner: range exceeds the family");
    t_ = family_spec_at(n_, zero_diag_, begin).t;
    recompute_rows(1);
    for (std::uint64_t index = begin;;) {
        visit(index, t_, rows_[static_cast<std::size_t>(n_)]);
        if (++index == end) break;
        int pos = n_ - 1;
        while (t_[static_cast<std::size_t>(pos)] == 1) {
            t_[static_cast<std::size_t>(pos)] = -1;
            --pos;
        }
        ++t_[static_cast<std::size_t>(pos)];
        recompute_rows(pos + 1);
    }
}

}  // namespace bht
