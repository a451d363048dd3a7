#include "bht/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bht {

namespace {

constexpr int kIterationCap = 500;
constexpr double kSnapFactor = 1e-10;

struct Evaluation {
    std::complex<double> value;
    std::complex<double> derivative;
};

Evaluation horner(const std::vector<double>& a, std::complex<double> z) {
    Evaluation e{a.back(), 0.0};
    for (std::size_t j = a.size() - 1; j-- > 0;) {
        e.derivative = e.derivative * z + e.value;
        e.value = e.value * z + a[j];
    }
    return e;
}

double eval_abs(const std::vector<double>& a, std::complex<double> z) {
    std::complex<double> v = a.back();
    for (std::size_t j = a.size() - 1; j-- > 0;) v = v * z + a[j];
    return std::abs(v);
}

// Root inclusion radius: min of the Cauchy bound 1 + max|a_j| and the
// Fujiwara bound 2 max_k |a_{n-k}|^(1/k), for a monic polynomial.
double inclusion_radius(const std::vector<double>& a) {
    const std::size_t n = a.size() - 1;
    double cauchy = 0.0, fujiwara = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double m = std::abs(a[j]);
        cauchy = std::max(cauchy, m);
        if (m > 0.0) fujiwara = std::max(fujiwara, std::pow(m, 1.0 / static_cast<double>(n - j)));
    }
    return std::min(1.0 + cauchy, 2.0 * fujiwara);
}

}  // namespace

RootSet find_roots(const IntPolynomial& p, double tol) {
    const int degree = p.degree();
    if (degree < 1) throw std::domain_error("find_roots: degree must be at least 1");
    if (degree > 64) throw std::length_error("find_roots: capped at degree 64");
    if (p.coeffs().back() != 1) throw std::domain_error("find_roots: polynomial must be monic");

    std::vector<double> a(p.coeffs().size());
    double height_scale = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = p.coeff(static_cast<int>(j)).get_d();
        height_scale = std::max(height_scale, std::abs(a[j]));
    }

    const std::size_t n = static_cast<std::size_t>(degree);
    std::vector<std::complex<double>> z(n);
    double radius = std::max(inclusion_radius(a), 0.5);
    for (std::size_t k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    const double target = tol * height_scale;
    bool converged = false;
    for (int iter = 0; iter < kIterationCap && !converged; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            Evaluation e = horner(a, z[i]);
            if (e.value == 0.0) continue;
            if (e.derivative == 0.0) {
                z[i] += std::complex<double>(1e-6 * (1.0 + std::abs(z[i])), 1e-6);
                continue;
            }
            std::complex<double> newton = e.value / e.derivative;
            std::complex<double> repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                std::complex<double> d = z[i] - z[j];
                if (d == 0.0) d = std::complex<double>(1e-12, 1e-12);
                repulsion += 1.0 / d;
            }
            std::complex<double> denom = 1.0 - newton * repulsion;
            std::complex<double> step = (denom == 0.0) ? newton : newton / denom;
            if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[i] -= step;
        }
        converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (eval_abs(a, z[i]) > target) {
                converged = false;
                break;
            }
        }
    }
    if (!converged)
        throw RootFindError("find_roots: no convergence within iteration cap for " + p.to_string(), p);

    // Snap near-real roots to the axis. Beyond the plain threshold, a root
    // whose real projection still meets the residual target is real for our
    // purposes; ill-conditioned real clusters scatter converged positions up
    // to ~1e-3 off the axis, and leaving them as straddlers would mislead the
    // conjugate pairing below.
    for (auto& root : z) {
        double leeway = 1.0 + std::abs(root.real());
        if (std::abs(root.imag()) < kSnapFactor * leeway ||
            (std::abs(root.imag()) < 5e-3 * leeway &&
             eval_abs(a, std::complex<double>(root.real(), 0.0)) <= target))
            root = std::complex<double>(root.real(), 0.0);
    }

    // Conjugate pairing: make the set exactly symmetric. Each upper root and
    // the conjugate of its nearest lower partner are averaged when the mean
    // still meets the residual target; otherwise the pair is replaced by the
    // exact mirror of the upper root, which for real coefficients evaluates
    // to the identical |P| and so can never spoil the residual.
    std::vector<std::size_t> upper, lower;
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i].imag() > 0.0)
            upper.push_back(i);
        else if (z[i].imag() < 0.0)
            lower.push_back(i);
    }
    auto snap_best = [&](std::vector<std::size_t>& side) {
        std::size_t best = 0;
        double best_value = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < side.size(); ++k) {
            double value = eval_abs(a, std::complex<double>(z[side[k]].real(), 0.0));
            if (value < best_value) {
                best_value = value;
                best = k;
            }
        }
        z[side[best]] = std::complex<double>(z[side[best]].real(), 0.0);
        side.erase(side.begin() + static_cast<std::ptrdiff_t>(best));
    };
    while (upper.size() > lower.size()) snap_best(upper);
    while (lower.size() > upper.size()) snap_best(lower);
    std::vector<bool> taken(lower.size(), false);
    for (std::size_t ui : upper) {
        std::size_t best = lower.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (taken[k]) continue;
            double dist = std::abs(std::conj(z[ui]) - z[lower[k]]);
            if (dist < best_dist) {
                best_dist = dist;
                best = k;
            }
        }
        taken[best] = true;
        std::complex<double> mean = 0.5 * (z[ui] + std::conj(z[lower[best]]));
        if (eval_abs(a, mean) <= target) {
            z[ui] = mean;
            z[lower[best]] = std::conj(mean);
        } else {
            z[lower[best]] = std::conj(z[ui]);
        }
    }

    RootSet result;
    result.roots = std::move(z);
    std::sort(result.roots.begin(), result.roots.end(),
              [](const std::complex<double>& x, const std::complex<double>& y) {
                  if (x.real() != y.real()) return x.real() < y.real();
                  return x.imag() < y.imag();
              });
    double worst = 0.0;
    for (const auto& root : result.roots) worst = std::max(worst, eval_abs(a, root));
    result.residual = worst / height_scale;
    return result;
}

}  // namespace bht
