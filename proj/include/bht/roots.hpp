#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bht/poly.hpp"

namespace bht {

struct RootSet {
    std::vector<std::complex<double>> roots;  // sorted by (real, imag)
    double residual = 0.0;                    // max |P(root)| / height(P)
};

class RootFindError : public std::runtime_error {
  public:
    RootFindError(const std::string& message, IntPolynomial poly)
        : std::runtime_error(message), poly_(std::move(poly)) {}
    const IntPolynomial& poly() const { return poly_; }

  private:
    IntPolynomial poly_;
};

/// All complex roots of a monic integer polynomial with 1 <= degree <= 64,
/// by Aberth-Ehrlich simultaneous iteration in double precision. Initial
/// guesses sit on a circle whose radius is a root inclusion bound computed
/// from the coefficients. Converged roots are snapped to the real axis when
/// |imag| < 1e-10 (1+|real|) and then paired with their conjugates so the
/// returned set is exactly symmetric.
/// Throws RootFindError if the residual does not reach tol within the
/// iteration cap.
RootSet find_roots(const IntPolynomial& p, double tol);

}  // namespace bht
