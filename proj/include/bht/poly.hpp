#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace bht {

/// Dense univariate polynomial over Z, coefficients in ascending degree order.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({1}); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^j; zero outside the stored range.
    const mpz_class& coeff(int j) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPolynomial& other) const { return !(*this == other); }
    bool operator<(const IntPolynomial& other) const;

    std::string to_string() const;

  private:
    std::vector<mpz_class> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_negate(const IntPolynomial& a);
IntPolynomial poly_scale(const IntPolynomial& a, const mpz_class& c);

/// Multiplication by z: every degree is raised by one, constant term becomes 0.
IntPolynomial poly_shift_mul(const IntPolynomial& a);

struct HeightResult {
    mpz_class height;
    int mu;  // largest degree attaining the height
};

/// Height of a nonzero polynomial: max |coeff_j| together with the largest j
/// attaining it. Throws std::domain_error on the zero polynomial.
HeightResult height(const IntPolynomial& p);

/// Exact evaluation at an integer point (Horner).
mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x);

/// p(z + c), computed exactly.
IntPolynomial poly_compose_shift(const IntPolynomial& p, const mpz_class& c);

/// JSON form: array of decimal coefficient strings, ascending degree.
std::string poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const std::string& text);

}  // namespace bht
