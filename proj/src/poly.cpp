#include "bht/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace bht {

namespace {

const mpz_class kZero = 0;

void strip_trailing_zeros(std::vector<mpz_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    strip_trailing_zeros(coeffs_);
}

const mpz_class& IntPolynomial::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(j)];
}

bool IntPolynomial::operator<(const IntPolynomial& other) const {
    if (coeffs_.size() != other.coeffs_.size()) return coeffs_.size() < other.coeffs_.size();
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        int c = cmp(coeffs_[j], other.coeffs_[j]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (j == 0 || a != 1) out << a.get_str();
        if (j > 0) {
            if (a != 1) out << "*";
            out << "z";
            if (j > 1) out << "^" << j;
        }
    }
    return out.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j < a.coeffs().size()) c[j] += a.coeffs()[j];
        if (j < b.coeffs().size()) c[j] += b.coeffs()[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j < a.coeffs().size()) c[j] += a.coeffs()[j];
        if (j < b.coeffs().size()) c[j] -= b.coeffs()[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_negate(const IntPolynomial& a) {
    std::vector<mpz_class> c(a.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = -a.coeffs()[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_scale(const IntPolynomial& a, const mpz_class& s) {
    if (s == 0) return IntPolynomial::zero();
    std::vector<mpz_class> c(a.coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeffs()[j] * s;
    return IntPolynomial(std::move(c));
}

IntPolynomial poly_shift_mul(const IntPolynomial& a) {
    if (a.is_zero()) return a;
    std::vector<mpz_class> c;
    c.reserve(a.coeffs().size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return IntPolynomial(std::move(c));
}

HeightResult height(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("height: zero polynomial has no height");
    HeightResult r{0, 0};
    for (int j = 0; j <= p.degree(); ++j) {
        mpz_class a = abs(p.coeff(j));
        if (a >= r.height) {
            r.height = a;
            r.mu = j;
        }
    }
    return r;
}

mpz_class poly_eval(const IntPolynomial& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (int j = p.degree(); j >= 0; --j) {
        acc *= x;
        acc += p.coeff(j);
    }
    return acc;
}

IntPolynomial poly_compose_shift(const IntPolynomial& p, const mpz_class& c) {
    // Horner: acc <- acc*(z + c) + p_j, from the leading coefficient down.
    std::vector<mpz_class> acc;
    for (int j = p.degree(); j >= 0; --j) {
        acc.insert(acc.begin(), mpz_class(0));
        for (std::size_t i = 0; i + 1 < acc.size(); ++i) acc[i] += c * acc[i + 1];
        acc[0] += p.coeff(j);
    }
    return IntPolynomial(std::move(acc));
}

std::string poly_to_json(const IntPolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const mpz_class& c : p.coeffs()) arr.push_back(c.get_str());
    return arr.dump();
}

IntPolynomial poly_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("poly_from_json: expected a JSON array");
    std::vector<mpz_class> c;
    c.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_string()) throw std::invalid_argument("poly_from_json: expected string coefficients");
        c.emplace_back(item.get<std::string>());
    }
    return IntPolynomial(std::move(c));
}

}  // namespace bht
