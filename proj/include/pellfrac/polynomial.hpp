#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pellfrac/integer.hpp"

namespace pellfrac {

// Dense univariate polynomial with exact rational coefficients, constant term
// first. Degrees here never exceed 4, so no sparse representation is needed.
// Rational coefficients only occur transiently (one family divides by c - 1);
// everything user-visible is integral.
class IntPolynomial {
  public:
    IntPolynomial() : coeffs_{Rat(0)} {}
    explicit IntPolynomial(std::vector<Rat> coeffs);
    static IntPolynomial constant(const Int& v);
    static IntPolynomial from_ints(const std::vector<Int>& coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const Rat& coeff(std::size_t i) const;  // 0 beyond degree
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_integral() const;
    // Throws NonIntegralError if any coefficient is fractional.
    void assert_integral(const std::string& what) const;

    Int eval(const Int& t) const;   // requires integral result (asserted)
    Rat eval_rat(const Rat& t) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    bool is_constant_one() const;
    std::string to_string(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

} // namespace pellfrac
