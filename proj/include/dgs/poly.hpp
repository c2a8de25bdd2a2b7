#pragma once

#include <string>
#include <vector>

#include "dgs/numeric.hpp"

namespace dgs {

// Dense univariate polynomial over the integers, coefficients by ascending
// degree. Characteristic polynomials are monic of degree n, so the vector is
// never normalized away; the zero polynomial has an empty coefficient list.
struct IntPolynomial {
    std::vector<Integer> coefficients;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> c) : coefficients(std::move(c)) {}

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    const Integer& operator[](std::size_t i) const { return coefficients[i]; }

    bool operator==(const IntPolynomial&) const = default;

    // Human-readable form, e.g. "x^3 - 3*x - 2".
    std::string str(const std::string& var = "x") const;
};

}  // namespace dgs
