#pragma once

#include <vector>

#include "cremona/binary_form.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// A form in (x,y,z) as a polynomial in x: entry i is the coefficient of x^i,
// a binary form in (y,z) of degree deg(f) - i.
std::vector<BinaryForm> x_coefficients(const MultiPoly& f);
MultiPoly from_x_coefficients(const std::vector<BinaryForm>& coeffs, int degree);

// gcd of two forms in (x,y,z), normalized to a leading coefficient of 1.
// Primitive remainder sequence in x over k[y,z]; the content is the binary
// gcd of the x-coefficients. Throws BothZero.
MultiPoly trivariate_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace cremona
