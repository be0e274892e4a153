#pragma once

#include <span>
#include <vector>

#include "cremona/binary_form.hpp"
#include "cremona/field.hpp"
#include "cremona/matrix.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// Univariate coefficient arrays are ascending: index i holds the coefficient
// of x^i, and the declared degree is size() - 1.

// Sylvester matrix with the deg(g) rows of f first, then the deg(f) rows of g.
Matrix sylvester_matrix(std::span<const Fp> f, std::span<const Fp> g);

// det of sylvester_matrix(f, g). Throws BothConstant when both have degree 0.
Fp resultant_univariate(std::span<const Fp> f, std::span<const Fp> g);

// Coefficients (ascending) of the unique polynomial of degree < xs.size()
// through the points (xs[i], ys[i]); xs pairwise distinct.
std::vector<Fp> interpolate(std::span<const Fp> xs, std::span<const Fp> ys);

// Resultant of two forms in (x,y,z) with respect to x, as a binary form in
// (y,z) of degree deg(F)·deg(G). Both forms need a nonzero coefficient on
// their pure power of x (BadLeadingCoefficient otherwise, or CommonComponent
// when that failure comes from a shared factor); a vanishing
// resultant means a shared factor (CommonComponent).
BinaryForm eliminant(const MultiPoly& f, const MultiPoly& g);

}  // namespace cremona
