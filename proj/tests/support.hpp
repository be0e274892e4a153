#pragma once

#include "cremona/field.hpp"
#include "cremona/poly.hpp"
#include "cremona/projective.hpp"
#include "cremona/random.hpp"

namespace testing_support {

using namespace cremona;

inline MultiPoly X() { return MultiPoly::variable(3, 0); }
inline MultiPoly Y() { return MultiPoly::variable(3, 1); }
inline MultiPoly Z() { return MultiPoly::variable(3, 2); }

inline MultiPoly random_form(int nvars, int degree, Rng& rng) {
  MultiPoly f(nvars, degree);
  for (const auto& e : monomials(nvars, degree)) f.add_term(e, rng.uniform());
  return f;
}

inline ProjectivePoint random_point(int n, Rng& rng) {
  for (;;) {
    std::vector<Fp> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = rng.uniform();
    bool zero = true;
    for (Fp x : c) zero = zero && x.is_zero();
    if (!zero) return ProjectivePoint(c);
  }
}

}  // namespace testing_support
