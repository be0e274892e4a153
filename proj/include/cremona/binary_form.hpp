#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/poly.hpp"

namespace cremona {

// Dense binary form c_0 y^n + c_1 y^{n-1} z + ... + c_n z^n, stored as the
// coefficient array [c_0, ..., c_n] of exact length n + 1. The zero form
// keeps its degree.
class BinaryForm {
 public:
  explicit BinaryForm(int degree = 0);
  explicit BinaryForm(std::vector<Fp> coefficients);

  static BinaryForm one() { return BinaryForm(std::vector<Fp>{Fp(1)}); }
  // The linear form mu*y - lambda*z, vanishing exactly at (lambda:mu).
  static BinaryForm vanishing_at(Fp lambda, Fp mu);
  // Reads a 2-variable MultiPoly in (y,z).
  static BinaryForm from_poly(const MultiPoly& f);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept;
  const std::vector<Fp>& coefficients() const noexcept { return c_; }
  Fp operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

  Fp evaluate(Fp y, Fp z) const;
  // Form in (x,y,z) (nvars 3) or (y,z) (nvars 2).
  MultiPoly to_poly(int nvars) const;

  // Scaled so that the last nonzero coefficient is 1.
  BinaryForm monic() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(BinaryForm a, Fp s);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Fp> c_;
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

// a / b when b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<BinaryForm> exact_divide(const BinaryForm& a, const BinaryForm& b);

// Largest k with (mu*y - lambda*z)^k dividing r. Throws ZeroForm.
int binary_root_multiplicity(const BinaryForm& r, Fp lambda, Fp mu);

// Monic gcd, including common powers of y and z. gcd(f, 0) = monic(f);
// a constant gcd is the degree-0 form 1. Throws BothZero.
BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b);

}  // namespace cremona
