#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/matrix.hpp"
#include "cremona/projective.hpp"

namespace cremona {

// Exponent tuple; entries past nvars are zero. Variables are named
// (y,z) for 2 variables, (x,y,z) for 3 and (w,x,y,z) for 4.
using Exponents = std::array<int, 4>;

// Terms iterate in decreasing lexicographic order, which is graded-lex
// order since every term of a form has the same total degree.
using TermMap = std::map<Exponents, Fp, std::greater<>>;

// Sparse homogeneous polynomial. Every stored coefficient is nonzero and
// every exponent tuple sums to degree(); the zero form keeps its degree tag.
class MultiPoly {
 public:
  MultiPoly(int nvars, int degree);

  static MultiPoly variable(int nvars, int index);
  static MultiPoly constant(int nvars, Fp c);
  static MultiPoly monomial(int nvars, const Exponents& e, Fp c);
  // Convenience for literals: terms given as (exponents, integer coefficient).
  static MultiPoly from_terms(int nvars, int degree,
                              std::initializer_list<std::pair<Exponents, std::int64_t>> terms);

  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Fp coefficient(const Exponents& e) const;
  // Accumulates c into the coefficient of e. Throws on a non-homogeneous
  // exponent or one that uses variables beyond nvars.
  void add_term(const Exponents& e, Fp c);
  // Largest exponent of variable var among the terms (0 for the zero form).
  int degree_in(int var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(Fp c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, Fp c) { return a *= c; }
  friend MultiPoly operator*(Fp c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Fp(-1); }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Fp evaluate(std::span<const Fp> point) const;
  Fp evaluate(const ProjectivePoint& point) const { return evaluate(point.coords()); }

  // Same form with the leading (graded-lex greatest) coefficient scaled to 1.
  MultiPoly normalized() const;

  std::string to_string() const;

 private:
  void check_exponents(const Exponents& e) const;

  int nvars_;
  int degree_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& f);

// All exponent tuples of the given degree, in graded-lex decreasing order.
std::vector<Exponents> monomials(int nvars, int degree);

MultiPoly power(const MultiPoly& f, int k);

// Formal partial derivative; the derivative of a constant is the zero form
// of degree 0.
MultiPoly partial_derivative(const MultiPoly& f, int var);

// f(M·X) for an nvars(f) x k matrix M; the result has k variables.
MultiPoly compose(const MultiPoly& f, const Matrix& m);

// f∘M for an invertible change of the same arity.
MultiPoly apply_linear_change(const MultiPoly& f, const LinearChange& m);

// Multiplicity of V(f) at P: move P to (1:0:...:0), then the least value of
// (degree - exponent of the first variable). Throws on the zero form.
int vanishing_order_at(const MultiPoly& f, const ProjectivePoint& p);

// View a form in (x,y,z) as a w-free form in (w,x,y,z).
MultiPoly lift_to_space(const MultiPoly& f);

}  // namespace cremona
