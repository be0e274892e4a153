#include "cremona/gcd.hpp"

#include <algorithm>

#include "cremona/error.hpp"

namespace cremona {

namespace {

// Polynomial in x with homogeneous binary-form coefficients; coeffs[i] has
// degree total - i. Trailing zero coefficients are trimmed.
struct XPoly {
  int total = 0;
  std::vector<BinaryForm> coeffs;

  int x_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

XPoly to_xpoly(const MultiPoly& f) {
  XPoly p{f.degree(), x_coefficients(f)};
  p.trim();
  return p;
}

BinaryForm content(const XPoly& p) {
  BinaryForm g(0);
  for (const auto& c : p.coeffs)
    if (!c.is_zero()) g = g.is_zero() ? c.monic() : binary_gcd(g, c);
  return g;
}

XPoly divide_content(const XPoly& p, const BinaryForm& c) {
  XPoly out{p.total - c.degree(), {}};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i].is_zero()) {
      out.coeffs.emplace_back(out.total - static_cast<int>(i));
      continue;
    }
    auto q = exact_divide(p.coeffs[i], c);
    if (!q) throw Error(ErrorKind::InvalidArgument, "content does not divide a coefficient");
    out.coeffs.push_back(std::move(*q));
  }
  return out;
}

XPoly primitive_part(const XPoly& p) { return divide_content(p, content(p)); }

// lc(g)^k f reduced modulo g; stays homogeneous of total f.total + deg lc(g)*k.
XPoly pseudo_remainder(XPoly f, const XPoly& g) {
  const BinaryForm& lg = g.coeffs.back();
  while (!f.is_zero() && f.x_degree() >= g.x_degree()) {
    const int shift = f.x_degree() - g.x_degree();
    const BinaryForm lf = f.coeffs.back();
    XPoly next{f.total + lg.degree(), {}};
    for (int i = 0; i <= f.x_degree(); ++i) {
      BinaryForm c = f.coeffs[static_cast<std::size_t>(i)] * lg;
      const int j = i - shift;
      if (j >= 0 && j <= g.x_degree()) c = c - lf * g.coeffs[static_cast<std::size_t>(j)];
      next.coeffs.push_back(std::move(c));
    }
    next.coeffs.pop_back();  // leading term cancels by construction
    next.trim();
    f = std::move(next);
  }
  return f;
}

}  // namespace

std::vector<BinaryForm> x_coefficients(const MultiPoly& f) {
  if (f.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "x-coefficients of a form in (x,y,z)");
  std::vector<BinaryForm> out;
  for (int i = 0; i <= f.degree(); ++i) out.emplace_back(f.degree() - i);
  std::vector<std::vector<Fp>> raw(out.size());
  for (int i = 0; i <= f.degree(); ++i) raw[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(f.degree() - i) + 1);
  for (const auto& [e, c] : f.terms()) raw[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[2])] = c;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = BinaryForm(std::move(raw[i]));
  return out;
}

MultiPoly from_x_coefficients(const std::vector<BinaryForm>& coeffs, int degree) {
  MultiPoly out(3, degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.degree() != degree - static_cast<int>(i))
      throw Error(ErrorKind::DegreeMismatch, "x-coefficient of the wrong degree");
    for (int k = 0; k <= c.degree(); ++k) out.add_term({static_cast<int>(i), c.degree() - k, k, 0}, c[k]);
  }
  return out;
}

MultiPoly trivariate_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != 3 || b.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "trivariate gcd needs forms in (x,y,z)");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero forms");
  if (b.is_zero()) return a.normalized();
  if (a.is_zero()) return b.normalized();

  XPoly pa = to_xpoly(a), pb = to_xpoly(b);
  const BinaryForm ca = content(pa), cb = content(pb);
  const BinaryForm cont = binary_gcd(ca, cb);
  XPoly f = divide_content(pa, ca), g = divide_content(pb, cb);
  if (f.x_degree() < g.x_degree()) std::swap(f, g);
  while (g.x_degree() > 0) {
    XPoly r = pseudo_remainder(f, g);
    f = std::move(g);
    if (r.is_zero()) {
      g = XPoly{};
      break;
    }
    g = primitive_part(r);
  }
  // g has x-degree 0 (coprime primitive parts) or is empty (f is the gcd).
  XPoly prim = g.is_zero() ? f : XPoly{0, {BinaryForm::one()}};
  std::vector<BinaryForm> coeffs;
  for (const auto& c : prim.coeffs) coeffs.push_back(c * cont);
  return from_x_coefficients(coeffs, prim.total + cont.degree()).normalized();
}

}  // namespace cremona
