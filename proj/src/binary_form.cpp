#include "cremona/binary_form.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "cremona/error.hpp"

namespace cremona {

// Dehomogenizing at y = 1 turns the coefficient array into the ordinary
// polynomial sum c_k u^k in u = z/y; products of forms are products of these
// polynomials, and a drop of the true u-degree below n is a power of y.
namespace {

using UPoly = std::vector<Fp>;

int true_degree(const UPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
    if (!p[static_cast<std::size_t>(k)].is_zero()) return k;
  return -1;
}

void trim(UPoly& p) { p.resize(static_cast<std::size_t>(true_degree(p) + 1)); }

// Returns (quotient, remainder); b nonzero.
std::pair<UPoly, UPoly> divmod(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {UPoly{}, a};
  const Fp inv = b.back().inverse();
  UPoly q(a.size() - b.size() + 1);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const Fp c = a[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(a);
  return {q, a};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

BinaryForm::BinaryForm(int degree) : c_(static_cast<std::size_t>(std::max(degree, 0)) + 1) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
}

BinaryForm::BinaryForm(std::vector<Fp> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "binary form needs degree + 1 coefficients");
}

BinaryForm BinaryForm::vanishing_at(Fp lambda, Fp mu) {
  if (lambda.is_zero() && mu.is_zero()) throw Error(ErrorKind::InvalidArgument, "(0:0) is not a direction");
  return BinaryForm(std::vector<Fp>{mu, -lambda});
}

BinaryForm BinaryForm::from_poly(const MultiPoly& f) {
  if (f.nvars() != 2) throw Error(ErrorKind::ArityMismatch, "binary form from a form in (y,z) only");
  BinaryForm out(f.degree());
  for (const auto& [e, c] : f.terms()) out.c_[static_cast<std::size_t>(e[1])] = c;
  return out;
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Fp c) { return c.is_zero(); });
}

Fp BinaryForm::evaluate(Fp y, Fp z) const {
  Fp acc;
  Fp zpow(1);
  const int n = degree();
  std::vector<Fp> ypow(c_.size());
  ypow[0] = Fp(1);
  for (std::size_t k = 1; k < c_.size(); ++k) ypow[k] = ypow[k - 1] * y;
  for (int k = 0; k <= n; ++k) {
    acc += c_[static_cast<std::size_t>(k)] * ypow[static_cast<std::size_t>(n - k)] * zpow;
    zpow *= z;
  }
  return acc;
}

MultiPoly BinaryForm::to_poly(int nvars) const {
  if (nvars != 2 && nvars != 3) throw Error(ErrorKind::ArityMismatch, "binary forms embed in 2 or 3 variables");
  MultiPoly out(nvars, degree());
  const int off = nvars - 2;
  for (int k = 0; k <= degree(); ++k) {
    Exponents e{};
    e[static_cast<std::size_t>(off)] = degree() - k;
    e[static_cast<std::size_t>(off + 1)] = k;
    out.add_term(e, c_[static_cast<std::size_t>(k)]);
  }
  return out;
}

BinaryForm BinaryForm::monic() const {
  const int t = true_degree(c_);
  if (t < 0) return *this;
  return *this * c_[static_cast<std::size_t>(t)].inverse();
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Fp> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(std::move(out));
}

BinaryForm operator*(BinaryForm a, Fp s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "sum of binary forms of different degrees");
  BinaryForm out = a;
  for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] += b.c_[k];
  return out;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b * Fp(-1); }

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << f.to_poly(2); }

std::optional<BinaryForm> exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroForm, "division by the zero form");
  const int qdeg = a.degree() - b.degree();
  if (qdeg < 0) return std::nullopt;
  auto [q, r] = divmod(a.coefficients(), b.coefficients());
  if (!r.empty()) return std::nullopt;
  // A u-degree above the formal degree means b carries more factors of y than a.
  if (true_degree(q) > qdeg) return std::nullopt;
  q.resize(static_cast<std::size_t>(qdeg) + 1);
  return BinaryForm(std::move(q));
}

int binary_root_multiplicity(const BinaryForm& r, Fp lambda, Fp mu) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroForm, "root multiplicity in the zero form");
  const BinaryForm lin = BinaryForm::vanishing_at(lambda, mu);
  int k = 0;
  BinaryForm cur = r;
  while (cur.degree() >= 1) {
    auto q = exact_divide(cur, lin);
    if (!q) break;
    cur = std::move(*q);
    ++k;
  }
  return k;
}

BinaryForm binary_gcd(const BinaryForm& a, const BinaryForm& b) {
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az && bz) throw Error(ErrorKind::BothZero, "gcd of two zero forms");
  if (bz) return a.monic();
  if (az) return b.monic();
  const int ya = a.degree() - true_degree(a.coefficients());
  const int yb = b.degree() - true_degree(b.coefficients());
  UPoly g = upoly_gcd(a.coefficients(), b.coefficients());
  const Fp inv = g.back().inverse();
  for (auto& c : g) c *= inv;
  const int deg = static_cast<int>(g.size()) - 1 + std::min(ya, yb);
  g.resize(static_cast<std::size_t>(deg) + 1);
  return BinaryForm(std::move(g));
}

}  // namespace cremona
