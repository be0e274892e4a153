#include "cremona/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

constexpr std::array<std::array<const char*, 4>, 5> kNames{{
    {"", "", "", ""},
    {"x", "", "", ""},
    {"y", "z", "", ""},
    {"x", "y", "z", ""},
    {"w", "x", "y", "z"},
}};

void require_same_shape(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::ArityMismatch, "forms in different numbers of variables");
  if (a.degree() != b.degree()) throw Error(ErrorKind::DegreeMismatch, "sum of forms of different degrees");
}

}  // namespace

MultiPoly::MultiPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > 4) throw Error(ErrorKind::InvalidArgument, "forms have 1 to 4 variables");
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly f(nvars, 1);
  Exponents e{};
  e.at(index) = 1;
  f.add_term(e, Fp(1));
  return f;
}

MultiPoly MultiPoly::constant(int nvars, Fp c) {
  MultiPoly f(nvars, 0);
  f.add_term(Exponents{}, c);
  return f;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, Fp c) {
  MultiPoly f(nvars, std::accumulate(e.begin(), e.end(), 0));
  f.add_term(e, c);
  return f;
}

MultiPoly MultiPoly::from_terms(int nvars, int degree,
                                std::initializer_list<std::pair<Exponents, std::int64_t>> terms) {
  MultiPoly f(nvars, degree);
  for (const auto& [e, c] : terms) f.add_term(e, Fp(c));
  return f;
}

void MultiPoly::check_exponents(const Exponents& e) const {
  int sum = 0;
  for (int i = 0; i < 4; ++i) {
    if (e[i] < 0 || (i >= nvars_ && e[i] != 0))
      throw Error(ErrorKind::ArityMismatch, "exponent tuple does not fit the variable count");
    sum += e[i];
  }
  if (sum != degree_) throw Error(ErrorKind::DegreeMismatch, "term of wrong degree in a homogeneous form");
}

Fp MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Fp() : it->second;
}

void MultiPoly::add_term(const Exponents& e, Fp c) {
  check_exponents(e);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_shape(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(Fp c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::ArityMismatch, "product of forms in different variables");
  MultiPoly out(a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Fp MultiPoly::evaluate(std::span<const Fp> point) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw Error(ErrorKind::ArityMismatch, "point dimension does not match the form");
  // Small degrees: per-variable power tables beat repeated pow calls.
  std::array<std::vector<Fp>, 4> pows;
  for (int i = 0; i < nvars_; ++i) {
    auto& tab = pows[i];
    tab.resize(degree_ + 1);
    tab[0] = Fp(1);
    for (int k = 1; k <= degree_; ++k) tab[k] = tab[k - 1] * point[i];
  }
  Fp acc;
  for (const auto& [e, c] : terms_) {
    Fp t = c;
    for (int i = 0; i < nvars_; ++i) t *= pows[i][e[i]];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * terms_.begin()->second.inverse();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (c != Fp(1) || degree_ == 0) {
      os << c;
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      if (wrote) os << '*';
      os << kNames[nvars_][i];
      if (k > 1) os << '^' << k;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.to_string(); }

std::vector<Exponents> monomials(int nvars, int degree) {
  std::vector<Exponents> out;
  Exponents e{};
  // Recursive fill of the first variable's exponent from high to low gives
  // decreasing lexicographic order directly.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[var] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly power(const MultiPoly& f, int k) {
  MultiPoly out = MultiPoly::constant(f.nvars(), Fp(1));
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

MultiPoly partial_derivative(const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw Error(ErrorKind::ArityMismatch, "derivative variable out of range");
  MultiPoly out(f.nvars(), std::max(f.degree() - 1, 0));
  if (f.degree() == 0) return out;
  for (const auto& [e, c] : f.terms()) {
    const int k = e[var];
    if (k == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * Fp(k));
  }
  return out;
}

MultiPoly compose(const MultiPoly& f, const Matrix& m) {
  if (m.rows() != static_cast<std::size_t>(f.nvars()))
    throw Error(ErrorKind::ArityMismatch, "substitution matrix rows must match the variable count");
  const int out_vars = static_cast<int>(m.cols());
  // powers[i][k] = (row i of m, as a linear form)^k
  std::vector<std::vector<MultiPoly>> powers((f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly lin(out_vars, 1);
    for (int j = 0; j < out_vars; ++j) {
      Exponents e{};
      e[j] = 1;
      lin.add_term(e, m(i, j));
    }
    const int top = f.degree_in(i);
    auto& row = powers[i];
    row.push_back(MultiPoly::constant(out_vars, Fp(1)));
    for (int k = 1; k <= top; ++k) row.push_back(row.back() * lin);
  }
  MultiPoly out(out_vars, f.degree());
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < f.nvars(); ++i) {
      const int k = e[i];
      if (k) t = t * powers[i][k];
    }
    out += t;
  }
  return out;
}

MultiPoly apply_linear_change(const MultiPoly& f, const LinearChange& m) {
  if (m.size() != static_cast<std::size_t>(f.nvars()))
    throw Error(ErrorKind::ArityMismatch, "linear change and form have different arity");
  return compose(f, m.matrix());
}

int vanishing_order_at(const MultiPoly& f, const ProjectivePoint& p) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "vanishing order of the zero form");
  if (p.size() != static_cast<std::size_t>(f.nvars()))
    throw Error(ErrorKind::ArityMismatch, "point dimension does not match the form");
  const MultiPoly moved = apply_linear_change(f, LinearChange::sending_origin_to(p.coords()));
  int order = moved.degree();
  for (const auto& [e, c] : moved.terms()) order = std::min(order, moved.degree() - e[0]);
  return order;
}

MultiPoly lift_to_space(const MultiPoly& f) {
  if (f.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "lift_to_space expects a form in (x,y,z)");
  MultiPoly out(4, f.degree());
  for (const auto& [e, c] : f.terms()) out.add_term({0, e[0], e[1], e[2]}, c);
  return out;
}

}  // namespace cremona
