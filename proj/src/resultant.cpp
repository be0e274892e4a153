#include "cremona/resultant.hpp"

#include "cremona/error.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

Matrix sylvester_matrix(std::span<const Fp> f, std::span<const Fp> g) {
  if (f.empty() || g.empty()) throw Error(ErrorKind::InvalidArgument, "empty coefficient array");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  Matrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = g[n - k];
  return s;
}

Fp resultant_univariate(std::span<const Fp> f, std::span<const Fp> g) {
  if (f.size() <= 1 && g.size() <= 1) throw Error(ErrorKind::BothConstant, "resultant of two constants");
  return determinant(sylvester_matrix(f, g));
}

std::vector<Fp> interpolate(std::span<const Fp> xs, std::span<const Fp> ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw Error(ErrorKind::InvalidArgument, "interpolation data size mismatch");
  // Newton divided differences, then expansion of the Newton form.
  std::vector<Fp> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  std::vector<Fp> coeffs(n);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - xs[k]) + dd[k]
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - xs[k] * coeffs[j];
    coeffs[0] = dd[k] - xs[k] * coeffs[0];
  }
  return coeffs;
}

BinaryForm eliminant(const MultiPoly& f, const MultiPoly& g) {
  if (f.nvars() != 3 || g.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "eliminant of forms in (x,y,z)");
  const int a = f.degree();
  const int b = g.degree();
  if (a == 0 && b == 0) throw Error(ErrorKind::BothConstant, "eliminant of two constants");
  if (f.coefficient({a, 0, 0, 0}).is_zero() || g.coefficient({b, 0, 0, 0}).is_zero()) {
    if (!f.is_zero() && !g.is_zero() && trivariate_gcd(f, g).degree() > 0)
      throw Error(ErrorKind::CommonComponent, "the curves share a component");
    throw Error(ErrorKind::BadLeadingCoefficient, "coefficient of the pure x power must be nonzero");
  }
  const int n = a * b;
  if (static_cast<std::uint64_t>(n) + 1 > modulus())
    throw Error(ErrorKind::InvalidArgument, "field too small for the interpolation grid");

  // Coefficient of x^i is a binary form; at (y,z) = (t,1) it is a polynomial in t.
  auto x_slices = [](const MultiPoly& p) {
    std::vector<std::vector<std::pair<int, Fp>>> by_x(static_cast<std::size_t>(p.degree()) + 1);
    for (const auto& [e, c] : p.terms()) by_x[static_cast<std::size_t>(e[0])].emplace_back(e[1], c);
    return by_x;
  };
  const auto fs = x_slices(f);
  const auto gs = x_slices(g);
  auto specialize = [](const std::vector<std::vector<std::pair<int, Fp>>>& slices, const std::vector<Fp>& tpow) {
    std::vector<Fp> out(slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i)
      for (const auto& [ye, c] : slices[i]) out[i] += c * tpow[static_cast<std::size_t>(ye)];
    return out;
  };

  std::vector<Fp> xs(static_cast<std::size_t>(n) + 1), ys(xs.size());
  const int top = std::max(a, b);
  std::vector<Fp> tpow(static_cast<std::size_t>(top) + 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Fp t = Fp(static_cast<std::int64_t>(i));
    tpow[0] = Fp(1);
    for (std::size_t k = 1; k < tpow.size(); ++k) tpow[k] = tpow[k - 1] * t;
    xs[i] = t;
    ys[i] = resultant_univariate(specialize(fs, tpow), specialize(gs, tpow));
  }
  const std::vector<Fp> r = interpolate(xs, ys);

  // r_j t^j  ->  r_j y^j z^{n-j}; degree shortfall in t becomes a power of z.
  std::vector<Fp> form(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) form[static_cast<std::size_t>(n - j)] = r[static_cast<std::size_t>(j)];
  BinaryForm out(std::move(form));
  if (out.is_zero()) throw Error(ErrorKind::CommonComponent, "resultant vanishes identically: the curves share a component");
  return out;
}

}  // namespace cremona
