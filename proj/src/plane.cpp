#include "cremona/plane.hpp"

#include <set>

#include "cremona/binary_form.hpp"
#include "cremona/error.hpp"
#include "cremona/gcd.hpp"
#include "cremona/random.hpp"

namespace cremona {

namespace {

Fp binomial(int n, int k) {
  if (k < 0 || k > n) return Fp(0);
  Fp num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= Fp(n - i);
    den *= Fp(i + 1);
  }
  return num / den;
}

MultiPoly random_combination(const std::vector<MultiPoly>& basis, Rng& rng) {
  for (;;) {
    MultiPoly out(basis.front().nvars(), basis.front().degree());
    for (const auto& b : basis) out += b * rng.uniform();
    if (!out.is_zero()) return out;
  }
}

const ProjectivePoint kOrigin = ProjectivePoint::of({1, 0, 0});

}  // namespace

void PointConfiguration::validate() const {
  if (r < 2) throw Error(ErrorKind::InvalidConfiguration, "de Jonquieres maps need r >= 2");
  if (p0.size() != 3) throw Error(ErrorKind::InvalidConfiguration, "p0 must be a plane point");
  if (simple_points.size() != static_cast<std::size_t>(2 * r - 2))
    throw Error(ErrorKind::InvalidConfiguration, "expected 2r-2 simple points");
  std::set<ProjectivePoint> seen{p0};
  for (const auto& p : simple_points) {
    if (p.size() != 3) throw Error(ErrorKind::InvalidConfiguration, "simple points must be plane points");
    if (!seen.insert(p).second) throw Error(ErrorKind::InvalidConfiguration, "configuration points are not distinct");
  }
  // Shape guard: sum m_i = 3(r-1), sum m_i^2 = r^2 - 1.
  const auto ms = multiplicities();
  int sum = 0, sq = 0;
  for (int m : ms) {
    sum += m;
    sq += m * m;
  }
  if (sum != 3 * (r - 1) || sq != r * r - 1)
    throw Error(ErrorKind::InvalidConfiguration, "multiplicities do not satisfy the homaloidal equations");
}

std::vector<int> PointConfiguration::multiplicities() const {
  std::vector<int> ms{r - 1};
  ms.insert(ms.end(), simple_points.size(), 1);
  return ms;
}

std::vector<MultiPoly> curves_through(int degree, std::span<const PointCondition> conditions) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto monos = monomials(3, degree);
  std::vector<std::vector<Fp>> rows;
  for (const auto& cond : conditions) {
    if (cond.point.size() != 3) throw Error(ErrorKind::ArityMismatch, "plane conditions need plane points");
    for (int order = 0; order < cond.multiplicity; ++order) {
      for (const auto& alpha : monomials(3, order)) {
        std::vector<Fp> row(monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j) {
          const auto& beta = monos[j];
          Fp v(1);
          for (int i = 0; i < 3 && !v.is_zero(); ++i) {
            if (beta[i] < alpha[i]) {
              v = Fp(0);
              break;
            }
            v *= binomial(beta[i], alpha[i]) * cond.point[i].pow(static_cast<std::uint64_t>(beta[i] - alpha[i]));
          }
          row[j] = v;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix m(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = rows[i][j];
  std::vector<MultiPoly> basis;
  for (const auto& v : nullspace(m)) {
    MultiPoly f(3, degree);
    for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], v[j]);
    basis.push_back(std::move(f));
  }
  return basis;
}

LinearChange normalizing_change(const ProjectivePoint& p0) {
  if (p0 == kOrigin) return LinearChange::identity(3);
  return LinearChange::sending_origin_to(p0.coords()).inverse();
}

bool has_line_through_origin(const MultiPoly& t1) {
  const auto coeffs = x_coefficients(t1);
  const int r = t1.degree();
  if (r < 1) return false;
  const BinaryForm& u_top = coeffs[1];  // coefficient of x: u_{r-1}
  const BinaryForm& u_low = coeffs[0];  // u_r
  return binary_gcd(u_top, u_low).degree() > 0;
}

void validate_witness(const DeJonquieresWitness& w, int r, std::span<const ProjectivePoint> pts) {
  if (w.t1.nvars() != 3 || w.t1.degree() != r || w.t1.is_zero())
    throw Error(ErrorKind::MultiplicityFailure, "t1 must be a nonzero form of degree r");
  if (w.f.nvars() != 3 || w.f.degree() != r - 1 || w.f.is_zero())
    throw Error(ErrorKind::MultiplicityFailure, "f must be a nonzero form of degree r-1");
  if (vanishing_order_at(w.t1, kOrigin) != r - 1)
    throw Error(ErrorKind::MultiplicityFailure, "t1 does not have multiplicity exactly r-1 at p0");
  if (vanishing_order_at(w.f, kOrigin) < r - 2)
    throw Error(ErrorKind::MultiplicityFailure, "f has multiplicity below r-2 at p0");
  for (const auto& p : pts) {
    if (!w.t1.evaluate(p).is_zero()) throw Error(ErrorKind::MultiplicityFailure, "t1 misses a simple point");
    if (!w.f.evaluate(p).is_zero()) throw Error(ErrorKind::MultiplicityFailure, "f misses a simple point");
  }
  if (has_line_through_origin(w.t1))
    throw Error(ErrorKind::IrreducibilityFailure, "X_r contains a line through p0");
  if (trivariate_gcd(w.t1, w.f).degree() > 0)
    throw Error(ErrorKind::FixedComponent, "t1 and f share a component");
}

PlaneCremonaMap build_de_jonquieres(const PointConfiguration& config, Rng& rng,
                                    const std::optional<MultiPoly>& t1_override, int retry_budget) {
  config.validate();
  const int r = config.r;
  PlaneCremonaMap map;
  map.config = config;
  map.normalization = normalizing_change(config.p0);
  const Matrix& to_norm = map.normalization.matrix();

  std::vector<ProjectivePoint> pts;
  for (const auto& p : config.simple_points) pts.push_back(p.transformed(to_norm));

  std::vector<PointCondition> f_conds{{kOrigin, r - 2}};
  for (const auto& p : pts) f_conds.push_back({p, 1});
  const auto f_basis = curves_through(r - 1, f_conds);
  if (f_basis.empty()) throw Error(ErrorKind::EmptyLinearSystem, "no curve of degree r-1 through the configuration");
  if (f_basis.size() > 1)
    map.warnings.push_back("Y_{r-1} is not unique: linear system of dimension " + std::to_string(f_basis.size()));

  std::vector<MultiPoly> t1_basis;
  if (!t1_override) {
    std::vector<PointCondition> t_conds{{kOrigin, r - 1}};
    for (const auto& p : pts) t_conds.push_back({p, 1});
    t1_basis = curves_through(r, t_conds);
    if (t1_basis.empty()) throw Error(ErrorKind::EmptyLinearSystem, "no curve of degree r through the configuration");
  }

  std::optional<Error> last;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    DeJonquieresWitness w;
    w.f = f_basis.size() == 1 ? f_basis.front().normalized() : random_combination(f_basis, rng).normalized();
    w.t1 = t1_override ? *t1_override : random_combination(t1_basis, rng).normalized();
    try {
      validate_witness(w, r, pts);
    } catch (const Error& e) {
      last = e;
      continue;
    }
    const MultiPoly y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    const std::array<MultiPoly, 3> normalized{w.t1, y * w.f, z * w.f};
    for (std::size_t i = 0; i < 3; ++i) map.components[i] = apply_linear_change(normalized[i], map.normalization);
    map.witness = std::move(w);
    return map;
  }
  throw *last;
}

std::vector<DeclaredBasePoint> homaloidal_base(const PointConfiguration& config) {
  std::vector<DeclaredBasePoint> base{{config.p0, (config.r - 1) * (config.r - 1)}};
  for (const auto& p : config.simple_points) base.push_back({p, 1});
  return base;
}

MultiPoly net_member(const std::array<MultiPoly, 3>& components, const std::array<Fp, 3>& coeffs) {
  MultiPoly out(3, components[0].degree());
  for (std::size_t i = 0; i < 3; ++i) out += components[i] * coeffs[i];
  return out;
}

PlaneVerification verify_homaloidal_net(const std::array<MultiPoly, 3>& components, const PointConfiguration& config,
                                        Rng& rng, int retry_budget) {
  const auto base = homaloidal_base(config);
  std::string last = "no attempt made";
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    PlaneVerification v;
    for (auto& a : v.member_a) a = rng.nonzero();
    for (auto& b : v.member_b) b = rng.nonzero();
    const MultiPoly c1 = net_member(components, v.member_a);
    const MultiPoly c2 = net_member(components, v.member_b);
    if (c1.is_zero() || c2.is_zero()) continue;
    v.base = base;
    v.report = residual_intersection(c1, c2, base, rng, retry_budget);
    if (check_against_expected(v.report, base) && v.report.residual == 1) return v;
    last = "residual " + std::to_string(v.report.residual) + " (expected 1)";
  }
  throw Error(ErrorKind::HomaloidalFailure, "net is not homaloidal on its configuration: " + last);
}

PlaneVerification verify_plane_homaloidal(const PlaneCremonaMap& map, Rng& rng, int retry_budget) {
  return verify_homaloidal_net(map.components, map.config, rng, retry_budget);
}

PointConfiguration random_configuration(int r, Rng& rng) {
  if (r < 2) throw Error(ErrorKind::InvalidConfiguration, "de Jonquieres maps need r >= 2");
  auto random_point = [&rng] {
    for (;;) {
      std::vector<Fp> c{rng.uniform(), rng.uniform(), rng.uniform()};
      if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return ProjectivePoint(std::move(c));
    }
  };
  PointConfiguration config;
  config.r = r;
  config.p0 = random_point();
  const Matrix to_norm = normalizing_change(config.p0).matrix();
  std::set<ProjectivePoint> directions;
  while (config.simple_points.size() < static_cast<std::size_t>(2 * r - 2)) {
    const ProjectivePoint p = random_point();
    const ProjectivePoint q = p.transformed(to_norm);
    if (q[1].is_zero() && q[2].is_zero()) continue;
    if (!directions.insert(ProjectivePoint(std::vector<Fp>{q[1], q[2]})).second) continue;
    config.simple_points.push_back(p);
  }
  return config;
}

}  // namespace cremona
