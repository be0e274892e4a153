#include "cremona/space.hpp"

#include <set>
#include <sstream>

#include "cremona/error.hpp"
#include "cremona/gcd.hpp"
#include "cremona/random.hpp"

namespace cremona {

namespace {

const ProjectivePoint kP0 = ProjectivePoint::of({1, 0, 0});
const ProjectivePoint kO = ProjectivePoint::of({1, 0, 0, 0});

ProjectivePoint direction_of(const ProjectivePoint& p) { return ProjectivePoint(std::vector<Fp>{p[1], p[2]}); }

ProjectivePoint random_direction(Rng& rng) {
  for (;;) {
    const Fp a = rng.uniform(), b = rng.uniform();
    if (!(a.is_zero() && b.is_zero())) return ProjectivePoint(std::vector<Fp>{a, b});
  }
}

BinaryForm random_binary_form(int degree, Rng& rng) {
  std::vector<Fp> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = rng.uniform();
  return BinaryForm(std::move(c));
}

// A point off p0 whose direction is not yet used.
std::optional<ProjectivePoint> fresh_point(Rng& rng, std::set<ProjectivePoint>& used_directions) {
  std::vector<Fp> c{rng.uniform(), rng.uniform(), rng.uniform()};
  if (c[1].is_zero() && c[2].is_zero()) return std::nullopt;
  ProjectivePoint p(std::move(c));
  if (!used_directions.insert(direction_of(p)).second) return std::nullopt;
  return p;
}

MultiPoly random_member(const std::vector<MultiPoly>& basis, Rng& rng) {
  for (;;) {
    MultiPoly out(3, basis.front().degree());
    for (const auto& b : basis) out += b * rng.uniform();
    if (!out.is_zero()) return out.normalized();
  }
}

bool is_retryable(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::ArityMismatch:
    case ErrorKind::DegreeMismatch:
      return false;
    default:
      return true;
  }
}

}  // namespace

int Recipe::expected_p0_multiplicity() const {
  const int order = kind == RecipeCase::A ? d - 1 : ell;
  return order * (d - 1);
}

std::string Recipe::tag() const {
  std::ostringstream os;
  if (kind == RecipeCase::A)
    os << "A{m=" << m << "}";
  else
    os << "B{ell=" << ell << ",m=" << m << "}";
  return os.str();
}

void Recipe::validate() const {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "d must be at least 2");
  if (e < d || e > d * d) throw Error(ErrorKind::OutOfRange, range_message(d, e));
  if (kind == RecipeCase::A) {
    if (m < 0 || m > d - 1) throw Error(ErrorKind::InvalidArgument, "case A needs 0 <= m <= d-1");
    if (ell != d - 1) throw Error(ErrorKind::InvalidArgument, "case A has ell = d-1");
  } else {
    if (ell < 0 || ell > d - 2) throw Error(ErrorKind::InvalidArgument, "case B needs 0 <= ell <= d-2");
    if (m < 0 || m > 2 * d - 2) throw Error(ErrorKind::InvalidArgument, "case B needs 0 <= m <= 2d-2");
  }
  if (predicted_e() != e)
    throw Error(ErrorKind::InvalidArgument, "recipe " + tag() + " yields e = " + std::to_string(predicted_e()) +
                                                ", not " + std::to_string(e));
}

std::string range_message(int d, int e) {
  std::ostringstream os;
  os << "bidegree (" << d << "," << e << ") is outside the constructible range d <= e <= d^2 = [" << d << ", "
     << d * d << "]. Cremona transformations of P^3 with bidegree (d,e) exist exactly for sqrt(d) <= e <= d^2; "
     << "those with e < d are inverses of bidegree (e,d) maps (swap d and e) and are not constructed here.";
  return os.str();
}

Recipe plan_bidegree(int d, int e) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "d must be at least 2");
  if (e < d || e > d * d) throw Error(ErrorKind::OutOfRange, range_message(d, e));
  if (e <= 2 * d - 1) return Recipe{d, e, RecipeCase::A, d - 1, 2 * d - 1 - e};
  for (int ell = 0; ell <= d - 2; ++ell) {
    const int m = d * d - ell * (d - 1) - e;
    if (m >= 0 && m <= 2 * d - 2) return Recipe{d, e, RecipeCase::B, ell, m};
  }
  // Unreachable: consecutive ell windows overlap and ell = d-2 reaches e = d.
  throw Error(ErrorKind::OutOfRange, range_message(d, e));
}

MultiPoly make_g(const MultiPoly& a, const MultiPoly& b) {
  return MultiPoly::variable(4, 0) * lift_to_space(a) + lift_to_space(b);
}

SampledShape case_a_from_forms(int d, int m, const std::vector<ProjectivePoint>& a_directions,
                               const BinaryForm& b_low, const BinaryForm& b_top,
                               const std::vector<ProjectivePoint>& extra_directions) {
  auto reject = [](const std::string& why) { return Error(ErrorKind::InvalidConfiguration, why); };
  if (d < 2 || m < 0 || m > d - 1) throw Error(ErrorKind::InvalidArgument, "case A needs d >= 2, 0 <= m <= d-1");
  if (a_directions.size() != static_cast<std::size_t>(d - 1) ||
      extra_directions.size() != static_cast<std::size_t>(2 * d - 2 - m))
    throw Error(ErrorKind::InvalidArgument, "wrong number of directions");
  if (b_low.degree() != d - 1 || b_top.degree() != d)
    throw Error(ErrorKind::InvalidArgument, "B_{d-1}, B_d have the wrong degrees");

  std::set<ProjectivePoint> seen;
  for (const auto& dir : a_directions)
    if (!seen.insert(dir).second) throw reject("A-lines are not distinct");
  for (const auto& dir : extra_directions)
    if (!seen.insert(dir).second) throw reject("extra direction repeats a used direction");
  if (b_low.is_zero()) throw reject("B_{d-1} vanishes identically");
  if (binary_gcd(b_low, b_top).degree() > 0) throw reject("B is reducible (B_{d-1}, B_d share a factor)");

  auto point_on_b = [&](const ProjectivePoint& dir) {
    const Fp lo = b_low.evaluate(dir[0], dir[1]);
    if (lo.is_zero()) throw reject("B_{d-1} vanishes on a chosen direction");
    return ProjectivePoint(std::vector<Fp>{-b_top.evaluate(dir[0], dir[1]) / lo, dir[0], dir[1]});
  };

  SampledShape out;
  BinaryForm a_form = BinaryForm::one();
  std::vector<BinaryForm> factors;
  std::vector<ProjectivePoint> residual_points;
  for (const auto& dir : a_directions) {
    factors.push_back(BinaryForm::vanishing_at(dir[0], dir[1]));
    a_form = a_form * factors.back();
    residual_points.push_back(point_on_b(dir));
  }
  out.config.r = d;
  out.config.p0 = kP0;
  for (int i = 0; i < m; ++i) out.config.simple_points.push_back(residual_points[static_cast<std::size_t>(i)]);
  for (const auto& dir : extra_directions) out.config.simple_points.push_back(point_on_b(dir));

  out.shape.A = a_form.to_poly(3);
  out.shape.B = MultiPoly::variable(3, 0) * b_low.to_poly(3) + b_top.to_poly(3);
  out.shape.g = make_g(out.shape.A, out.shape.B);
  out.shape.a_factors = std::move(factors);
  if (trivariate_gcd(out.shape.A, out.shape.B).degree() > 0) throw reject("A and B share a component");
  out.config.validate();
  return out;
}

SampledShape sample_case_a(int d, int m, Rng& rng, int retry_budget) {
  if (d < 2 || m < 0 || m > d - 1) throw Error(ErrorKind::InvalidArgument, "case A needs d >= 2, 0 <= m <= d-1");
  std::string last;
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    std::vector<ProjectivePoint> a_dirs, extra;
    for (int i = 0; i < d - 1; ++i) a_dirs.push_back(random_direction(rng));
    const BinaryForm b_low = random_binary_form(d - 1, rng);
    const BinaryForm b_top = random_binary_form(d, rng);
    for (int i = 0; i < 2 * d - 2 - m; ++i) extra.push_back(random_direction(rng));
    try {
      SampledShape s = case_a_from_forms(d, m, a_dirs, b_low, b_top, extra);
      s.attempts = attempt;
      return s;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidConfiguration) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::GenericityExhausted, "case A sampling failed: " + last);
}

SampledShape sample_case_b(int d, int ell, int m, Rng& rng, int retry_budget) {
  if (d < 2 || ell < 0 || ell > d - 2 || m < 0 || m > 2 * d - 2)
    throw Error(ErrorKind::InvalidArgument, "case B needs 0 <= ell <= d-2 and 0 <= m <= 2d-2");
  std::string last;
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    std::set<ProjectivePoint> used;
    std::vector<ProjectivePoint> pts;
    while (pts.size() < static_cast<std::size_t>(m))
      if (auto p = fresh_point(rng, used)) pts.push_back(*p);

    std::vector<PointCondition> a_conds{{kP0, ell}};
    for (const auto& p : pts) a_conds.push_back({p, 1});
    const auto a_basis = curves_through(d - 1, a_conds);
    if (a_basis.empty()) throw Error(ErrorKind::EmptyLinearSystem, "no admissible A through the chosen points");
    const MultiPoly a = random_member(a_basis, rng);
    if (vanishing_order_at(a, kP0) != ell) {
      last = "A has multiplicity above ell at p0";
      continue;
    }

    bool stuck = false;
    while (!stuck && pts.size() < static_cast<std::size_t>(2 * d - 2)) {
      auto p = fresh_point(rng, used);
      if (!p) continue;
      if (a.evaluate(*p).is_zero()) {
        stuck = true;
        last = "extra point landed on A";
        break;
      }
      pts.push_back(*p);
    }
    if (stuck) continue;

    std::vector<PointCondition> b_conds{{kP0, ell}};
    for (const auto& p : pts) b_conds.push_back({p, 1});
    const auto b_basis = curves_through(d, b_conds);
    if (b_basis.empty()) throw Error(ErrorKind::EmptyLinearSystem, "no admissible B through the chosen points");
    const MultiPoly b = random_member(b_basis, rng);
    if (vanishing_order_at(b, kP0) != ell) {
      last = "B has multiplicity above ell at p0";
      continue;
    }
    if (trivariate_gcd(a, b).degree() > 0) {
      last = "A and B share a component";
      continue;
    }

    SampledShape out;
    out.shape.A = a;
    out.shape.B = b;
    out.shape.g = make_g(a, b);
    out.config.r = d;
    out.config.p0 = kP0;
    out.config.simple_points = std::move(pts);
    out.config.validate();
    out.attempts = attempt;
    return out;
  }
  throw Error(ErrorKind::GenericityExhausted, "case B sampling failed: " + last);
}

SpaceCremonaMap assemble(const GShape& shape, const PlaneCremonaMap& plane, const Recipe& recipe) {
  auto violation = [](const std::string& what) { return Error(ErrorKind::CriterionViolation, what); };
  const int d = recipe.d;
  if (plane.config.r != d) throw violation("degree: plane map degree differs from d");
  for (const auto& t : plane.components)
    if (t.nvars() != 3 || t.degree() != d) throw violation("degree: plane components must be forms of degree d");
  if (shape.A.nvars() != 3 || shape.A.degree() != d - 1 || shape.B.nvars() != 3 || shape.B.degree() != d)
    throw violation("degree: A and B must have degrees d-1 and d");
  if (shape.A.is_zero()) throw violation("g reducible: A vanishes, g = B is free of w");
  if (!(shape.g == make_g(shape.A, shape.B))) throw violation("shape: g differs from w*A + B");
  if (trivariate_gcd(shape.A, shape.B).degree() > 0) throw violation("g reducible: A and B share a factor");
  if (vanishing_order_at(shape.g, kO) != d - 1) throw violation("order at o: g must vanish to order d-1 at o");
  if (!(plane.config.p0 == kP0)) throw violation("p0: the plane configuration must put p0 at (1:0:0)");
  if (recipe.kind == RecipeCase::A && !(plane.witness.t1.normalized() == shape.B.normalized()))
    throw violation("X_d: case A requires t1 = B");

  SpaceCremonaMap map;
  map.g = shape.g;
  map.t = plane.components;
  map.plane = plane;
  map.recipe = recipe;
  map.shape = shape;
  return map;
}

MultiPoly slice_member(const SpaceCremonaMap& map, const std::array<Fp, 4>& coeffs, const std::array<Fp, 3>& slice) {
  Matrix embed(4, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    embed(0, j) = slice[j];
    embed(j + 1, j) = Fp(1);
  }
  MultiPoly out = compose(map.g, embed) * coeffs[0];
  for (std::size_t i = 0; i < 3; ++i) out += map.t[i] * coeffs[i + 1];
  return out;
}

std::vector<DeclaredBasePoint> space_base(const SpaceCremonaMap& map) {
  std::vector<DeclaredBasePoint> base{{map.plane.config.p0, map.recipe.expected_p0_multiplicity()}};
  for (int i = 0; i < map.recipe.m; ++i) base.push_back({map.plane.config.simple_points[static_cast<std::size_t>(i)], 1});
  return base;
}

SpaceVerification measure_space_intersection(const SpaceCremonaMap& map, std::span<const DeclaredBasePoint> base,
                                             Rng& rng, int retry_budget) {
  for (;;) {
    SpaceVerification v;
    for (auto& a : v.member_a) a = rng.nonzero();
    for (auto& b : v.member_b) b = rng.nonzero();
    for (auto& s : v.slice_form) s = rng.uniform();
    const MultiPoly s1 = slice_member(map, v.member_a, v.slice_form);
    const MultiPoly s2 = slice_member(map, v.member_b, v.slice_form);
    if (s1.is_zero() || s2.is_zero()) continue;
    v.report = residual_intersection(s1, s2, base, rng, retry_budget);
    v.base.assign(base.begin(), base.end());
    return v;
  }
}

SpaceVerification verify_space_bidegree(const SpaceCremonaMap& map, Rng& rng, int retry_budget) {
  const auto base = space_base(map);
  std::string last;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    SpaceVerification v = measure_space_intersection(map, base, rng, retry_budget);
    if (check_against_expected(v.report, base) && v.report.residual == map.recipe.e) return v;
    std::ostringstream os;
    os << "measured";
    for (const auto& mp : v.report.measured) os << ' ' << mp.point << ':' << mp.multiplicity;
    os << ", residual " << v.report.residual << " vs e = " << map.recipe.e;
    last = os.str();
  }
  throw Error(ErrorKind::BidegreeMismatch, last);
}

BidegreeCertificate forge(int d, int e, std::uint64_t seed, const ForgeOptions& options) {
  return forge_recipe(plan_bidegree(d, e), seed, options);
}

BidegreeCertificate forge_recipe(const Recipe& recipe, std::uint64_t seed, const ForgeOptions& options) {
  recipe.validate();
  const int d = recipe.d, e = recipe.e;
  std::vector<std::string> transcript;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(e),
                               static_cast<std::uint64_t>(attempt)}));
    try {
      const SampledShape sampled = recipe.kind == RecipeCase::A
                                       ? sample_case_a(d, recipe.m, rng, options.oracle_retries)
                                       : sample_case_b(d, recipe.ell, recipe.m, rng, options.oracle_retries);
      const std::optional<MultiPoly> override_t1 =
          recipe.kind == RecipeCase::A ? std::optional<MultiPoly>(sampled.shape.B.normalized()) : std::nullopt;
      const PlaneCremonaMap plane = build_de_jonquieres(sampled.config, rng, override_t1, options.oracle_retries);
      BidegreeCertificate cert;
      cert.prime = modulus();
      cert.seed = seed;
      cert.recipe = recipe;
      cert.map = assemble(sampled.shape, plane, recipe);
      cert.plane_check = verify_plane_homaloidal(cert.map.plane, rng, options.oracle_retries);
      cert.space_check = verify_space_bidegree(cert.map, rng, options.oracle_retries);
      cert.attempts = attempt + 1;
      cert.status = "verified";
      return cert;
    } catch (const Error& err) {
      if (!is_retryable(err.kind())) throw;
      transcript.push_back("attempt " + std::to_string(attempt + 1) + ": " + err.what());
    }
  }
  std::string msg = "(" + std::to_string(d) + "," + std::to_string(e) + ") via " + recipe.tag() + " failed " +
                    std::to_string(options.retries) + " times";
  for (const auto& line : transcript) msg += "\n  " + line;
  throw Error(ErrorKind::ForgeExhausted, msg);
}

PlaneCertificate forge_plane(int r, std::uint64_t seed, const ForgeOptions& options) {
  if (r < 2) throw Error(ErrorKind::InvalidConfiguration, "de Jonquieres maps need r >= 2");
  std::vector<std::string> transcript;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    Rng rng(derive_seed(seed, {0x706c616e65ULL, static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(attempt)}));
    try {
      PlaneCertificate cert;
      cert.prime = modulus();
      cert.seed = seed;
      cert.map = build_de_jonquieres(random_configuration(r, rng), rng, std::nullopt, options.oracle_retries);
      cert.check = verify_plane_homaloidal(cert.map, rng, options.oracle_retries);
      cert.attempts = attempt + 1;
      return cert;
    } catch (const Error& err) {
      if (!is_retryable(err.kind())) throw;
      transcript.push_back("attempt " + std::to_string(attempt + 1) + ": " + err.what());
    }
  }
  std::string msg = "plane map of degree " + std::to_string(r) + " failed " + std::to_string(options.retries) + " times";
  for (const auto& line : transcript) msg += "\n  " + line;
  throw Error(ErrorKind::ForgeExhausted, msg);
}

}  // namespace cremona
