#include "cremona/oracle.hpp"

#include <numeric>
#include <set>

#include "cremona/error.hpp"
#include "cremona/random.hpp"
#include "cremona/resultant.hpp"

namespace cremona {

namespace {

void check_inputs(const MultiPoly& f, const MultiPoly& g, std::span<const DeclaredBasePoint> base) {
  if (f.nvars() != 3 || g.nvars() != 3) throw Error(ErrorKind::ArityMismatch, "plane curves are forms in (x,y,z)");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "intersection with the zero form");
  std::set<ProjectivePoint> seen;
  for (const auto& b : base) {
    if (b.point.size() != 3) throw Error(ErrorKind::ArityMismatch, "base points live in the plane");
    if (b.expected_multiplicity < 0) throw Error(ErrorKind::InvalidArgument, "negative expected multiplicity");
    if (!seen.insert(b.point).second) throw Error(ErrorKind::InvalidArgument, "declared base points must be distinct");
  }
}

IntersectionReport make_report(const MultiPoly& f, const MultiPoly& g, std::span<const DeclaredBasePoint> base,
                               const std::vector<int>& mults, const LinearChange& first,
                               const LinearChange& second, int attempts) {
  IntersectionReport rep;
  rep.total_degree = f.degree() * g.degree();
  for (std::size_t i = 0; i < base.size(); ++i) rep.measured.push_back({base[i].point, mults[i]});
  rep.residual = rep.total_degree - std::accumulate(mults.begin(), mults.end(), 0);
  rep.linear_change_used = first;
  rep.confirmation_change = second;
  rep.attempts = attempts;
  return rep;
}

}  // namespace

std::optional<std::vector<int>> measure_under_change(const MultiPoly& f, const MultiPoly& g,
                                                     std::span<const DeclaredBasePoint> base,
                                                     const LinearChange& change) {
  check_inputs(f, g, base);
  const MultiPoly ft = apply_linear_change(f, change);
  const MultiPoly gt = apply_linear_change(g, change);
  if (ft.coefficient({f.degree(), 0, 0, 0}).is_zero() || gt.coefficient({g.degree(), 0, 0, 0}).is_zero())
    return std::nullopt;

  const Matrix back = change.inverse().matrix();
  std::vector<ProjectivePoint> directions;
  std::set<ProjectivePoint> distinct;
  for (const auto& b : base) {
    const ProjectivePoint q = b.point.transformed(back);
    if (q[1].is_zero() && q[2].is_zero()) return std::nullopt;
    ProjectivePoint dir(std::vector<Fp>{q[1], q[2]});
    if (!distinct.insert(dir).second) return std::nullopt;
    directions.push_back(std::move(dir));
  }

  const BinaryForm r = eliminant(ft, gt);
  std::vector<int> mults;
  mults.reserve(base.size());
  for (const auto& dir : directions) mults.push_back(binary_root_multiplicity(r, dir[0], dir[1]));
  return mults;
}

IntersectionReport residual_intersection(const MultiPoly& f, const MultiPoly& g,
                                         std::span<const DeclaredBasePoint> base, Rng& rng, int retry_budget) {
  check_inputs(f, g, base);
  for (int attempt = 1; attempt <= retry_budget; ++attempt) {
    const LinearChange first = LinearChange::random(3, rng);
    const LinearChange second = LinearChange::random(3, rng);
    const auto a = measure_under_change(f, g, base, first);
    if (!a) continue;
    const auto b = measure_under_change(f, g, base, second);
    if (!b || *a != *b) continue;
    return make_report(f, g, base, *a, first, second, attempt);
  }
  throw Error(ErrorKind::GenericityExhausted,
              "no pair of agreeing generic projections within " + std::to_string(retry_budget) + " attempts");
}

IntersectionReport replay_intersection(const MultiPoly& f, const MultiPoly& g,
                                       std::span<const DeclaredBasePoint> base, const LinearChange& first,
                                       const LinearChange& second) {
  const auto a = measure_under_change(f, g, base, first);
  const auto b = measure_under_change(f, g, base, second);
  if (!a || !b) throw Error(ErrorKind::GenericityExhausted, "stored projection is not generic for these curves");
  if (*a != *b) throw Error(ErrorKind::GenericityExhausted, "stored projections disagree");
  return make_report(f, g, base, *a, first, second, 1);
}

bool check_against_expected(const IntersectionReport& report, std::span<const DeclaredBasePoint> base) {
  if (report.measured.size() != base.size()) return false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!(report.measured[i].point == base[i].point)) return false;
    if (report.measured[i].multiplicity != base[i].expected_multiplicity) return false;
  }
  return true;
}

}  // namespace cremona
