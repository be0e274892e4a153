#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/oracle.hpp"
#include "cremona/poly.hpp"
#include "cremona/projective.hpp"

namespace cremona {

class Rng;

struct PointCondition {
  ProjectivePoint point;
  int multiplicity = 1;
};

// p0 with assigned multiplicity r-1 and 2r-2 simple points.
struct PointConfiguration {
  int r = 2;
  ProjectivePoint p0 = ProjectivePoint::of({1, 0, 0});
  std::vector<ProjectivePoint> simple_points;

  // Throws InvalidConfiguration: r < 2, wrong point count, repeated points.
  void validate() const;
  // (r-1, 1, ..., 1) in the order p0, simple points.
  std::vector<int> multiplicities() const;
};

// X_r = V(t1) and Y_{r-1} = V(f), in coordinates where p0 = (1:0:0).
struct DeJonquieresWitness {
  MultiPoly t1{3, 0};
  MultiPoly f{3, 0};
};

struct PlaneCremonaMap {
  // (t1 : y f : z f) pulled back to the configuration's coordinates.
  std::array<MultiPoly, 3> components{MultiPoly(3, 0), MultiPoly(3, 0), MultiPoly(3, 0)};
  DeJonquieresWitness witness;
  PointConfiguration config;
  // Sends original coordinates to normalized ones: M·p0 = (1:0:0), and an
  // original-coordinate form is its normalized version composed with M.
  LinearChange normalization = LinearChange::identity(3);
  std::vector<std::string> warnings;
};

struct PlaneVerification {
  std::array<Fp, 3> member_a{};
  std::array<Fp, 3> member_b{};
  std::vector<DeclaredBasePoint> base;
  IntersectionReport report;
};

// Basis of the degree-n forms in (x,y,z) vanishing to order >= m at each
// (point, m). Rows of the condition matrix are the Hasse derivatives of
// order < m at the point.
std::vector<MultiPoly> curves_through(int degree, std::span<const PointCondition> conditions);

// Normalization for a configuration: a change M with M·p0 = (1:0:0).
LinearChange normalizing_change(const ProjectivePoint& p0);

// Checks every witness invariant in normalized coordinates. Throws
// MultiplicityFailure, IrreducibilityFailure or FixedComponent.
void validate_witness(const DeJonquieresWitness& w, int r, std::span<const ProjectivePoint> normalized_simple_points);

// A form x*u_{r-1} + u_r with u_{r-1} != 0 has a line through (1:0:0) as a
// component iff gcd(u_{r-1}, u_r) is nonconstant.
bool has_line_through_origin(const MultiPoly& t1);

PlaneCremonaMap build_de_jonquieres(const PointConfiguration& config, Rng& rng,
                                    const std::optional<MultiPoly>& t1_override = std::nullopt,
                                    int retry_budget = kDefaultRetryBudget);

// Declared base table: (p0, (r-1)^2) then (p_i, 1).
std::vector<DeclaredBasePoint> homaloidal_base(const PointConfiguration& config);

// Two random members of the net must meet in exactly one point off the base
// points, with the expected multiplicities there. Throws HomaloidalFailure,
// or propagates CommonComponent / GenericityExhausted.
PlaneVerification verify_homaloidal_net(const std::array<MultiPoly, 3>& components, const PointConfiguration& config,
                                        Rng& rng, int retry_budget = kDefaultRetryBudget);
PlaneVerification verify_plane_homaloidal(const PlaneCremonaMap& map, Rng& rng,
                                          int retry_budget = kDefaultRetryBudget);

MultiPoly net_member(const std::array<MultiPoly, 3>& components, const std::array<Fp, 3>& coeffs);

// 2r-1 random points, pairwise distinct, no two simple points on one line
// through p0.
PointConfiguration random_configuration(int r, Rng& rng);

}  // namespace cremona
