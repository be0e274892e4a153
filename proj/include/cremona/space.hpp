#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/binary_form.hpp"
#include "cremona/oracle.hpp"
#include "cremona/plane.hpp"
#include "cremona/poly.hpp"

namespace cremona {

class Rng;

enum class RecipeCase { A, B };

// Target bidegree (d, e) and the construction parameters that realize it.
//   case A{m}:      A = A_{d-1}(y,z),           e = 2d - 1 - m,       0 <= m <= d-1
//   case B{ell,m}:  A, B of order ell at p0,    e = d^2 - ell(d-1) - m,
//                   0 <= ell <= d-2, 0 <= m <= 2d-2
// In both cases the two slice curves meet at p0 with multiplicity
// ell*(d-1) (ell = d-1 in case A), plus 1 at each of p_1..p_m.
struct Recipe {
  int d = 2;
  int e = 2;
  RecipeCase kind = RecipeCase::A;
  int ell = 0;
  int m = 0;

  int expected_p0_multiplicity() const;
  int predicted_e() const { return d * d - expected_p0_multiplicity() - m; }
  std::string tag() const;
  // Throws OutOfRange / InvalidArgument when parameters or e are inconsistent.
  void validate() const;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

// Message for (d, e) outside d <= e <= d^2.
std::string range_message(int d, int e);

// Case A when d <= e <= 2d-1, otherwise case B with the smallest ell that
// puts m in [0, 2d-2]. Throws OutOfRange for e < d or e > d^2.
Recipe plan_bidegree(int d, int e);

// g = w*A(x,y,z) + B(x,y,z).
struct GShape {
  MultiPoly A{3, 0};
  MultiPoly B{3, 0};
  MultiPoly g{4, 0};
  // Case A: the d-1 linear factors of A_{d-1}(y,z).
  std::optional<std::vector<BinaryForm>> a_factors;
};

MultiPoly make_g(const MultiPoly& a, const MultiPoly& b);

struct SampledShape {
  GShape shape;
  PointConfiguration config;
  int attempts = 1;
};

// Deterministic core of case A: A is the product of the lines through p0 in
// the directions a_directions, B = x*b_low + b_top. The residual points of
// A = B = 0 on the first m A-lines, then the points of B = 0 on
// extra_directions, form the simple points. Throws InvalidConfiguration when
// the data is degenerate.
SampledShape case_a_from_forms(int d, int m, const std::vector<ProjectivePoint>& a_directions,
                               const BinaryForm& b_low, const BinaryForm& b_top,
                               const std::vector<ProjectivePoint>& extra_directions);

SampledShape sample_case_a(int d, int m, Rng& rng, int retry_budget = kDefaultRetryBudget);

// Points first: m random points on both A and B, then 2d-2-m points on B only.
SampledShape sample_case_b(int d, int ell, int m, Rng& rng, int retry_budget = kDefaultRetryBudget);

// T = (g : t1 : t2 : t3), the t_i free of w.
struct SpaceCremonaMap {
  MultiPoly g{4, 0};
  std::array<MultiPoly, 3> t{MultiPoly(3, 0), MultiPoly(3, 0), MultiPoly(3, 0)};
  PlaneCremonaMap plane;
  Recipe recipe;
  GShape shape;
};

// Throws CriterionViolation naming the failed hypothesis.
SpaceCremonaMap assemble(const GShape& shape, const PlaneCremonaMap& plane, const Recipe& recipe);

struct SpaceVerification {
  // (a, a1, a2, a3) for a*g + a1*t1 + a2*t2 + a3*t3.
  std::array<Fp, 4> member_a{};
  std::array<Fp, 4> member_b{};
  // The slice plane w = slice_form . (x, y, z).
  std::array<Fp, 3> slice_form{};
  std::vector<DeclaredBasePoint> base;
  IntersectionReport report;
};

// Restriction of a member to the plane w = slice_form . (x,y,z), as a form in (x,y,z).
MultiPoly slice_member(const SpaceCremonaMap& map, const std::array<Fp, 4>& coeffs, const std::array<Fp, 3>& slice);

// (p0, expected multiplicity) then (p_i, 1) for i = 1..m.
std::vector<DeclaredBasePoint> space_base(const SpaceCremonaMap& map);

// One draw of members and slice, measured against `base` without judging it.
SpaceVerification measure_space_intersection(const SpaceCremonaMap& map, std::span<const DeclaredBasePoint> base,
                                             Rng& rng, int retry_budget = kDefaultRetryBudget);

// Throws BidegreeMismatch when no draw reproduces the table and residual e.
SpaceVerification verify_space_bidegree(const SpaceCremonaMap& map, Rng& rng,
                                        int retry_budget = kDefaultRetryBudget);

struct ForgeOptions {
  int retries = kDefaultRetryBudget;
  int oracle_retries = kDefaultRetryBudget;
};

struct BidegreeCertificate {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  Recipe recipe;
  SpaceCremonaMap map;
  PlaneVerification plane_check;
  SpaceVerification space_check;
  int attempts = 1;
  std::string status = "verified";
};

// Full pipeline with reproducible per-attempt sub-seeds. Throws OutOfRange or
// ForgeExhausted (carrying the transcript of failed attempts).
BidegreeCertificate forge(int d, int e, std::uint64_t seed, const ForgeOptions& options = {});
// Same pipeline for an explicit recipe; sub-seeds depend on (d, e) only.
BidegreeCertificate forge_recipe(const Recipe& recipe, std::uint64_t seed, const ForgeOptions& options = {});

struct PlaneCertificate {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  PlaneCremonaMap map;
  PlaneVerification check;
  int attempts = 1;
  std::string status = "verified";
};

// Random configuration of 2r-1 points, de Jonquieres map, homaloidal check.
PlaneCertificate forge_plane(int r, std::uint64_t seed, const ForgeOptions& options = {});

}  // namespace cremona
