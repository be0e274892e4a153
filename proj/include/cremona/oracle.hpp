#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cremona/binary_form.hpp"
#include "cremona/matrix.hpp"
#include "cremona/poly.hpp"
#include "cremona/projective.hpp"

namespace cremona {

class Rng;

inline constexpr int kDefaultRetryBudget = 8;

struct DeclaredBasePoint {
  ProjectivePoint point;
  // 0 declares a point expected to lie off the intersection.
  int expected_multiplicity = 0;

  friend bool operator==(const DeclaredBasePoint&, const DeclaredBasePoint&) = default;
};

struct MeasuredPoint {
  ProjectivePoint point;
  int multiplicity = 0;

  friend bool operator==(const MeasuredPoint&, const MeasuredPoint&) = default;
};

// How the intersection of two plane curves distributes over declared base
// points. residual = total_degree - sum of measured multiplicities.
struct IntersectionReport {
  int total_degree = 0;
  std::vector<MeasuredPoint> measured;
  int residual = 0;
  LinearChange linear_change_used = LinearChange::identity(3);
  // Second, independent change that reproduced the same table.
  LinearChange confirmation_change = LinearChange::identity(3);
  int attempts = 0;
};

// Local multiplicities under one coordinate change, or nullopt when the change
// is not generic enough: the projection centre M·(1:0:0) lies on a curve, or two
// transformed base points share a (y:z) projection, or one projects from the
// centre itself. Throws CommonComponent.
std::optional<std::vector<int>> measure_under_change(const MultiPoly& f, const MultiPoly& g,
                                                     std::span<const DeclaredBasePoint> base,
                                                     const LinearChange& change);

// Draws pairs of independent random changes until both are generic and agree
// on every multiplicity. Throws CommonComponent, or GenericityExhausted after
// retry_budget pairs.
IntersectionReport residual_intersection(const MultiPoly& f, const MultiPoly& g,
                                         std::span<const DeclaredBasePoint> base, Rng& rng,
                                         int retry_budget = kDefaultRetryBudget);

// Deterministic rerun with stored changes; throws GenericityExhausted when a
// change is degenerate for this input or the two disagree.
IntersectionReport replay_intersection(const MultiPoly& f, const MultiPoly& g,
                                       std::span<const DeclaredBasePoint> base, const LinearChange& first,
                                       const LinearChange& second);

bool check_against_expected(const IntersectionReport& report, std::span<const DeclaredBasePoint> base);

}  // namespace cremona
