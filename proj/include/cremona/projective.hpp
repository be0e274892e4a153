#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "cremona/field.hpp"
#include "cremona/matrix.hpp"

namespace cremona {

// Point of P^{n-1}, stored with its first nonzero coordinate scaled to 1 so
// that equality of points is equality of coordinate tuples.
class ProjectivePoint {
 public:
  // Throws Error(InvalidArgument) for the zero vector.
  explicit ProjectivePoint(std::vector<Fp> coords);
  static ProjectivePoint of(std::initializer_list<std::int64_t> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  Fp operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Fp> coords() const noexcept { return coords_; }

  // The point M·P.
  ProjectivePoint transformed(const Matrix& m) const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) = default;
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::vector<Fp> coords_;
};

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p);

}  // namespace cremona
