#include "cremona/projective.hpp"

#include <ostream>

#include "cremona/error.hpp"

namespace cremona {

ProjectivePoint::ProjectivePoint(std::vector<Fp> coords) : coords_(std::move(coords)) {
  std::size_t k = 0;
  while (k < coords_.size() && coords_[k].is_zero()) ++k;
  if (k == coords_.size()) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
  const Fp inv = coords_[k].inverse();
  for (std::size_t i = k; i < coords_.size(); ++i) coords_[i] *= inv;
}

ProjectivePoint ProjectivePoint::of(std::initializer_list<std::int64_t> coords) {
  std::vector<Fp> v;
  v.reserve(coords.size());
  for (std::int64_t c : coords) v.push_back(Fp(c));
  return ProjectivePoint(std::move(v));
}

ProjectivePoint ProjectivePoint::transformed(const Matrix& m) const { return ProjectivePoint(m.apply(coords_)); }

std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i)
    if (auto c = a.coords_[i].value() <=> b.coords_[i].value(); c != 0) return c;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ":" : "") << p[i];
  return os << ')';
}

}  // namespace cremona
