#include "cremona/certificate.hpp"

#include <functional>

#include "json.hpp"

#include "cremona/error.hpp"
#include "cremona/gcd.hpp"

namespace cremona {

using nlohmann::json;

namespace {

const ProjectivePoint kP0 = ProjectivePoint::of({1, 0, 0});
const ProjectivePoint kO = ProjectivePoint::of({1, 0, 0, 0});

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedCertificate, what); }

std::string dec(Fp x) { return std::to_string(x.value()); }

json scalars_to_json(std::span<const Fp> v) {
  json a = json::array();
  for (Fp x : v) a.push_back(dec(x));
  return a;
}

json poly_to_json(const MultiPoly& f) {
  json a = json::array();
  for (const auto& [e, c] : f.terms()) {
    json ex = json::array();
    for (int i = 0; i < f.nvars(); ++i) ex.push_back(e[static_cast<std::size_t>(i)]);
    a.push_back({{"coeff", dec(c)}, {"exponents", ex}});
  }
  return a;
}

json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(scalars_to_json(m.row(i)));
  return a;
}

json report_to_json(const IntersectionReport& rep, const std::vector<DeclaredBasePoint>& base) {
  json table = json::array();
  for (std::size_t i = 0; i < rep.measured.size(); ++i) {
    table.push_back({{"point", scalars_to_json(rep.measured[i].point.coords())},
                     {"expected", i < base.size() ? base[i].expected_multiplicity : -1},
                     {"measured", rep.measured[i].multiplicity}});
  }
  return {{"total_degree", rep.total_degree},
          {"residual", rep.residual},
          {"attempts", rep.attempts},
          {"linear_change", matrix_to_json(rep.linear_change_used.matrix())},
          {"confirmation_change", matrix_to_json(rep.confirmation_change.matrix())},
          {"table", table}};
}

json points_to_json(const PointConfiguration& c) {
  json pts = json::array();
  pts.push_back(scalars_to_json(c.p0.coords()));
  for (const auto& p : c.simple_points) pts.push_back(scalars_to_json(p.coords()));
  return pts;
}

json plane_polys(const PlaneCremonaMap& map) {
  return {{"t1", poly_to_json(map.components[0])},
          {"t2", poly_to_json(map.components[1])},
          {"t3", poly_to_json(map.components[2])},
          {"f", poly_to_json(map.witness.f)},
          {"witness_t1", poly_to_json(map.witness.t1)}};
}

// ---- parsing ----

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t u64_from(const std::string& s) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    malformed("bad integer '" + s + "'");
  }
  if (pos != s.size() || s.empty() || s[0] == '-' || s[0] == '+') malformed("bad integer '" + s + "'");
  return v;
}

std::vector<Fp> scalars_from(const json& a) {
  if (!a.is_array()) malformed("expected an array of field elements");
  std::vector<Fp> out;
  for (const auto& x : a) {
    if (!x.is_string()) malformed("field elements are decimal strings");
    out.push_back(parse_residue(x.get<std::string>()));
  }
  return out;
}

ProjectivePoint point_from(const json& a, std::size_t dim) {
  auto c = scalars_from(a);
  if (c.size() != dim) malformed("point of the wrong dimension");
  try {
    const ProjectivePoint p(c);
    if (!std::equal(c.begin(), c.end(), p.coords().begin())) malformed("point is not normalized");
    return p;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    malformed("zero point");
  }
}

MultiPoly poly_from(const json& a, int nvars, int degree) {
  if (!a.is_array()) malformed("a form is a list of terms");
  MultiPoly f(nvars, degree);
  const Exponents* prev = nullptr;
  Exponents last{};
  for (const auto& t : a) {
    const json& ex = field(t, "exponents");
    if (!ex.is_array() || ex.size() != static_cast<std::size_t>(nvars)) malformed("exponent tuple of wrong length");
    Exponents e{};
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (!ex[i].is_number_integer() || ex[i].get<int>() < 0) malformed("exponents are non-negative integers");
      e[i] = ex[i].get<int>();
    }
    const Fp c = parse_residue(string_field(t, "coeff"));
    if (c.is_zero()) malformed("stored coefficients must be nonzero");
    if (prev && !(last > e)) malformed("terms must be sorted in decreasing graded-lex order");
    try {
      f.add_term(e, c);
    } catch (const Error&) {
      malformed("term of the wrong degree");
    }
    last = e;
    prev = &last;
  }
  return f;
}

Matrix matrix_from(const json& a, std::size_t n) {
  if (!a.is_array() || a.size() != n) malformed("matrix of the wrong size");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = scalars_from(a[i]);
    if (row.size() != n) malformed("matrix row of the wrong size");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

LinearChange change_from(const json& a) {
  try {
    return LinearChange(matrix_from(a, 3));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    malformed("stored linear change is singular");
  }
}

template <std::size_t N>
std::array<Fp, N> coeffs_from(const json& a) {
  auto v = scalars_from(a);
  if (v.size() != N) malformed("coefficient tuple of the wrong length");
  std::array<Fp, N> out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

void report_from(const json& j, IntersectionReport& rep, std::vector<DeclaredBasePoint>& base) {
  rep.total_degree = int_field(j, "total_degree");
  rep.residual = int_field(j, "residual");
  rep.attempts = int_field(j, "attempts");
  rep.linear_change_used = change_from(field(j, "linear_change"));
  rep.confirmation_change = change_from(field(j, "confirmation_change"));
  const json& table = field(j, "table");
  if (!table.is_array()) malformed("table must be a list");
  rep.measured.clear();
  base.clear();
  for (const auto& row : table) {
    const ProjectivePoint p = point_from(field(row, "point"), 3);
    rep.measured.push_back({p, int_field(row, "measured")});
    base.push_back({p, int_field(row, "expected")});
  }
}

PointConfiguration config_from(const json& pts, int r) {
  if (!pts.is_array() || pts.size() != static_cast<std::size_t>(2 * r - 1)) malformed("expected 2r-1 points");
  PointConfiguration c;
  c.r = r;
  c.p0 = point_from(pts[0], 3);
  for (std::size_t i = 1; i < pts.size(); ++i) c.simple_points.push_back(point_from(pts[i], 3));
  return c;
}

void plane_map_from(const json& root, int r, PlaneCremonaMap& map) {
  map.config = config_from(field(root, "points"), r);
  const json& polys = field(root, "polynomials");
  map.components = {poly_from(field(polys, "t1"), 3, r), poly_from(field(polys, "t2"), 3, r),
                    poly_from(field(polys, "t3"), 3, r)};
  map.witness.t1 = poly_from(field(polys, "witness_t1"), 3, r);
  map.witness.f = poly_from(field(polys, "f"), 3, r - 1);
  try {
    map.normalization = LinearChange(matrix_from(field(root, "normalization_matrix"), 3));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    malformed("normalization matrix is singular");
  }
  const json& warnings = field(root, "warnings");
  if (!warnings.is_array()) malformed("warnings must be a list");
  for (const auto& w : warnings) {
    if (!w.is_string()) malformed("warnings are strings");
    map.warnings.push_back(w.get<std::string>());
  }
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("not a JSON document: ") + e.what());
  }
}

template <class F>
auto guard_json(F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

// ---- auditing ----

class Audit {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  // Runs a check that may throw; library errors count as failures.
  void run(const std::string& what, const std::function<bool()>& check) {
    try {
      require(check(), what);
    } catch (const Error& e) {
      failures_.push_back(what + " (" + e.what() + ")");
    }
  }
  std::vector<std::string> take() { return std::move(failures_); }

 private:
  std::vector<std::string> failures_;
};

void audit_plane_map(Audit& audit, const PlaneCremonaMap& map, int r) {
  audit.run("configuration is valid", [&] {
    map.config.validate();
    return map.config.r == r;
  });
  audit.run("normalization sends p0 to (1:0:0)", [&] { return map.config.p0.transformed(map.normalization.matrix()) == kP0; });
  std::vector<ProjectivePoint> pts;
  for (const auto& p : map.config.simple_points) pts.push_back(p.transformed(map.normalization.matrix()));
  audit.run("de Jonquieres witness invariants", [&] {
    validate_witness(map.witness, r, pts);
    return true;
  });
  audit.run("components equal (t1 : y f : z f) in original coordinates", [&] {
    const MultiPoly y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
    const std::array<MultiPoly, 3> normalized{map.witness.t1, y * map.witness.f, z * map.witness.f};
    for (std::size_t i = 0; i < 3; ++i)
      if (!(apply_linear_change(normalized[i], map.normalization) == map.components[i])) return false;
    return true;
  });
  audit.run("components vanish on the configuration", [&] {
    for (const auto& t : map.components) {
      if (!t.evaluate(map.config.p0).is_zero()) return false;
      for (const auto& p : map.config.simple_points)
        if (!t.evaluate(p).is_zero()) return false;
    }
    return true;
  });
}

void audit_plane_report(Audit& audit, const PlaneCremonaMap& map, const PlaneVerification& v) {
  const auto base = homaloidal_base(map.config);
  audit.require(v.base == base, "plane table declares (p0, (r-1)^2) and (p_i, 1)");
  audit.run("plane report replays", [&] {
    const MultiPoly c1 = net_member(map.components, v.member_a);
    const MultiPoly c2 = net_member(map.components, v.member_b);
    const auto rep = replay_intersection(c1, c2, base, v.report.linear_change_used, v.report.confirmation_change);
    return rep.measured == v.report.measured && rep.residual == v.report.residual &&
           rep.total_degree == v.report.total_degree;
  });
  audit.require(check_against_expected(v.report, base), "plane multiplicities match the homaloidal table");
  audit.require(v.report.residual == 1, "plane residual is 1");
}

}  // namespace

std::string to_json_text(const BidegreeCertificate& cert) {
  const auto& map = cert.map;
  json polys = plane_polys(map.plane);
  polys["A"] = poly_to_json(map.shape.A);
  polys["B"] = poly_to_json(map.shape.B);
  polys["g"] = poly_to_json(map.shape.g);
  json plane_report = report_to_json(cert.plane_check.report, cert.plane_check.base);
  plane_report["member_coeffs"] = {scalars_to_json(cert.plane_check.member_a), scalars_to_json(cert.plane_check.member_b)};
  json space_report = report_to_json(cert.space_check.report, cert.space_check.base);
  space_report["member_coeffs"] = {scalars_to_json(cert.space_check.member_a), scalars_to_json(cert.space_check.member_b)};
  space_report["slice_form"] = scalars_to_json(cert.space_check.slice_form);
  json doc = {
      {"kind", "space"},
      {"format_version", kCertificateFormatVersion},
      {"prime", std::to_string(cert.prime)},
      {"seed", std::to_string(cert.seed)},
      {"d", cert.recipe.d},
      {"e", cert.recipe.e},
      {"recipe", {{"case", cert.recipe.kind == RecipeCase::A ? "A" : "B"}, {"ell", cert.recipe.ell}, {"m", cert.recipe.m}}},
      {"attempts", cert.attempts},
      {"points", points_to_json(map.plane.config)},
      {"polynomials", polys},
      {"normalization_matrix", matrix_to_json(map.plane.normalization.matrix())},
      {"warnings", map.plane.warnings},
      {"plane_report", plane_report},
      {"space_report", space_report},
      {"status", cert.status},
  };
  return doc.dump(2) + "\n";
}

std::string to_json_text(const PlaneCertificate& cert) {
  json report = report_to_json(cert.check.report, cert.check.base);
  report["member_coeffs"] = {scalars_to_json(cert.check.member_a), scalars_to_json(cert.check.member_b)};
  json doc = {
      {"kind", "plane"},
      {"format_version", kCertificateFormatVersion},
      {"prime", std::to_string(cert.prime)},
      {"seed", std::to_string(cert.seed)},
      {"r", cert.map.config.r},
      {"attempts", cert.attempts},
      {"points", points_to_json(cert.map.config)},
      {"polynomials", plane_polys(cert.map)},
      {"normalization_matrix", matrix_to_json(cert.map.normalization.matrix())},
      {"warnings", cert.map.warnings},
      {"plane_report", report},
      {"status", cert.status},
  };
  return doc.dump(2) + "\n";
}

std::uint64_t certificate_prime(const std::string& text) {
  const json doc = parse_document(text);
  return guard_json([&] {
    const std::uint64_t p = u64_from(string_field(doc, "prime"));
    if (p < 5 || p >= (1ULL << 62) || !is_prime(p)) malformed("stored prime is not an admissible prime");
    return p;
  });
}

std::string certificate_kind(const std::string& text) {
  const json doc = parse_document(text);
  return guard_json([&] {
    std::string k = string_field(doc, "kind");
    if (k != "space" && k != "plane") malformed("unknown certificate kind '" + k + "'");
    if (int_field(doc, "format_version") != kCertificateFormatVersion) malformed("unsupported format_version");
    return k;
  });
}

BidegreeCertificate bidegree_certificate_from_json(const std::string& text) {
  const json doc = parse_document(text);
  return guard_json([&] {
    if (string_field(doc, "kind") != "space") malformed("not a space certificate");
    BidegreeCertificate cert;
    cert.prime = u64_from(string_field(doc, "prime"));
    if (cert.prime != modulus()) malformed("certificate prime is not the active modulus");
    cert.seed = u64_from(string_field(doc, "seed"));
    const int d = int_field(doc, "d");
    if (d < 2 || d > 64) malformed("d out of the supported range");
    const json& recipe = field(doc, "recipe");
    const std::string kind = string_field(recipe, "case");
    if (kind != "A" && kind != "B") malformed("recipe case must be A or B");
    cert.recipe = Recipe{d, int_field(doc, "e"), kind == "A" ? RecipeCase::A : RecipeCase::B, int_field(recipe, "ell"),
                         int_field(recipe, "m")};
    cert.attempts = int_field(doc, "attempts");
    cert.status = string_field(doc, "status");

    auto& map = cert.map;
    map.recipe = cert.recipe;
    plane_map_from(doc, d, map.plane);
    const json& polys = field(doc, "polynomials");
    map.shape.A = poly_from(field(polys, "A"), 3, d - 1);
    map.shape.B = poly_from(field(polys, "B"), 3, d);
    map.shape.g = poly_from(field(polys, "g"), 4, d);
    map.g = map.shape.g;
    map.t = map.plane.components;

    const json& pr = field(doc, "plane_report");
    report_from(pr, cert.plane_check.report, cert.plane_check.base);
    const json& pm = field(pr, "member_coeffs");
    if (!pm.is_array() || pm.size() != 2) malformed("plane member_coeffs needs two tuples");
    cert.plane_check.member_a = coeffs_from<3>(pm[0]);
    cert.plane_check.member_b = coeffs_from<3>(pm[1]);

    const json& sr = field(doc, "space_report");
    report_from(sr, cert.space_check.report, cert.space_check.base);
    const json& sm = field(sr, "member_coeffs");
    if (!sm.is_array() || sm.size() != 2) malformed("space member_coeffs needs two tuples");
    cert.space_check.member_a = coeffs_from<4>(sm[0]);
    cert.space_check.member_b = coeffs_from<4>(sm[1]);
    cert.space_check.slice_form = coeffs_from<3>(field(sr, "slice_form"));
    return cert;
  });
}

PlaneCertificate plane_certificate_from_json(const std::string& text) {
  const json doc = parse_document(text);
  return guard_json([&] {
    if (string_field(doc, "kind") != "plane") malformed("not a plane certificate");
    PlaneCertificate cert;
    cert.prime = u64_from(string_field(doc, "prime"));
    if (cert.prime != modulus()) malformed("certificate prime is not the active modulus");
    cert.seed = u64_from(string_field(doc, "seed"));
    const int r = int_field(doc, "r");
    if (r < 2 || r > 64) malformed("r out of the supported range");
    cert.attempts = int_field(doc, "attempts");
    cert.status = string_field(doc, "status");
    plane_map_from(doc, r, cert.map);
    const json& pr = field(doc, "plane_report");
    report_from(pr, cert.check.report, cert.check.base);
    const json& pm = field(pr, "member_coeffs");
    if (!pm.is_array() || pm.size() != 2) malformed("plane member_coeffs needs two tuples");
    cert.check.member_a = coeffs_from<3>(pm[0]);
    cert.check.member_b = coeffs_from<3>(pm[1]);
    return cert;
  });
}

std::vector<std::string> audit_certificate(const BidegreeCertificate& cert) {
  Audit audit;
  const Recipe& recipe = cert.recipe;
  const auto& map = cert.map;
  const auto& shape = map.shape;
  const int d = recipe.d;
  audit.require(cert.prime == modulus(), "certificate prime is the active modulus");
  audit.require(cert.status == "verified", "status is 'verified'");
  audit.run("recipe is consistent with (d, e)", [&] {
    recipe.validate();
    return true;
  });
  audit.require(map.plane.config.p0 == kP0, "p0 is (1:0:0)");
  audit.run("g = w*A + B", [&] { return shape.g == make_g(shape.A, shape.B); });
  audit.run("g is irreducible (gcd(A, B) = 1)", [&] { return !shape.A.is_zero() && trivariate_gcd(shape.A, shape.B).degree() == 0; });
  audit.run("g vanishes to order d-1 at o", [&] { return vanishing_order_at(shape.g, kO) == d - 1; });
  if (recipe.kind == RecipeCase::A) {
    audit.run("case A shape: A = A_{d-1}(y,z), B = x*B_{d-1} + B_d of multiplicity d-1", [&] {
      return shape.A.degree_in(0) == 0 && shape.B.degree_in(0) <= 1 && vanishing_order_at(shape.B, kP0) == d - 1;
    });
    audit.run("case A: X_d = V(B)", [&] { return map.plane.witness.t1.normalized() == shape.B.normalized(); });
  } else {
    audit.run("case B shape: A and B have multiplicity exactly ell at p0", [&] {
      return vanishing_order_at(shape.A, kP0) == recipe.ell && vanishing_order_at(shape.B, kP0) == recipe.ell;
    });
  }
  audit.run("A = B = 0 at p_1..p_m, A != 0 = B at the rest", [&] {
    const auto& pts = map.plane.config.simple_points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!shape.B.evaluate(pts[i]).is_zero()) return false;
      const bool on_a = shape.A.evaluate(pts[i]).is_zero();
      if (on_a != (static_cast<int>(i) < recipe.m)) return false;
    }
    return true;
  });
  audit_plane_map(audit, map.plane, d);
  audit_plane_report(audit, map.plane, cert.plane_check);

  const auto& sv = cert.space_check;
  const auto base = space_base(map);
  audit.require(sv.base == base, "space table declares (p0, ell(d-1)) and (p_i, 1) for i <= m");
  audit.run("space report replays", [&] {
    const MultiPoly s1 = slice_member(map, sv.member_a, sv.slice_form);
    const MultiPoly s2 = slice_member(map, sv.member_b, sv.slice_form);
    const auto rep = replay_intersection(s1, s2, base, sv.report.linear_change_used, sv.report.confirmation_change);
    return rep.measured == sv.report.measured && rep.residual == sv.report.residual &&
           rep.total_degree == sv.report.total_degree;
  });
  audit.require(sv.report.total_degree == d * d, "space total degree is d^2");
  audit.require(check_against_expected(sv.report, base), "space multiplicities match the declared table");
  audit.require(sv.report.residual == recipe.e, "residual degree equals e");
  return audit.take();
}

std::vector<std::string> audit_certificate(const PlaneCertificate& cert) {
  Audit audit;
  audit.require(cert.prime == modulus(), "certificate prime is the active modulus");
  audit.require(cert.status == "verified", "status is 'verified'");
  audit_plane_map(audit, cert.map, cert.map.config.r);
  audit_plane_report(audit, cert.map, cert.check);
  return audit.take();
}

bool verify_certificate(const BidegreeCertificate& cert) { return audit_certificate(cert).empty(); }
bool verify_certificate(const PlaneCertificate& cert) { return audit_certificate(cert).empty(); }

VerifyResult verify_certificate_text(const std::string& text) {
  VerifyResult res;
  try {
    const std::string kind = certificate_kind(text);
    const ModulusScope scope(certificate_prime(text));
    res.messages = kind == "space" ? audit_certificate(bidegree_certificate_from_json(text))
                                   : audit_certificate(plane_certificate_from_json(text));
    res.outcome = res.messages.empty() ? VerifyOutcome::Verified : VerifyOutcome::Failed;
  } catch (const Error& e) {
    res.outcome = VerifyOutcome::Malformed;
    res.messages = {e.what()};
  }
  return res;
}

}  // namespace cremona
