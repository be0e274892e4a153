#pragma once

#include <string>
#include <vector>

#include "cremona/space.hpp"

namespace cremona {

// On-disk format: one JSON document with sorted keys. Field elements, the
// prime and the seed are decimal strings; forms are lists of
// {"coeff", "exponents"} records in graded-lex decreasing order. Every
// quantity needed to re-run the checks (members, slice, projections) is
// stored, so verification needs no generator.
inline constexpr int kCertificateFormatVersion = 1;

std::string to_json_text(const BidegreeCertificate& cert);
std::string to_json_text(const PlaneCertificate& cert);

// Parsing requires the certificate's prime to be the current modulus (see
// certificate_prime). Throws MalformedCertificate.
BidegreeCertificate bidegree_certificate_from_json(const std::string& text);
PlaneCertificate plane_certificate_from_json(const std::string& text);

// Reads "prime" (and validates it) without parsing anything else.
std::uint64_t certificate_prime(const std::string& text);
// "space" or "plane".
std::string certificate_kind(const std::string& text);

// Re-runs every check from the stored data. Returns the list of failed
// checks; empty means the certificate verifies.
std::vector<std::string> audit_certificate(const BidegreeCertificate& cert);
std::vector<std::string> audit_certificate(const PlaneCertificate& cert);

bool verify_certificate(const BidegreeCertificate& cert);
bool verify_certificate(const PlaneCertificate& cert);

enum class VerifyOutcome { Verified, Failed, Malformed };

struct VerifyResult {
  VerifyOutcome outcome = VerifyOutcome::Malformed;
  std::vector<std::string> messages;
};

// Whole round trip from text: installs the stored prime for the duration of
// the call, parses, audits. Not for concurrent use with other moduli.
VerifyResult verify_certificate_text(const std::string& text);

}  // namespace cremona
