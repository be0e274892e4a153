#include "cremona/field.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "cremona/error.hpp"

namespace cremona {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SingularChange: return "SingularChange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BothConstant: return "BothConstant";
    case ErrorKind::BadLeadingCoefficient: return "BadLeadingCoefficient";
    case ErrorKind::CommonComponent: return "CommonComponent";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GenericityExhausted: return "GenericityExhausted";
    case ErrorKind::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorKind::EmptyLinearSystem: return "EmptyLinearSystem";
    case ErrorKind::IrreducibilityFailure: return "IrreducibilityFailure";
    case ErrorKind::MultiplicityFailure: return "MultiplicityFailure";
    case ErrorKind::FixedComponent: return "FixedComponent";
    case ErrorKind::HomaloidalFailure: return "HomaloidalFailure";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CriterionViolation: return "CriterionViolation";
    case ErrorKind::BidegreeMismatch: return "BidegreeMismatch";
    case ErrorKind::ForgeExhausted: return "ForgeExhausted";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for n < 3.3e24.
  constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void set_modulus(std::uint64_t p) {
  if (p < 5 || p >= (1ULL << 62) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument,
                "field modulus must be a prime with 5 <= p < 2^62, got " + std::to_string(p));
  }
  detail::g_modulus.store(p, std::memory_order_relaxed);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  // Extended Euclid on (v, p).
  std::int64_t t = 0, new_t = 1;
  std::uint64_t r = modulus(), new_r = v_;
  while (new_r != 0) {
    const std::uint64_t q = r / new_r;
    const std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    const std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  return Fp(t);
}

Fp Fp::pow(std::uint64_t e) const noexcept { return from_raw(pow_mod(v_, e, modulus())); }

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

Fp parse_residue(const std::string& text) {
  std::uint64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || v >= modulus() ||
      (text.size() > 1 && text[0] == '0')) {
    throw Error(ErrorKind::MalformedCertificate, "bad field element '" + text + "'");
  }
  return Fp::from_raw(v);
}

}  // namespace cremona
