#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cremona {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1

namespace detail {
inline std::atomic<std::uint64_t> g_modulus{kDefaultPrime};
}

// Current field modulus. Set once at startup (or through ModulusScope in tests)
// and read concurrently afterwards.
inline std::uint64_t modulus() noexcept { return detail::g_modulus.load(std::memory_order_relaxed); }

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

// Installs p as the field modulus. Requires p prime, 5 <= p < 2^62.
void set_modulus(std::uint64_t p);

// Restores the previous modulus on destruction. Not for use while other
// threads are computing.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint64_t p) : previous_(modulus()) { set_modulus(p); }
  ~ModulusScope() { detail::g_modulus.store(previous_, std::memory_order_relaxed); }
  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint64_t previous_;
};

// Element of F_p for the current modulus p.
class Fp {
 public:
  constexpr Fp() noexcept = default;
  explicit Fp(std::int64_t v) noexcept {
    const auto p = static_cast<std::int64_t>(modulus());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  // v must already be reduced.
  static Fp from_raw(std::uint64_t v) noexcept {
    Fp x;
    x.v_ = v;
    return x;
  }
  static Fp from_unsigned(std::uint64_t v) noexcept { return from_raw(v % modulus()); }

  std::uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  explicit operator bool() const noexcept { return v_ != 0; }

  Fp& operator+=(Fp o) noexcept {
    const std::uint64_t p = modulus();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % modulus());
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  Fp operator-() const noexcept { return v_ == 0 ? *this : from_raw(modulus() - v_); }

  friend bool operator==(Fp a, Fp b) noexcept = default;

  // Throws Error(ZeroInverse) for zero.
  Fp inverse() const;
  Fp pow(std::uint64_t e) const noexcept;

 private:
  std::uint64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

// Parses a canonical decimal residue in [0, p); throws Error(MalformedCertificate).
Fp parse_residue(const std::string& text);

}  // namespace cremona
