#ifndef RSCOUNT_CONFIG_HPP
#define RSCOUNT_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rscount {

/// Arbitrary-precision signed integer used for every count and series coefficient.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Bad user input: malformed arguments, non-prime characteristic, out-of-range degree.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition that depends on the characteristic (e.g. a lemma that only
/// holds in odd characteristic) was violated.
class ParityMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would visit more candidates than the configured cap.
class EnumerationBoundExceeded : public std::runtime_error {
 public:
  EnumerationBoundExceeded(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what + ": " + std::to_string(requested) +
                           " candidates exceeds enumeration cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Internal consistency failure (an identity that must hold did not).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Default series truncation order.
inline constexpr int kDefaultTruncation = 24;

/// Enumeration cap, overridable through RSCOUNT_ENUM_CAP.
inline std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("RSCOUNT_ENUM_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
  }
  return kDefaultEnumerationCap;
}

/// Saturating q^e for candidate-space estimates.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

inline void check_enumeration(const std::string& what, std::uint64_t candidates,
                              std::uint64_t cap = enumeration_cap()) {
  if (candidates > cap) throw EnumerationBoundExceeded(what, candidates, cap);
}

/// Exact quotient; a non-zero remainder is an internal error because every
/// division performed by this library is a proven-exact one.
inline Integer exact_div(const Integer& num, const Integer& den, const char* context) {
  if (den == 0) throw InternalError(std::string(context) + ": division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InternalError(std::string(context) + ": " + num.str() + " is not divisible by " +
                        den.str());
  }
  return q;
}

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace rscount

#endif  // RSCOUNT_CONFIG_HPP
