#ifndef RSCOUNT_FIELD_HPP
#define RSCOUNT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rscount/config.hpp"

namespace rscount::algebra {

/// Largest field order supported; arithmetic is table driven (q^2 entries).
inline constexpr unsigned kMaxFieldOrder = 1024;

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Splits q = p^k; nullopt when q is not a prime power.
inline std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  unsigned p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = static_cast<unsigned>(d);
      break;
    }
  }
  if (p == 0) return std::make_pair(static_cast<unsigned>(q), 1u);
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, k);
}

namespace detail {

// Arithmetic on coefficient vectors over GF(p), used only while building a field.
using PrimePoly = std::vector<unsigned>;

inline void prime_trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PrimePoly prime_rem(PrimePoly a, const PrimePoly& m, unsigned p) {
  prime_trim(a);
  const std::size_t dm = m.size() - 1;
  unsigned lead_inv = 1;
  for (unsigned c = 1; c < p; ++c) {
    if ((c * m.back()) % p == 1) lead_inv = c;
  }
  while (a.size() > dm) {
    const unsigned f = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - (f * m[i]) % p)) % p;
    }
    prime_trim(a);
  }
  return a;
}

// Trial division by all monic polynomials of degree 1..deg/2.
inline bool prime_is_irreducible(const PrimePoly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned e = 1; 2 * e <= n; ++e) {
    const std::uint64_t count = saturating_pow(p, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PrimePoly g(e + 1);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < e; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      g[e] = 1;
      if (prime_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// GF(p^k) in the polynomial basis of a fixed monic irreducible modulus.
///
/// Elements are addressed by a code in [0, q): the base-p digits of the code
/// are the coordinates (lowest power of the root first). Code 0 is zero,
/// code 1 is one, and the integer order of codes is the canonical element
/// order used by every deterministic choice in the library.
class Field {
 public:
  using Code = std::uint16_t;

  /// Builds GF(p^k) with the least monic irreducible modulus of degree k,
  /// where polynomials are ordered by the integer sum a_i p^i of their
  /// non-leading coefficients.
  static std::shared_ptr<const Field> make(unsigned p, unsigned k) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidArgument("field extension degree must be at least 1");
    const std::uint64_t q = saturating_pow(p, k);
    if (q > kMaxFieldOrder) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds the supported bound " + std::to_string(kMaxFieldOrder));
    }
    return std::shared_ptr<const Field>(new Field(p, k));
  }

  /// Field with q elements; q must be a prime power.
  static std::shared_ptr<const Field> of_order(std::uint64_t q) {
    const auto pk = prime_power(q);
    if (!pk) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return make(pk->first, pk->second);
  }

  unsigned p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  unsigned q() const noexcept { return q_; }
  /// Modulus over GF(p), lowest degree first, monic of degree k.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  bool same_as(const Field& other) const noexcept { return p_ == other.p_ && k_ == other.k_; }

  static constexpr Code zero() noexcept { return 0; }
  static constexpr Code one() noexcept { return 1; }

  Code add(Code a, Code b) const noexcept { return add_[index(a, b)]; }
  Code sub(Code a, Code b) const noexcept { return add_[index(a, neg_[b])]; }
  Code mul(Code a, Code b) const noexcept { return mul_[index(a, b)]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  /// Inverse of a non-zero element (inv(0) is reported as 0).
  Code inv(Code a) const noexcept { return inv_[a]; }
  Code div(Code a, Code b) const noexcept { return mul(a, inv_[b]); }

  Code pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a == 0) return 0;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
  }

  /// Image of an integer in the prime subfield.
  Code from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
  }

  std::vector<unsigned> coordinates(Code a) const {
    std::vector<unsigned> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
      c[i] = a % p_;
      a = static_cast<Code>(a / p_);
    }
    return c;
  }

  Code from_coordinates(const std::vector<unsigned>& c) const {
    unsigned code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + (i < c.size() ? c[i] % p_ : 0);
    return static_cast<Code>(code);
  }

  /// Least element (in code order) of multiplicative order q-1.
  Code generator() const noexcept { return generator_; }

  /// Multiplicative order of a non-zero element.
  std::uint64_t order(Code a) const {
    if (a == 0) throw InvalidArgument("zero has no multiplicative order");
    const std::uint64_t n = q_ - 1;
    const std::uint64_t l = log_[a];
    std::uint64_t g = n, b = l;
    while (b != 0) {
      const std::uint64_t t = g % b;
      g = b;
      b = t;
    }
    return n / g;
  }

  /// Discrete logarithm with respect to generator().
  std::uint64_t log(Code a) const {
    if (a == 0) throw InvalidArgument("logarithm of zero");
    return log_[a];
  }

  /// x -> x^{q0} where GF(q0) is a subfield.
  Code frobenius(Code x, std::uint64_t q0) const {
    if (!is_subfield_order(q0)) {
      throw InvalidArgument(std::to_string(q0) + " is not the order of a subfield of GF(" +
                            std::to_string(q_) + ")");
    }
    return pow(x, q0);
  }

  bool is_subfield_order(std::uint64_t q0) const noexcept {
    std::uint64_t s = p_;
    for (unsigned j = 1; j <= k_; ++j, s *= p_) {
      if (s == q0) return k_ % j == 0;
    }
    return false;
  }

  /// Elements fixed by x -> x^{q0}, i.e. the subfield GF(q0), in code order.
  std::vector<Code> subfield(std::uint64_t q0) const {
    std::vector<Code> out;
    for (unsigned c = 0; c < q_; ++c) {
      if (frobenius(static_cast<Code>(c), q0) == c) out.push_back(static_cast<Code>(c));
    }
    return out;
  }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

 private:
  Field(unsigned p, unsigned k) : p_(p), k_(k), q_(static_cast<unsigned>(saturating_pow(p, k))) {
    choose_modulus();
    build_tables();
  }

  std::size_t index(Code a, Code b) const noexcept { return static_cast<std::size_t>(a) * q_ + b; }

  void choose_modulus() {
    if (k_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    const std::uint64_t count = saturating_pow(p_, k_);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      detail::PrimePoly f(k_ + 1);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < k_; ++i) {
        f[i] = static_cast<unsigned>(t % p_);
        t /= p_;
      }
      f[k_] = 1;
      if (f[0] != 0 && detail::prime_is_irreducible(f, p_)) {
        modulus_ = f;
        return;
      }
    }
    throw InternalError("no irreducible modulus found");
  }

  Code slow_mul(Code a, Code b) const {
    const auto ca = coordinates(a);
    const auto cb = coordinates(b);
    detail::PrimePoly prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    const auto r = k_ == 1 ? detail::PrimePoly{prod[0]} : detail::prime_rem(prod, modulus_, p_);
    return from_coordinates(r);
  }

  void build_tables() {
    const std::size_t qq = static_cast<std::size_t>(q_) * q_;
    add_.assign(qq, 0);
    neg_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      const auto ca = coordinates(static_cast<Code>(a));
      std::vector<unsigned> cn(k_);
      for (unsigned i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[a] = from_coordinates(cn);
      for (unsigned b = 0; b < q_; ++b) {
        const auto cb = coordinates(static_cast<Code>(b));
        std::vector<unsigned> cs(k_);
        for (unsigned i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_[index(static_cast<Code>(a), static_cast<Code>(b))] = from_coordinates(cs);
      }
    }
    // Generator: least code of order q-1, found with the slow product.
    generator_ = 1;
    for (unsigned c = 1; c < q_; ++c) {
      Code x = static_cast<Code>(c);
      unsigned ord = 1;
      while (x != 1) {
        x = slow_mul(x, static_cast<Code>(c));
        ++ord;
      }
      if (ord == q_ - 1) {
        generator_ = static_cast<Code>(c);
        break;
      }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Code x = 1;
    for (unsigned e = 0; e + 1 < q_; ++e) {
      exp_[e] = x;
      log_[x] = e;
      x = slow_mul(x, generator_);
    }
    mul_.assign(qq, 0);
    inv_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a) {
      inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
      for (unsigned b = 1; b < q_; ++b) {
        mul_[index(static_cast<Code>(a), static_cast<Code>(b))] = exp_[(log_[a] + log_[b]) % (q_ - 1)];
      }
    }
  }

  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Code> add_, mul_, neg_, inv_, exp_;
  std::vector<std::uint32_t> log_;
  Code generator_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// ff_make
inline FieldPtr make_field(unsigned p, unsigned k) { return Field::make(p, k); }

/// A field element bound to its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Code code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_->q()) throw InvalidArgument("element code out of range for " + field_->name());
  }

  static FieldElement from_int(FieldPtr field, long long v) {
    const auto c = field->from_int(v);
    return FieldElement(std::move(field), c);
  }

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  Field::Code code() const noexcept { return code_; }
  std::vector<unsigned> coordinates() const { return field_->coordinates(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(code_, o.checked(*this))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(code_, o.checked(*this))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(code_, o.checked(*this))}; }
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement operator/(const FieldElement& o) const {
    if (o.is_zero()) throw InvalidArgument("division by zero in " + field_->name());
    return {field_, field_->div(code_, o.checked(*this))};
  }
  FieldElement inverse() const {
    if (is_zero()) throw InvalidArgument("zero has no inverse");
    return {field_, field_->inv(code_)};
  }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return field_->same_as(*o.field_) && code_ == o.code_;
  }

 private:
  Field::Code checked(const FieldElement& other) const {
    if (!field_->same_as(*other.field_)) throw InvalidArgument("mixed-field arithmetic");
    return code_;
  }

  FieldPtr field_;
  Field::Code code_;
};

/// ff_generator
inline FieldElement generator(const FieldPtr& f) { return FieldElement(f, f->generator()); }

/// frobenius: x -> x^{q0} for a subfield order q0.
inline FieldElement frobenius(const FieldElement& x, std::uint64_t q0) {
  return FieldElement(x.field_ptr(), x.field().frobenius(x.code(), q0));
}

}  // namespace rscount::algebra

#endif  // RSCOUNT_FIELD_HPP
