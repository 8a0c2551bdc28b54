#ifndef RSCOUNT_SERIES_HPP
#define RSCOUNT_SERIES_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rscount/config.hpp"

namespace rscount::series {

/// Polynomial in the symbol Q (the field size) with integer coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int c) : QPoly(Integer(c)) {}  // NOLINT: integers embed as constants
  QPoly(Integer c) {                   // NOLINT
    if (c != 0) c_.push_back(std::move(c));
  }
  /// Coefficients lowest power first.
  static QPoly from_coeffs(std::vector<Integer> c) {
    QPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }
  static QPoly variable() { return from_coeffs({0, 1}); }
  /// c Q^k
  static QPoly monomial(Integer c, unsigned k) {
    std::vector<Integer> v(k + 1, 0);
    v[k] = std::move(c);
    return from_coeffs(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  Integer evaluate(const Integer& q) const {
    Integer r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
    return r;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return from_coeffs(std::move(r));
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// "q^3 - q^2 + 2q - 4"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Integer& c = c_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (k == 0 || mag != 1) os << mag;
      if (k >= 1) os << var;
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

/// a / b for b with leading coefficient +-1; throws InternalError on a remainder.
inline QPoly divide_exact(const QPoly& a, const QPoly& b, const char* context) {
  if (b.is_zero() || (b.coeffs().back() != 1 && b.coeffs().back() != -1)) {
    throw InvalidArgument(std::string(context) + ": divisor must have leading coefficient +-1");
  }
  std::vector<Integer> r = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    if (!a.is_zero()) throw InternalError(std::string(context) + ": polynomial division leaves a remainder");
    return {};
  }
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree(); k >= db; --k) {
    const Integer c = r[k] * d.back();  // lead is its own inverse
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * d[j];
  }
  for (const auto& x : r) {
    if (x != 0) throw InternalError(std::string(context) + ": polynomial division leaves a remainder");
  }
  return QPoly::from_coeffs(std::move(quot));
}

inline bool is_unit(const Integer& c) { return c == 1 || c == -1; }
inline bool is_unit(const QPoly& c) { return c.degree() == 0 && is_unit(c.coeff(0)); }

/// Power series in u truncated after u^T, coefficients in Coeff (Integer or QPoly).
template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = kDefaultTruncation) : c_(check_order(order) + 1, Coeff(0)) {}
  TruncatedSeries(int order, std::vector<Coeff> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
  }

  /// The constant series c.
  static TruncatedSeries constant(int order, Coeff c) { return TruncatedSeries(order, {std::move(c)}); }
  /// A polynomial in u given lowest degree first; terms beyond T are dropped.
  static TruncatedSeries polynomial(int order, std::vector<Coeff> coeffs) {
    return TruncatedSeries(order, std::move(coeffs));
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

  /// coeff
  const Coeff& coeff(int n) const {
    if (n < 0 || n > order()) {
      throw InvalidArgument("coefficient index " + std::to_string(n) + " outside truncation order " +
                            std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(n)];
  }
  Coeff& coeff_ref(int n) {
    (void)coeff(n);
    return c_[static_cast<std::size_t>(n)];
  }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& x : a.c_) x = Coeff(0) - x;
    return a;
  }
  friend TruncatedSeries operator*(const Coeff& s, TruncatedSeries a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }

  /// series_mul: Cauchy product truncated at T.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    const int T = a.order();
    TruncatedSeries r(T);
    for (int i = 0; i <= T; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= T; ++j) {
        if (is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  /// series_inv: inverse mod u^{T+1}; the constant term must be +1 or -1.
  TruncatedSeries inverse() const {
    if (!is_unit(c_[0])) throw InvalidArgument("series_inv: constant term is not a unit");
    const Coeff& c0 = c_[0];  // c0 = c0^{-1}
    const int T = order();
    TruncatedSeries r(T);
    r.c_[0] = c0;
    for (int n = 1; n <= T; ++n) {
      Coeff s(0);
      for (int k = 1; k <= n; ++k) {
        if (!is_zero(c_[k])) s += c_[k] * r.c_[n - k];
      }
      r.c_[n] = Coeff(0) - c0 * s;
    }
    return r;
  }

  /// Same series with u replaced by u^k (truncated at the same order).
  TruncatedSeries substitute_power(int k) const {
    TruncatedSeries r(order());
    for (int i = 0; i * k <= order(); ++i) r.c_[i * k] = c_[i];
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw InvalidArgument("truncation order must be non-negative");
    return order;
  }
  static bool is_zero(const Integer& c) { return c == 0; }
  static bool is_zero(const QPoly& c) { return c.is_zero(); }
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw InvalidArgument("series truncation orders differ");
  }

  std::vector<Coeff> c_;
};

using IntSeries = TruncatedSeries<Integer>;
using QSeries = TruncatedSeries<QPoly>;

/// series_inv
template <class C>
TruncatedSeries<C> series_inv(const TruncatedSeries<C>& a) {
  return a.inverse();
}

/// series_mul
template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return a * b;
}

/// Generalized binomial coefficient C(e, j) for any integer e.
inline Integer binomial(const Integer& e, unsigned j) {
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < j; ++i) {
    num *= e - i;
    den *= i + 1;
  }
  return exact_div(num, den, "binomial");
}

/// series_binomial_power: (1 + sign u^d)^{exponent} truncated at T.
template <class C = Integer>
TruncatedSeries<C> series_binomial_power(int d, int sign, const Integer& exponent, int T) {
  if (d < 1) throw InvalidArgument("series_binomial_power: degree must be at least 1");
  if (sign != 1 && sign != -1) throw InvalidArgument("series_binomial_power: sign must be +1 or -1");
  TruncatedSeries<C> r(T);
  for (int j = 0; j * d <= T; ++j) {
    Integer c = binomial(exponent, static_cast<unsigned>(j));
    if (sign < 0 && j % 2 == 1) c = -c;
    r.coeff_ref(j * d) = C(c);
  }
  return r;
}

/// series_from_rational: numerator / denominator for polynomials in u given
/// lowest degree first.
template <class C>
TruncatedSeries<C> series_from_rational(const std::vector<C>& numerator, const std::vector<C>& denominator, int T) {
  if (denominator.empty() || !is_unit(denominator[0])) {
    throw InvalidArgument("series_from_rational: denominator constant term is not a unit");
  }
  return TruncatedSeries<C>::polynomial(T, numerator) * TruncatedSeries<C>::polynomial(T, denominator).inverse();
}

/// coeff
template <class C>
const C& coeff(const TruncatedSeries<C>& s, int n) {
  return s.coeff(n);
}

/// Specializes Q to an integer, coefficient-wise.
inline IntSeries evaluate(const QSeries& s, const Integer& q) {
  IntSeries r(s.order());
  for (int i = 0; i <= s.order(); ++i) r.coeff_ref(i) = s.coeff(i).evaluate(q);
  return r;
}

/// Product of polynomials in u (lowest degree first), untruncated.
template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<C> r(a.size() + b.size() - 1, C(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class C>
std::vector<C> poly_mul(std::initializer_list<std::vector<C>> factors) {
  std::vector<C> r{C(1)};
  for (const auto& f : factors) r = poly_mul(r, f);
  return r;
}

}  // namespace rscount::series

#endif  // RSCOUNT_SERIES_HPP
