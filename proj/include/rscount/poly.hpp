#ifndef RSCOUNT_POLY_HPP
#define RSCOUNT_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rscount/field.hpp"

namespace rscount::algebra {

using Code = Field::Code;
using Coeffs = std::vector<Code>;

namespace kernel {

// Raw coefficient-vector arithmetic (lowest degree first). Vectors are kept
// trimmed: no trailing zeros, the zero polynomial is the empty vector.

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs add(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

inline Coeffs sub(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

inline void mul_into(const Field& f, std::span<const Code> a, std::span<const Code> b, Coeffs& out) {
  out.assign(a.empty() || b.empty() ? 0 : a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
}

inline Coeffs mul(const Field& f, const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  mul_into(f, a, b, out);
  return out;
}

/// a <- a mod m, m non-zero.
inline void rem_inplace(const Field& f, Coeffs& a, std::span<const Code> m) {
  const std::size_t dm = m.size() - 1;
  const Code lead_inv = f.inv(m.back());
  trim(a);
  while (a.size() > dm) {
    const Code factor = lead_inv == 1 ? a.back() : f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    a.pop_back();
    trim(a);
  }
}

/// (quotient, remainder) of a by non-zero m.
inline std::pair<Coeffs, Coeffs> divmod(const Field& f, Coeffs a, const Coeffs& m) {
  const std::size_t dm = m.size() - 1;
  const Code lead_inv = f.inv(m.back());
  trim(a);
  Coeffs quot(a.size() > dm ? a.size() - dm : 0, 0);
  while (a.size() > dm) {
    const Code factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    quot[shift] = factor;
    for (std::size_t i = 0; i < dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, m[i]));
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

inline void make_monic(const Field& f, Coeffs& a) {
  if (a.empty() || a.back() == 1) return;
  const Code li = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, li);
}

/// Monic gcd; gcd(0, 0) = 0.
inline Coeffs gcd(const Field& f, Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    rem_inplace(f, a, b);
    std::swap(a, b);
  }
  make_monic(f, a);
  return a;
}

inline Coeffs derivative(const Field& f, const Coeffs& a) {
  Coeffs d(a.size() > 1 ? a.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a[i]);
  trim(d);
  return d;
}

inline Coeffs mulmod(const Field& f, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  Coeffs out;
  mul_into(f, a, b, out);
  rem_inplace(f, out, m);
  return out;
}

inline Coeffs powmod(const Field& f, Coeffs base, std::uint64_t e, const Coeffs& m) {
  Coeffs result{1};
  rem_inplace(f, result, m);
  rem_inplace(f, base, m);
  while (e > 0) {
    if (e & 1) result = mulmod(f, result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(f, base, base, m);
  }
  return result;
}

inline bool is_squarefree(const Field& f, const Coeffs& a) {
  const Coeffs g = gcd(f, a, derivative(f, a));
  return g.size() == 1;
}

/// Ben-Or: a monic f of degree n is irreducible iff gcd(x^{q^i} - x, f) = 1
/// for every 1 <= i <= n/2.
inline bool is_irreducible(const Field& f, const Coeffs& a) {
  const int n = degree(a);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (a[0] == 0) return false;
  const Coeffs x{0, 1};
  Coeffs h = x;
  for (int i = 1; 2 * i <= n; ++i) {
    h = powmod(f, h, f.q(), a);
    Coeffs t = sub(f, h, x);
    if (t.empty()) return false;
    if (gcd(f, t, a).size() > 1) return false;
  }
  return true;
}

}  // namespace kernel

/// Univariate polynomial over a finite field.
class Poly {
 public:
  Poly(FieldPtr field, Coeffs coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_) {
      if (c >= field_->q()) throw InvalidArgument("coefficient code out of range for " + field_->name());
    }
    kernel::trim(c_);
  }

  /// From integer coefficients interpreted as element codes, lowest degree first.
  static Poly from_codes(FieldPtr field, std::initializer_list<int> codes) {
    Coeffs c;
    for (int v : codes) {
      if (v < 0) throw InvalidArgument("negative coefficient code");
      c.push_back(static_cast<Code>(v));
    }
    return Poly(std::move(field), std::move(c));
  }

  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly one(FieldPtr field) { return Poly(std::move(field), {1}); }
  static Poly x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
  /// t - a
  static Poly linear(FieldPtr field, Code a) {
    const Code na = field->neg(a);
    return Poly(std::move(field), {na, 1});
  }

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return kernel::degree(c_); }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Code coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Code constant_term() const noexcept { return coeff(0); }
  FieldElement coefficient(std::size_t i) const { return FieldElement(field_, coeff(i)); }

  Code evaluate(Code x) const noexcept {
    Code r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
  }

  Poly operator+(const Poly& o) const { return {field_, kernel::add(*field_, c_, same(o).c_)}; }
  Poly operator-(const Poly& o) const { return {field_, kernel::sub(*field_, c_, same(o).c_)}; }
  Poly operator*(const Poly& o) const { return {field_, kernel::mul(*field_, c_, same(o).c_)}; }

  bool operator==(const Poly& o) const noexcept { return field_->same_as(*o.field_) && c_ == o.c_; }

 private:
  const Poly& same(const Poly& o) const {
    if (!field_->same_as(*o.field_)) throw InvalidArgument("mixed-field polynomial arithmetic");
    return o;
  }

  FieldPtr field_;
  Coeffs c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  auto [qt, r] = kernel::divmod(a.field(), a.coeffs(), b.coeffs());
  return {Poly(a.field_ptr(), std::move(qt)), Poly(a.field_ptr(), std::move(r))};
}

inline Poly gcd(const Poly& a, const Poly& b) {
  return Poly(a.field_ptr(), kernel::gcd(a.field(), a.coeffs(), b.coeffs()));
}

inline Poly derivative(const Poly& a) { return Poly(a.field_ptr(), kernel::derivative(a.field(), a.coeffs())); }

inline Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::one(a.field_ptr());
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

/// True iff gcd(f, f') = 1.
inline bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw InvalidArgument("is_squarefree: zero polynomial");
  return kernel::is_squarefree(f.field(), f.coeffs());
}

/// True iff the monic f has no monic factor of degree in [1, deg f - 1].
inline bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw InvalidArgument("is_irreducible: zero or constant polynomial");
  if (!f.is_monic()) throw InvalidArgument("is_irreducible: polynomial is not monic");
  return kernel::is_irreducible(f.field(), f.coeffs());
}

/// Position of a monic polynomial in the enumeration order: sum of code(a_i) q^i
/// over the non-leading coefficients.
inline std::uint64_t monic_index(const Poly& f) {
  std::uint64_t idx = 0;
  for (int i = f.degree() - 1; i >= 0; --i) idx = idx * f.field().q() + f.coeff(static_cast<std::size_t>(i));
  return idx;
}

inline Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t idx) {
  Coeffs c(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    c[i] = static_cast<Code>(idx % field->q());
    idx /= field->q();
  }
  c[degree] = 1;
  return Poly(field, std::move(c));
}

/// Visits every monic polynomial of the given degree in index order. The
/// callback receives the full coefficient vector (leading 1 included).
/// When `constant` is set, only polynomials with that constant term are visited.
template <class Fn>
void for_each_monic(const Field& field, unsigned degree, Fn&& fn, std::optional<Code> constant = std::nullopt) {
  Coeffs c(degree + 1, 0);
  c[degree] = 1;
  const std::size_t first = constant ? 1 : 0;
  if (constant) c[0] = *constant;
  const Code top = static_cast<Code>(field.q() - 1);
  while (true) {
    fn(static_cast<const Coeffs&>(c));
    std::size_t i = first;
    while (i < degree && c[i] == top) c[i++] = 0;
    if (i >= degree) break;
    ++c[i];
  }
}

/// Text form "q=Q: c0,c1,...,cn" with coefficient codes lowest degree first.
inline std::string to_text(const Poly& f) {
  std::ostringstream os;
  os << "q=" << f.field().q() << ":";
  if (f.is_zero()) {
    os << " 0";
    return os.str();
  }
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i == 0 ? " " : ",") << f.coeffs()[i];
  return os.str();
}

inline Poly parse_poly(const std::string& text) {
  const auto colon = text.find(':');
  if (text.rfind("q=", 0) != 0 || colon == std::string::npos) {
    throw InvalidArgument("polynomial text must look like \"q=3: 1,0,1\"");
  }
  std::uint64_t q = 0;
  try {
    q = std::stoull(text.substr(2, colon - 2));
  } catch (const std::exception&) {
    throw InvalidArgument("bad field header in \"" + text + "\"");
  }
  auto field = Field::of_order(q);
  Coeffs c;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty()) throw InvalidArgument("empty coefficient in \"" + text + "\"");
    unsigned long v = 0;
    try {
      v = std::stoul(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad coefficient \"" + item + "\"");
    }
    if (v >= q) throw InvalidArgument("coefficient " + item + " out of range for q=" + std::to_string(q));
    c.push_back(static_cast<Code>(v));
  }
  return Poly(field, std::move(c));
}

}  // namespace rscount::algebra

#endif  // RSCOUNT_POLY_HPP
