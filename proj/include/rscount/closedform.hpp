#ifndef RSCOUNT_CLOSEDFORM_HPP
#define RSCOUNT_CLOSEDFORM_HPP

#include <cstdint>
#include <string>

#include "rscount/config.hpp"
#include "rscount/field.hpp"
#include "rscount/series.hpp"

// Closed-form counts of regular semisimple classes, as exact integer
// functions of the rank n and the field size q.

namespace rscount::closedform {

using series::QPoly;

enum class Family { GL, SL, U, SU, Sp, SO_odd_dim, SO_plus, SO_minus };

enum class CharParity { odd, even };

inline CharParity parity_of(std::uint64_t q) { return q % 2 == 0 ? CharParity::even : CharParity::odd; }

inline std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::SL: return "sl";
    case Family::U: return "u";
    case Family::SU: return "su";
    case Family::Sp: return "sp";
    case Family::SO_odd_dim: return "so-odd";
    case Family::SO_plus: return "so+";
    case Family::SO_minus: return "so-";
  }
  return "?";
}

inline Family parse_family(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "so\xE2\x88\x92") s = "so-";  // U+2212 minus sign
  for (auto f : {Family::GL, Family::SL, Family::U, Family::SU, Family::Sp, Family::SO_odd_dim, Family::SO_plus,
                 Family::SO_minus}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidArgument("unknown group family \"" + s + "\" (expected gl, sl, u, su, sp, so-odd, so+, so-)");
}

/// Printable group name, e.g. "SO+(4,3)", "Sp(4,3)", "SO(7,3)".
inline std::string group_name(Family f, unsigned n, std::uint64_t q) {
  const std::string qs = std::to_string(q);
  switch (f) {
    case Family::GL: return "GL(" + std::to_string(n) + "," + qs + ")";
    case Family::SL: return "SL(" + std::to_string(n) + "," + qs + ")";
    case Family::U: return "U(" + std::to_string(n) + "," + qs + ")";
    case Family::SU: return "SU(" + std::to_string(n) + "," + qs + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * n) + "," + qs + ")";
    case Family::SO_odd_dim: return "SO(" + std::to_string(2 * n + 1) + "," + qs + ")";
    case Family::SO_plus: return "SO+(" + std::to_string(2 * n) + "," + qs + ")";
    case Family::SO_minus: return "SO-(" + std::to_string(2 * n) + "," + qs + ")";
  }
  return "?";
}

/// A classical group: Sp(2n,q), SO(2n+1,q), SO+-(2n,q) are indexed by the rank n.
struct GroupSpec {
  Family family;
  unsigned n;
  std::uint64_t q;

  CharParity parity() const { return parity_of(q); }
  std::string name() const { return group_name(family, n, q); }
};

inline void validate(unsigned n, std::uint64_t q) {
  if (n < 1) throw InvalidArgument("rank n must be at least 1");
  if (q < 2) throw InvalidArgument("field size q must be at least 2");
}

/// numerator / denominator of a closed form; the division must be exact.
struct Quotient {
  Integer numerator;
  Integer denominator;
  Integer offset = 0;  ///< added after the division

  Integer value(const char* context) const { return exact_div(numerator, denominator, context) + offset; }
};

// ---------------------------------------------------------------------------
// Linear and unitary groups

inline Quotient rs_gl_quotient(unsigned n, std::uint64_t q) {
  validate(n, q);
  const Integer Q = q;
  return {ipow(Q, n + 1) - ipow(Q, n) + sign_pow(n + 1) * (Q - 1), Q + 1};
}

/// rs_gl: (q^{n+1} - q^n + (-1)^{n+1}(q-1)) / (q+1)
inline Integer rs_gl(unsigned n, std::uint64_t q) { return rs_gl_quotient(n, q).value("rs_gl"); }

inline Quotient rs_sl_quotient(unsigned n, std::uint64_t q) {
  validate(n, q);
  const Integer Q = q;
  if (n % 2 == 1 || q % 2 == 0) return {ipow(Q, n + 1) - ipow(Q, n) + sign_pow(n + 1) * (Q - 1), Q * Q - 1};
  return {ipow(Q, n + 1) - ipow(Q, n) - (Q - 1), Q * Q - 1, -1};
}

/// rs_sl
inline Integer rs_sl(unsigned n, std::uint64_t q) { return rs_sl_quotient(n, q).value("rs_sl"); }

// q^{n+1} - q^n + (-1)^{n+1} (-1)^{floor(n/2)} (q - (-1)^n)
inline Integer unitary_bracket(unsigned n, const Integer& Q) {
  return ipow(Q, n + 1) - ipow(Q, n) + sign_pow(n + 1) * sign_pow(n / 2) * (Q - sign_pow(n));
}

inline Quotient rs_u_quotient(unsigned n, std::uint64_t q) {
  validate(n, q);
  const Integer Q = q;
  return {(Q + 1) * unitary_bracket(n, Q), Q * Q + 1};
}

/// rs_u
inline Integer rs_u(unsigned n, std::uint64_t q) { return rs_u_quotient(n, q).value("rs_u"); }

inline Quotient rs_su_quotient(unsigned n, std::uint64_t q) {
  validate(n, q);
  const Integer Q = q;
  if (n % 2 == 1 || q % 2 == 0) return {unitary_bracket(n, Q), Q * Q + 1};
  const int s = sign_pow(n / 2);
  return {ipow(Q, n + 1) - ipow(Q, n) - s * (Q - 1), Q * Q + 1, s};
}

/// rs_su
inline Integer rs_su(unsigned n, std::uint64_t q) { return rs_su_quotient(n, q).value("rs_su"); }

// ---------------------------------------------------------------------------
// Symplectic and orthogonal groups

inline Quotient rs_sp_quotient(unsigned n, std::uint64_t q) {
  validate(n, q);
  const Integer Q = q;
  if (q % 2 == 0) return {(Q - 1) * (ipow(Q, n) + sign_pow(n - 1)), Q + 1};
  Integer s = sign_pow(n) * Integer(n + 1);
  for (unsigned i = 0; i < n; ++i) s += sign_pow(i) * Integer(2 * i + 1) * ipow(Q, n - i);
  return {s, 1};
}

/// rs_sp
inline Integer rs_sp(unsigned n, std::uint64_t q) { return rs_sp_quotient(n, q).value("rs_sp"); }

namespace detail {

// q^n - q^{n-1} + sum_{k=2}^{last} (-1)^k (2k-3) q^{n-k}
inline Integer orthogonal_head(unsigned n, unsigned last, const Integer& Q) {
  Integer s = ipow(Q, n) - ipow(Q, n - 1);
  for (unsigned k = 2; k <= last; ++k) s += sign_pow(k) * Integer(2 * k - 3) * ipow(Q, n - k);
  return s;
}

}  // namespace detail

/// rs_so_odd_dim: classes of SO(2n+1,q). Even q goes through Sp(2n,q).
inline Integer rs_so_odd_dim(unsigned n, std::uint64_t q) {
  validate(n, q);
  if (q % 2 == 0) return rs_sp(n, q);
  const Integer Q = q;
  if (n == 1) return Q;
  if (n == 2) return Q * Q - Q - 1;
  // q^n - q^{n-1} - q^{n-2} + 3q^{n-3} - 5q^{n-4} + ... + (-1)^n (2n-5) q - (-1)^n (n-1)
  Integer s = ipow(Q, n) - ipow(Q, n - 1);
  for (unsigned k = 2; k <= n - 1; ++k) s += sign_pow(k + 1) * Integer(2 * k - 3) * ipow(Q, n - k);
  s -= sign_pow(n) * Integer(n - 1);
  return s;
}

/// rs_so_even_dim: classes of SO^{epsilon}(2n,q), epsilon = +1 or -1.
inline Integer rs_so_even_dim(int epsilon, unsigned n, std::uint64_t q) {
  validate(n, q);
  if (epsilon != 1 && epsilon != -1) throw InvalidArgument("orthogonal type must be + or -");
  const Integer Q = q;
  const bool plus = epsilon == 1;
  if (q % 2 == 0) {
    if (n == 1) return plus ? Q - 1 : Q + 1;
    // q^n - q^{n-1} -+ (-1)^n (q-1)
    return ipow(Q, n) - ipow(Q, n - 1) - epsilon * sign_pow(n) * (Q - 1);
  }
  if (plus) {
    if (n == 1) return Q - 1;
    if (n == 2) return Q * Q - 2 * Q + 3;
    if (n == 3) return ipow(Q, 3) - Q * Q + 2 * Q - 4;
    const Integer head = detail::orthogonal_head(n, n - 2, Q);
    if (n % 2 == 0) return head - Integer(5 * n - 10) / 2 * Q + Integer(3 * n) / 2;
    return head + Integer(5 * n - 11) / 2 * Q - Integer(3 * n - 1) / 2;
  }
  if (n == 1) return Q + 1;
  if (n == 2) return Q * Q - 1;
  if (n == 3) return ipow(Q, 3) - Q * Q;
  const Integer head = detail::orthogonal_head(n, n - 2, Q);
  if (n % 2 == 0) return head - (Integer(3 * n) - 10) / 2 * Q + Integer(n - 4) / 2;
  return head + Integer(3 * n - 9) / 2 * Q - Integer(n - 3) / 2;
}

/// Closed-form count for any supported group.
inline Integer rs_count(const GroupSpec& g) {
  switch (g.family) {
    case Family::GL: return rs_gl(g.n, g.q);
    case Family::SL: return rs_sl(g.n, g.q);
    case Family::U: return rs_u(g.n, g.q);
    case Family::SU: return rs_su(g.n, g.q);
    case Family::Sp: return rs_sp(g.n, g.q);
    case Family::SO_odd_dim: return rs_so_odd_dim(g.n, g.q);
    case Family::SO_plus: return rs_so_even_dim(1, g.n, g.q);
    case Family::SO_minus: return rs_so_even_dim(-1, g.n, g.q);
  }
  throw InvalidArgument("unsupported family");
}

// ---------------------------------------------------------------------------
// Explicit polynomials in q

namespace detail {

// sum_{j=from}^{to} (-1)^{j-1} Q^{n-step*j}
inline QPoly alternating(unsigned n, unsigned step, unsigned from, unsigned to) {
  QPoly s;
  for (unsigned j = from; j <= to; ++j) s += QPoly::monomial(sign_pow(static_cast<long>(j) - 1), n - step * j);
  return s;
}

}  // namespace detail

/// rs_symbolic: the count as an explicit polynomial in Q.
///   GL:  Q^n - 2(Q^{n-1} - Q^{n-2} + ... +- Q) +- 1
///   SL:  Q^{n-1} - Q^{n-2} + ... + (-1)^n Q - (-1)^n       (n odd or q even)
///        Q^{n-1} - Q^{n-2} + ... + Q - 2                  (n even, q odd)
///   U:   Q^n - 2(Q^{n-2} - Q^{n-4} + ... ) + (-1)^{n/2}    (n even)
///        Q^n - 2(Q^{n-2} - ... ) + (-1)^{(n-1)/2}(2Q+1)    (n >= 3 odd)
inline QPoly rs_symbolic(Family family, unsigned n, CharParity parity) {
  if (n < 1) throw InvalidArgument("rank n must be at least 1");
  const QPoly one(1);
  switch (family) {
    case Family::GL: {
      const QPoly inner = n >= 2 ? detail::alternating(n, 1, 1, n - 1) : QPoly();
      return QPoly::monomial(1, n) - QPoly(2) * inner + QPoly(n % 2 == 0 ? 1 : -1);
    }
    case Family::SL: {
      QPoly s;
      for (unsigned j = 0; j + 2 <= n; ++j) s += QPoly::monomial(sign_pow(j), n - 1 - j);
      if (n % 2 == 1 || parity == CharParity::even) return s - QPoly(sign_pow(n));
      return s - QPoly(2);
    }
    case Family::U: {
      if (n % 2 == 0) {
        const QPoly inner = n >= 4 ? detail::alternating(n, 2, 1, (n - 2) / 2) : QPoly();
        return QPoly::monomial(1, n) - QPoly(2) * inner + QPoly(sign_pow(n / 2));
      }
      if (n < 3) throw InvalidArgument("the explicit unitary polynomial is stated for odd n >= 3 only");
      const QPoly inner = n >= 5 ? detail::alternating(n, 2, 1, (n - 3) / 2) : QPoly();
      return QPoly::monomial(1, n) - QPoly(2) * inner +
             QPoly(sign_pow((n - 1) / 2)) * (QPoly(2) * QPoly::variable() + one);
    }
    default: break;
  }
  throw InvalidArgument("no explicit polynomial form for family " + to_string(family));
}

}  // namespace rscount::closedform

#endif  // RSCOUNT_CLOSEDFORM_HPP
