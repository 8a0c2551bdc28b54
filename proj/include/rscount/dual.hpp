#ifndef RSCOUNT_DUAL_HPP
#define RSCOUNT_DUAL_HPP

#include <cstdint>
#include <span>
#include <string>

#include "rscount/poly.hpp"

// Conjugation operators on polynomials with non-zero constant term:
//
//   star:  f*(t) = f(0)^{-1} t^n f(1/t)            roots a -> a^{-1}
//   tilde: f~(t) = f(0)^{-s} t^n f^s(1/t)          roots a -> a^{-q}
//
// where s is the involution x -> x^q of GF(q^2). Coefficient-wise, the
// coefficient of t^{n-i} in f* is a_i / a_0, and in f~ it is (a_i / a_0)^q.

namespace rscount::dual {

using algebra::Code;
using algebra::Coeffs;
using algebra::Field;
using algebra::FieldElement;
using algebra::Poly;

/// Residue of r(.) in Z/(q-1) or s(.) in Z/(q+1).
struct CharacterIndex {
  std::uint64_t modulus = 1;
  std::uint64_t value = 0;

  bool operator==(const CharacterIndex&) const = default;
};

enum class TypeSign : int { minus = -1, plus = 1 };

enum class BlockKind {
  self_conjugate_irreducible,  ///< *-self-conjugate irreducible other than z-1, z+1
  conjugate_pair,              ///< {f, f*} with f != f*
};

namespace kernel {

inline void require_admissible(const Coeffs& c, const char* op) {
  if (c.size() < 2 || c.back() != 1) throw InvalidArgument(std::string(op) + ": polynomial must be monic of degree >= 1");
  if (c[0] == 0) throw InvalidArgument(std::string(op) + ": constant term must be non-zero");
}

inline Coeffs star(const Field& f, const Coeffs& c) {
  const std::size_t n = c.size() - 1;
  const Code a0_inv = f.inv(c[0]);
  Coeffs out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = f.mul(c[i], a0_inv);
  return out;
}

inline Coeffs tilde(const Field& f, const Coeffs& c, std::uint64_t base_q) {
  const std::size_t n = c.size() - 1;
  const Code a0_inv = f.inv(c[0]);
  Coeffs out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = f.pow(f.mul(c[i], a0_inv), base_q);
  return out;
}

/// Early-exit test for f* == f on a monic coefficient vector.
inline bool is_star_self_conjugate(const Field& f, std::span<const Code> c) {
  if (c[0] == 0) return false;
  const std::size_t n = c.size() - 1;
  const Code a0_inv = f.inv(c[0]);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[n - i] != f.mul(c[i], a0_inv)) return false;
  }
  return true;
}

inline bool is_tilde_self_conjugate(const Field& f, std::span<const Code> c, std::uint64_t base_q) {
  if (c[0] == 0) return false;
  const std::size_t n = c.size() - 1;
  const Code a0_inv = f.inv(c[0]);
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[n - i] != f.pow(f.mul(c[i], a0_inv), base_q)) return false;
  }
  return true;
}

}  // namespace kernel

inline void require_quadratic_extension(const Field& f, std::uint64_t base_q) {
  if (base_q < 2 || base_q * base_q != f.q() || !f.is_subfield_order(base_q)) {
    throw InvalidArgument(f.name() + " is not GF(q^2) for q=" + std::to_string(base_q));
  }
}

/// star_conjugate
inline Poly star_conjugate(const Poly& f) {
  kernel::require_admissible(f.coeffs(), "star_conjugate");
  return Poly(f.field_ptr(), kernel::star(f.field(), f.coeffs()));
}

/// tilde_conjugate over GF(base_q^2)
inline Poly tilde_conjugate(const Poly& f, std::uint64_t base_q) {
  kernel::require_admissible(f.coeffs(), "tilde_conjugate");
  require_quadratic_extension(f.field(), base_q);
  return Poly(f.field_ptr(), kernel::tilde(f.field(), f.coeffs(), base_q));
}

inline bool is_star_self_conjugate(const Poly& f) {
  return f.is_monic() && f.degree() >= 1 && kernel::is_star_self_conjugate(f.field(), f.coeffs());
}

inline bool is_tilde_self_conjugate(const Poly& f, std::uint64_t base_q) {
  require_quadratic_extension(f.field(), base_q);
  return f.is_monic() && f.degree() >= 1 && kernel::is_tilde_self_conjugate(f.field(), f.coeffs(), base_q);
}

/// Discrete log of `value` to base `zeta` by linear scan over the cyclic
/// group generated by zeta. Throws InternalError if value is not a power.
inline std::uint64_t discrete_log(const Field& f, Code zeta, Code value) {
  Code x = Field::one();
  const std::uint64_t ord = f.order(zeta);
  for (std::uint64_t e = 0; e < ord; ++e) {
    if (x == value) return e;
    x = f.mul(x, zeta);
  }
  throw InternalError("discrete_log: element is not in the subgroup generated by zeta");
}

/// r(f): the log base zeta of (-1)^{deg f} f(0), in Z/(q-1).
inline CharacterIndex r_label(const Poly& f, const FieldElement& zeta) {
  const Field& fld = f.field();
  if (!fld.same_as(zeta.field())) throw InvalidArgument("r_label: zeta is in a different field");
  if (f.is_zero() || f.constant_term() == 0) throw InvalidArgument("r_label: constant term must be non-zero");
  if (fld.order(zeta.code()) != fld.q() - 1) throw InvalidArgument("r_label: zeta does not generate GF(q)*");
  Code v = f.constant_term();
  if (f.degree() % 2 != 0) v = fld.neg(v);
  return {fld.q() - 1, discrete_log(fld, zeta.code(), v)};
}

/// g^{q-1} for g = ff_generator(GF(q^2)); has exact order q+1.
inline FieldElement unitary_zeta(const algebra::FieldPtr& f, std::uint64_t base_q) {
  require_quadratic_extension(*f, base_q);
  return FieldElement(f, f->pow(f->generator(), base_q - 1));
}

/// s(f) in Z/(q+1) for an irreducible f over GF(q^2).
inline CharacterIndex s_label(const Poly& f, std::uint64_t base_q, const FieldElement& zeta) {
  const Field& fld = f.field();
  require_quadratic_extension(fld, base_q);
  if (!fld.same_as(zeta.field())) throw InvalidArgument("s_label: zeta is in a different field");
  kernel::require_admissible(f.coeffs(), "s_label");
  if (fld.order(zeta.code()) != base_q + 1) throw InvalidArgument("s_label: zeta must have order q+1");
  const Coeffs t = kernel::tilde(fld, f.coeffs(), base_q);
  Code v;
  if (t == f.coeffs()) {
    v = f.constant_term();
    if (f.degree() % 2 != 0) v = fld.neg(v);
  } else {
    v = fld.mul(f.constant_term(), t[0]);
  }
  if (fld.pow(v, base_q + 1) != Field::one()) {
    throw InternalError("s_label: value lies outside the order-(q+1) subgroup");
  }
  return {base_q + 1, discrete_log(fld, zeta.code(), v)};
}

/// Orthogonal type carried by the space of a factor block.
inline TypeSign type_sign(BlockKind kind) {
  return kind == BlockKind::self_conjugate_irreducible ? TypeSign::minus : TypeSign::plus;
}

/// Type sign of a factor given as a polynomial: a *-self-conjugate
/// irreducible (not z-1, z+1) is -1; a non-self-conjugate irreducible
/// (standing for its pair) is +1. z-1 and z+1 are rejected.
inline TypeSign type_sign(const Poly& factor) {
  if (factor.degree() == 1 && dual::is_star_self_conjugate(factor)) {
    throw InvalidArgument("type_sign: z-1 and z+1 carry no fixed type");
  }
  return type_sign(is_star_self_conjugate(factor) ? BlockKind::self_conjugate_irreducible
                                                  : BlockKind::conjugate_pair);
}

}  // namespace rscount::dual

#endif  // RSCOUNT_DUAL_HPP
