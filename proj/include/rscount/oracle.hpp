#ifndef RSCOUNT_ORACLE_HPP
#define RSCOUNT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rscount/closedform.hpp"
#include "rscount/dual.hpp"
#include "rscount/poly.hpp"

// Ground truth by exhaustive enumeration. Everything here works directly
// from the defining predicates (squarefree, self-conjugate, irreducible)
// and shares no counting shortcuts with the census or series code.

namespace rscount::oracle {

using algebra::Code;
using algebra::Coeffs;
using algebra::Field;
using algebra::FieldPtr;
using algebra::Poly;
using closedform::Family;
using closedform::GroupSpec;

struct OracleResult {
  GroupSpec group;
  Integer count;
  std::uint64_t enumerated = 0;  ///< polynomials or data visited
  std::string method;
};

/// Constant-term constraint: any non-zero value, or one fixed value.
struct ConstantConstraint {
  std::optional<Code> equals;

  static ConstantConstraint nonzero() { return {}; }
  static ConstantConstraint fixed(Code c) { return {c}; }
};

namespace detail {

inline Code signed_one(const Field& f, unsigned n) { return n % 2 == 0 ? Field::one() : f.neg(Field::one()); }

inline Code eval_at(const Field& f, const Coeffs& c, Code x) {
  Code r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = f.add(f.mul(r, x), c[i]);
  return r;
}

inline void check_constraint(const Field& f, const ConstantConstraint& cc) {
  if (cc.equals && (*cc.equals == 0 || *cc.equals >= f.q())) {
    throw InvalidArgument("constant-term constraint must be a non-zero element of " + f.name());
  }
}

}  // namespace detail

/// oracle_linear: monic squarefree degree-n polynomials over GF(q) meeting
/// the constant-term constraint.
inline OracleResult oracle_linear(unsigned n, std::uint64_t q, ConstantConstraint cc = ConstantConstraint::nonzero(),
                                  std::uint64_t cap = enumeration_cap()) {
  closedform::validate(n, q);
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  detail::check_constraint(f, cc);
  const std::uint64_t space = cc.equals ? saturating_pow(q, n - 1) : saturating_pow(q, n);
  check_enumeration("oracle_linear(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")", space, cap);
  std::uint64_t count = 0, seen = 0;
  algebra::for_each_monic(
      f, n,
      [&](const Coeffs& c) {
        ++seen;
        if (c[0] == 0) return;
        if (algebra::kernel::is_squarefree(f, c)) ++count;
      },
      cc.equals);
  const Family fam = cc.equals ? Family::SL : Family::GL;
  return {{fam, n, q}, count, seen, "squarefree monic polynomials over " + f.name()};
}

/// oracle_unitary: monic squarefree degree-n ~-self-conjugate polynomials
/// over GF(q^2) meeting the constant-term constraint (codes in GF(q^2)).
inline OracleResult oracle_unitary(unsigned n, std::uint64_t q, ConstantConstraint cc = ConstantConstraint::nonzero(),
                                   std::uint64_t cap = enumeration_cap()) {
  closedform::validate(n, q);
  if (q * q > algebra::kMaxFieldOrder) throw InvalidArgument("GF(q^2) exceeds the supported field size");
  const FieldPtr field = Field::of_order(q * q);
  const Field& f = *field;
  detail::check_constraint(f, cc);
  const std::uint64_t space = cc.equals ? saturating_pow(q * q, n - 1) : saturating_pow(q * q, n);
  check_enumeration("oracle_unitary(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")", space, cap);
  std::uint64_t count = 0, seen = 0;
  algebra::for_each_monic(
      f, n,
      [&](const Coeffs& c) {
        ++seen;
        if (!dual::kernel::is_tilde_self_conjugate(f, c, q)) return;
        if (algebra::kernel::is_squarefree(f, c)) ++count;
      },
      cc.equals);
  const Family fam = cc.equals ? Family::SU : Family::U;
  return {{fam, n, q}, count, seen, "squarefree ~-self-conjugate polynomials over " + f.name()};
}

/// oracle_symplectic: monic squarefree degree-2n *-self-conjugate polynomials
/// over GF(q) with constant term 1 and no root at 1 or -1.
inline OracleResult oracle_symplectic(unsigned n, std::uint64_t q, std::uint64_t cap = enumeration_cap()) {
  closedform::validate(n, q);
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  check_enumeration("oracle_symplectic(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")",
                    saturating_pow(q, 2 * n - 1), cap);
  const Code minus_one = f.neg(Field::one());
  std::uint64_t count = 0, seen = 0;
  algebra::for_each_monic(
      f, 2 * n,
      [&](const Coeffs& c) {
        ++seen;
        if (!dual::kernel::is_star_self_conjugate(f, c)) return;
        if (detail::eval_at(f, c, Field::one()) == 0 || detail::eval_at(f, c, minus_one) == 0) return;
        if (algebra::kernel::is_squarefree(f, c)) ++count;
      },
      Field::one());
  return {{Family::Sp, n, q}, count, seen, "squarefree *-self-conjugate polynomials over " + f.name()};
}

/// oracle_constant_histogram: for each non-zero constant a (by code), the
/// number of monic squarefree degree-n polynomials over GF(q) with f(0) = a.
inline std::map<Code, Integer> oracle_constant_histogram(unsigned n, std::uint64_t q,
                                                         std::uint64_t cap = enumeration_cap()) {
  closedform::validate(n, q);
  const FieldPtr field = Field::of_order(q);
  const Field& f = *field;
  check_enumeration("oracle_constant_histogram(n=" + std::to_string(n) + ", q=" + std::to_string(q) + ")",
                    saturating_pow(q, n), cap);
  std::vector<std::uint64_t> h(q, 0);
  algebra::for_each_monic(f, n, [&](const Coeffs& c) {
    if (c[0] != 0 && algebra::kernel::is_squarefree(f, c)) ++h[c[0]];
  });
  std::map<Code, Integer> out;
  for (unsigned a = 1; a < q; ++a) out[static_cast<Code>(a)] = h[a];
  return out;
}

/// Same for ~-self-conjugate squarefree polynomials over GF(q^2); the keys
/// are the possible constants, the elements of order dividing q+1.
inline std::map<Code, Integer> oracle_unitary_constant_histogram(unsigned n, std::uint64_t q,
                                                                 std::uint64_t cap = enumeration_cap()) {
  closedform::validate(n, q);
  if (q * q > algebra::kMaxFieldOrder) throw InvalidArgument("GF(q^2) exceeds the supported field size");
  const FieldPtr field = Field::of_order(q * q);
  const Field& f = *field;
  check_enumeration("oracle_unitary_constant_histogram", saturating_pow(q * q, n), cap);
  std::vector<std::uint64_t> h(f.q(), 0);
  algebra::for_each_monic(f, n, [&](const Coeffs& c) {
    if (dual::kernel::is_tilde_self_conjugate(f, c, q) && algebra::kernel::is_squarefree(f, c)) ++h[c[0]];
  });
  std::map<Code, Integer> out;
  for (unsigned a = 1; a < f.q(); ++a) {
    if (f.pow(static_cast<Code>(a), q + 1) == Field::one()) out[static_cast<Code>(a)] = h[a];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal groups

enum class OrthogonalTarget { plus, minus, odd_dim };

/// A building block of a decorated factorization: a *-self-conjugate
/// irreducible of even degree other than z-1, z+1, or a pair {f, f*}.
struct BuildingBlock {
  dual::BlockKind kind;
  Poly representative;  ///< for a pair, the member with the smaller index
  unsigned dimension;   ///< deg f, or 2 deg f for a pair
};

/// One decorated factorization (z-1)^a (z+1)^b * blocks * pairs.
struct ConjugacyDatum {
  unsigned a_minus = 0;
  unsigned b_plus = 0;
  std::optional<dual::TypeSign> a_type;
  std::optional<dual::TypeSign> b_type;
  std::vector<std::size_t> blocks;  ///< indices into the catalog
  unsigned total_dim = 0;
};

/// Every building block of dimension at most m over GF(q).
class BlockCatalog {
 public:
  BlockCatalog(std::uint64_t q, unsigned max_dim, std::uint64_t cap = enumeration_cap())
      : field_(Field::of_order(q)), max_dim_(max_dim) {
    const Field& f = *field_;
    std::uint64_t work = 0;
    for (unsigned d = 2; d <= max_dim; d += 2) work = saturating_mul(2, saturating_pow(q, d - 1)) + work;
    for (unsigned d = 1; 2 * d <= max_dim; ++d) work = saturating_pow(q, d) + work;
    check_enumeration("orthogonal block catalog (q=" + std::to_string(q) + ", m=" + std::to_string(max_dim) + ")",
                      work, cap);
    const Code minus_one = f.neg(Field::one());

    // Self-conjugate irreducibles: f* = f forces f(0)^2 = 1.
    for (unsigned d = 2; d <= max_dim; d += 2) {
      for (Code c0 : unit_roots(minus_one)) {
        algebra::for_each_monic(
            f, d,
            [&](const Coeffs& c) {
              if (!dual::kernel::is_star_self_conjugate(f, c)) return;
              if (!algebra::kernel::is_irreducible(f, c)) return;
              blocks_.push_back({dual::BlockKind::self_conjugate_irreducible, Poly(field_, c), d});
            },
            c0);
      }
    }
    // Pairs {f, f*} of irreducibles with f != f*.
    for (unsigned d = 1; 2 * d <= max_dim; ++d) {
      algebra::for_each_monic(f, d, [&](const Coeffs& c) {
        if (c[0] == 0 || !algebra::kernel::is_irreducible(f, c)) return;
        const Coeffs s = dual::kernel::star(f, c);
        if (s == c) return;
        const Poly p(field_, c), ps(field_, s);
        if (algebra::monic_index(p) < algebra::monic_index(ps)) {
          blocks_.push_back({dual::BlockKind::conjugate_pair, p, 2 * d});
        }
      });
    }
    std::stable_sort(blocks_.begin(), blocks_.end(),
                     [](const BuildingBlock& x, const BuildingBlock& y) { return x.dimension < y.dimension; });
  }

  const std::vector<BuildingBlock>& blocks() const noexcept { return blocks_; }
  const FieldPtr& field() const noexcept { return field_; }
  unsigned max_dim() const noexcept { return max_dim_; }

  /// Characteristic polynomial of the non-(z-+1) part of a datum.
  Poly polynomial(const std::vector<std::size_t>& chosen) const {
    Poly r = Poly::one(field_);
    for (std::size_t i : chosen) {
      const auto& b = blocks_[i];
      r = r * b.representative;
      if (b.kind == dual::BlockKind::conjugate_pair) r = r * dual::star_conjugate(b.representative);
    }
    return r;
  }

 private:
  static std::vector<Code> unit_roots(Code minus_one) {
    if (minus_one == Field::one()) return {Field::one()};
    return {Field::one(), minus_one};
  }

  FieldPtr field_;
  unsigned max_dim_;
  std::vector<BuildingBlock> blocks_;
};

namespace detail {

struct OrthogonalTally {
  Integer S = 0;
  Integer D = 0;
  std::uint64_t data = 0;
};

/// Visits every set of distinct catalog blocks with total dimension <= limit.
template <class Fn>
void for_each_block_set(const BlockCatalog& cat, unsigned limit, Fn&& fn) {
  const auto& bl = cat.blocks();
  std::vector<std::size_t> chosen;
  const auto rec = [&](auto&& self, std::size_t start, unsigned dim, int sign) -> void {
    fn(static_cast<const std::vector<std::size_t>&>(chosen), dim, sign);
    for (std::size_t i = start; i < bl.size(); ++i) {
      if (dim + bl[i].dimension > limit) break;
      chosen.push_back(i);
      self(self, i + 1, dim + bl[i].dimension, sign * static_cast<int>(dual::type_sign(bl[i].kind)));
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 1);
}

}  // namespace detail

/// Calls fn on every decorated datum of total dimension m. Type labels on
/// the z-1 and z+1 parts are enumerated explicitly.
template <class Fn>
void for_each_datum(const BlockCatalog& cat, unsigned m, Fn&& fn) {
  const bool odd_char = cat.field()->p() != 2;
  const std::vector<unsigned> a_options = odd_char ? std::vector<unsigned>{0, 1, 2} : std::vector<unsigned>{0, 2};
  const std::vector<unsigned> b_options = odd_char ? std::vector<unsigned>{0, 2} : std::vector<unsigned>{0};
  const dual::TypeSign signs[2] = {dual::TypeSign::plus, dual::TypeSign::minus};
  detail::for_each_block_set(cat, m, [&](const std::vector<std::size_t>& chosen, unsigned dim, int) {
    for (unsigned a : a_options) {
      for (unsigned b : b_options) {
        if (dim + a + b != m) continue;
        ConjugacyDatum d;
        d.a_minus = a;
        d.b_plus = b;
        d.blocks = chosen;
        d.total_dim = m;
        for (int ta = 0; ta < (a > 0 ? 2 : 1); ++ta) {
          for (int tb = 0; tb < (b > 0 ? 2 : 1); ++tb) {
            if (a > 0) d.a_type = signs[ta];
            if (b > 0) d.b_type = signs[tb];
            fn(static_cast<const ConjugacyDatum&>(d));
          }
        }
      }
    }
  });
}

/// S(m) and D(m) for the decorated data of total dimension m (see oracle_orthogonal).
inline detail::OrthogonalTally orthogonal_tally(const BlockCatalog& cat, unsigned m, bool check_determinant = true) {
  if (m > cat.max_dim()) throw InvalidArgument("catalog does not reach dimension " + std::to_string(m));
  detail::OrthogonalTally t;
  const Field& f = *cat.field();
  for_each_datum(cat, m, [&](const ConjugacyDatum& d) {
    ++t.data;
    const bool bare = d.a_minus == 0 && d.b_plus == 0;
    t.S += bare ? 2 : 1;
    if (check_determinant) {
      // det = (-1)^m f(0) must be 1 for the characteristic polynomial f.
      Code c = cat.polynomial(d.blocks).constant_term();
      if (d.a_minus % 2 == 1) c = f.neg(c);
      if (m % 2 == 1) c = f.neg(c);
      if (c != Field::one()) throw InternalError("orthogonal datum with determinant != 1");
    }
  });
  detail::for_each_block_set(cat, m, [&](const std::vector<std::size_t>&, unsigned dim, int sign) {
    if (dim == m) t.D += 2 * sign;
  });
  return t;
}

namespace detail {

inline std::shared_ptr<const BlockCatalog> catalog(std::uint64_t q, unsigned m, std::uint64_t cap) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const BlockCatalog>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(q); it != cache.end() && it->second->max_dim() >= m) return it->second;
  }
  auto cat = std::make_shared<const BlockCatalog>(q, m, cap);
  std::lock_guard lock(mu);
  auto& slot = cache[q];
  if (!slot || slot->max_dim() < m) slot = cat;
  return slot;
}

}  // namespace detail

/// oracle_orthogonal: classes of SO+(m,q), SO-(m,q) (m even) or SO(m,q)
/// (m odd, odd q) from decorated factorization data.
///   S = sum over data of total dimension m, weight 2 without z-+1 part, else 1
///   D = 2 * sum over data without z-+1 part of the product of block type signs
/// plus = (S+D)/2, minus = (S-D)/2, odd_dim = S/2.
inline OracleResult oracle_orthogonal(unsigned m, std::uint64_t q, OrthogonalTarget target,
                                      std::uint64_t cap = enumeration_cap()) {
  if (m < 2) throw InvalidArgument("orthogonal dimension must be at least 2");
  if (q < 2) throw InvalidArgument("field size q must be at least 2");
  const bool odd_m = m % 2 == 1;
  if (odd_m && target != OrthogonalTarget::odd_dim) {
    throw InvalidArgument("SO+ and SO- need even dimension, got m=" + std::to_string(m));
  }
  if (!odd_m && target == OrthogonalTarget::odd_dim) {
    throw InvalidArgument("odd_dim target needs odd dimension, got m=" + std::to_string(m));
  }
  if (odd_m && q % 2 == 0) {
    throw InvalidArgument("SO(" + std::to_string(m) + "," + std::to_string(q) +
                          ") in even characteristic: use oracle_symplectic instead");
  }
  const auto cat = detail::catalog(q, m, cap);
  const auto t = orthogonal_tally(*cat, m);
  Integer count;
  GroupSpec g{Family::SO_odd_dim, (m - 1) / 2, q};
  switch (target) {
    case OrthogonalTarget::plus:
      count = exact_div(t.S + t.D, 2, "oracle_orthogonal");
      g = {Family::SO_plus, m / 2, q};
      break;
    case OrthogonalTarget::minus:
      count = exact_div(t.S - t.D, 2, "oracle_orthogonal");
      g = {Family::SO_minus, m / 2, q};
      break;
    case OrthogonalTarget::odd_dim: count = exact_div(t.S, 2, "oracle_orthogonal"); break;
  }
  return {g, count, t.data, "decorated factorization data over " + cat->field()->name()};
}

/// Oracle count for any supported group.
inline OracleResult oracle_count(const GroupSpec& g, std::uint64_t cap = enumeration_cap()) {
  closedform::validate(g.n, g.q);
  switch (g.family) {
    case Family::GL: return oracle_linear(g.n, g.q, ConstantConstraint::nonzero(), cap);
    case Family::SL: {
      const auto f = Field::of_order(g.q);
      return oracle_linear(g.n, g.q, ConstantConstraint::fixed(detail::signed_one(*f, g.n)), cap);
    }
    case Family::U: return oracle_unitary(g.n, g.q, ConstantConstraint::nonzero(), cap);
    case Family::SU: {
      const auto f = Field::of_order(g.q * g.q);
      return oracle_unitary(g.n, g.q, ConstantConstraint::fixed(detail::signed_one(*f, g.n)), cap);
    }
    case Family::Sp: return oracle_symplectic(g.n, g.q, cap);
    case Family::SO_odd_dim: {
      if (g.q % 2 == 0) {
        auto r = oracle_symplectic(g.n, g.q, cap);
        r.group = g;
        r.method += " (SO(2n+1,q) = Sp(2n,q) for even q)";
        return r;
      }
      return oracle_orthogonal(2 * g.n + 1, g.q, OrthogonalTarget::odd_dim, cap);
    }
    case Family::SO_plus: return oracle_orthogonal(2 * g.n, g.q, OrthogonalTarget::plus, cap);
    case Family::SO_minus: return oracle_orthogonal(2 * g.n, g.q, OrthogonalTarget::minus, cap);
  }
  throw InvalidArgument("unsupported family");
}

}  // namespace rscount::oracle

#endif  // RSCOUNT_ORACLE_HPP
