#ifndef RSCOUNT_GENFUN_HPP
#define RSCOUNT_GENFUN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rscount/census.hpp"
#include "rscount/closedform.hpp"
#include "rscount/series.hpp"

// Generating functions: the census products, the closed rational forms,
// and counts read off as series coefficients.
//
// lem1..lem5 and ogenodd_* are series in u. ogeneven_* and solved_* are
// the R-series themselves, i.e. in the half-degree variable v = u^2, so
// that the coefficient of v^n is the count for rank n.

namespace rscount::genfun {

using census::CensusKind;
using census::CensusMethod;
using closedform::CharParity;
using closedform::Family;
using closedform::GroupSpec;
using series::IntSeries;
using series::QPoly;
using series::QSeries;
using series::TruncatedSeries;

enum class LemmaId {
  lem1,
  lem2,
  lem3,
  lem4,
  lem5,
  ogenodd_sum,
  ogenodd_diff,
  ogeneven_plus,
  ogeneven_minus,
  solved_R_SO,
  solved_R_SO_plus,
  solved_R_SO_minus,
};

inline const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids{
      LemmaId::lem1,          LemmaId::lem2,           LemmaId::lem3,          LemmaId::lem4,
      LemmaId::lem5,          LemmaId::ogenodd_sum,    LemmaId::ogenodd_diff,  LemmaId::ogeneven_plus,
      LemmaId::ogeneven_minus, LemmaId::solved_R_SO,   LemmaId::solved_R_SO_plus, LemmaId::solved_R_SO_minus};
  return ids;
}

inline std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::lem1: return "lem1";
    case LemmaId::lem2: return "lem2";
    case LemmaId::lem3: return "lem3";
    case LemmaId::lem4: return "lem4";
    case LemmaId::lem5: return "lem5";
    case LemmaId::ogenodd_sum: return "ogenodd_sum";
    case LemmaId::ogenodd_diff: return "ogenodd_diff";
    case LemmaId::ogeneven_plus: return "ogeneven_plus";
    case LemmaId::ogeneven_minus: return "ogeneven_minus";
    case LemmaId::solved_R_SO: return "solved_R_SO";
    case LemmaId::solved_R_SO_plus: return "solved_R_SO_plus";
    case LemmaId::solved_R_SO_minus: return "solved_R_SO_minus";
  }
  return "?";
}

inline LemmaId parse_lemma(const std::string& s) {
  for (auto id : all_lemmas()) {
    if (to_string(id) == s) return id;
  }
  throw InvalidArgument("unknown lemma id \"" + s + "\"");
}

/// Characteristic the identity is stated for, if restricted.
inline std::optional<CharParity> required_parity(LemmaId id) {
  switch (id) {
    case LemmaId::lem4:
    case LemmaId::ogenodd_sum:
    case LemmaId::ogenodd_diff:
    case LemmaId::solved_R_SO:
    case LemmaId::solved_R_SO_plus:
    case LemmaId::solved_R_SO_minus: return CharParity::odd;
    case LemmaId::lem5:
    case LemmaId::ogeneven_plus:
    case LemmaId::ogeneven_minus: return CharParity::even;
    default: return std::nullopt;
  }
}

inline bool admissible(LemmaId id, CharParity parity) {
  const auto req = required_parity(id);
  return !req || *req == parity;
}

inline void require_admissible(LemmaId id, CharParity parity) {
  if (admissible(id, parity)) return;
  throw ParityMismatch(to_string(id) + " requires " +
                       (*required_parity(id) == CharParity::odd ? "odd" : "even") + " characteristic");
}

/// True when the identity is a series in v = u^2 rather than u.
inline bool half_degree(LemmaId id) {
  switch (id) {
    case LemmaId::ogeneven_plus:
    case LemmaId::ogeneven_minus:
    case LemmaId::solved_R_SO:
    case LemmaId::solved_R_SO_plus:
    case LemmaId::solved_R_SO_minus: return true;
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Closed rational side

namespace detail {

/// Sparse polynomial in u: {(power, coefficient)}.
template <class C>
std::vector<C> upoly(std::initializer_list<std::pair<int, C>> terms) {
  int deg = 0;
  for (const auto& t : terms) deg = std::max(deg, t.first);
  std::vector<C> v(static_cast<std::size_t>(deg + 1), C(0));
  for (const auto& t : terms) v[static_cast<std::size_t>(t.first)] += t.second;
  return v;
}

template <class C>
TruncatedSeries<C> rational(const std::vector<C>& num, const std::vector<C>& den, int T) {
  return series::series_from_rational(num, den, T);
}

}  // namespace detail

/// closed_side: the right-hand side of the identity, with q given as an
/// integer or as the symbol Q (pass QPoly::variable()). `parity` selects e
/// in lem3 and is checked against the identity's characteristic.
template <class C>
TruncatedSeries<C> closed_side(LemmaId id, const C& q, CharParity parity, int T) {
  require_admissible(id, parity);
  using detail::rational;
  using detail::upoly;
  using series::poly_mul;
  const C one(1), two(2), mq = C(0) - q;
  const auto minus_one = TruncatedSeries<C>::constant(T, C(-1));
  const auto one_plus = [&](int k) { return upoly<C>({{0, one}, {k, one}}); };
  const auto one_minus = [&](int k) { return upoly<C>({{0, one}, {k, C(-1)}}); };
  const auto one_minus_q = [&](int k) { return upoly<C>({{0, one}, {k, mq}}); };

  switch (id) {
    case LemmaId::lem1:
      return rational(poly_mul(one_plus(1), one_minus_q(1)), one_minus_q(2), T);
    case LemmaId::lem2:
      return rational(poly_mul(one_plus(2), one_minus_q(1)), poly_mul(one_plus(1), one_minus_q(2)), T);
    case LemmaId::lem3: {
      auto num = poly_mul(one_plus(1), one_minus_q(1));
      if (parity == CharParity::odd) num = poly_mul(num, one_plus(1));
      return rational(num, one_minus_q(2), T);
    }
    case LemmaId::lem4:
      return rational(poly_mul({one_minus(1), one_plus(1), one_plus(1)}), one_minus_q(2), T);
    case LemmaId::lem5:
      return rational(one_plus(1), one_minus_q(2), T);
    case LemmaId::ogenodd_sum: {
      auto pre = poly_mul(upoly<C>({{0, one}, {2, two}}), upoly<C>({{0, one}, {1, two}, {2, two}}));
      pre[0] += one;
      return rational(poly_mul(pre, one_minus_q(4)), poly_mul({one_plus(2), one_plus(2), one_minus_q(2)}), T) +
             minus_one;
    }
    case LemmaId::ogenodd_diff:
      return rational(poly_mul(upoly<C>({{0, two}}), one_minus_q(4)),
                      poly_mul({one_plus(2), one_plus(2), one_minus(2)}), T) +
             minus_one;
    case LemmaId::ogeneven_plus:
      return rational(one_minus_q(2), one_minus_q(1), T) + rational(one_minus_q(2), one_plus(1), T) + minus_one;
    case LemmaId::ogeneven_minus:
      return rational(one_minus_q(2), one_minus_q(1), T) - rational(one_minus_q(2), one_plus(1), T);
    case LemmaId::solved_R_SO:
      return rational(poly_mul(upoly<C>({{0, one}, {1, two}}), one_minus_q(2)),
                      poly_mul({one_plus(1), one_plus(1), one_minus_q(1)}), T);
    case LemmaId::solved_R_SO_plus:
    case LemmaId::solved_R_SO_minus: {
      const auto a = rational(poly_mul(upoly<C>({{0, one}, {1, two}, {2, two}}), one_minus_q(2)),
                              poly_mul({one_plus(1), one_plus(1), one_minus_q(1)}), T);
      const auto b = rational(one_minus_q(2), poly_mul({one_plus(1), one_plus(1), one_minus(1)}), T);
      return id == LemmaId::solved_R_SO_plus ? a + b + minus_one : a - b;
    }
  }
  throw InvalidArgument("unknown lemma id");
}

// ---------------------------------------------------------------------------
// Census product side

enum class CensusPolicy {
  automatic,       ///< enumerate where cheap, otherwise the counting formula
  enumerate_only,  ///< enumerate; the truncation order is lowered to stay within the bound
  formula_only,
};

/// Work limit (census::census_work units) below which automatic mode enumerates.
inline constexpr std::uint64_t kAutoCensusWork = std::uint64_t{1} << 25;

struct CensusSource {
  CensusKind kind;
  unsigned d;
  CensusMethod method;
  Integer count;
};

struct ProductSide {
  IntSeries series;
  int requested_order;
  std::vector<CensusSource> sources;
};

namespace detail {

/// One family of factors prod_{d: step*d <= T} (1 + sign u^{step d})^{exp_sign * census(kind, mult*d)}.
struct FactorFamily {
  CensusKind kind;
  unsigned mult;
  int sign;
  unsigned step;
  int exp_sign;
};

inline std::vector<FactorFamily> factors(LemmaId id, bool plain) {
  using K = CensusKind;
  // plain: the census product A; otherwise B (the signed product).
  switch (id) {
    case LemmaId::lem1: return {{K::N, 1, 1, 1, -1}};
    case LemmaId::lem2: return {{K::N_tilde, 1, 1, 1, -1}, {K::M_tilde, 1, 1, 2, -1}};
    case LemmaId::lem3: return {{K::N_star, 2, 1, 1, -1}, {K::M_star, 1, 1, 1, -1}};
    case LemmaId::lem4:
    case LemmaId::lem5: return {{K::N_star, 2, -1, 1, -1}, {K::M_star, 1, 1, 1, -1}};
    case LemmaId::ogenodd_sum:
    case LemmaId::ogenodd_diff:
      if (plain) return {{K::N_star, 2, 1, 2, 1}, {K::M_star, 1, 1, 2, 1}};
      return {{K::N_star, 2, -1, 2, 1}, {K::M_star, 1, 1, 2, 1}};
    default:
      if (plain) return {{K::N_star, 2, 1, 1, 1}, {K::M_star, 1, 1, 1, 1}};
      return {{K::N_star, 2, -1, 1, 1}, {K::M_star, 1, 1, 1, 1}};
  }
}

inline std::vector<std::pair<CensusKind, unsigned>> needed(LemmaId id, int T) {
  std::vector<std::pair<CensusKind, unsigned>> out;
  for (bool plain : {true, false}) {
    for (const auto& f : factors(id, plain)) {
      for (unsigned d = 1; static_cast<int>(f.step * d) <= T; ++d) out.emplace_back(f.kind, f.mult * d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool field_size_ok(CensusKind kind, std::uint64_t q) {
  const bool tilde = kind == CensusKind::N_tilde || kind == CensusKind::M_tilde;
  return (tilde ? q * q : q) <= algebra::kMaxFieldOrder;
}

}  // namespace detail

/// Largest order <= T whose censuses all fit under the enumeration bound.
inline int enumerable_order(LemmaId id, std::uint64_t q, int T, std::uint64_t cap = enumeration_cap()) {
  int best = 0;
  for (int t = 1; t <= T; ++t) {
    bool ok = true;
    for (const auto& [kind, d] : detail::needed(id, t)) {
      if (census::enumeration_candidates(kind, q, d) > cap) ok = false;
    }
    if (!ok) break;
    best = t;
  }
  return best;
}

/// product_side: the census product assembled as in the identity's proof,
/// with Q specialized to q. In enumerate_only mode the series may come back
/// with a lower order than requested.
inline ProductSide product_side(LemmaId id, std::uint64_t q, int T, CensusPolicy policy = CensusPolicy::automatic) {
  if (T < 0) throw InvalidArgument("truncation order must be non-negative");
  if (!algebra::prime_power(q)) throw InvalidArgument("q=" + std::to_string(q) + " is not a prime power");
  const CharParity parity = closedform::parity_of(q);
  require_admissible(id, parity);
  for (const auto& [kind, d] : detail::needed(id, std::min(T, 1))) {
    if (!detail::field_size_ok(kind, q)) {
      throw InvalidArgument("field size for " + census::to_string(kind) + " at q=" + std::to_string(q) +
                            " exceeds " + std::to_string(algebra::kMaxFieldOrder));
    }
  }
  const int order = policy == CensusPolicy::enumerate_only ? enumerable_order(id, q, T) : T;

  ProductSide out{IntSeries(order), T, {}};
  auto& cache = census::shared_cache();
  const auto count = [&](CensusKind kind, unsigned d) {
    CensusMethod m = CensusMethod::formula;
    if (policy == CensusPolicy::enumerate_only ||
        (policy == CensusPolicy::automatic && census::census_work(kind, q, d) <= kAutoCensusWork)) {
      m = CensusMethod::enumerate;
    }
    Integer c = cache.get(kind, q, d, m);
    out.sources.push_back({kind, d, m, c});
    return c;
  };
  const auto product = [&](bool plain) {
    auto s = IntSeries::constant(order, 1);
    for (const auto& f : detail::factors(id, plain)) {
      for (unsigned d = 1; static_cast<int>(f.step * d) <= order; ++d) {
        const Integer e = f.exp_sign * count(f.kind, f.mult * d);
        if (e != 0) s *= series::series_binomial_power(static_cast<int>(f.step * d), f.sign, e, order);
      }
    }
    return s;
  };
  const auto poly = [&](std::vector<Integer> c) { return IntSeries::polynomial(order, std::move(c)); };
  const auto minus_one = IntSeries::constant(order, -1);

  switch (id) {
    case LemmaId::lem1:
    case LemmaId::lem2:
    case LemmaId::lem3:
    case LemmaId::lem4:
    case LemmaId::lem5: out.series = product(true); break;
    case LemmaId::ogenodd_sum: {
      const IntSeries a = product(true);
      out.series = poly({1, 0, 2}) * poly({1, 2, 2}) * a + a + minus_one;
      break;
    }
    case LemmaId::ogenodd_diff: out.series = Integer(2) * product(false) + minus_one; break;
    case LemmaId::ogeneven_plus: out.series = poly({1, 1}) * product(true) + product(false) + minus_one; break;
    case LemmaId::ogeneven_minus: out.series = poly({1, 1}) * product(true) - product(false); break;
    case LemmaId::solved_R_SO: out.series = poly({1, 2}) * product(true); break;
    case LemmaId::solved_R_SO_plus:
      out.series = poly({1, 2, 2}) * product(true) + product(false) + minus_one;
      break;
    case LemmaId::solved_R_SO_minus: out.series = poly({1, 2, 2}) * product(true) - product(false); break;
  }
  std::sort(out.sources.begin(), out.sources.end(), [](const CensusSource& a, const CensusSource& b) {
    return std::tie(a.kind, a.d) < std::tie(b.kind, b.d);
  });
  out.sources.erase(std::unique(out.sources.begin(), out.sources.end(),
                                [](const CensusSource& a, const CensusSource& b) {
                                  return a.kind == b.kind && a.d == b.d;
                                }),
                    out.sources.end());
  return out;
}

// ---------------------------------------------------------------------------
// Verification

struct VerificationReport {
  LemmaId lemma;
  std::uint64_t q;
  int requested_order;
  int order;  ///< order actually compared
  bool pass;
  std::optional<int> first_mismatch;
  std::vector<Integer> lhs;
  std::vector<Integer> rhs;
  std::vector<CensusSource> sources;
};

/// verify_lemma: product side against closed side, coefficient by coefficient.
inline VerificationReport verify_lemma(LemmaId id, std::uint64_t q, int T,
                                       CensusPolicy policy = CensusPolicy::automatic) {
  ProductSide lhs = product_side(id, q, T, policy);
  const int order = lhs.series.order();
  const IntSeries rhs = closed_side<Integer>(id, Integer(q), closedform::parity_of(q), order);
  VerificationReport r{id, q, T, order, true, std::nullopt, lhs.series.coeffs(), rhs.coeffs(),
                       std::move(lhs.sources)};
  for (int n = 0; n <= order; ++n) {
    if (r.lhs[n] != r.rhs[n]) {
      r.pass = false;
      r.first_mismatch = n;
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Counts as coefficients

namespace detail {

// (1-Qu^2)/(1-u^2) and (1-Qu^2)/(1+u^2): the omega = -1 terms for SL and SU.
template <class C>
TruncatedSeries<C> minus_one_term(const C& q, bool unitary, int T) {
  const C one(1);
  return rational(upoly<C>({{0, one}, {2, C(0) - q}}), upoly<C>({{0, one}, {2, unitary ? one : C(-1)}}), T);
}

}  // namespace detail

/// Generating series (in the rank variable) for a family; SL and SU are not
/// of this shape and are handled by gf_coefficient.
template <class C>
TruncatedSeries<C> family_series(Family family, const C& q, CharParity parity, int T) {
  using detail::rational;
  using detail::upoly;
  using series::poly_mul;
  const C one(1), mq = C(0) - q;
  const auto one_plus = [&](int k) { return upoly<C>({{0, one}, {k, one}}); };
  const auto one_minus_q = [&](int k) { return upoly<C>({{0, one}, {k, mq}}); };
  switch (family) {
    case Family::GL: return rational(one_minus_q(2), poly_mul(one_plus(1), one_minus_q(1)), T);
    case Family::U:
      return rational(poly_mul(one_plus(1), one_minus_q(2)), poly_mul(one_plus(2), one_minus_q(1)), T);
    case Family::Sp: {
      auto den = poly_mul(one_plus(1), one_minus_q(1));
      if (parity == CharParity::odd) den = poly_mul(den, one_plus(1));
      return rational(one_minus_q(2), den, T);
    }
    case Family::SO_odd_dim:
      if (parity == CharParity::even) return family_series(Family::Sp, q, parity, T);
      return closed_side(LemmaId::solved_R_SO, q, parity, T);
    case Family::SO_plus:
      return closed_side(parity == CharParity::odd ? LemmaId::solved_R_SO_plus : LemmaId::ogeneven_plus, q, parity,
                         T);
    case Family::SO_minus:
      return closed_side(parity == CharParity::odd ? LemmaId::solved_R_SO_minus : LemmaId::ogeneven_minus, q,
                         parity, T);
    default: break;
  }
  throw InvalidArgument("family " + closedform::to_string(family) + " has no single generating series");
}

/// Coefficient for rank n as a polynomial in Q (parity fixes the
/// characteristic-dependent shape).
inline QPoly gf_symbolic(Family family, unsigned n, CharParity parity) {
  if (n < 1) throw InvalidArgument("rank n must be at least 1");
  const QPoly Q = QPoly::variable();
  const int T = static_cast<int>(n);
  if (family == Family::SL || family == Family::SU) {
    const bool unitary = family == Family::SU;
    QPoly c = family_series(unitary ? Family::U : Family::GL, Q, parity, T).coeff(T);
    if (parity == CharParity::odd) c += detail::minus_one_term(Q, unitary, T).coeff(T);
    return series::divide_exact(c, unitary ? Q + QPoly(1) : Q - QPoly(1), "gf_symbolic");
  }
  return family_series(family, Q, parity, T).coeff(T);
}

/// gf_count: the class count read off the closed generating function.
inline Integer gf_count(const GroupSpec& g) {
  closedform::validate(g.n, g.q);
  const Integer Q = g.q;
  const CharParity parity = g.parity();
  const int T = static_cast<int>(g.n);
  if (g.family == Family::SL || g.family == Family::SU) {
    const bool unitary = g.family == Family::SU;
    Integer c = family_series(unitary ? Family::U : Family::GL, Q, parity, T).coeff(T);
    if (parity == CharParity::odd) c += detail::minus_one_term(Q, unitary, T).coeff(T);
    return exact_div(c, unitary ? Q + 1 : Q - 1, "gf_count");
  }
  return family_series(g.family, Q, parity, T).coeff(T);
}

}  // namespace rscount::genfun

#endif  // RSCOUNT_GENFUN_HPP
