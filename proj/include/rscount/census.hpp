#ifndef RSCOUNT_CENSUS_HPP
#define RSCOUNT_CENSUS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rscount/dual.hpp"
#include "rscount/poly.hpp"

namespace rscount::census {

using algebra::Code;
using algebra::Coeffs;
using algebra::Field;
using algebra::FieldPtr;
using algebra::Poly;

/// The five irreducible-polynomial censuses.
///   N        monic irreducibles over GF(q) with non-zero constant term
///   N_tilde  ~-self-conjugate monic irreducibles over GF(q^2)
///   M_tilde  unordered pairs {f, f~}, f != f~, of monic irreducibles over GF(q^2)
///   N_star   *-self-conjugate monic irreducibles over GF(q)
///   M_star   unordered pairs {f, f*}, f != f*, of monic irreducibles over GF(q)
enum class CensusKind { N, N_tilde, M_tilde, N_star, M_star };

enum class CensusMethod { enumerate, formula };

inline std::string to_string(CensusKind k) {
  switch (k) {
    case CensusKind::N: return "N";
    case CensusKind::N_tilde: return "N_tilde";
    case CensusKind::M_tilde: return "M_tilde";
    case CensusKind::N_star: return "N_star";
    case CensusKind::M_star: return "M_star";
  }
  return "?";
}

inline CensusKind parse_kind(const std::string& s) {
  for (auto k : {CensusKind::N, CensusKind::N_tilde, CensusKind::M_tilde, CensusKind::N_star, CensusKind::M_star}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown census kind \"" + s + "\" (expected N, N_tilde, M_tilde, N_star, M_star)");
}

inline std::string to_string(CensusMethod m) { return m == CensusMethod::enumerate ? "enumerate" : "formula"; }

struct CensusCount {
  CensusKind kind;
  std::uint64_t q;
  unsigned d;
  Integer count;
  CensusMethod method;
  /// Present for enumerate results whose count is at most the witness limit.
  /// For pair kinds, one representative (the smaller in enumeration order) per pair.
  std::optional<std::vector<Poly>> witnesses;
};

struct CensusOptions {
  bool witnesses = true;
  std::uint64_t witness_limit = 1u << 16;
  std::uint64_t cap = enumeration_cap();
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Sieve over the monic polynomials of degree d over a field: every product
/// f*g with f irreducible of degree <= d/2 is struck out, the survivors are
/// exactly the irreducibles. Indices follow algebra::monic_index.
class IrreducibleSieve {
 public:
  IrreducibleSieve(const Field& field, unsigned degree) : field_(field), d_(degree) {
    if (degree < 1) throw InvalidArgument("degree must be at least 1");
    size_ = saturating_pow(field.q(), degree);
    pw_.resize(d_ + 1);
    pw_[0] = 1;
    for (unsigned i = 1; i <= d_; ++i) pw_[i] = pw_[i - 1] * field.q();
    reducible_.assign((size_ + 63) / 64, 0);
    const unsigned q = field.q();
    step_delta_.resize(q);
    for (unsigned c = 0; c < q; ++c) {
      const Code next = static_cast<Code>((c + 1) % q);
      step_delta_[c] = field.sub(next, static_cast<Code>(c));
    }
    run();
  }

  std::uint64_t size() const noexcept { return size_; }
  bool is_irreducible(std::uint64_t idx) const noexcept { return !((reducible_[idx >> 6] >> (idx & 63)) & 1u); }

  std::vector<std::uint64_t> irreducible_indices() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < size_; ++i) {
      if (is_irreducible(i)) out.push_back(i);
    }
    return out;
  }

 private:
  void mark(std::uint64_t idx) noexcept { reducible_[idx >> 6] |= std::uint64_t{1} << (idx & 63); }

  void run() {
    for (unsigned e = 1; 2 * e <= d_; ++e) {
      std::vector<std::uint64_t> factors;
      if (e == 1) {
        for (unsigned c = 0; c < field_.q(); ++c) factors.push_back(c);
      } else {
        factors = IrreducibleSieve(field_, e).irreducible_indices();
      }
      Coeffs f(e + 1);
      for (auto fi : factors) {
        for (unsigned i = 0; i < e; ++i) {
          f[i] = static_cast<Code>(fi % field_.q());
          fi /= field_.q();
        }
        f[e] = 1;
        strike_multiples(f, e);
      }
    }
  }

  // Odometer over the cofactor g = t^m + sum g_j t^j, maintaining h = f*g and
  // its index incrementally.
  void strike_multiples(const Coeffs& f, unsigned e) {
    const unsigned m = d_ - e;
    const unsigned q = field_.q();
    Coeffs h(d_ + 1, 0);
    std::uint64_t idx = 0;
    for (unsigned i = 0; i <= e; ++i) h[m + i] = f[i];
    for (unsigned i = 0; i < e; ++i) idx += static_cast<std::uint64_t>(f[i]) * pw_[m + i];
    mark(idx);
    Coeffs g(m, 0);
    while (true) {
      unsigned j = 0;
      for (; j < m; ++j) {
        const Code delta = step_delta_[g[j]];
        for (unsigned i = 0; i <= e; ++i) {
          const unsigned pos = j + i;
          const Code old = h[pos];
          const Code nw = field_.add(old, field_.mul(delta, f[i]));
          h[pos] = nw;
          idx += (static_cast<std::uint64_t>(nw) - static_cast<std::uint64_t>(old)) * pw_[pos];
        }
        g[j] = static_cast<Code>((g[j] + 1) % q);
        if (g[j] != 0) break;
      }
      if (j == m) break;
      mark(idx);
    }
  }

  const Field& field_;
  unsigned d_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> pw_;
  std::vector<std::uint64_t> reducible_;
  Coeffs step_delta_;
};

/// All monic irreducibles of degree d in enumeration order, optionally only
/// those with non-zero constant term.
inline std::vector<Poly> irreducibles(const FieldPtr& field, unsigned d, bool nonzero_constant,
                                      std::uint64_t cap = enumeration_cap()) {
  if (d < 1) throw InvalidArgument("irreducibles: degree must be at least 1");
  check_enumeration("irreducibles of degree " + std::to_string(d) + " over " + field->name(),
                    saturating_pow(field->q(), d), cap);
  const IrreducibleSieve sieve(*field, d);
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < sieve.size(); ++idx) {
    if (!sieve.is_irreducible(idx)) continue;
    if (nonzero_constant && idx % field->q() == 0) continue;
    out.push_back(algebra::monic_from_index(field, d, idx));
  }
  return out;
}

/// Visits every monic f of degree d with non-zero constant term fixed by
/// f -> f(0)^{-1} t^d tau(f)(1/t), tau = x -> x^{conj_power} applied
/// coefficient-wise (conj_power 1 gives *, conj_power q on GF(q^2) gives ~).
/// The coefficients are parametrized by a0 (with a0^{conj_power+1} = 1)
/// and the lower half; each visited polynomial is re-checked.
template <class Fn>
void for_each_self_conjugate(const Field& field, unsigned d, std::uint64_t conj_power, Fn&& fn) {
  const auto tau = [&](Code x) { return conj_power == 1 ? x : field.pow(x, conj_power); };
  const unsigned half = (d - 1) / 2;
  const bool has_middle = d % 2 == 0;
  const unsigned q = field.q();
  Coeffs c(d + 1, 0);
  c[d] = 1;
  for (unsigned a0 = 1; a0 < q; ++a0) {
    if (field.pow(static_cast<Code>(a0), conj_power + 1) != 1) continue;
    const Code inv0 = field.inv(static_cast<Code>(a0));
    c[0] = static_cast<Code>(a0);
    std::vector<Code> lower(half, 0);
    while (true) {
      for (unsigned i = 0; i < half; ++i) {
        c[i + 1] = lower[i];
        c[d - 1 - i] = tau(field.mul(lower[i], inv0));
      }
      const unsigned mids = has_middle ? q : 1;
      for (unsigned mv = 0; mv < mids; ++mv) {
        if (has_middle) {
          const Code m = static_cast<Code>(mv);
          if (m != tau(field.mul(m, inv0))) continue;
          c[d / 2] = m;
        }
        const bool ok = conj_power == 1 ? dual::kernel::is_star_self_conjugate(field, c)
                                        : dual::kernel::is_tilde_self_conjugate(field, c, conj_power);
        if (!ok) throw InternalError("self-conjugate parametrization produced a non-self-conjugate polynomial");
        fn(static_cast<const Coeffs&>(c));
      }
      unsigned i = 0;
      while (i < half && lower[i] == q - 1) lower[i++] = 0;
      if (i >= half) break;
      ++lower[i];
    }
  }
}

inline unsigned base_q_of(const Field& big) {
  unsigned b = 2;
  while (b * b < big.q()) ++b;
  return b;
}

namespace detail {

inline void attach(CensusCount& out, std::vector<Poly>&& w, const CensusOptions& opt) {
  if (opt.witnesses && out.count <= opt.witness_limit) out.witnesses = std::move(w);
}

/// Irreducibles of degree d with non-zero constant, split into self-conjugate
/// ones and one representative per conjugate pair. `conjugate` maps a
/// coefficient vector to its conjugate.
template <class Conj>
void split_by_conjugation(const FieldPtr& field, unsigned d, const CensusOptions& opt, Conj&& conjugate,
                          Integer& self_count, Integer& pair_count, std::vector<Poly>* self_w,
                          std::vector<Poly>* pair_w) {
  const IrreducibleSieve sieve(*field, d);
  std::uint64_t selfs = 0, others = 0, reps = 0;
  for (std::uint64_t idx = 0; idx < sieve.size(); ++idx) {
    if (!sieve.is_irreducible(idx) || idx % field->q() == 0) continue;
    const Poly f = algebra::monic_from_index(field, d, idx);
    const Poly g(field, conjugate(f.coeffs()));
    const std::uint64_t gi = algebra::monic_index(g);
    if (!sieve.is_irreducible(gi)) throw InternalError("conjugate of an irreducible is reducible");
    if (gi == idx) {
      ++selfs;
      if (self_w && selfs <= opt.witness_limit) self_w->push_back(f);
    } else {
      ++others;
      if (idx < gi) {
        ++reps;
        if (pair_w && reps <= opt.witness_limit) pair_w->push_back(f);
      }
    }
  }
  if (others != 2 * reps) throw InternalError("conjugation does not pair up the non-self-conjugate irreducibles");
  self_count = selfs;
  pair_count = reps;
}

}  // namespace detail

/// Candidate-space size that enumerating (kind, q, d) visits.
inline std::uint64_t enumeration_candidates(CensusKind kind, std::uint64_t q, unsigned d) {
  switch (kind) {
    case CensusKind::N:
    case CensusKind::M_star: return saturating_pow(q, d);
    case CensusKind::M_tilde: return saturating_pow(saturating_mul(q, q), d);
    case CensusKind::N_star: {
      const std::uint64_t units = q % 2 == 0 ? 1 : 2;
      std::uint64_t n = saturating_mul(units, saturating_pow(q, (d - 1) / 2));
      return d % 2 == 0 ? saturating_mul(n, q) : n;
    }
    case CensusKind::N_tilde: {
      std::uint64_t n = saturating_mul(q + 1, saturating_pow(saturating_mul(q, q), (d - 1) / 2));
      return d % 2 == 0 ? saturating_mul(n, saturating_mul(q, q)) : n;
    }
  }
  return 0;
}

inline CensusCount census_enumerate(CensusKind kind, std::uint64_t q, unsigned d, const CensusOptions& opt = {}) {
  if (d < 1) throw InvalidArgument("census: degree must be at least 1");
  const bool tilde_kind = kind == CensusKind::N_tilde || kind == CensusKind::M_tilde;
  const FieldPtr field = tilde_kind ? Field::of_order(q * q) : Field::of_order(q);
  check_enumeration("census " + to_string(kind) + "(q=" + std::to_string(q) + ", d=" + std::to_string(d) + ")",
                    enumeration_candidates(kind, q, d), opt.cap);
  CensusCount out{kind, q, d, 0, CensusMethod::enumerate, std::nullopt};
  switch (kind) {
    case CensusKind::N: {
      const IrreducibleSieve sieve(*field, d);
      std::vector<Poly> w;
      std::uint64_t n = 0;
      for (std::uint64_t idx = 0; idx < sieve.size(); ++idx) {
        if (!sieve.is_irreducible(idx) || idx % q == 0) continue;
        ++n;
        if (opt.witnesses && n <= opt.witness_limit) w.push_back(algebra::monic_from_index(field, d, idx));
      }
      out.count = n;
      detail::attach(out, std::move(w), opt);
      break;
    }
    case CensusKind::N_star:
    case CensusKind::N_tilde: {
      const std::uint64_t conj = kind == CensusKind::N_star ? 1 : q;
      std::vector<Poly> w;
      std::uint64_t n = 0;
      for_each_self_conjugate(*field, d, conj, [&](const Coeffs& c) {
        if (!algebra::kernel::is_irreducible(*field, c)) return;
        ++n;
        if (opt.witnesses && n <= opt.witness_limit) w.push_back(Poly(field, c));
      });
      out.count = n;
      detail::attach(out, std::move(w), opt);
      break;
    }
    case CensusKind::M_star:
    case CensusKind::M_tilde: {
      Integer selfs, pairs;
      std::vector<Poly> w;
      const Field& fld = *field;
      if (kind == CensusKind::M_star) {
        detail::split_by_conjugation(field, d, opt, [&](const Coeffs& c) { return dual::kernel::star(fld, c); },
                                     selfs, pairs, nullptr, &w);
      } else {
        detail::split_by_conjugation(field, d, opt,
                                     [&](const Coeffs& c) { return dual::kernel::tilde(fld, c, q); }, selfs,
                                     pairs, nullptr, &w);
      }
      out.count = pairs;
      detail::attach(out, std::move(w), opt);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting formulas (root-orbit / Moebius counting)

inline int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

/// All monic irreducibles of degree d over GF(q): (1/d) sum_{e|d} mu(d/e) q^e.
inline Integer necklace(const Integer& q, unsigned d) {
  Integer s = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e == 0) s += mobius(d / e) * ipow(q, e);
  }
  return exact_div(s, d, "necklace");
}

inline Integer census_formula(CensusKind kind, std::uint64_t q, unsigned d) {
  if (d < 1) throw InvalidArgument("census: degree must be at least 1");
  if (q < 2) throw InvalidArgument("census: q must be at least 2");
  const Integer Q = q;
  const bool odd = q % 2 == 1;
  const auto N = [&](const Integer& qq) { return necklace(qq, d) - (d == 1 ? 1 : 0); };
  const auto N_star = [&]() -> Integer {
    if (d == 1) return odd ? 2 : 1;
    if (d % 2 == 1) return 0;
    const unsigned m = d / 2;
    Integer s = 0;
    for (unsigned k = 1; k <= m; k += 2) {
      if (m % k == 0) s += mobius(k) * (ipow(Q, m / k) - (odd ? 1 : 0));
    }
    return exact_div(s, d, "N_star formula");
  };
  const auto N_tilde = [&]() -> Integer {
    if (d % 2 == 0) return 0;
    Integer s = 0;
    for (unsigned k = 1; k <= d; ++k) {
      if (d % k == 0) s += mobius(k) * (ipow(Q, d / k) + 1);
    }
    return exact_div(s, d, "N_tilde formula");
  };
  switch (kind) {
    case CensusKind::N: return N(Q);
    case CensusKind::N_star: return N_star();
    case CensusKind::M_star: return exact_div(N(Q) - N_star(), 2, "M_star formula");
    case CensusKind::N_tilde: return N_tilde();
    case CensusKind::M_tilde: return exact_div(N(Q * Q) - N_tilde(), 2, "M_tilde formula");
  }
  return 0;
}

/// census_count
inline CensusCount census_count(CensusKind kind, std::uint64_t q, unsigned d, CensusMethod method,
                                const CensusOptions& opt = {}) {
  if (method == CensusMethod::enumerate) return census_enumerate(kind, q, d, opt);
  return CensusCount{kind, q, d, census_formula(kind, q, d), CensusMethod::formula, std::nullopt};
}

/// Rough cost of enumerating (kind, q, d), in sieve-step units: the sieve
/// kinds touch each candidate a few times, the self-conjugate kinds run an
/// irreducibility test of cost about d^2 per candidate.
inline std::uint64_t census_work(CensusKind kind, std::uint64_t q, unsigned d) {
  const std::uint64_t c = enumeration_candidates(kind, q, d);
  if (kind == CensusKind::N_star || kind == CensusKind::N_tilde) return saturating_mul(c, std::uint64_t{d} * d);
  return c;
}

/// Read-mostly memo of census counts. Insertion is idempotent and guarded,
/// so concurrent readers and writers are safe.
class CensusCache {
 public:
  Integer get(CensusKind kind, std::uint64_t q, unsigned d, CensusMethod method) {
    const Key key{kind, q, d, method};
    {
      std::lock_guard lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    CensusOptions opt;
    opt.witnesses = false;
    const Integer v = census_count(kind, q, d, method, opt).count;
    std::lock_guard lock(mu_);
    map_.emplace(key, v);
    return v;
  }

 private:
  using Key = std::tuple<CensusKind, std::uint64_t, unsigned, CensusMethod>;
  std::mutex mu_;
  std::map<Key, Integer> map_;
};

/// Process-wide cache shared by the generating-function drivers.
inline CensusCache& shared_cache() {
  static CensusCache cache;
  return cache;
}

}  // namespace rscount::census

#endif  // RSCOUNT_CENSUS_HPP
