// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            run everything
//   acceptance 1 5-literal ...   run the named checks only

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rscount/census.hpp"
#include "rscount/closedform.hpp"
#include "rscount/dual.hpp"
#include "rscount/genfun.hpp"
#include "rscount/oracle.hpp"

using namespace rscount;
using algebra::Code;
using algebra::Coeffs;
using algebra::Field;
using algebra::Poly;
using closedform::CharParity;
using closedform::Family;
using closedform::GroupSpec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string what) {
    pass = false;
    if (failures.size() < 8) failures.push_back(std::move(what));
  }
};

constexpr double kGridBound = 1e7;

bool within(std::uint64_t base, unsigned e) { return static_cast<double>(saturating_pow(base, e)) <= kGridBound; }

// ---------------------------------------------------------------------------

Outcome three_way_grid() {
  Outcome o;
  std::size_t points = 0;
  const auto check = [&](const GroupSpec& g) {
    ++points;
    try {
      const Integer f = closedform::rs_count(g);
      const Integer s = genfun::gf_count(g);
      const Integer e = oracle::oracle_count(g).count;
      if (f != s || s != e) o.fail(g.name() + ": formula " + f.str() + ", genfun " + s.str() + ", oracle " + e.str());
    } catch (const std::exception& ex) {
      o.fail(g.name() + ": " + ex.what());
    }
  };
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (unsigned n = 1; n <= 6 && within(q, n); ++n) {
      check({Family::GL, n, q});
      check({Family::SL, n, q});
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u}) {
    for (unsigned n = 1; within(q, 2 * n); ++n) {
      check({Family::U, n, q});
      check({Family::SU, n, q});
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    for (unsigned n = 1; within(q, 2 * n); ++n) check({Family::Sp, n, q});
  }
  for (std::uint64_t q : {3u, 5u, 7u}) {
    for (unsigned m = 2; m <= 10; ++m) {
      if (m % 2 == 1) {
        check({Family::SO_odd_dim, (m - 1) / 2, q});
      } else {
        check({Family::SO_plus, m / 2, q});
        check({Family::SO_minus, m / 2, q});
      }
    }
  }
  for (auto [q, mmax] : {std::pair{2u, 12u}, {4u, 8u}}) {
    for (unsigned n = 1; 2 * n <= mmax; ++n) {
      check({Family::SO_plus, n, q});
      check({Family::SO_minus, n, q});
    }
  }

  // Anchors.
  const auto anchor = [&](const std::string& what, const Integer& got, const Integer& want) {
    if (got != want) o.fail("anchor " + what + ": got " + got.str() + ", want " + want.str());
  };
  anchor("rs_gl(2,2)", closedform::rs_gl(2, 2), 1);
  anchor("rs_gl(3,2)", closedform::rs_gl(3, 2), 3);
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) anchor("rs_gl(1,q)", closedform::rs_gl(1, q), Integer(q - 1));
  for (std::uint64_t q : {2u, 3u, 4u}) anchor("rs_u(1,q)", closedform::rs_u(1, q), Integer(q + 1));
  anchor("rs_su(2,3)", closedform::rs_su(2, 3), 1);
  anchor("rs_sl(2,3)", closedform::rs_sl(2, 3), 1);
  anchor("rs_sp(1,3)", closedform::rs_sp(1, 3), 1);
  anchor("rs_sp(2,3)", closedform::rs_sp(2, 3), 3);
  for (std::uint64_t q : {3u, 5u, 7u}) {
    const Integer Q = q;
    anchor("SO(3,q)", oracle::oracle_orthogonal(3, q, oracle::OrthogonalTarget::odd_dim).count, Q);
    anchor("SO(5,q)", oracle::oracle_orthogonal(5, q, oracle::OrthogonalTarget::odd_dim).count, Q * Q - Q - 1);
    anchor("SO+(4,q)", oracle::oracle_orthogonal(4, q, oracle::OrthogonalTarget::plus).count, Q * Q - 2 * Q + 3);
    anchor("SO-(4,q)", oracle::oracle_orthogonal(4, q, oracle::OrthogonalTarget::minus).count, Q * Q - 1);
    anchor("SO+(6,q)", oracle::oracle_orthogonal(6, q, oracle::OrthogonalTarget::plus).count,
           Q * Q * Q - Q * Q + 2 * Q - 4);
    anchor("SO-(6,q)", oracle::oracle_orthogonal(6, q, oracle::OrthogonalTarget::minus).count, Q * Q * Q - Q * Q);
    anchor("SO+(2,q)", oracle::oracle_orthogonal(2, q, oracle::OrthogonalTarget::plus).count, Q - 1);
    anchor("SO-(2,q)", oracle::oracle_orthogonal(2, q, oracle::OrthogonalTarget::minus).count, Q + 1);
  }
  for (auto [q, mmax] : {std::pair{2u, 12u}, {4u, 8u}}) {
    const Integer Q = q;
    for (unsigned n = 1; 2 * n <= mmax; ++n) {
      const Integer tail = (n % 2 == 0 ? 1 : -1) * (Q - 1);
      const Integer head = ipow(Q, n) - ipow(Q, n - 1);
      anchor("SO+(" + std::to_string(2 * n) + "," + std::to_string(q) + ")",
             oracle::oracle_orthogonal(2 * n, q, oracle::OrthogonalTarget::plus).count, n == 1 ? Q - 1 : head - tail);
      anchor("SO-(" + std::to_string(2 * n) + "," + std::to_string(q) + ")",
             oracle::oracle_orthogonal(2 * n, q, oracle::OrthogonalTarget::minus).count, n == 1 ? Q + 1 : head + tail);
    }
  }
  o.detail = std::to_string(points) + " grid points";
  return o;
}

// ---------------------------------------------------------------------------

Outcome lemma_suite() {
  Outcome o;
  using genfun::LemmaId;
  struct Case {
    LemmaId id;
    std::vector<std::uint64_t> qs;
    int T;
  };
  const std::vector<Case> cases = {
      {LemmaId::lem1, {2, 3, 4, 5, 7, 9}, 10},
      {LemmaId::lem2, {2, 3, 4}, 8},
      {LemmaId::lem3, {2, 3, 4, 5, 7, 8, 9}, 10},
      {LemmaId::lem4, {3, 5, 7, 9}, 10},
      {LemmaId::lem5, {2, 4, 8}, 10},
      {LemmaId::ogenodd_sum, {3, 5}, 8},
      {LemmaId::ogenodd_diff, {3, 5}, 8},
      {LemmaId::solved_R_SO, {3, 5}, 8},
      {LemmaId::solved_R_SO_plus, {3, 5}, 8},
      {LemmaId::solved_R_SO_minus, {3, 5}, 8},
      {LemmaId::ogeneven_plus, {2, 4}, 10},
      {LemmaId::ogeneven_minus, {2, 4}, 10},
  };
  std::size_t runs = 0, enumerated = 0, formula = 0;
  for (const auto& c : cases) {
    for (auto q : c.qs) {
      ++runs;
      const std::string tag = genfun::to_string(c.id) + " q=" + std::to_string(q) + " T=" + std::to_string(c.T);
      try {
        const auto r = genfun::verify_lemma(c.id, q, c.T);
        if (r.order != c.T) o.fail(tag + ": compared only to order " + std::to_string(r.order));
        if (!r.pass) o.fail(tag + ": first mismatch at " + std::to_string(r.first_mismatch.value_or(-1)));
        for (const auto& s : r.sources) (s.method == census::CensusMethod::enumerate ? enumerated : formula)++;
      } catch (const std::exception& ex) {
        o.fail(tag + ": " + ex.what());
      }
    }
  }
  // The parity guard is part of the contract.
  try {
    genfun::verify_lemma(LemmaId::lem5, 3, 10);
    o.fail("lem5 at q=3 was not refused");
  } catch (const ParityMismatch&) {
  }
  o.detail = std::to_string(runs) + " identity checks, censuses: " + std::to_string(enumerated) + " enumerated, " +
             std::to_string(formula) + " by formula";
  return o;
}

// ---------------------------------------------------------------------------

Outcome remark_checks() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t q : {2u, 4u, 8u}) {
    for (unsigned n = 1; n <= 12; ++n, ++checks) {
      if (closedform::rs_sp(n, q) != closedform::rs_gl(n, q)) {
        o.fail("rs_sp(" + std::to_string(n) + "," + std::to_string(q) + ") != rs_gl");
      }
    }
  }
  for (std::uint64_t q : {2u, 3u, 5u}) {
    const auto parity = closedform::parity_of(q);
    for (unsigned n = 1; n <= 12; ++n) {
      const auto cmp = [&](Family fam, const Integer& want) {
        ++checks;
        const Integer got = closedform::rs_symbolic(fam, n, parity).evaluate(q);
        if (got != want) {
          o.fail(closedform::to_string(fam) + " n=" + std::to_string(n) + " q=" + std::to_string(q) + ": symbolic " +
                 got.str() + ", formula " + want.str());
        }
      };
      cmp(Family::GL, closedform::rs_gl(n, q));
      cmp(Family::SL, closedform::rs_sl(n, q));
      if (n >= 2) cmp(Family::U, closedform::rs_u(n, q));
    }
  }
  o.detail = std::to_string(checks) + " checks (unitary polynomial from n=2)";
  return o;
}

// ---------------------------------------------------------------------------

Outcome integrality() {
  Outcome o;
  std::size_t divisions = 0;
  for (std::uint64_t q = 2; q <= 11; ++q) {
    for (unsigned n = 1; n <= 30; ++n) {
      const std::vector<std::pair<const char*, closedform::Quotient>> quotients = {
          {"gl", closedform::rs_gl_quotient(n, q)}, {"sl", closedform::rs_sl_quotient(n, q)},
          {"u", closedform::rs_u_quotient(n, q)},   {"su", closedform::rs_su_quotient(n, q)},
          {"sp", closedform::rs_sp_quotient(n, q)},
      };
      for (const auto& [name, quo] : quotients) {
        ++divisions;
        if (quo.numerator % quo.denominator != 0) {
          o.fail(std::string(name) + " n=" + std::to_string(n) + " q=" + std::to_string(q) + ": remainder " +
                 Integer(quo.numerator % quo.denominator).str());
        }
      }
      for (auto fam : {Family::SL, Family::SU}) {
        ++divisions;
        try {
          genfun::gf_count({fam, n, q});
        } catch (const InternalError& e) {
          o.fail(e.what());
        }
      }
    }
  }
  for (auto parity : {CharParity::odd, CharParity::even}) {
    for (unsigned n = 1; n <= 30; ++n) {
      for (auto fam : {Family::SL, Family::SU}) {
        ++divisions;
        try {
          genfun::gf_symbolic(fam, n, parity);
        } catch (const InternalError& e) {
          o.fail(e.what());
        }
      }
    }
  }
  o.detail = std::to_string(divisions) + " divisions";
  return o;
}

// ---------------------------------------------------------------------------

bool is_square(const Field& f, Code a) {
  for (unsigned x = 1; x < f.q(); ++x) {
    if (f.mul(static_cast<Code>(x), static_cast<Code>(x)) == a) return true;
  }
  return false;
}

std::string histogram_text(const std::map<Code, Integer>& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, c] : h) {
    os << (first ? "" : ", ") << a << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

// As stated: uniform for q in {2,4}; exactly two values split by the
// quadratic character of (-1)^n a for q in {3,5,7}; n <= 5.
Outcome histograms_literal() {
  Outcome o;
  std::size_t cells = 0;
  for (std::uint64_t q : {2u, 4u}) {
    for (unsigned n = 1; n <= 5; ++n, ++cells) {
      const auto h = oracle::oracle_constant_histogram(n, q);
      std::set<Integer> values;
      for (const auto& [a, c] : h) values.insert(c);
      if (values.size() != 1) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + " not uniform");
    }
  }
  for (std::uint64_t q : {3u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    for (unsigned n = 2; n <= 5; ++n, ++cells) {
      const auto h = oracle::oracle_constant_histogram(n, q);
      std::map<bool, std::set<Integer>> by_class;
      std::set<Integer> values;
      for (const auto& [a, c] : h) {
        by_class[is_square(*f, n % 2 == 0 ? a : f->neg(a))].insert(c);
        values.insert(c);
      }
      const bool split = by_class[true].size() == 1 && by_class[false].size() == 1;
      if (values.size() != 2 || !split) {
        o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + std::to_string(values.size()) +
               " distinct value(s) " + histogram_text(h));
      }
    }
  }
  o.detail = std::to_string(cells) + " histograms";
  return o;
}

// Corrected: for odd q the count depends only on the quadratic character of
// (-1)^n a; two values for even n, one value for odd n.
Outcome histograms_corrected() {
  Outcome o;
  std::size_t cells = 0;
  for (std::uint64_t q : {2u, 4u}) {
    for (unsigned n = 1; n <= 5; ++n, ++cells) {
      std::set<Integer> values;
      for (const auto& [a, c] : oracle::oracle_constant_histogram(n, q)) values.insert(c);
      if (values.size() != 1) o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + " not uniform");
    }
  }
  for (std::uint64_t q : {3u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    for (unsigned n = 1; n <= 5; ++n, ++cells) {
      const auto h = oracle::oracle_constant_histogram(n, q);
      std::map<bool, std::set<Integer>> by_class;
      std::set<Integer> values;
      for (const auto& [a, c] : h) {
        by_class[is_square(*f, n % 2 == 0 ? a : f->neg(a))].insert(c);
        values.insert(c);
      }
      const bool determined = by_class[true].size() == 1 && by_class[false].size() == 1;
      const std::size_t expected = (n >= 2 && n % 2 == 0) ? 2 : 1;
      if (!determined || values.size() != expected) {
        o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + histogram_text(h));
      }
    }
  }
  o.detail = std::to_string(cells) + " histograms";
  return o;
}

// ---------------------------------------------------------------------------

Outcome structural() {
  Outcome o;
  std::size_t checks = 0;
  const auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) o.fail(what);
  };

  // Involutions.
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    for (unsigned d = 1; d <= 4; ++d) {
      algebra::for_each_monic(*f, d, [&](const Coeffs& c) {
        if (c[0] == 0) return;
        const Poly p(f, c);
        expect(dual::star_conjugate(dual::star_conjugate(p)) == p, "star involution " + algebra::to_text(p));
      });
    }
  }
  for (std::uint64_t base : {2u, 3u, 4u}) {
    const auto f = Field::of_order(base * base);
    for (unsigned d = 1; d <= 3; ++d) {
      algebra::for_each_monic(*f, d, [&](const Coeffs& c) {
        if (c[0] == 0) return;
        const Poly p(f, c);
        expect(dual::tilde_conjugate(dual::tilde_conjugate(p, base), base) == p,
               "tilde involution " + algebra::to_text(p));
      });
    }
  }

  // Fixed points versus root bookkeeping on split polynomials of degree <= 3.
  for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    for (Code a = 1; a < q; ++a) {
      for (Code b = a; b < q; ++b) {
        for (Code c = b; c < q; ++c) {
          std::vector<Code> roots{a, b, c}, inv;
          for (auto r : roots) inv.push_back(f->inv(r));
          std::sort(inv.begin(), inv.end());
          const Poly p = Poly::linear(f, a) * Poly::linear(f, b) * Poly::linear(f, c);
          expect(dual::is_star_self_conjugate(p) == (inv == roots), "star roots " + algebra::to_text(p));
        }
      }
    }
  }
  for (std::uint64_t base : {2u, 3u}) {
    const auto f = Field::of_order(base * base);
    for (Code a = 1; a < f->q(); ++a) {
      for (Code b = a; b < f->q(); ++b) {
        std::vector<Code> roots{a, b}, img;
        for (auto r : roots) img.push_back(f->inv(f->pow(r, base)));
        std::sort(img.begin(), img.end());
        const Poly p = Poly::linear(f, a) * Poly::linear(f, b);
        expect(dual::is_tilde_self_conjugate(p, base) == (img == roots), "tilde roots " + algebra::to_text(p));
      }
    }
  }

  // Self-conjugate irreducibles other than z-1, z+1: even degree, constant 1.
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    for (unsigned d = 2; d <= 6; ++d) {
      for (const auto& p : census::irreducibles(f, d, true)) {
        if (!dual::is_star_self_conjugate(p)) continue;
        expect(d % 2 == 0 && p.constant_term() == 1, "self-conjugate irreducible " + algebra::to_text(p));
      }
    }
  }

  // r_label is additive on products, exhaustively for small degrees.
  for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    const auto zeta = algebra::generator(f);
    std::vector<Poly> small;
    for (unsigned d = 1; d <= 2; ++d) {
      algebra::for_each_monic(*f, d, [&](const Coeffs& c) {
        if (c[0] != 0) small.emplace_back(f, c);
      });
    }
    for (const auto& a : small) {
      for (const auto& b : small) {
        const auto ra = dual::r_label(a, zeta), rb = dual::r_label(b, zeta);
        expect(dual::r_label(a * b, zeta).value == (ra.value + rb.value) % (q - 1), "r_label additivity");
      }
    }
  }

  // Census identities.
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    for (unsigned d = 1; saturating_pow(q, d) <= 1'000'000; ++d) {
      Integer s = 0;
      for (unsigned e = 1; e <= d; ++e) {
        if (d % e == 0) s += Integer(e) * Integer(census::irreducibles(f, e, false).size());
      }
      expect(s == ipow(Integer(q), d), "sum e*I(q;e) = q^d at q=" + std::to_string(q) + " d=" + std::to_string(d));
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    for (unsigned d = 1; d <= 4; ++d) {
      Integer total = 0;
      algebra::for_each_monic(*f, d, [&](const Coeffs& c) {
        if (c[0] != 0 && algebra::kernel::is_irreducible(*f, c)) ++total;
      });
      const Integer ns = census::census_enumerate(census::CensusKind::N_star, q, d).count;
      const Integer ms = census::census_enumerate(census::CensusKind::M_star, q, d).count;
      expect(ns + 2 * ms == total, "*-accounting q=" + std::to_string(q) + " d=" + std::to_string(d));
    }
  }
  for (std::uint64_t base : {2u, 3u, 4u}) {
    const auto f = Field::of_order(base * base);
    for (unsigned d = 1; d <= 3; ++d) {
      Integer total = 0;
      algebra::for_each_monic(*f, d, [&](const Coeffs& c) {
        if (c[0] != 0 && algebra::kernel::is_irreducible(*f, c)) ++total;
      });
      const Integer nt = census::census_enumerate(census::CensusKind::N_tilde, base, d).count;
      const Integer mt = census::census_enumerate(census::CensusKind::M_tilde, base, d).count;
      expect(nt + 2 * mt == total, "~-accounting q=" + std::to_string(base) + " d=" + std::to_string(d));
    }
  }
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (auto kind : {census::CensusKind::N, census::CensusKind::N_tilde, census::CensusKind::M_tilde,
                      census::CensusKind::N_star, census::CensusKind::M_star}) {
      for (unsigned d = 1; census::census_work(kind, q, d) <= genfun::kAutoCensusWork; ++d) {
        expect(census::census_enumerate(kind, q, d).count == census::census_formula(kind, q, d),
               "census " + census::to_string(kind) + " q=" + std::to_string(q) + " d=" + std::to_string(d));
      }
    }
  }
  o.detail = std::to_string(checks) + " checks";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria = {
      {"1", {"three-way agreement grid", three_way_grid}},
      {"2", {"lemma verification suite", lemma_suite}},
      {"3", {"remark checks", remark_checks}},
      {"4", {"closed-form divisions are exact", integrality}},
      {"5-literal", {"constant-term histograms, as stated", histograms_literal}},
      {"5-corrected", {"constant-term histograms, parity-aware", histograms_corrected}},
      {"6", {"involution and census invariants", structural}},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == w; })) {
      std::cerr << "unknown criterion " << w << "\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& [id, entry] : criteria) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << entry.first << " (" << o.detail << ", "
              << timing << ")\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
