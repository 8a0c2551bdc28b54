#include <gtest/gtest.h>

#include "rscount/genfun.hpp"

using namespace rscount;
using namespace rscount::genfun;
using closedform::CharParity;
using closedform::Family;
using closedform::GroupSpec;

namespace {

IntSeries expand(std::vector<Integer> num, std::vector<Integer> den, int T) {
  return series::series_from_rational(num, den, T);
}

}  // namespace

TEST(GenFun, ProductSideExamples) {
  const auto l1 = product_side(LemmaId::lem1, 2, 6, CensusPolicy::enumerate_only);
  EXPECT_EQ(l1.series, expand(series::poly_mul<Integer>({{1, 1}, {1, -2}}), {1, 0, -2}, 6));
  const auto l3 = product_side(LemmaId::lem3, 2, 6, CensusPolicy::enumerate_only);
  EXPECT_EQ(l3.series, expand(series::poly_mul<Integer>({{1, 1}, {1, -2}}), {1, 0, -2}, 6));
  const auto l4 = product_side(LemmaId::lem4, 3, 4, CensusPolicy::enumerate_only);
  EXPECT_EQ(l4.series, expand(series::poly_mul<Integer>({{1, -1}, {1, 1}, {1, 1}}), {1, 0, -3}, 4));
  for (const auto& s : l1.sources) EXPECT_EQ(s.method, census::CensusMethod::enumerate);
}

TEST(GenFun, ClosedSideExamples) {
  const QPoly Q = QPoly::variable();
  const auto sym = closed_side(LemmaId::lem1, Q, CharParity::odd, 5);
  const auto direct =
      series::series_from_rational<QPoly>(series::poly_mul<QPoly>({{1, 1}, {1, -Q}}), {1, 0, -Q}, 5);
  EXPECT_EQ(sym, direct);
  EXPECT_EQ(series::evaluate(sym, 7), closed_side<Integer>(LemmaId::lem1, 7, CharParity::odd, 5));
  EXPECT_EQ(closed_side<Integer>(LemmaId::ogeneven_plus, 2, CharParity::even, 4).coeff(2), 1);
  EXPECT_EQ(closed_side<Integer>(LemmaId::solved_R_SO, 3, CharParity::odd, 4).coeff(1), 3);
  EXPECT_THROW(closed_side<Integer>(LemmaId::lem5, 3, CharParity::odd, 4), ParityMismatch);
  EXPECT_THROW(closed_side<Integer>(LemmaId::lem4, 2, CharParity::even, 4), ParityMismatch);
}

TEST(GenFun, CountExamples) {
  EXPECT_EQ(gf_count(GroupSpec{Family::GL, 4, 2}), 5);
  EXPECT_EQ(gf_count(GroupSpec{Family::Sp, 2, 3}), 3);
  EXPECT_EQ(gf_count(GroupSpec{Family::SO_minus, 3, 3}), 18);
  EXPECT_EQ(gf_count(GroupSpec{Family::SL, 2, 3}), 1);
  EXPECT_EQ(gf_count(GroupSpec{Family::SU, 2, 3}), 1);
  EXPECT_EQ(gf_count(GroupSpec{Family::SO_odd_dim, 1, 5}), 5);
}

TEST(GenFun, VerifyExamples) {
  EXPECT_TRUE(verify_lemma(LemmaId::lem1, 2, 10).pass);
  EXPECT_TRUE(verify_lemma(LemmaId::lem5, 2, 10).pass);
  EXPECT_TRUE(verify_lemma(LemmaId::ogenodd_diff, 3, 8).pass);
  try {
    verify_lemma(LemmaId::lem5, 3, 10);
    FAIL() << "expected a parity mismatch";
  } catch (const ParityMismatch& e) {
    EXPECT_NE(std::string(e.what()).find("lem5 requires even characteristic"), std::string::npos);
  }
  EXPECT_THROW(verify_lemma(LemmaId::lem4, 4, 6), ParityMismatch);
  EXPECT_THROW(verify_lemma(LemmaId::ogenodd_sum, 2, 6), ParityMismatch);
}

TEST(GenFun, EveryAdmissibleLemmaPassesSmall) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    for (auto id : all_lemmas()) {
      if (!admissible(id, closedform::parity_of(q))) continue;
      const auto r = verify_lemma(id, q, 6, CensusPolicy::enumerate_only);
      EXPECT_TRUE(r.pass) << to_string(id) << " q=" << q << " mismatch at " << r.first_mismatch.value_or(-1);
      EXPECT_EQ(r.order, 6) << to_string(id) << " q=" << q;
      EXPECT_EQ(r.lhs, r.rhs);
    }
  }
}

TEST(GenFun, FormulaPolicyPassesFurther) {
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u}) {
    for (auto id : all_lemmas()) {
      if (!admissible(id, closedform::parity_of(q))) continue;
      const auto r = verify_lemma(id, q, 16, CensusPolicy::formula_only);
      EXPECT_TRUE(r.pass) << to_string(id) << " q=" << q;
      for (const auto& s : r.sources) EXPECT_EQ(s.method, census::CensusMethod::formula);
    }
  }
  for (std::uint64_t q : {2u, 4u, 8u, 16u}) {
    for (auto id : all_lemmas()) {
      if (!admissible(id, closedform::parity_of(q))) continue;
      EXPECT_TRUE(verify_lemma(id, q, 16, CensusPolicy::formula_only).pass) << to_string(id) << " q=" << q;
    }
  }
}

TEST(GenFun, EnumerateOnlyLowersOrderUnderCap) {
  const int order = enumerable_order(LemmaId::lem1, 9, 12, 100000);
  EXPECT_LT(order, 12);
  EXPECT_GE(order, 1);
  ::setenv("RSCOUNT_ENUM_CAP", "100000", 1);
  const auto r = verify_lemma(LemmaId::lem1, 9, 12, CensusPolicy::enumerate_only);
  ::unsetenv("RSCOUNT_ENUM_CAP");
  EXPECT_EQ(r.requested_order, 12);
  EXPECT_EQ(r.order, order);
  EXPECT_TRUE(r.pass);
  for (const auto& s : r.sources) EXPECT_EQ(s.method, census::CensusMethod::enumerate);
}

TEST(GenFun, AutomaticPolicyRecordsSources) {
  const auto r = verify_lemma(LemmaId::lem3, 9, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.order, 10);
  bool any_enum = false, any_formula = false;
  for (const auto& s : r.sources) {
    any_enum |= s.method == census::CensusMethod::enumerate;
    any_formula |= s.method == census::CensusMethod::formula;
    EXPECT_EQ(s.method == census::CensusMethod::enumerate, census::census_work(s.kind, 9, s.d) <= kAutoCensusWork);
  }
  EXPECT_TRUE(any_enum);
  EXPECT_TRUE(any_formula);
}

TEST(GenFun, AdmissibilityRouting) {
  EXPECT_EQ(required_parity(LemmaId::lem1), std::nullopt);
  EXPECT_EQ(required_parity(LemmaId::lem4), CharParity::odd);
  EXPECT_EQ(required_parity(LemmaId::lem5), CharParity::even);
  EXPECT_EQ(required_parity(LemmaId::ogeneven_minus), CharParity::even);
  EXPECT_EQ(required_parity(LemmaId::solved_R_SO_plus), CharParity::odd);
  for (auto id : all_lemmas()) EXPECT_EQ(parse_lemma(to_string(id)), id);
  EXPECT_THROW(parse_lemma("lem9"), InvalidArgument);
}

TEST(GenFun, SymbolicCountsEvaluate) {
  for (auto fam : {Family::GL, Family::SL, Family::U, Family::SU, Family::Sp, Family::SO_odd_dim, Family::SO_plus,
                   Family::SO_minus}) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
      for (unsigned n = 1; n <= 10; ++n) {
        const GroupSpec g{fam, n, q};
        EXPECT_EQ(gf_symbolic(fam, n, g.parity()).evaluate(q), gf_count(g)) << g.name();
      }
    }
  }
}
