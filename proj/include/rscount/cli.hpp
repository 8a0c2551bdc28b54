#ifndef RSCOUNT_CLI_HPP
#define RSCOUNT_CLI_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rscount/census.hpp"
#include "rscount/closedform.hpp"
#include "rscount/genfun.hpp"
#include "rscount/oracle.hpp"

// Subcommand bodies. Each returns the exit code and the complete output;
// nothing is printed until a command has fully succeeded or failed.

namespace rscount::cli {

using json = nlohmann::ordered_json;
using closedform::Family;
using closedform::GroupSpec;

enum ExitCode : int { ok = 0, bad_arguments = 2, disagreement = 3, bound_refused = 4 };

struct CommandResult {
  int exit_code = ok;
  std::string out;
  std::string err;
};

inline std::string str(const Integer& v) { return v.str(); }

inline json json_coeffs(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

/// Runs `body`, mapping library exceptions onto the exit-code contract.
template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const EnumerationBoundExceeded& e) {
    return {bound_refused, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParityMismatch& e) {
    return {bad_arguments, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidArgument& e) {
    return {bad_arguments, "", std::string("error: ") + e.what() + "\n"};
  }
}

inline std::string prime_power_warning(std::uint64_t q) {
  if (algebra::prime_power(q)) return "";
  return "warning: q=" + std::to_string(q) + " is not a prime power; evaluating the formula anyway\n";
}

inline void require_prime_power(std::uint64_t q, const std::string& what) {
  if (!algebra::prime_power(q)) throw InvalidArgument(what + " needs a prime power q, got " + std::to_string(q));
}

enum class Method { formula, genfun, oracle, all };

inline Method parse_method(const std::string& s) {
  if (s == "formula") return Method::formula;
  if (s == "genfun") return Method::genfun;
  if (s == "oracle") return Method::oracle;
  if (s == "all") return Method::all;
  throw InvalidArgument("unknown method \"" + s + "\" (expected formula, genfun, oracle, all)");
}

inline GroupSpec make_group(const std::string& family, long long n, long long q) {
  if (n < 1) throw InvalidArgument("--n must be at least 1");
  if (q < 2) throw InvalidArgument("--q must be at least 2");
  return {closedform::parse_family(family), static_cast<unsigned>(n), static_cast<std::uint64_t>(q)};
}

inline json group_json(const GroupSpec& g) {
  json j;
  j["schema"] = 1;
  j["group"] = closedform::to_string(g.family);
  j["name"] = g.name();
  j["n"] = g.n;
  j["q"] = g.q;
  return j;
}

/// count
inline CommandResult cmd_count(const std::string& family, long long n, long long q, const std::string& method) {
  return guarded([&]() -> CommandResult {
    const GroupSpec g = make_group(family, n, q);
    const Method m = parse_method(method);
    std::string warn = prime_power_warning(g.q);
    if (m == Method::oracle || m == Method::all) require_prime_power(g.q, "the oracle");
    json j = group_json(g);
    j["method"] = method;
    switch (m) {
      case Method::formula: j["count"] = str(closedform::rs_count(g)); break;
      case Method::genfun: j["count"] = str(genfun::gf_count(g)); break;
      case Method::oracle: {
        const auto r = oracle::oracle_count(g);
        j["count"] = str(r.count);
        j["enumerated"] = r.enumerated;
        break;
      }
      case Method::all: {
        const Integer f = closedform::rs_count(g);
        const Integer s = genfun::gf_count(g);
        const auto o = oracle::oracle_count(g);
        j["counts"] = {{"formula", str(f)}, {"genfun", str(s)}, {"oracle", str(o.count)}};
        j["enumerated"] = o.enumerated;
        const bool agree = f == s && s == o.count;
        j["agree"] = agree;
        return {agree ? ok : disagreement, j.dump(2) + "\n", warn};
      }
    }
    return {ok, j.dump(2) + "\n", warn};
  });
}

/// table
inline CommandResult cmd_table(const std::string& family, long long q, long long n_max, const std::string& format,
                               bool with_oracle = true) {
  return guarded([&]() -> CommandResult {
    const GroupSpec g0 = make_group(family, 1, q);
    if (n_max < 1) throw InvalidArgument("--n-max must be at least 1");
    if (format != "csv" && format != "json") throw InvalidArgument("--format must be csv or json");
    std::string warn = prime_power_warning(g0.q);
    const bool oracle_on = with_oracle && algebra::prime_power(g0.q);

    struct Row {
      unsigned n;
      Integer count;
      std::optional<Integer> oracle;
    };
    std::vector<Row> rows;
    bool all_agree = true;
    for (unsigned n = 1; n <= static_cast<unsigned>(n_max); ++n) {
      const GroupSpec g{g0.family, n, g0.q};
      Row r{n, closedform::rs_count(g), std::nullopt};
      if (oracle_on) {
        try {
          r.oracle = oracle::oracle_count(g).count;
          if (*r.oracle != r.count) all_agree = false;
        } catch (const EnumerationBoundExceeded&) {
        }
      }
      rows.push_back(std::move(r));
    }

    std::ostringstream os;
    if (format == "csv") {
      os << (with_oracle ? "n,count,oracle,agree\n" : "n,count\n");
      for (const auto& r : rows) {
        os << r.n << "," << r.count;
        if (with_oracle) {
          if (r.oracle) os << "," << *r.oracle << "," << (*r.oracle == r.count ? "true" : "false");
          else os << ",,";
        }
        os << "\n";
      }
    } else {
      json j;
      j["schema"] = 1;
      j["group"] = closedform::to_string(g0.family);
      j["q"] = g0.q;
      j["rows"] = json::array();
      for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["name"] = closedform::group_name(g0.family, r.n, g0.q);
        row["count"] = str(r.count);
        if (with_oracle) {
          row["oracle"] = r.oracle ? json(str(*r.oracle)) : json(nullptr);
          row["agree"] = r.oracle ? json(*r.oracle == r.count) : json(nullptr);
        }
        j["rows"].push_back(row);
      }
      os << j.dump(2) << "\n";
    }
    return {all_agree ? ok : disagreement, os.str(), warn};
  });
}

inline json report_json(const genfun::VerificationReport& r) {
  json j;
  j["lemma"] = genfun::to_string(r.lemma);
  j["q"] = r.q;
  j["T"] = r.requested_order;
  j["compared_order"] = r.order;
  j["pass"] = r.pass;
  j["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
  j["lhs_coeffs"] = json_coeffs(r.lhs);
  j["rhs_coeffs"] = json_coeffs(r.rhs);
  json src = json::array();
  for (const auto& s : r.sources) {
    src.push_back({{"kind", census::to_string(s.kind)},
                   {"d", s.d},
                   {"method", census::to_string(s.method)},
                   {"count", str(s.count)}});
  }
  j["census"] = src;
  return j;
}

inline genfun::CensusPolicy parse_policy(const std::string& s) {
  if (s == "auto") return genfun::CensusPolicy::automatic;
  if (s == "enumerate") return genfun::CensusPolicy::enumerate_only;
  if (s == "formula") return genfun::CensusPolicy::formula_only;
  throw InvalidArgument("unknown census policy \"" + s + "\" (expected auto, enumerate, formula)");
}

/// verify
inline CommandResult cmd_verify(const std::string& lemma, long long q, long long terms,
                                const std::string& census_policy = "auto") {
  return guarded([&]() -> CommandResult {
    if (q < 2) throw InvalidArgument("--q must be at least 2");
    if (terms < 0 || terms > 200) throw InvalidArgument("--terms must be between 0 and 200");
    const auto qq = static_cast<std::uint64_t>(q);
    require_prime_power(qq, "lemma verification");
    const auto policy = parse_policy(census_policy);
    const auto parity = closedform::parity_of(qq);
    const int T = static_cast<int>(terms);

    if (lemma != "all") {
      const auto id = genfun::parse_lemma(lemma);
      genfun::require_admissible(id, parity);
      const auto r = genfun::verify_lemma(id, qq, T, policy);
      json j;
      j["schema"] = 1;
      j.update(report_json(r));
      return {r.pass ? ok : disagreement, j.dump(2) + "\n", ""};
    }
    json j;
    j["schema"] = 1;
    j["q"] = qq;
    j["T"] = T;
    j["reports"] = json::array();
    j["skipped"] = json::array();
    bool all_pass = true;
    for (auto id : genfun::all_lemmas()) {
      if (!genfun::admissible(id, parity)) {
        j["skipped"].push_back({{"lemma", genfun::to_string(id)},
                                {"reason", std::string("requires ") +
                                               (*genfun::required_parity(id) == closedform::CharParity::odd
                                                    ? "odd"
                                                    : "even") +
                                               " characteristic"}});
        continue;
      }
      const auto r = genfun::verify_lemma(id, qq, T, policy);
      all_pass = all_pass && r.pass;
      j["reports"].push_back(report_json(r));
    }
    j["pass"] = all_pass;
    return {all_pass ? ok : disagreement, j.dump(2) + "\n", ""};
  });
}

/// census: CSV kind,q,d,count for d = d_min..d_max.
inline CommandResult cmd_census(const std::string& kind, long long q, long long d_min, long long d_max,
                                const std::string& method) {
  return guarded([&]() -> CommandResult {
    if (q < 2) throw InvalidArgument("--q must be at least 2");
    if (d_min < 1 || d_max < d_min) throw InvalidArgument("degrees must satisfy 1 <= d <= d-max");
    const auto qq = static_cast<std::uint64_t>(q);
    std::vector<census::CensusKind> kinds;
    if (kind == "all") {
      kinds = {census::CensusKind::N, census::CensusKind::N_tilde, census::CensusKind::M_tilde,
               census::CensusKind::N_star, census::CensusKind::M_star};
    } else {
      kinds = {census::parse_kind(kind)};
    }
    census::CensusMethod m;
    if (method == "enumerate") m = census::CensusMethod::enumerate;
    else if (method == "formula") m = census::CensusMethod::formula;
    else throw InvalidArgument("--method must be enumerate or formula");
    if (m == census::CensusMethod::enumerate) require_prime_power(qq, "census enumeration");
    std::string warn = m == census::CensusMethod::formula ? prime_power_warning(qq) : "";

    std::ostringstream os;
    os << "kind,q,d,count\n";
    census::CensusOptions opt;
    opt.witnesses = false;
    for (auto k : kinds) {
      for (long long d = d_min; d <= d_max; ++d) {
        const auto c = census::census_count(k, qq, static_cast<unsigned>(d), m, opt);
        os << census::to_string(k) << "," << qq << "," << d << "," << c.count << "\n";
      }
    }
    return {ok, os.str(), warn};
  });
}

/// series: one line "n: <polynomial in q>" per coefficient. The source is a
/// group family (rank n = 1..T) or a lemma id (n = 0..T). Without q the
/// coefficients are symbolic and `parity` fixes the characteristic.
inline CommandResult cmd_series(const std::optional<std::string>& family, const std::optional<std::string>& lemma,
                                std::optional<long long> q, std::optional<std::string> parity_text, long long terms) {
  return guarded([&]() -> CommandResult {
    if (family.has_value() == lemma.has_value()) throw InvalidArgument("give exactly one of --group and --lemma");
    if (terms < 0 || terms > 200) throw InvalidArgument("--terms must be between 0 and 200");
    if (q && *q < 2) throw InvalidArgument("--q must be at least 2");
    const int T = static_cast<int>(terms);

    std::optional<closedform::CharParity> parity;
    if (parity_text) {
      if (*parity_text == "odd") parity = closedform::CharParity::odd;
      else if (*parity_text == "even") parity = closedform::CharParity::even;
      else throw InvalidArgument("--parity must be odd or even");
    }
    if (q) {
      const auto from_q = closedform::parity_of(static_cast<std::uint64_t>(*q));
      if (parity && *parity != from_q) throw InvalidArgument("--parity contradicts --q");
      parity = from_q;
    }
    std::optional<genfun::LemmaId> id;
    if (lemma) {
      id = genfun::parse_lemma(*lemma);
      if (!parity) parity = genfun::required_parity(*id);
    }
    std::optional<Family> fam;
    if (family) {
      fam = closedform::parse_family(*family);
      if (!parity && (*fam == Family::GL || *fam == Family::U)) parity = closedform::CharParity::odd;
    }
    if (!parity) throw InvalidArgument("symbolic coefficients here depend on the characteristic: give --parity or --q");
    if (id) genfun::require_admissible(*id, *parity);

    std::vector<series::QPoly> coeffs;
    int first = 0;
    if (id) {
      coeffs = genfun::closed_side(*id, series::QPoly::variable(), *parity, T).coeffs();
    } else {
      first = 1;
      coeffs.push_back(series::QPoly());
      for (int n = 1; n <= T; ++n) coeffs.push_back(genfun::gf_symbolic(*fam, static_cast<unsigned>(n), *parity));
    }
    std::ostringstream os;
    for (int n = first; n <= T; ++n) {
      os << n << ": ";
      if (q) os << coeffs[n].evaluate(Integer(*q));
      else os << coeffs[n].to_string("q");
      os << "\n";
    }
    return {ok, os.str(), q ? prime_power_warning(static_cast<std::uint64_t>(*q)) : ""};
  });
}

}  // namespace rscount::cli

#endif  // RSCOUNT_CLI_HPP
