#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rscount/cli.hpp"

namespace {

int emit(const rscount::cli::CommandResult& r) {
  std::cerr << r.err;
  std::cout << r.out;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = rscount::cli;
  CLI::App app{"rscount: regular semisimple classes of finite classical groups"};
  app.require_subcommand(1);

  std::string group, method = "formula", format = "csv", lemma, kind = "all", policy = "auto", parity;
  long long n = 1, q = 2, n_max = 10, terms = 10, d = 1, d_max = 0;
  bool no_oracle = false;

  auto* count = app.add_subcommand("count", "count classes of one group");
  count->add_option("--group", group, "gl, sl, u, su, sp, so-odd, so+, so-")->required();
  count->add_option("--n", n, "rank")->required();
  count->add_option("--q", q, "field size")->required();
  count->add_option("--method", method, "formula, genfun, oracle or all");

  auto* table = app.add_subcommand("table", "counts for n = 1..n-max");
  table->add_option("--group", group)->required();
  table->add_option("--q", q)->required();
  table->add_option("--n-max", n_max);
  table->add_option("--format", format, "csv or json");
  table->add_flag("--no-oracle", no_oracle, "omit the oracle and agree columns");

  auto* verify = app.add_subcommand("verify", "check a generating-function identity");
  verify->add_option("--lemma", lemma, "lemma id or all")->required();
  verify->add_option("--q", q)->required();
  verify->add_option("--terms", terms, "truncation order T");
  verify->add_option("--census", policy, "auto, enumerate or formula");

  auto* census = app.add_subcommand("census", "irreducible polynomial censuses as CSV");
  census->add_option("--kind", kind, "N, N_tilde, M_tilde, N_star, M_star or all");
  census->add_option("--q", q)->required();
  census->add_option("--d", d, "degree (or first degree with --d-max)");
  census->add_option("--d-max", d_max, "last degree");
  std::string census_method = "enumerate";
  census->add_option("--method", census_method, "enumerate or formula");

  auto* series = app.add_subcommand("series", "generating-series coefficients");
  std::optional<std::string> s_group, s_lemma, s_parity;
  std::optional<long long> s_q;
  series->add_option("--group", s_group);
  series->add_option("--lemma", s_lemma);
  series->add_option("--q", s_q, "specialize q (default: symbolic)");
  series->add_option("--parity", s_parity, "odd or even characteristic for symbolic output");
  series->add_option("--terms", terms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::bad_arguments;
  }

  if (count->parsed()) return emit(cli::cmd_count(group, n, q, method));
  if (table->parsed()) return emit(cli::cmd_table(group, q, n_max, format, !no_oracle));
  if (verify->parsed()) return emit(cli::cmd_verify(lemma, q, terms, policy));
  if (census->parsed()) return emit(cli::cmd_census(kind, q, d, d_max == 0 ? d : d_max, census_method));
  if (series->parsed()) return emit(cli::cmd_series(s_group, s_lemma, s_q, s_parity, terms));
  return cli::bad_arguments;
}
