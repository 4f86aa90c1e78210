#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "caterpillar/asymptotics.hpp"
#include "caterpillar/bijection.hpp"
#include "caterpillar/coefficients.hpp"
#include "caterpillar/enumerate.hpp"
#include "caterpillar/newick.hpp"
#include "caterpillar/numbers.hpp"
#include "caterpillar/permutation.hpp"
#include "caterpillar/tree_stats.hpp"

namespace {

using caterpillar::BigInt;
using caterpillar::BigRat;
using caterpillar::Real;
using caterpillar::TreeFamily;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncation = 3;

// Exact-rational probabilities are used up to this size in `score`; beyond
// it the truncated asymptotic model takes over.
constexpr int kScoreExactLimit = 500;

void emit_envelope(const std::string& code, const std::string& message,
                   std::optional<int> line = std::nullopt) {
  nlohmann::json envelope{{"error", code}, {"message", message}};
  if (line) envelope["line"] = *line;
  std::cerr << envelope.dump() << "\n";
}

int exit_code_for(const caterpillar::Error& error) {
  return error.code() == caterpillar::ErrorCode::KTooLargeForTruncation ? kExitTruncation
                                                                        : kExitError;
}

TreeFamily parse_family(const std::string& name) {
  if (name == "ordered") return TreeFamily::ordered;
  if (name == "unordered") return TreeFamily::unordered;
  throw caterpillar::Error(caterpillar::ErrorCode::InvalidInput,
                           "family must be 'ordered' or 'unordered'");
}

BigInt count_minus(TreeFamily family, int k, int n) {
  return family == TreeFamily::ordered ? caterpillar::f_minus(k, n)
                                       : caterpillar::w_minus(k, n);
}

BigInt count_minus_or_zero(TreeFamily family, int k, int n) {
  return k == 0 ? BigInt(0) : count_minus(family, k, n);
}

int run_counts(const std::string& family_name, int k, int n_max, const std::string& which) {
  TreeFamily family = parse_family(family_name);
  std::cout << "n,count\n";
  for (int n = 1; n <= n_max; ++n) {
    BigInt value;
    if (which == "minus") {
      value = count_minus(family, k, n);
    } else if (which == "plus") {
      BigInt total = family == TreeFamily::ordered ? caterpillar::catalan(n)
                                                   : caterpillar::wedderburn(n);
      value = total - count_minus_or_zero(family, k - 1, n);
    } else {
      value = count_minus(family, k, n) - count_minus_or_zero(family, k - 1, n);
    }
    std::cout << n << "," << value.str() << "\n";
  }
  return 0;
}

int run_expected(const std::vector<int>& ns, const std::string& mode, int guard, int places) {
  std::cout << "n,value\n";
  for (int n : ns) {
    std::string rendered;
    if (mode == "exact") {
      if (n > guard)
        throw caterpillar::Error(caterpillar::ErrorCode::GuardExceeded,
                                 "exact mode guarded at n <= " + std::to_string(guard) +
                                     " (raise with --exact-guard)");
      rendered = caterpillar::format_decimal(caterpillar::expected_gamma_exact(n), places);
    } else {
      auto m = mode == "approx" ? caterpillar::ExpectationMode::ratio
                                : caterpillar::ExpectationMode::log2;
      rendered = caterpillar::format_decimal(caterpillar::expected_gamma_approx(n, m), places);
    }
    std::cout << n << "," << rendered << "\n";
  }
  return 0;
}

int run_asympt(const std::string& family_name, int k, int m, int digits) {
  TreeFamily family = parse_family(family_name);
  caterpillar::AsymptoticModel model = family == TreeFamily::ordered
                                           ? caterpillar::ordered_model(k)
                                           : caterpillar::rho_lambda_unordered(k, m);
  std::cout << "family: " << family_name << "\n";
  std::cout << "k: " << k << "\n";
  if (family == TreeFamily::unordered) std::cout << "m: " << m << "\n";
  std::cout << "rho: " << caterpillar::format_significant(model.rho, digits) << "\n";
  std::cout << "amplitude: " << caterpillar::format_significant(model.amplitude, digits) << "\n";
  return 0;
}

int run_prob_curve(const std::vector<int>& ks, int n_min, int n_max, int step, int m,
                   const std::string& mode, int digits) {
  std::cout << "n,k,prob\n";
  for (int n = n_min; n <= n_max; n += step) {
    for (int k : ks) {
      Real prob_gt;
      if (mode == "exact") {
        prob_gt = caterpillar::to_real(1 - caterpillar::prob_gamma_le_exact(n, k));
      } else {
        prob_gt = 1 - caterpillar::prob_gamma_le_asym(n, k, m);
      }
      if (prob_gt < 0) prob_gt = 0;
      if (prob_gt > 1) prob_gt = 1;
      std::cout << n << "," << k << ","
                << caterpillar::format_significant(prob_gt, digits) << "\n";
    }
  }
  return 0;
}

std::string score_probability(int n, std::int64_t observed_gamma, int m, int digits) {
  int g = static_cast<int>(observed_gamma);
  if (observed_gamma >= n) return "1";  // saturation: every tree has gamma <= its size
  if (n <= kScoreExactLimit) {
    BigRat exact = caterpillar::prob_gamma_le_exact(n, g);
    return caterpillar::format_significant(caterpillar::to_real(exact), digits);
  }
  if (g >= 2 && g < m) {
    Real asym = caterpillar::prob_gamma_le_asym(n, g, m);
    if (asym > 1) asym = 1;
    return caterpillar::format_significant(asym, digits);
  }
  return "";  // the truncated model cannot separate gamma caps >= m
}

int run_score(const std::string& path, int m, int places, int digits) {
  std::ifstream in(path);
  if (!in)
    throw caterpillar::Error(caterpillar::ErrorCode::InvalidInput,
                             "cannot open '" + path + "'");
  std::cout << "line,n,gamma,colless,prob_gamma_le_exact_or_asym\n";
  std::string line;
  int line_no = 0;
  bool any_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      caterpillar::NewickDocument doc = caterpillar::parse_newick(line);
      std::int64_t n = doc.tree.n_leaves();
      std::int64_t g = caterpillar::gamma(doc.tree);
      std::string colless =
          n > 2 ? caterpillar::format_decimal(caterpillar::colless_index(doc.tree), places) : "";
      std::cout << line_no << "," << n << "," << g << "," << colless << ","
                << score_probability(static_cast<int>(n), g, m, digits) << "\n";
    } catch (const caterpillar::ParseError& error) {
      emit_envelope("ParseError", error.what(), line_no);
      any_failed = true;
    }
  }
  return any_failed ? kExitError : 0;
}

void print_extraction_family(const caterpillar::Permutation& p) {
  caterpillar::ExtractionFamily family = caterpillar::extraction_family(p);
  for (const auto& member : family.members)
    std::cout << "rtilde(" << p.at(member.index) << ") = "
              << member.extracted.to_one_line() << "\n";
}

int run_map_perm(const std::string& perm_text, const std::string& newick_text) {
  if (!perm_text.empty()) {
    caterpillar::Permutation p = caterpillar::Permutation::parse_one_line(perm_text);
    std::cout << "permutation: " << p.to_one_line() << "\n";
    print_extraction_family(p);
    // throws NotAv132 (with witness positions) when 132 occurs
    caterpillar::OrderedTree tree = caterpillar::phi_inverse(p);
    std::cout << "tree: " << caterpillar::to_newick(tree) << "\n";
    std::cout << "gamma_from_perm: " << caterpillar::gamma_from_perm(p) << "\n";
    std::cout << "tree_gamma: " << caterpillar::gamma(tree) << "\n";
    return 0;
  }
  caterpillar::NewickDocument doc = caterpillar::parse_newick(newick_text);
  caterpillar::Permutation p = caterpillar::phi(doc.tree);
  std::cout << "permutation: " << p.to_one_line() << "\n";
  print_extraction_family(p);
  std::cout << "gamma_from_perm: " << caterpillar::gamma_from_perm(p) << "\n";
  std::cout << "tree_gamma: " << caterpillar::gamma(doc.tree) << "\n";
  return 0;
}

int run_seed_tables(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto open = [&](const std::string& name) {
    fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path);
    if (!out)
      throw caterpillar::Error(caterpillar::ErrorCode::InvalidInput,
                               "cannot write '" + path.string() + "'");
    std::cout << "wrote " << path.string() << "\n";
    return out;
  };

  {
    auto out = open("ordered_k5.csv");
    out << "n,f_minus,f_plus,f_exact\n";
    for (int n = 1; n <= 10; ++n)
      out << n << "," << caterpillar::f_minus(5, n).str() << ","
          << caterpillar::f_plus(5, n).str() << "," << caterpillar::f_exact(5, n).str() << "\n";
  }
  {
    auto out = open("rho_ordered.csv");
    out << "k,rho\n";
    for (int k = 2; k <= 7; ++k)
      out << k << "," << caterpillar::format_significant(caterpillar::rho_ordered(k), 10) << "\n";
  }
  {
    auto out = open("expected.csv");
    out << "n,exact,approx,log2\n";
    for (int n : {10, 20, 50, 100, 200, 500, 1000}) {
      out << n << "," << caterpillar::format_decimal(caterpillar::expected_gamma_exact(n), 3)
          << ","
          << caterpillar::format_decimal(
                 caterpillar::expected_gamma_approx(n, caterpillar::ExpectationMode::ratio), 3)
          << ","
          << caterpillar::format_decimal(
                 caterpillar::expected_gamma_approx(n, caterpillar::ExpectationMode::log2), 3)
          << "\n";
    }
  }
  {
    auto out = open("unordered_counts.csv");
    out << "k,n,w_minus\n";
    for (int k = 1; k <= 5; ++k)
      for (int n = 1; n <= 10; ++n)
        out << k << "," << n << "," << caterpillar::w_minus(k, n).str() << "\n";
  }
  {
    auto out = open("unordered_m10.csv");
    out << "k,rho,amplitude,exact_over_asym_n50\n";
    for (int k = 2; k <= 5; ++k) {
      caterpillar::AsymptoticModel model = caterpillar::rho_lambda_unordered(k, 10);
      Real ratio = caterpillar::to_real(caterpillar::w_minus(k, 50)) /
                   caterpillar::asym_w_minus(k, 50, 10);
      out << k << "," << caterpillar::format_significant(model.rho, 10) << ","
          << caterpillar::format_significant(model.amplitude, 10) << ","
          << caterpillar::format_decimal(ratio, 3) << "\n";
    }
  }
  {
    auto out = open("unordered_m30.csv");
    out << "k,rho,amplitude\n";
    for (int k = 2; k <= 10; ++k) {
      caterpillar::AsymptoticModel model = caterpillar::rho_lambda_unordered(k, 30);
      out << k << "," << caterpillar::format_significant(model.rho, 10) << ","
          << caterpillar::format_significant(model.amplitude, 10) << "\n";
    }
  }
  {
    auto out = open("rtilde_all_contain_231.csv");
    out << "n,count\n";
    // filtered up to the enumeration cap, the series route beyond
    for (int n = 1; n <= 15; ++n) {
      BigInt value = n <= 12 ? caterpillar::count_all_rtilde_contain_231(n)
                             : caterpillar::f_minus(2, n + 1);
      out << n << "," << value.str() << "\n";
    }
  }
  {
    auto out = open("probability_headline.csv");
    out << "n,k,m,prob_gamma_le\n";
    out << "100,5,10,"
        << caterpillar::format_significant(caterpillar::prob_gamma_le_asym(100, 5, 10), 10)
        << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic enumeration around the biggest-caterpillar-subtree "
               "statistic on rooted binary trees"};
  app.require_subcommand(1);

  // counts
  std::string family = "ordered", which = "minus";
  int k = 2, n_max = 10;
  auto* counts = app.add_subcommand("counts", "Count tables by size for a fixed gamma cap");
  counts->add_option("--family", family, "ordered|unordered")->required();
  counts->add_option("--k", k, "gamma cap")->check(CLI::PositiveNumber)->required();
  counts->add_option("--n-max", n_max, "largest size")->check(CLI::PositiveNumber)->required();
  counts->add_option("--which", which, "minus|plus|exact")
      ->check(CLI::IsMember({"minus", "plus", "exact"}));

  // expected
  std::vector<int> expected_ns;
  std::string expected_mode = "exact";
  int exact_guard = 2000, expected_places = 3;
  auto* expected = app.add_subcommand("expected", "Average gamma over ordered trees of size n");
  expected->add_option("--n", expected_ns, "sizes (comma separated)")
      ->required()
      ->delimiter(',');
  expected->add_option("--mode", expected_mode, "exact|approx|log2")
      ->check(CLI::IsMember({"exact", "approx", "log2"}));
  expected->add_option("--exact-guard", exact_guard, "largest n for exact mode (default 2000)");
  expected->add_option("--places", expected_places, "decimal places (default 3)");

  // asympt
  std::string asympt_family = "ordered";
  int asympt_k = 2, asympt_m = 30, asympt_digits = 10;
  auto* asympt = app.add_subcommand("asympt", "Dominant singularity and amplitude");
  asympt->add_option("--family", asympt_family, "ordered|unordered")->required();
  asympt->add_option("--k", asympt_k, "gamma cap")->required();
  asympt->add_option("--m", asympt_m, "truncation order (unordered, default 30)");
  asympt->add_option("--places", asympt_digits, "significant digits (default 10)");

  // prob-curve
  std::vector<int> curve_ks;
  int curve_n_min = 10, curve_n_max = 500, curve_step = 1, curve_m = 30, curve_digits = 10;
  std::string curve_mode = "asym";
  auto* curve = app.add_subcommand(
      "prob-curve", "P(gamma > k) for a uniform unordered tree, as CSV over a size range");
  curve->add_option("--k", curve_ks, "gamma caps (comma separated)")->required()->delimiter(',');
  curve->add_option("--n-min", curve_n_min, "first size");
  curve->add_option("--n-max", curve_n_max, "last size");
  curve->add_option("--step", curve_step, "size stride")->check(CLI::PositiveNumber);
  curve->add_option("--m", curve_m, "truncation order (default 30)");
  curve->add_option("--mode", curve_mode, "asym|exact")
      ->check(CLI::IsMember({"asym", "exact"}));
  curve->add_option("--places", curve_digits, "significant digits (default 10)");

  // score
  std::string score_path;
  int score_m = 30, score_places = 3, score_digits = 10;
  auto* score = app.add_subcommand("score", "Score Newick trees (one per line) with gamma, "
                                            "Colless index and P(gamma <= observed)");
  score->add_option("file", score_path, "Newick file, one tree per line")->required();
  score->add_option("--m", score_m, "truncation order for large trees (default 30)");
  score->add_option("--places", score_places, "decimal places for the Colless column");

  // map-perm
  std::string mp_perm, mp_newick;
  auto* map_perm =
      app.add_subcommand("map-perm", "Map between a tree and its 132-avoiding permutation");
  auto* perm_opt = map_perm->add_option("--perm", mp_perm, "one-line permutation");
  map_perm->add_option("--newick", mp_newick, "Newick tree")->excludes(perm_opt);

  // seed-tables
  std::string seed_dir = "tables";
  auto* seed = app.add_subcommand("seed-tables", "Dump every reference table as CSV files");
  seed->add_option("--out", seed_dir, "output directory (default ./tables)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_envelope("UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (*counts) return run_counts(family, k, n_max, which);
    if (*expected) return run_expected(expected_ns, expected_mode, exact_guard, expected_places);
    if (*asympt) return run_asympt(asympt_family, asympt_k, asympt_m, asympt_digits);
    if (*curve)
      return run_prob_curve(curve_ks, curve_n_min, curve_n_max, curve_step, curve_m, curve_mode,
                            curve_digits);
    if (*score) return run_score(score_path, score_m, score_places, score_digits);
    if (*map_perm) {
      if (mp_perm.empty() == mp_newick.empty())
        throw caterpillar::Error(caterpillar::ErrorCode::InvalidInput,
                                 "give exactly one of --perm or --newick");
      return run_map_perm(mp_perm, mp_newick);
    }
    if (*seed) return run_seed_tables(seed_dir);
  } catch (const caterpillar::Error& error) {
    emit_envelope(caterpillar::error_code_name(error.code()), error.what());
    return exit_code_for(error);
  } catch (const std::exception& error) {
    emit_envelope("InternalError", error.what());
    return kExitError;
  }
  return 0;
}
