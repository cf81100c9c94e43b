// Command-line front end: eval, enumerate and verify.
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error,
// 3 budget exceeded (result incomplete).

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "affine321/affine321.hpp"

namespace {

using namespace affine321;
using json = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Record {
  AffinePermutation w;
  int length;
  bool fc;
  Partition sigma;
};

Record basic_record(const AffinePermutation& w) {
  return Record{w, length(w), is_321_avoiding(w), sigma(w)};
}

std::string tsv_line(const Record& r) {
  return format_window(r.w) + "\t" + std::to_string(r.length) + "\t" + (r.fc ? "true" : "false") +
         "\t" + serialize_partition(r.sigma);
}

json json_record(const Record& r) {
  json j;
  j["window"] = format_window(r.w);
  j["length"] = r.length;
  j["fc"] = r.fc;
  j["sigma"] = serialize_partition(r.sigma);
  return j;
}

struct EvalArgs {
  std::optional<int> n;
  std::string window;
  std::optional<std::string> word;
  bool all_predicates = false;
  std::string format = "jsonl";
};

int run_eval(const EvalArgs& args) {
  AffinePermutation w = AffinePermutation::identity(3);
  if (args.word) {
    if (!args.n) throw InvalidArgument("--word needs --n");
    w = evaluate_word(parse_word(*args.n, *args.word));
  } else {
    w = parse_window(args.window);
    if (args.n && *args.n != w.rank()) throw RankMismatch(*args.n, w.rank());
  }
  const Record r = basic_record(w);
  const auto word = canonical_reduced_word(w);
  const auto witness = find_321_instance(w);
  if (args.format == "tsv") {
    std::cout << tsv_line(r) << "\t" << format_word(word) << "\t"
              << (witness ? format_triple(*witness) : "-");
    if (args.all_predicates) {
      std::cout << "\t" << is_fully_commutative_word(w) << condition_ii_holds(w)
                << is_321_avoiding(w) << condition_iv_holds(w);
    }
    std::cout << "\n";
    return 0;
  }
  json j = json_record(r);
  j["word"] = format_word(word);
  j["witness"] = witness ? json(format_triple(*witness)) : json(nullptr);
  if (args.all_predicates) {
    j["predicates"] = {{"words", is_fully_commutative_word(w)},
                       {"pairs", condition_ii_holds(w)},
                       {"pattern", is_321_avoiding(w)},
                       {"roots", condition_iv_holds(w)},
                       {"sigma", is_fc_by_sigma(w)}};
  }
  std::cout << j.dump() << "\n";
  return 0;
}

struct EnumerateArgs {
  int n = 3;
  int radius = 2;
  std::string format = "tsv";
  std::size_t budget = kDefaultBallBudget;
};

int run_enumerate(const EnumerateArgs& args) {
  const auto ball = enumerate_ball(args.n, args.radius, args.budget);
  std::string out;
  for (const auto& w : ball.elements()) {
    const Record r = basic_record(w);
    out += args.format == "tsv" ? tsv_line(r) : json_record(r).dump();
    out += '\n';
  }
  std::cout << out;
  return 0;
}

struct VerifyArgs {
  VerifyOptions options;
  std::vector<std::string> checks{"all"};
};

int run_verify(const VerifyArgs& args) {
  std::vector<std::string> names;
  for (const auto& c : args.checks) {
    if (c == "all") {
      names.assign(std::begin(kCheckNames), std::end(kCheckNames));
      break;
    }
    if (!is_known_check(c)) throw InvalidArgument("unknown check '" + c + "'");
    names.push_back(c);
  }
  const Verifier verifier(args.options);
  const auto counts = verifier.ball().counts();
  const auto fc = verifier.fc_counts();
  std::cout << "rank " << args.options.rank << ", lengths 0.." << args.options.radius << ", "
            << verifier.elements().size() << " elements\n";
  std::cout << "length\telements\tfc\n";
  for (std::size_t l = 0; l < counts.size(); ++l) {
    std::cout << l << "\t" << counts[l] << "\t" << fc[l] << "\n";
  }
  std::cout << "\ncheck\tpopulation\tfailures\telapsed_ms\tstatus\n";
  bool all_passed = true;
  for (const auto& name : names) {
    const auto result = verifier.run(name);
    all_passed &= result.passed();
    std::cout << result.name << "\t" << result.population << "\t" << result.failures << "\t"
              << std::fixed << std::setprecision(1) << result.elapsed_ms << "\t"
              << (result.passed() ? "pass" : "FAIL") << "\n";
    if (result.first_failure) std::cout << "  first failure: " << *result.first_failure << "\n";
  }
  return all_passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine symmetric group toolkit: fully commutative elements and Shi cells"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate one element");
  eval->add_option("--n", eval_args.n, "Rank n (>= 3)");
  auto* window_opt = eval->add_option("--window", eval_args.window, "Window, e.g. [2,1,3]");
  auto* word_opt = eval->add_option("--word", eval_args.word, "Word, e.g. 1.2.1");
  window_opt->excludes(word_opt);
  eval->add_flag("--all-predicates", eval_args.all_predicates, "Report each criterion");
  eval->add_option("--format", eval_args.format)->check(CLI::IsMember({"jsonl", "tsv"}));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List the ball of radius L");
  enumerate->add_option("--n", enum_args.n, "Rank n (>= 3)")->required();
  enumerate->add_option("--L", enum_args.radius, "Length bound")->required();
  enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"tsv", "jsonl"}));
  enumerate->add_option("--budget", enum_args.budget, "Maximum ball size");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run exhaustive checks over a ball");
  verify->add_option("--n", verify_args.options.rank, "Rank n (>= 3)")->required();
  verify->add_option("--L", verify_args.options.radius, "Length bound (default 4)");
  verify->add_option("--check", verify_args.checks,
                     "thm27|cells|lemma25|lemma42|prop23|prop51|sigma-inverse|all")
      ->delimiter(',');
  verify->add_option("--budget", verify_args.options.budget, "Maximum ball size");
  verify->add_option("--window-radius", verify_args.options.window_radius,
                     "Brute-force radius multiplier (default 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) {
      if (!*window_opt && !*word_opt) throw InvalidArgument("eval needs --window or --word");
      return run_eval(eval_args);
    }
    if (*enumerate) return run_enumerate(enum_args);
    return run_verify(verify_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "incomplete: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
