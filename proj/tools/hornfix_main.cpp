#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hornfix/error.hpp"
#include "hornfix/eval.hpp"
#include "hornfix/kprime.hpp"
#include "hornfix/parser.hpp"
#include "hornfix/pistar.hpp"
#include "hornfix/selftest.hpp"
#include "hornfix/translate.hpp"
#include "hornfix/trees.hpp"

using namespace hornfix;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitDiagnostics = 2;

// Thrown after diagnostics have been printed.
struct Reported {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <typename T>
T unwrap(ParseResult<T> r, const std::string& path) {
  if (r.ok()) return std::move(*r.value);
  for (const auto& d : r.diagnostics) std::cerr << path << ":" << format_diagnostic(d) << "\n";
  throw Reported{};
}

Program load_program(const std::string& p) { return unwrap(parse_program(read_file(p)), p); }
Structure load_structure(const std::string& p) { return unwrap(parse_structure(read_file(p)), p); }

int verdict(bool holds) {
  std::cout << (holds ? "true" : "false") << "\n";
  return holds ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate, translate and tree-encode fixed-point logic programs"};
  app.require_subcommand(1);

  std::string logic = "datalogr", input, structure_file, goal, from, to, oracle = "even",
              method = "enumerate";
  bool trace = false;
  std::size_t m = 0, c = 1;
  std::vector<std::uint32_t> entries;

  auto* eval = app.add_subcommand("eval", "Evaluate a query on a structure");
  eval->add_option("--logic", logic)->check(CLI::IsMember({"datalogr", "horn", "lfp"}));
  eval->add_option("input", input, "Program, sentence or formula")->required();
  eval->add_option("structure", structure_file)->required();
  eval->add_option("--goal", goal, "Goal relation (datalogr)");
  eval->add_flag("--trace", trace, "Print the fixpoint stages (datalogr)");

  auto* translate = app.add_subcommand("translate", "Translate between the logics");
  translate->add_option("--from", from)->required()->check(
      CLI::IsMember({"horn", "datalogr", "lfp"}));
  translate->add_option("--to", to)->required()->check(
      CLI::IsMember({"horn", "datalogr", "simlfp"}));
  translate->add_option("input", input)->required();
  translate->add_option("--goal", goal, "Goal relation (from datalogr)");

  auto* encode_cmd = app.add_subcommand("encode", "Encode a structure on a perfect tree");
  encode_cmd->add_option("structure", structure_file)->required();

  auto* decode_cmd = app.add_subcommand("decode", "Decode a saturated tree structure");
  decode_cmd->add_option("structure", structure_file)->required();

  auto* sigma = app.add_subcommand("sigma", "Characteristic structure of a base structure");
  sigma->add_option("structure", structure_file)->required();
  sigma->add_option("--m", m)->required();
  sigma->add_option("--method", method)->check(CLI::IsMember({"enumerate", "decide"}));

  auto* pistar = app.add_subcommand("pistar", "Compile a tree program for the characteristic structure");
  pistar->add_option("input", input)->required();
  pistar->add_option("--m", m, "Width (default: computed)");

  auto* prop6 = app.add_subcommand("verify-prop6", "Compare a program on C(A) with its compiled form");
  prop6->add_option("input", input)->required();
  prop6->add_option("structure", structure_file)->required();
  prop6->add_option("--goal", goal);

  auto* check_cmd = app.add_subcommand("check", "Decide whether a tuple is characteristic");
  check_cmd->add_option("entries", entries)->required();

  auto* kprime = app.add_subcommand("kprime", "Membership in K'");
  kprime->add_option("structure", structure_file)->required();
  kprime->add_option("--oracle", oracle)->check(CLI::IsMember(demo_oracle_names()));
  kprime->add_option("--c", c)->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "Run the bundled oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDiagnostics;
  }

  try {
    if (*eval) {
      const Structure a = load_structure(structure_file);
      const std::string text = read_file(input);
      if (logic == "horn")
        return verdict(eval_horn_brute_force(unwrap(parse_horn(text), input), a,
                                             horn_budget_from_env()));
      if (logic == "lfp") return verdict(eval_lfp(unwrap(parse_lfp(text), input), a));
      const Program p = unwrap(parse_program(text), input);
      FixpointTrace t;
      const EvalResult r = eval_datalog(p, a, trace ? &t : nullptr);
      if (trace) std::cout << dump_trace(t);
      if (!goal.empty()) return verdict(r.holds(goal));
      for (const auto& x : p.intentional()) std::cout << x << " = " << print(r.relation(x)) << "\n";
      return 0;
    }
    if (*translate) {
      const std::string text = read_file(input);
      if (from == "horn" && to == "datalogr") {
        const DatalogQuery q = horn_to_datalog(unwrap(parse_horn(text), input));
        std::cout << "% goal " << q.goal << "\n" << print(q.program);
      } else if (from == "datalogr" && to == "horn") {
        if (goal.empty()) throw Error(ErrorCode::InvalidArgument, "--goal is required");
        std::cout << print(datalog_to_horn(unwrap(parse_program(text), input), goal)) << "\n";
      } else if (from == "datalogr" && to == "simlfp") {
        if (goal.empty()) throw Error(ErrorCode::InvalidArgument, "--goal is required");
        std::cout << print(datalog_to_sim_lfp(unwrap(parse_program(text), input), goal));
      } else if (from == "lfp" && to == "datalogr") {
        const DatalogQuery q = lfp_to_datalog(unwrap(parse_lfp(text), input));
        std::cout << "% goal " << q.goal << "\n" << print(q.program);
      } else {
        throw Error(ErrorCode::InvalidArgument, "no translation from " + from + " to " + to);
      }
      return 0;
    }
    if (*encode_cmd) {
      std::cout << print(encode(load_structure(structure_file)).structure);
      return 0;
    }
    if (*decode_cmd) {
      std::cout << print(decode(as_tree_structure(load_structure(structure_file))));
      return 0;
    }
    if (*sigma) {
      const Structure a = load_structure(structure_file);
      const Structure s = method == "decide" ? sigma_from_base(a, m)
                                             : sigma_structure(encode(a), m, SigmaMethod::Enumerate);
      std::cout << print(s);
      return 0;
    }
    if (*pistar) {
      const Program p = load_program(input);
      std::cout << print(pistar->count("--m") ? compile(p, m) : compile(p));
      return 0;
    }
    if (*prop6) {
      const Prop6Report r = verify_prop6(load_structure(structure_file), load_program(input), goal);
      std::cout << format_report(r);
      return r.passed() ? 0 : kExitFalse;
    }
    if (*check_cmd) {
      const bool ok = check(CharTuple(entries.begin(), entries.end()));
      std::cout << (ok ? "accept" : "reject") << "\n";
      return 0;
    }
    if (*kprime) {
      const KprimeVerdict v =
          membership_kprime(load_structure(structure_file), demo_oracle(oracle), {c});
      std::cout << format_verdict(v) << "\n";
      return v.member ? 0 : kExitFalse;
    }
    if (*selftest) {
      const SelftestOutput out = run_selftest();
      std::cout << out.text;
      return out.passed ? 0 : kExitFalse;
    }
  } catch (const Reported&) {
    return kExitDiagnostics;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitDiagnostics;
  }
  return kExitDiagnostics;
}
