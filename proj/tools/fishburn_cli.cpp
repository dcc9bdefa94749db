// fishburn: command-line front end for the Fishburn permutation library.
//
//   fishburn count    --n 9 --pattern 231 --fishburn
//   fishburn table    --name size3 --max-n 9 --format csv
//   fishburn verify   --claim thm-1342 | --all [--max-n N] [--verbose]
//   fishburn map      --name alpha --input 2135476 --trace
//   fishburn dyck     --perm 351264 | --path UUDUDD
//   fishburn sequence --name f321 --max-n 10 [--transform inverse-invert]
//
// Exit codes: 0 success (or "consistent"), 1 check failure, 2 usage error.
// FB_MAX_N, when set, rejects any request above that size.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fishburn/fishburn.hpp"

namespace {

using namespace fishburn;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> size_cap() {
  const char* env = std::getenv("FB_MAX_N");
  if (!env || !*env) return std::nullopt;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("FB_MAX_N is not an integer: ") + env);
  }
}

// Explicit sizes above the cap are rejected.
void require_within_cap(int n, const char* what) {
  if (const auto cap = size_cap(); cap && n > *cap) {
    throw UsageError(std::string(what) + " = " + std::to_string(n) + " exceeds FB_MAX_N = " + std::to_string(*cap));
  }
}

// Defaulted sizes are lowered to the cap.
int clamp_to_cap(int n) {
  const auto cap = size_cap();
  return cap ? std::min(n, *cap) : n;
}

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void print_seq(const IntSeq& s, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Plain: std::cout << join_terms(s) << "\n"; break;
    case OutputFormat::Csv: std::cout << to_csv(s); break;
    case OutputFormat::Json: std::cout << to_json(s).dump() << "\n"; break;
  }
}

// ---------------------------------------------------------------------------

struct CountArgs {
  int n = 0;
  std::string pattern;
  bool fishburn = false;
  bool indecomposable = false;
  unsigned threads = 0;
  std::string format = "plain";
};

int run_count(const CountArgs& a) {
  require_within_cap(a.n, "--n");
  ClassSpec spec{a.n, std::nullopt, {a.fishburn, a.indecomposable}};
  if (!a.pattern.empty()) spec.pattern = Permutation::parse(a.pattern);
  const std::uint64_t c = a.threads ? count(spec, a.threads) : count(spec);
  switch (kFormats.at(a.format)) {
    case OutputFormat::Plain: std::cout << c << "\n"; break;
    case OutputFormat::Csv:
      std::cout << "n,pattern,fishburn,indecomposable,count\n"
                << a.n << "," << a.pattern << "," << a.fishburn << "," << a.indecomposable << "," << c << "\n";
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j{{"n", a.n},
                               {"pattern", a.pattern},
                               {"fishburn", a.fishburn},
                               {"indecomposable", a.indecomposable},
                               {"count", std::to_string(c)}};
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

struct TableArgs {
  std::string name;
  int max_n = 0;
  std::string format = "plain";
};

int run_table(const TableArgs& a) {
  const TableDef& def = find_table(a.name);
  int max_n = a.max_n;
  if (max_n > 0) {
    require_within_cap(max_n, "--max-n");
  } else {
    max_n = clamp_to_cap(def.default_max_n);
  }
  std::cout << render_table(compute_table(def, max_n), kFormats.at(a.format));
  return 0;
}

struct VerifyArgs {
  std::string claim;
  bool all = false;
  bool list = false;
  bool verbose = false;
  int max_n = 0;
};

int run_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const auto& c : claim_registry()) {
      std::cout << c.id << " [" << (c.kind == ClaimKind::Conjecture ? "conjecture" : "theorem")
                << ", default n <= " << c.default_max_n << "] " << c.description << "\n";
    }
    return 0;
  }
  if (a.all == !a.claim.empty()) throw UsageError("give exactly one of --claim or --all");
  if (a.max_n > 0) require_within_cap(a.max_n, "--max-n");

  std::vector<const Claim*> selected;
  if (a.all) {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else {
    selected.push_back(&find_claim(a.claim));
  }
  int passed = 0;
  for (const Claim* c : selected) {
    const int n = a.max_n > 0 ? a.max_n : clamp_to_cap(c->default_max_n);
    const ClaimResult r = c->checker(n);
    const std::string status = status_word(*c, r);
    std::cout << c->id << ": " << status << (c->kind == ClaimKind::Conjecture ? " up to n = " : " for n <= ") << n
              << "\n";
    // Failures are always printed in full.
    if (a.verbose || !r.passed) {
      for (const auto& line : r.lines) std::cout << "    " << line << "\n";
    }
    if (r.passed) ++passed;
  }
  if (selected.size() > 1) {
    std::cout << "summary: " << passed << "/" << selected.size() << " claims passed\n";
  }
  return passed == static_cast<int>(selected.size()) ? 0 : kExitCheckFailed;
}

struct MapArgs {
  std::string name;
  std::string input;
  std::string tau = "12";
  std::string variant = "1423";
  bool trace = false;
  int verify_n = 0;
  std::string format = "plain";
};

std::string resolve_map_name(const MapArgs& a) {
  if (a.name == "phi" || a.name == "west") {
    if (a.tau != "12" && a.tau != "21") throw UsageError("--tau must be 12 or 21");
    return "phi" + a.tau;
  }
  if (a.name == "alpha") {
    if (a.variant == "1423") return "alpha";
    if (a.variant == "1324") return "alpha-1324";
    throw UsageError("--variant must be 1423 or 1324");
  }
  return a.name;
}

int run_map(const MapArgs& a) {
  const MapInfo& info = find_map(resolve_map_name(a));
  const OutputFormat fmt = kFormats.at(a.format);
  if (a.verify_n > 0) {
    require_within_cap(a.verify_n, "--verify-n");
    const MapReport rep = verify_map(info.name, a.verify_n);
    if (fmt == OutputFormat::Json) {
      std::cout << to_json(rep).dump(2) << "\n";
    } else {
      std::cout << info.name << " n=" << rep.n << ": |F_n(" << info.source << ")|=" << rep.domain_size << " |F_n("
                << info.target << ")|=" << rep.codomain_size << " injective=" << rep.injective
                << " surjective=" << rep.surjective << " fishburn_preserved=" << rep.fishburn_preserved
                << " certified=" << rep.certified() << "\n";
      for (const auto& c : rep.counterexamples) std::cout << "    " << c << "\n";
    }
    return rep.certified() ? 0 : kExitCheckFailed;
  }
  if (a.input.empty()) throw UsageError("map needs --input or --verify-n");
  const Permutation pi = Permutation::parse(a.input);
  require_within_cap(pi.size(), "input size");
  const MapTrace t = info.apply(pi);
  if (fmt == OutputFormat::Json) {
    if (a.trace) {
      std::cout << to_json(t).dump(2) << "\n";
    } else {
      std::cout << nlohmann::ordered_json{{"input", t.input.to_string()}, {"output", t.output.to_string()}}.dump()
                << "\n";
    }
    return 0;
  }
  if (a.trace) {
    for (const auto& s : t.iterations) std::cout << s.result << "\n";
    if (t.iterations.empty()) std::cout << t.output << "\n";
  } else {
    std::cout << t.output << "\n";
  }
  return 0;
}

struct DyckArgs {
  std::string perm;
  std::string path;
};

int run_dyck(const DyckArgs& a) {
  if (a.perm.empty() == a.path.empty()) throw UsageError("give exactly one of --perm or --path");
  if (!a.perm.empty()) {
    const Permutation pi = Permutation::parse(a.perm);
    require_within_cap(pi.size(), "permutation size");
    std::cout << perm_to_dyck(pi) << "\n";
  } else {
    const DyckPath p = DyckPath::parse(a.path);
    require_within_cap(p.semilength(), "semilength");
    std::cout << dyck_to_perm(p) << "\n";
  }
  return 0;
}

struct SequenceArgs {
  std::string name;
  int max_n = 0;
  std::string pattern;
  bool fishburn = false;
  bool indecomposable = false;
  std::string transform = "none";
  std::string format = "plain";
};

int run_sequence(const SequenceArgs& a) {
  require_within_cap(a.max_n, "--max-n");
  IntSeq s;
  const int m = a.max_n;
  if (a.name == "fishburn") {
    s = fishburn_numbers(m);
  } else if (a.name == "catalan") {
    s = tabulate(0, m, catalan);
  } else if (a.name == "pow2") {
    s = tabulate(1, m, f_pow2);
  } else if (a.name == "f321") {
    s = tabulate(1, m, f321_closed);
  } else if (a.name == "if123") {
    s = tabulate(1, m, if123);
  } else if (a.name == "if132-213") {
    s = tabulate(1, m, if132_213);
  } else if (a.name == "a082582") {
    s = a082582(m);
  } else if (a.name == "f1342") {
    s = tabulate(1, m, f1342);
  } else if (a.name == "count") {
    std::optional<Permutation> sigma;
    if (!a.pattern.empty()) sigma = Permutation::parse(a.pattern);
    s = counting_sequence(sigma, {a.fishburn, a.indecomposable}, m);
  } else {
    throw UsageError("unknown sequence '" + a.name + "'");
  }
  if (a.transform == "invert") {
    s = invert_transform(s);
  } else if (a.transform == "inverse-invert") {
    s = inverse_invert_transform(s);
  } else if (a.transform == "binomial") {
    s = binomial_transform(s);
  } else if (a.transform != "none") {
    throw UsageError("unknown transform '" + a.transform + "'");
  }
  print_seq(s, kFormats.at(a.format));
  return 0;
}

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, tabulate and verify pattern-avoiding Fishburn permutations"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count a permutation class");
  count_cmd->add_option("--n", count_args.n, "Permutation size")->required()->check(CLI::Range(1, 64));
  count_cmd->add_option("--pattern", count_args.pattern, "Classical pattern to avoid");
  count_cmd->add_flag("--fishburn", count_args.fishburn, "Restrict to Fishburn permutations");
  count_cmd->add_flag("--indecomposable", count_args.indecomposable, "Restrict to indecomposable permutations");
  count_cmd->add_option("--threads", count_args.threads, "Worker threads (default: hardware)");
  add_format(count_cmd, count_args.format);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Recompute a published table");
  table_cmd->add_option("--name", table_args.name, "Table name")
      ->required()
      ->check(CLI::IsMember({"size3", "size3-ind", "size4-single", "size4-catalan", "size4-ind"}));
  table_cmd->add_option("--max-n", table_args.max_n, "Largest n (default: table default)")->check(CLI::Range(1, 64));
  add_format(table_cmd, table_args.format);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check theorems and conjectures by exhaustive computation");
  verify_cmd->add_option("--claim", verify_args.claim, "Claim id (see --list)");
  verify_cmd->add_flag("--all", verify_args.all, "Run every registered claim");
  verify_cmd->add_flag("--list", verify_args.list, "List registered claims");
  verify_cmd->add_flag("--verbose", verify_args.verbose, "Print every individual check");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest n (default: per claim)")->check(CLI::Range(1, 64));

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "Apply a bijection");
  map_cmd->add_option("--name", map_args.name, "phi, alpha, beta, alpha1, alpha2, alpha2-alpha1, gamma")->required();
  map_cmd->add_option("--input", map_args.input, "Input permutation");
  map_cmd->add_option("--tau", map_args.tau, "tau for phi (12 or 21)")->capture_default_str();
  map_cmd->add_option("--variant", map_args.variant, "Source pattern for alpha (1423 or 1324)")->capture_default_str();
  map_cmd->add_flag("--trace", map_args.trace, "Print every intermediate permutation");
  map_cmd->add_option("--verify-n", map_args.verify_n, "Certify the map on all of F_n(source)")
      ->check(CLI::Range(1, 64));
  add_format(map_cmd, map_args.format);

  DyckArgs dyck_args;
  auto* dyck_cmd = app.add_subcommand("dyck", "Convert between 321-avoiders and Dyck paths");
  auto* perm_opt = dyck_cmd->add_option("--perm", dyck_args.perm, "321-avoiding permutation");
  auto* path_opt = dyck_cmd->add_option("--path", dyck_args.path, "Dyck path step word");
  perm_opt->excludes(path_opt);

  SequenceArgs seq_args;
  auto* seq_cmd = app.add_subcommand("sequence", "Emit a closed-form or counted sequence");
  seq_cmd->add_option("--name", seq_args.name, "fishburn, catalan, pow2, f321, if123, if132-213, a082582, f1342, count")
      ->required();
  seq_cmd->add_option("--max-n", seq_args.max_n, "Last index")->required()->check(CLI::Range(0, 1000));
  seq_cmd->add_option("--pattern", seq_args.pattern, "Pattern for --name count");
  seq_cmd->add_flag("--fishburn", seq_args.fishburn, "Fishburn flag for --name count");
  seq_cmd->add_flag("--indecomposable", seq_args.indecomposable, "Indecomposable flag for --name count");
  seq_cmd->add_option("--transform", seq_args.transform, "none, invert, inverse-invert, binomial")
      ->capture_default_str();
  add_format(seq_cmd, seq_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_args);
    if (*table_cmd) return run_table(table_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*map_cmd) return run_map(map_args);
    if (*dyck_cmd) return run_dyck(dyck_args);
    if (*seq_cmd) return run_sequence(seq_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fishburn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Overflow:
      case ErrorCode::NonIntegerResult:
      case ErrorCode::NonTermination:
      case ErrorCode::PostconditionViolated:
        return kExitCheckFailed;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}
