// Command line surface: closure computation, membership queries, functor
// evaluation, verification suites, easiness classification and presentation
// emission. JSON in, JSON out by default; --format text renders partitions
// as two label rows.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewcat/json_io.hpp"

namespace {

using namespace skewcat;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitSchemaViolation = 2;
constexpr int kExitResourceGuard = 3;
constexpr int kExitInternalError = 4;

// Accepts inline JSON (anything starting with '{' or '[') or a file path.
Json load_json_argument(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw SchemaError("cannot open input file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void emit_report(const Report& report, const std::string& format) {
  if (format == "json") {
    emit(to_json(report));
    return;
  }
  std::cout << "suite " << report.suite << " (seed " << report.seed << ")\n";
  for (const auto& c : report.cases) {
    const char* tag = c.status == CaseStatus::Pass     ? "pass"
                      : c.status == CaseStatus::Fail   ? "FAIL"
                                                       : "unknown";
    std::cout << "  [" << tag << "] " << c.description;
    if (!c.witness.empty()) std::cout << " -- " << c.witness;
    std::cout << "\n";
  }
  std::cout << report.failures() << " failures, " << report.unknowns() << " unknowns\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact engine for skew categories of partitions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "seed recorded in reports");

  auto* closure_cmd = app.add_subcommand("closure", "saturate a bounded closure truncation");
  std::string closure_input;
  int closure_max_points = 10;
  std::string closure_kind = "skew";
  std::vector<std::string> closure_generators;
  int closure_max_blocks = 0;
  closure_cmd->add_option("--input", closure_input,
                          "request JSON ({\"kind\",\"generators\",\"maxPoints\"})");
  closure_cmd->add_option("--kind", closure_kind, "skew or classic")
      ->check(CLI::IsMember({"skew", "classic"}));
  closure_cmd->add_option("--generators", closure_generators,
                          "generator partitions as JSON objects");
  closure_cmd->add_option("--max-points", closure_max_points, "bound on points per element");
  closure_cmd->add_option("--max-blocks", closure_max_blocks, "optional block bound");

  auto* member_cmd = app.add_subcommand("member", "membership of a word or partition");
  std::string member_oracle, member_word, member_partition;
  bool member_lift = false;
  member_cmd->add_option("--oracle", member_oracle, "oracle JSON or file")->required();
  member_cmd->add_option("--word", member_word, "word JSON, e.g. [1,2,1,2,1,2]");
  member_cmd->add_option("--partition", member_partition,
                         "partition JSON; uses exact membership via the word bridge");
  member_cmd->add_flag("--lift", member_lift,
                       "treat the word as an element of the infinite free product");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a fiber functor on a partition");
  std::string eval_partition, eval_functor = "hat";
  int eval_n = 3;
  eval_cmd->add_option("--partition", eval_partition, "partition JSON")->required();
  eval_cmd->add_option("--n", eval_n, "dimension");
  eval_cmd->add_option("--functor", eval_functor, "hat or plain")
      ->check(CLI::IsMember({"hat", "plain"}));

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string verify_suite = "all";
  int verify_n = 3, verify_arity = 4, verify_points = 8;
  verify_cmd->add_option("--suite", verify_suite, "suite name")
      ->check(CLI::IsMember({"functor", "correspondence", "easiness", "tensorcat",
                             "section5", "all"}));
  verify_cmd->add_option("--n", verify_n, "dimension / ambient rank");
  verify_cmd->add_option("--arity-bound", verify_arity, "operand point bound");
  verify_cmd->add_option("--max-points", verify_points, "closure truncation bound");

  auto* easiness_cmd = app.add_subcommand("easiness", "sS_n-invariance classification");
  std::string easiness_oracle, easiness_generators;
  easiness_cmd->add_option("--oracle", easiness_oracle, "oracle JSON or file")->required();
  easiness_cmd->add_option("--generators", easiness_generators,
                           "normal-closure generators as JSON array of words")
      ->required();

  auto* present_cmd = app.add_subcommand("present", "emit presentation relations");
  std::string present_relators;
  int present_n = 4;
  present_cmd->add_option("--relators", present_relators,
                          "relator multi-indices as JSON array of arrays")
      ->required();
  present_cmd->add_option("--n", present_n, "ambient rank");

  auto* example_cmd = app.add_subcommand("example-s", "run the worked reflection-group example");
  int example_n = 4;
  example_cmd->add_option("--n", example_n, "ambient rank (>= 3; 4 recommended)");

  CLI11_PARSE(app, argc, argv);

  if (closure_cmd->parsed()) {
    ClosureRequest req;
    if (!closure_input.empty()) {
      req = closure_request_from_json(load_json_argument(closure_input));
    } else {
      req.kind = closure_kind == "skew" ? ClosureKind::Skew : ClosureKind::Classic;
      for (const auto& g : closure_generators)
        req.generators.push_back(partition_from_json(load_json_argument(g)));
      req.bounds.max_points = closure_max_points;
      if (closure_max_blocks > 0) req.bounds.max_blocks = closure_max_blocks;
    }
    const ClosureTruncation t = req.kind == ClosureKind::Skew
                                    ? skew_closure(req.generators, req.bounds)
                                    : classic_closure(req.generators, req.bounds);
    if (format == "json") {
      emit(to_json(t));
    } else {
      for (const auto& p : t.elements) std::cout << to_text(p) << "\n";
      std::cout << t.elements.size() << " elements, saturated\n";
    }
    return kExitOk;
  }

  if (member_cmd->parsed()) {
    const SubgroupOracle oracle = oracle_from_json(load_json_argument(member_oracle));
    Verdict verdict;
    if (!member_partition.empty()) {
      verdict = member_exact(partition_from_json(load_json_argument(member_partition)), oracle);
    } else if (!member_word.empty()) {
      const Word w = word_from_json(load_json_argument(member_word));
      verdict = member_lift ? lift_member(oracle, w) : oracle.member(w);
    } else {
      throw SchemaError("member: provide --word or --partition");
    }
    if (format == "json")
      emit(Json{{"verdict", to_text(verdict)}});
    else
      std::cout << to_text(verdict) << "\n";
    return kExitOk;
  }

  if (eval_cmd->parsed()) {
    const Partition p = partition_from_json(load_json_argument(eval_partition));
    const LinMap m = eval_functor == "hat" ? t_hat(p, eval_n) : t_map(p, eval_n);
    if (format == "json") {
      emit(to_json(m));
    } else {
      std::cout << "map (C^" << m.dim() << ")^(x" << m.domain_arity() << ") -> (C^"
                << m.dim() << ")^(x" << m.codomain_arity() << "), " << m.entries().size()
                << " entries\n";
      for (const auto& [key, c] : m.entries()) {
        std::cout << "  out(";
        for (std::size_t i = 0; i < key.first.size(); ++i)
          std::cout << (i ? "," : "") << key.first[i];
        std::cout << ") <- in(";
        for (std::size_t i = 0; i < key.second.size(); ++i)
          std::cout << (i ? "," : "") << key.second[i];
        std::cout << ") : " << c << "\n";
      }
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    std::vector<Report> reports;
    const auto run_correspondence = [&] {
      const SubgroupOracle oracle = example_s::oracle(std::max(verify_n, 3));
      const std::vector<Partition> gens{primary_partition(), example_s::h3(), example_s::r()};
      reports.push_back(suite_skew_word_correspondence(
          gens, oracle, ClosureBounds{verify_points, std::nullopt}));
    };
    if (verify_suite == "functor" || verify_suite == "all")
      reports.push_back(suite_functor(verify_n, verify_arity));
    if (verify_suite == "correspondence" || verify_suite == "all") run_correspondence();
    if (verify_suite == "easiness" || verify_suite == "all") {
      const int rank = std::max(verify_n, 3);
      reports.push_back(
          suite_easiness(example_s::subgroup_generators(rank), example_s::oracle(rank)));
    }
    if (verify_suite == "tensorcat" || verify_suite == "all") {
      const int rank = std::max(verify_n, 3);
      const SubgroupOracle oracle = example_s::oracle(rank);
      const std::vector<Partition> gens{primary_partition(), example_s::h3(), example_s::r()};
      reports.push_back(suite_tensor_category(gens, &oracle, verify_n,
                                              ClosureBounds{verify_points, std::nullopt},
                                              verify_arity));
    }
    if (verify_suite == "section5" || verify_suite == "all")
      reports.push_back(section_five_suite(std::max(verify_n, 4)));

    int failures = 0;
    for (auto& r : reports) {
      r.seed = seed;
      emit_report(r, format);
      failures += r.failures();
    }
    return failures == 0 ? kExitOk : kExitVerificationFailure;
  }

  if (easiness_cmd->parsed()) {
    const SubgroupOracle oracle = oracle_from_json(load_json_argument(easiness_oracle));
    std::vector<Word> gens;
    for (const auto& g : load_json_argument(easiness_generators)) gens.push_back(word_from_json(g));
    Report report = suite_easiness(gens, oracle);
    report.seed = seed;
    emit_report(report, format);
    return report.failures() == 0 ? kExitOk : kExitVerificationFailure;
  }

  if (present_cmd->parsed()) {
    std::vector<Labels> relators;
    for (const auto& r : load_json_argument(present_relators)) {
      Labels idx;
      for (const auto& x : r) {
        if (!x.is_number_integer()) throw SchemaError("relators: expected integer indices");
        idx.push_back(x.get<int>());
      }
      relators.push_back(std::move(idx));
    }
    const auto relations = presentation_relations(relators, present_n);
    if (format == "json") {
      Json out = Json::array();
      for (const auto& rel : relations)
        out.push_back(Json{{"indices", rel.indices}, {"relation", rel.relation}});
      emit(out);
    } else {
      for (const auto& rel : relations) std::cout << rel.relation << "\n";
    }
    return kExitOk;
  }

  if (example_cmd->parsed()) {
    Report report = section_five_suite(example_n);
    report.seed = seed;
    emit_report(report, format);
    return report.failures() == 0 ? kExitOk : kExitVerificationFailure;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const skewcat::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchemaViolation;
  } catch (const skewcat::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResourceGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitSchemaViolation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
