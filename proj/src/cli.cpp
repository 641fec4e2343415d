#include "popmatch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "popmatch/house.hpp"
#include "popmatch/instances.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/roommates.hpp"
#include "popmatch/textio.hpp"

namespace popmatch {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write file '" + path + "'");
  file << content;
}

struct SolveOutcome {
  WinningSet winning_set;
  std::string trace_text;
};

SolveOutcome dispatch_solve(const Instance& instance) {
  switch (instance.kind()) {
    case Kind::House: {
      HouseResult result = solve_house(instance);
      return {std::move(result.winning_set),
              format_trace(instance, result.trace)};
    }
    case Kind::Marriage:
      return {solve_marriage(instance), ""};
    case Kind::Roommates:
      if (instance.all_preferences_strict() && instance.all_weights_equal()) {
        StrictRoommatesResult result = solve_roommates_strict(instance);
        std::ostringstream trace;
        for (const ChainStep& step : result.trace.steps) {
          trace << "step " << step.index << ": picked "
                << instance.name(step.chosen);
          if (step.edge_added) {
            trace << " (edge to matching " << step.target_matching << ")";
          }
          trace << "\n";
        }
        return {std::move(result.winning_set), trace.str()};
      }
      return {solve_roommates_general(instance), ""};
  }
  throw ValidationError("unknown instance kind");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"popular winning sets for house allocation, marriage, and "
               "roommates instances"};
  app.name("popmatch");
  app.require_subcommand(1);

  std::string instance_path, ws_path, out_path, gadget_name;
  bool verify = false, show_trace = false, show_certificate = false;
  int max_k = 2;
  int max_edges = 16;
  std::string kind_name_arg = "house";
  GeneratorConfig gen_config;

  CLI::App* solve = app.add_subcommand(
      "solve", "compute a popular winning set for an instance");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_flag("--verify", verify,
                  "check the result against the enumeration oracle");
  solve->add_flag("--trace", show_trace, "print the solver trace");
  solve->add_option("--max-edges", max_edges,
                    "enumeration guard for --verify");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check a winning-set file against the oracle");
  verify_cmd->add_option("instance", instance_path, "instance file")
      ->required();
  verify_cmd->add_option("winningset", ws_path, "winning-set file")
      ->required();
  verify_cmd->add_option("--max-edges", max_edges, "enumeration guard");

  CLI::App* dimension = app.add_subcommand(
      "dimension", "exact popular dimension by exhaustive search");
  dimension->add_option("instance", instance_path, "instance file")
      ->required();
  dimension->add_option("--max-k", max_k, "largest committee size to try");
  dimension->add_option("--max-edges", max_edges, "enumeration guard");
  dimension->add_flag("--certificate", show_certificate,
                      "print a minimum winning set when one is found");

  CLI::App* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--kind", kind_name_arg, "house|marriage|roommates")
      ->required();
  gen->add_option("--agents", gen_config.num_agents,
                  "agent count (left side for marriage)")
      ->required();
  gen->add_option("--agents-right", gen_config.num_agents_right,
                  "right-side agent count (marriage)");
  gen->add_option("--items", gen_config.num_items, "item count (house)");
  gen->add_flag("--ties", gen_config.ties_enabled, "allow preference ties");
  gen->add_option("--weight-min", gen_config.weight_min, "minimum weight");
  gen->add_option("--weight-max", gen_config.weight_max, "maximum weight");
  gen->add_option("--density", gen_config.density,
                  "acceptability probability per pair");
  gen->add_option("--seed", gen_config.seed, "generator seed");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* demo = app.add_subcommand("demo", "write a named gadget instance");
  demo->add_option("name", gadget_name,
                   "house_lower|roommates_lower|roommates_lower_doubled")
      ->required();
  demo->add_option("-o,--out", out_path, "output file (default stdout)");

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    OracleLimits limits{max_edges};
    if (solve->parsed()) {
      Instance instance = parse_instance(read_file(instance_path));
      SolveOutcome outcome = dispatch_solve(instance);
      if (show_trace) {
        std::istringstream trace(outcome.trace_text);
        std::string line;
        while (std::getline(trace, line)) out << "# " << line << "\n";
      }
      out << serialize_winning_set(instance, outcome.winning_set);
      if (verify) {
        VerificationReport report =
            verify_winning_set(instance, outcome.winning_set, limits);
        out << serialize_report(instance, report);
        if (!report.verdict) return kVerificationFailure;
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      Instance instance = parse_instance(read_file(instance_path));
      WinningSet ws = parse_winning_set(instance, read_file(ws_path));
      VerificationReport report = verify_winning_set(instance, ws, limits);
      out << serialize_report(instance, report);
      return report.verdict ? kOk : kVerificationFailure;
    }
    if (dimension->parsed()) {
      Instance instance = parse_instance(read_file(instance_path));
      DimensionResult result = popular_dimension(instance, max_k, limits);
      if (result.dimension.has_value()) {
        out << *result.dimension << "\n";
        if (show_certificate) {
          out << serialize_winning_set(instance, *result.certificate);
        }
      } else {
        out << "exceeds " << result.searched_up_to << "\n";
      }
      return kOk;
    }
    if (gen->parsed()) {
      if (kind_name_arg == "house") {
        gen_config.kind = Kind::House;
      } else if (kind_name_arg == "marriage") {
        gen_config.kind = Kind::Marriage;
      } else if (kind_name_arg == "roommates") {
        gen_config.kind = Kind::Roommates;
      } else {
        throw ValidationError("unknown kind '" + kind_name_arg + "'");
      }
      Instance instance = random_instance(gen_config);
      write_output(out_path, serialize_instance(instance), out);
      return kOk;
    }
    if (demo->parsed()) {
      Instance instance = gadget(gadget_name);
      write_output(out_path, serialize_instance(instance), out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what()
        << " (raise --max-edges to enumerate anyway)\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace popmatch
