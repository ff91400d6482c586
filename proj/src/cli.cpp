#include "grc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "grc/circuit.hpp"
#include "grc/error.hpp"
#include "grc/laws.hpp"

namespace grc {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot write '" + path + "'");
  f << text;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact entropy accounting for partitioned stochastic circuits"};
  app.name("grc");
  app.require_subcommand(1);

  std::string file;
  std::string outfile;
  bool json = false;
  bool lenient = false;
  AnalyzeOptions aopts;
  LawConfig lcfg;
  int multiplicity = 2;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "entropy ledger for a circuit file");
  analyze_cmd->add_option("file", file, "circuit file")->required();
  analyze_cmd->add_flag("--json", json, "machine-readable report");
  analyze_cmd->add_option("--tol", aopts.tol, "entropy comparison tolerance");
  analyze_cmd->add_option("--base", aopts.base, "entropy logarithm base");
  analyze_cmd->add_flag("--lenient", lenient,
                        "report n/a instead of failing when an aggregate is not deterministic");

  CLI::App* laws_cmd = app.add_subcommand("laws", "run the randomized law suite");
  laws_cmd->add_option("--cases", lcfg.cases, "cases per law");
  laws_cmd->add_option("--max-dim", lcfg.max_dim, "largest generated space");
  laws_cmd->add_option("--seed", lcfg.seed, "root seed");
  laws_cmd->add_option("--tol", lcfg.tol, "entropy comparison tolerance");
  laws_cmd->add_option("--threads", lcfg.threads, "1 = serial reference, 0 = all cores");
  laws_cmd->add_flag("--json", json, "machine-readable report");

  CLI::App* agg_cmd = app.add_subcommand("aggregate", "collapse a circuit to block level");
  agg_cmd->add_option("file", file, "circuit file")->required();
  agg_cmd->add_option("-o,--output", outfile, "output file (default stdout)");

  CLI::App* lift_cmd = app.add_subcommand("lift", "uniform microstate lift of a circuit");
  lift_cmd->add_option("file", file, "circuit file")->required();
  lift_cmd->add_option("--multiplicity", multiplicity, "microstates per state")->required();
  lift_cmd->add_option("-o,--output", outfile, "output file (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      aopts.lenient = lenient;
      CircuitSpec spec = parse_circuit(read_file(file));
      AnalysisReport report = analyze(spec, aopts);
      if (json) {
        out << analysis_to_json(report).dump(2) << "\n";
      } else {
        out << analysis_to_text(report);
      }
      return report.ejecting_steps > 0 ? 1 : 0;
    }
    if (laws_cmd->parsed()) {
      LawReport report = run_laws(lcfg);
      if (json) {
        out << law_report_to_json(report).dump(2) << "\n";
      } else {
        out << law_report_to_text(report);
      }
      return report.all_passed ? 0 : 1;
    }
    if (agg_cmd->parsed()) {
      CircuitSpec spec = parse_circuit(read_file(file));
      write_output(outfile, circuit_to_json(aggregate_circuit(spec)).dump(2) + "\n", out);
      return 0;
    }
    if (lift_cmd->parsed()) {
      CircuitSpec spec = parse_circuit(read_file(file));
      write_output(outfile, circuit_to_json(lift_circuit(spec, multiplicity)).dump(2) + "\n",
                   out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace grc
