#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grc/gen.hpp"
#include "grc/serialize.hpp"

namespace grc {

struct LawConfig {
  int cases = 500;
  int max_dim = 5;
  uint64_t seed = 42;
  double tol = kDefaultTol;
  // 1 runs the serial reference loop; 0 lets OpenMP pick; >1 forces a
  // thread count. The report bytes are identical either way.
  int threads = 1;
};

// Indirection point for the operations a law audits, so tests can inject a
// broken implementation and watch the suite minimize a counterexample.
struct LawOps {
  std::function<Matrix(const Matrix&)> transpose;
  LawOps();
};

enum class Check { Pass, Fail, Skip };

struct CaseItem {
  std::string name;
  std::variant<Matrix, PMatrix, Subdist> value;
};
using LawCase = std::vector<CaseItem>;

struct Law {
  std::string id;
  std::string summary;
  // Enumerated laws run a fixed case count and derive the instance from the
  // case index; 0 means use config.cases.
  int fixed_cases = 0;
  std::function<LawCase(Rng&, const LawConfig&, int index)> gen;
  std::function<Check(const LawCase&, const LawOps&, const LawConfig&)> check;
};

const std::vector<Law>& all_laws();

struct Counterexample {
  int case_index = 0;
  std::string note;
  Json items;
};

struct LawResult {
  std::string id;
  std::string summary;
  int cases = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::optional<Counterexample> counterexample;
};

struct LawReport {
  LawConfig config;
  std::vector<LawResult> laws;  // sorted by id
  bool all_passed = false;
};

LawReport run_laws(const LawConfig& config);
LawReport run_laws_with(const LawConfig& config, const LawOps& ops);

Json law_report_to_json(const LawReport& report);
std::string law_report_to_text(const LawReport& report);

// The case loop shared by the law suite, the fuzz harnesses, and the
// benchmark: threads == 1 is the plain serial loop kept as the reference;
// anything else runs the OpenMP kernel. fn must be thread-safe and must
// write results only into its own slot.
void run_cases(int n, int threads, const std::function<void(int)>& fn);

// Three-way agreement at the heart of the partial-inverse theory: the row
// predicate, the transpose witness equations, and entropy preservation on
// systematic plus sampled supported contexts must coincide.
Check subperm_three_way(const Matrix& m, Rng& rng, int samples, double tol, const LawOps& ops);

// Same check with caller-supplied sample contexts; samples living on the
// wrong space or outside supp(m) are ignored. The systematic singleton and
// pair probes alone already decide the entropy side, so extras only add
// coverage, never soundness.
Check subperm_three_way_with(const Matrix& m, const std::vector<Subdist>& extra, double tol,
                             const LawOps& ops);

}  // namespace grc
