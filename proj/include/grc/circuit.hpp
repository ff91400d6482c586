#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grc/entropy.hpp"
#include "grc/gates.hpp"
#include "grc/serialize.hpp"

namespace grc {

// A gate as written in a circuit file: explicit rows, a deterministic
// mapping shorthand, or a builtin with a microstate multiplicity. The
// resolved PMatrix is kept alongside the definition so canonical
// serialization can reproduce the source form (maps canonicalize to rows).
struct GateDef {
  enum class Kind { Rows, Builtin };
  std::string name;
  Kind kind = Kind::Rows;
  std::string dom_space;  // space names; empty for builtins
  std::string cod_space;
  std::string builtin;
  int multiplicity = 1;
  std::optional<PMatrix> pm;

  const PMatrix& matrix() const { return *pm; }
};

// A named state space: either literal elements with a partition, or a
// product of previously declared spaces (kept symbolic so pair labels never
// have to be written by hand and canonical output stays parseable).
struct SpaceDef {
  std::string name;
  PSet ps;
  std::vector<std::string> factors;  // nonempty when declared as a product
};

// Versioned circuit document: partitioned state spaces, named gates, the
// initial physical context, and a pipeline of sequential steps, each either
// one gate or a parallel block of gates combined left to right.
struct CircuitSpec {
  int format = 1;
  std::vector<SpaceDef> spaces;
  std::vector<GateDef> gates;
  std::string context_space;
  std::optional<PhysContext> context;
  std::vector<std::vector<std::string>> pipeline;

  const PSet* find_space(const std::string& name) const;
  const GateDef* find_gate(const std::string& name) const;
};

// Throws ParseError with byte position for malformed JSON and with the
// offending gate or space name for semantic problems.
CircuitSpec parse_circuit(const std::string& text);
CircuitSpec circuit_from_json(const Json& j);

// Canonical form: format first, then spaces, gates (explicit rows except
// builtins), context, pipeline, all in source order with entries in space
// order. Canonical output is a parse fixed point: parsing it and
// serializing again reproduces the same bytes.
Json circuit_to_json(const CircuitSpec& spec);

struct Elaborated {
  std::vector<std::pair<std::string, PMatrix>> steps;  // name, resolved matrix
  PMatrix composite;
};

// Resolves the pipeline: parallel blocks tensor left to right, steps chain
// by composition. Throws ShapeMismatch naming the failing step.
Elaborated elaborate(const CircuitSpec& spec);

struct StepFlags {
  bool partitioned = false;
  bool total = false;
  bool deterministic_aggregate = false;
  bool nee = false;
  bool free_phy = false;
  // Undefined when the aggregate is not deterministic and --lenient is set.
  std::optional<bool> condrev;
  std::optional<bool> free_comp;
  std::optional<bool> fundamental_agree;
};

struct StepReport {
  int index = 0;  // 1-based
  std::string gate;
  EntropyLedger before;
  EntropyLedger after;
  StepFlags flags;
  double delta_h_nc = 0;
};

struct AnalysisReport {
  std::vector<StepReport> steps;
  EntropyLedger initial;
  EntropyLedger final_state;
  double total_delta_h_nc = 0;
  int ejecting_steps = 0;
  bool all_free = false;
};

struct AnalyzeOptions {
  double tol = kDefaultTol;
  double base = kDefaultBase;
  // Report conditional reversibility as not-applicable instead of failing
  // when a step's aggregate is not deterministic.
  bool lenient = false;
};

// Walks the context through the pipeline, checking each step is a closed
// physical transformation. Throws NotClosedTransformation or
// NotDeterministic naming the step, ShapeMismatch for broken chains.
AnalysisReport analyze(const CircuitSpec& spec, const AnalyzeOptions& opts = {});

Json analysis_to_json(const AnalysisReport& report);
std::string analysis_to_text(const AnalysisReport& report);

// Block-level image of a circuit: spaces collapse to their block labels
// with discrete partitions, gates to their aggregates, the context to its
// block distribution. Builtin gates get synthesized space names.
CircuitSpec aggregate_circuit(const CircuitSpec& spec);

// Uniform-multiplicity lift of a computational circuit (all partitions
// discrete): every state becomes a block of `multiplicity` microstates,
// gates lift by uniform spreading, the context spreads uniformly within
// blocks. aggregate_circuit(lift_circuit(x, m)) reproduces x canonically.
CircuitSpec lift_circuit(const CircuitSpec& spec, int multiplicity);

}  // namespace grc
