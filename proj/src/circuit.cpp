#include "grc/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "grc/error.hpp"
#include "grc/reversibility.hpp"

namespace grc {

const PSet* CircuitSpec::find_space(const std::string& name) const {
  for (const auto& def : spaces)
    if (def.name == name) return &def.ps;
  return nullptr;
}

const GateDef* CircuitSpec::find_gate(const std::string& name) const {
  for (const auto& g : gates)
    if (g.name == name) return &g;
  return nullptr;
}

namespace {

[[noreturn]] void rewrap(const Error& e, const std::string& context) {
  fail(e.code(), context + ": " + e.detail());
}

const Json& expect(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(Errc::ParseError, where + ": missing key '" + key + "'");
  return *it;
}

int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(Errc::ParseError, where + ": expected an integer");
  return j.get<int>();
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(Errc::ParseError, where + ": expected a string");
  return j.get<std::string>();
}

GateDef parse_gate(const CircuitSpec& spec, const std::string& name, const Json& def) {
  std::string where = "gate '" + name + "'";
  if (!def.is_object()) fail(Errc::ParseError, where + ": definition must be an object");
  GateDef g;
  g.name = name;
  if (def.contains("builtin")) {
    if (def.contains("rows") || def.contains("map") || def.contains("dom") || def.contains("cod"))
      fail(Errc::ParseError, where + ": a builtin takes no rows, map, or spaces");
    g.kind = GateDef::Kind::Builtin;
    g.builtin = expect_string(def["builtin"], where + " builtin");
    g.multiplicity = def.contains("multiplicity")
                         ? expect_int(def["multiplicity"], where + " multiplicity")
                         : 1;
    try {
      g.pm = builtin_gate(g.builtin, g.multiplicity);
    } catch (const Error& e) {
      rewrap(e, where);
    }
    return g;
  }
  g.kind = GateDef::Kind::Rows;
  g.dom_space = expect_string(expect(def, "dom", where), where + " dom");
  g.cod_space = expect_string(expect(def, "cod", where), where + " cod");
  const PSet* dom = spec.find_space(g.dom_space);
  if (!dom) fail(Errc::ParseError, where + ": unknown space '" + g.dom_space + "'");
  const PSet* cod = spec.find_space(g.cod_space);
  if (!cod) fail(Errc::ParseError, where + ": unknown space '" + g.cod_space + "'");
  bool has_rows = def.contains("rows");
  bool has_map = def.contains("map");
  if (has_rows == has_map)
    fail(Errc::ParseError, where + ": exactly one of 'rows' or 'map' is required");
  try {
    Matrix m = [&] {
      if (has_rows) {
        std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>> rows;
        const Json& rj = def["rows"];
        if (!rj.is_object()) fail(Errc::ParseError, "rows must be an object");
        for (const auto& [x, row] : rj.items()) {
          if (!row.is_object()) fail(Errc::ParseError, "row '" + x + "' must be an object");
          std::vector<std::pair<std::string, Rat>> sparse;
          for (const auto& [y, value] : row.items())
            sparse.emplace_back(y, rat_from_json(value));
          rows.emplace_back(x, std::move(sparse));
        }
        return Matrix::make(dom->elements(), cod->elements(), rows);
      }
      // Deterministic mapping shorthand: unmapped states get zero rows.
      std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>> rows;
      const Json& mj = def["map"];
      if (!mj.is_object()) fail(Errc::ParseError, "map must be an object");
      for (const auto& [x, y] : mj.items())
        rows.emplace_back(x, std::vector<std::pair<std::string, Rat>>{
                                 {expect_string(y, "map target for '" + x + "'"), Rat(1)}});
      return Matrix::make(dom->elements(), cod->elements(), rows);
    }();
    g.pm = PMatrix::make(*dom, *cod, std::move(m));
  } catch (const Error& e) {
    rewrap(e, where);
  }
  return g;
}

}  // namespace

CircuitSpec parse_circuit(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return circuit_from_json(j);
}

CircuitSpec circuit_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "a circuit must be a JSON object");
  CircuitSpec spec;
  spec.format = expect_int(expect(j, "format", "circuit"), "format");
  if (spec.format != 1)
    fail(Errc::ParseError, "unsupported format " + std::to_string(spec.format));

  const Json& spaces = expect(j, "spaces", "circuit");
  if (!spaces.is_object()) fail(Errc::ParseError, "spaces must be an object");
  for (const auto& [name, sj] : spaces.items()) {
    std::string where = "space '" + name + "'";
    if (spec.find_space(name)) fail(Errc::ParseError, where + ": duplicate name");
    try {
      if (sj.is_object() && sj.contains("product")) {
        const Json& fj = sj["product"];
        if (!fj.is_array() || fj.size() < 2)
          fail(Errc::ParseError, "product needs at least two factor names");
        std::vector<std::string> factors;
        for (const auto& f : fj) factors.push_back(expect_string(f, "product factor"));
        const PSet* first = spec.find_space(factors[0]);
        if (!first) fail(Errc::ParseError, "unknown factor '" + factors[0] + "'");
        PSet ps = *first;
        for (size_t k = 1; k < factors.size(); ++k) {
          const PSet* next = spec.find_space(factors[k]);
          if (!next) fail(Errc::ParseError, "unknown factor '" + factors[k] + "'");
          ps = product_pset(ps, *next);
        }
        spec.spaces.push_back({name, std::move(ps), std::move(factors)});
      } else {
        PSet ps = pset_from_json(sj);
        for (const auto& label : ps.elements().labels()) validate_user_label(label);
        spec.spaces.push_back({name, std::move(ps), {}});
      }
    } catch (const Error& e) {
      rewrap(e, where);
    }
  }

  const Json& gates = expect(j, "gates", "circuit");
  if (!gates.is_object()) fail(Errc::ParseError, "gates must be an object");
  for (const auto& [name, def] : gates.items()) {
    if (spec.find_gate(name)) fail(Errc::ParseError, "gate '" + name + "': duplicate name");
    spec.gates.push_back(parse_gate(spec, name, def));
  }

  const Json& ctx = expect(j, "context", "circuit");
  if (!ctx.is_object()) fail(Errc::ParseError, "context must be an object");
  spec.context_space = expect_string(expect(ctx, "space", "context"), "context space");
  const PSet* cs = spec.find_space(spec.context_space);
  if (!cs) fail(Errc::ParseError, "context: unknown space '" + spec.context_space + "'");
  try {
    spec.context = PhysContext(*cs, dist_from_json(cs->elements(), expect(ctx, "dist", "context")));
  } catch (const Error& e) {
    rewrap(e, "context");
  }

  const Json& pipeline = expect(j, "pipeline", "circuit");
  if (!pipeline.is_array() || pipeline.empty())
    fail(Errc::ParseError, "pipeline must be a nonempty array");
  for (size_t i = 0; i < pipeline.size(); ++i) {
    std::string where = "pipeline step " + std::to_string(i + 1);
    const Json& step = pipeline[i];
    std::vector<std::string> block;
    if (step.is_string()) {
      block.push_back(step.get<std::string>());
    } else if (step.is_array() && !step.empty()) {
      for (const auto& name : step) block.push_back(expect_string(name, where));
    } else {
      fail(Errc::ParseError, where + ": expected a gate name or a nonempty array of names");
    }
    for (const auto& name : block)
      if (!spec.find_gate(name)) fail(Errc::ParseError, where + ": unknown gate '" + name + "'");
    spec.pipeline.push_back(std::move(block));
  }
  return spec;
}

Json circuit_to_json(const CircuitSpec& spec) {
  Json out;
  out["format"] = spec.format;
  Json spaces = Json::object();
  for (const auto& def : spec.spaces) {
    if (def.factors.empty()) {
      spaces[def.name] = pset_to_json(def.ps);
    } else {
      Json sj;
      sj["product"] = def.factors;
      spaces[def.name] = std::move(sj);
    }
  }
  out["spaces"] = std::move(spaces);
  Json gates = Json::object();
  for (const auto& g : spec.gates) {
    Json def;
    if (g.kind == GateDef::Kind::Builtin) {
      def["builtin"] = g.builtin;
      def["multiplicity"] = g.multiplicity;
    } else {
      def["dom"] = g.dom_space;
      def["cod"] = g.cod_space;
      def["rows"] = matrix_to_json(g.matrix().matrix())["rows"];
    }
    gates[g.name] = std::move(def);
  }
  out["gates"] = std::move(gates);
  Json ctx;
  ctx["space"] = spec.context_space;
  ctx["dist"] = dist_to_json(spec.context->dist());
  out["context"] = std::move(ctx);
  Json pipeline = Json::array();
  for (const auto& block : spec.pipeline) {
    if (block.size() == 1) {
      pipeline.push_back(block[0]);
    } else {
      Json arr = Json::array();
      for (const auto& name : block) arr.push_back(name);
      pipeline.push_back(std::move(arr));
    }
  }
  out["pipeline"] = std::move(pipeline);
  return out;
}

Elaborated elaborate(const CircuitSpec& spec) {
  if (spec.pipeline.empty()) fail(Errc::ShapeMismatch, "pipeline is empty");
  std::vector<std::pair<std::string, PMatrix>> steps;
  for (const auto& block : spec.pipeline) {
    const GateDef* g = spec.find_gate(block[0]);
    if (!g) fail(Errc::ParseError, "unknown gate '" + block[0] + "'");
    PMatrix pm = g->matrix();
    std::string name = block[0];
    for (size_t k = 1; k < block.size(); ++k) {
      const GateDef* gk = spec.find_gate(block[k]);
      if (!gk) fail(Errc::ParseError, "unknown gate '" + block[k] + "'");
      pm = pm_kron(pm, gk->matrix());
      name += "||" + block[k];
    }
    steps.emplace_back(std::move(name), std::move(pm));
  }
  for (size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].second.codp() != steps[i + 1].second.domp())
      fail(Errc::ShapeMismatch, "step " + std::to_string(i + 1) + " ('" + steps[i].first +
                                    "') does not chain into step " + std::to_string(i + 2) +
                                    " ('" + steps[i + 1].first + "')");
  }
  PMatrix composite = steps[0].second;
  for (size_t i = 1; i < steps.size(); ++i) composite = pm_compose(composite, steps[i].second);
  return Elaborated{std::move(steps), std::move(composite)};
}

AnalysisReport analyze(const CircuitSpec& spec, const AnalyzeOptions& opts) {
  if (!spec.context) fail(Errc::ParseError, "circuit has no context");
  Elaborated el = elaborate(spec);
  PhysContext ctx = *spec.context;
  if (ctx.pspace() != el.steps[0].second.domp())
    fail(Errc::ShapeMismatch,
         "context space does not match dom of step 1 ('" + el.steps[0].first + "')");

  AnalysisReport rep;
  rep.initial = ledger(ctx, opts.base);
  EntropyLedger before = rep.initial;
  bool all_free = true;
  for (size_t s = 0; s < el.steps.size(); ++s) {
    const auto& [name, pm] = el.steps[s];
    std::string where = "step " + std::to_string(s + 1) + " ('" + name + "')";
    Subdist q = apply(ctx.dist(), pm.matrix());
    if (q.mass() != 1)
      fail(Errc::NotClosedTransformation, where + ": image mass is " + q.mass().str());
    PhysContext next(pm.codp(), q);
    EntropyLedger after = ledger(next, opts.base);
    if (std::fabs(after.h_phy - before.h_phy) > opts.tol)
      fail(Errc::NotClosedTransformation,
           where + ": microstate entropy changes by " + format_bits(after.h_phy - before.h_phy));

    StepReport sr;
    sr.index = static_cast<int>(s) + 1;
    sr.gate = name;
    sr.before = before;
    sr.after = after;
    sr.flags.partitioned = is_partitioned(pm.matrix(), pm.domp(), pm.codp());
    sr.flags.total = is_total(pm.matrix());
    Matrix agg = aggregate(pm);
    bool det = is_deterministic(agg);
    sr.flags.deterministic_aggregate = det;
    sr.flags.nee = before.h_comp <= after.h_comp + opts.tol;
    sr.flags.free_phy = sr.flags.nee && det;
    if (det) {
      bool cr = is_conditionally_reversible(agg, aggregate_context(ctx));
      sr.flags.condrev = cr;
      sr.flags.free_comp = cr;
      sr.flags.fundamental_agree = (sr.flags.nee == cr);
    } else if (!opts.lenient) {
      fail(Errc::NotDeterministic,
           where + ": aggregate is not deterministic (use --lenient to report n/a)");
    }
    sr.delta_h_nc = after.h_nc - before.h_nc;
    if (!sr.flags.nee) ++rep.ejecting_steps;
    all_free = all_free && sr.flags.free_phy;
    rep.steps.push_back(std::move(sr));
    ctx = std::move(next);
    before = after;
  }
  rep.final_state = before;
  rep.total_delta_h_nc = rep.final_state.h_nc - rep.initial.h_nc;
  rep.all_free = all_free;
  return rep;
}

namespace {

Json flag_json(const std::optional<bool>& f) {
  if (!f) return "n/a";
  return *f;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string flag_text(const std::optional<bool>& f) { return f ? yesno(*f) : "n/a"; }

}  // namespace

Json analysis_to_json(const AnalysisReport& report) {
  Json out;
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json js;
    js["step"] = s.index;
    js["gate"] = s.gate;
    js["before"] = ledger_to_json(s.before);
    js["after"] = ledger_to_json(s.after);
    Json flags;
    flags["partitioned"] = s.flags.partitioned;
    flags["total"] = s.flags.total;
    flags["deterministic_aggregate"] = s.flags.deterministic_aggregate;
    flags["nee"] = s.flags.nee;
    flags["condrev"] = flag_json(s.flags.condrev);
    flags["free_phy"] = s.flags.free_phy;
    flags["free_comp"] = flag_json(s.flags.free_comp);
    flags["fundamental_agree"] = flag_json(s.flags.fundamental_agree);
    js["flags"] = std::move(flags);
    js["delta_h_nc"] = format_bits(s.delta_h_nc);
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  Json summary;
  summary["initial"] = ledger_to_json(report.initial);
  summary["final"] = ledger_to_json(report.final_state);
  summary["total_delta_h_nc"] = format_bits(report.total_delta_h_nc);
  summary["ejecting_steps"] = report.ejecting_steps;
  summary["free"] = report.all_free;
  out["summary"] = std::move(summary);
  return out;
}

std::string analysis_to_text(const AnalysisReport& report) {
  std::string out;
  auto ledger_line = [](const EntropyLedger& l) {
    return "h_phy=" + format_bits(l.h_phy) + " h_comp=" + format_bits(l.h_comp) +
           " h_nc=" + format_bits(l.h_nc);
  };
  for (const auto& s : report.steps) {
    out += "step " + std::to_string(s.index) + "  " + s.gate + "\n";
    out += "  before  " + ledger_line(s.before) + "\n";
    out += "  after   " + ledger_line(s.after) + "\n";
    out += "  delta_h_nc=" + format_bits(s.delta_h_nc);
    out += "  partitioned=" + std::string(yesno(s.flags.partitioned));
    out += " total=" + std::string(yesno(s.flags.total));
    out += " det_aggregate=" + std::string(yesno(s.flags.deterministic_aggregate));
    out += " nee=" + std::string(yesno(s.flags.nee));
    out += " condrev=" + flag_text(s.flags.condrev);
    out += " free_phy=" + std::string(yesno(s.flags.free_phy));
    out += " free_comp=" + flag_text(s.flags.free_comp);
    out += " agree=" + flag_text(s.flags.fundamental_agree);
    out += "\n";
  }
  out += "summary  steps=" + std::to_string(report.steps.size());
  out += " ejecting=" + std::to_string(report.ejecting_steps);
  out += " total_delta_h_nc=" + format_bits(report.total_delta_h_nc);
  out += " free=" + std::string(yesno(report.all_free));
  out += "\n";
  return out;
}

namespace {

std::string unique_space_name(const CircuitSpec& spec, const std::string& base) {
  if (!spec.find_space(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!spec.find_space(candidate)) return candidate;
  }
}

}  // namespace

CircuitSpec aggregate_circuit(const CircuitSpec& spec) {
  if (!spec.context) fail(Errc::ParseError, "circuit has no context");
  CircuitSpec out;
  out.format = spec.format;
  for (const auto& def : spec.spaces) {
    if (def.factors.empty()) {
      out.spaces.push_back({def.name, PSet::discrete(def.ps.block_space()), {}});
      continue;
    }
    // Aggregation distributes over products on the nose, so a product space
    // stays a product of the (already aggregated) factors.
    PSet ps = *out.find_space(def.factors[0]);
    for (size_t k = 1; k < def.factors.size(); ++k)
      ps = product_pset(ps, *out.find_space(def.factors[k]));
    out.spaces.push_back({def.name, std::move(ps), def.factors});
  }
  for (const auto& g : spec.gates) {
    GateDef ng;
    ng.name = g.name;
    ng.kind = GateDef::Kind::Rows;
    Matrix agg = aggregate(g.matrix());
    PSet dom = PSet::discrete(agg.dom());
    PSet cod = PSet::discrete(agg.cod());
    if (g.kind == GateDef::Kind::Rows) {
      ng.dom_space = g.dom_space;
      ng.cod_space = g.cod_space;
    } else {
      // Builtin spaces are anonymous; aggregation makes them explicit.
      ng.dom_space = unique_space_name(out, g.name + ".dom");
      out.spaces.push_back({ng.dom_space, dom, {}});
      ng.cod_space = unique_space_name(out, g.name + ".cod");
      out.spaces.push_back({ng.cod_space, cod, {}});
    }
    ng.pm = PMatrix::unchecked(std::move(dom), std::move(cod), std::move(agg));
    out.gates.push_back(std::move(ng));
  }
  out.context_space = spec.context_space;
  const PSet* cs = out.find_space(spec.context_space);
  out.context = PhysContext(*cs, aggregate_dist(spec.context->dist(),
                                                *spec.find_space(spec.context_space)));
  out.pipeline = spec.pipeline;
  return out;
}

CircuitSpec lift_circuit(const CircuitSpec& spec, int multiplicity) {
  if (multiplicity < 1)
    fail(Errc::InvalidMultiplicity, "multiplicity must be >= 1, got " +
                                        std::to_string(multiplicity));
  if (!spec.context) fail(Errc::ParseError, "circuit has no context");
  for (const auto& def : spec.spaces) {
    if (!def.factors.empty())
      fail(Errc::ParseError, "space '" + def.name +
                                 "' is a product; lift circuits over literal spaces");
    if (def.ps.block_count() != def.ps.elements().size())
      fail(Errc::ParseError, "space '" + def.name +
                                 "' is not computational (partition is not discrete); "
                                 "aggregate the circuit first");
  }

  CircuitSpec out;
  out.format = spec.format;
  for (const auto& def : spec.spaces)
    out.spaces.push_back(
        {def.name, uniform_multiplicity_pset(def.ps.elements().labels(), multiplicity), {}});
  for (const auto& g : spec.gates) {
    GateDef ng;
    ng.name = g.name;
    ng.kind = GateDef::Kind::Rows;
    if (g.kind == GateDef::Kind::Builtin) {
      // Builtins carry anonymous spaces; make them explicit before lifting.
      const PSet& bdom = g.matrix().domp();
      const PSet& bcod = g.matrix().codp();
      if (bdom.block_count() != bdom.elements().size() ||
          bcod.block_count() != bcod.elements().size())
        fail(Errc::ParseError, "gate '" + g.name + "' is not computational; aggregate first");
      ng.dom_space = unique_space_name(out, g.name + ".dom");
      out.spaces.emplace_back(ng.dom_space,
                              uniform_multiplicity_pset(bdom.elements().labels(), multiplicity));
      ng.cod_space = unique_space_name(out, g.name + ".cod");
      out.spaces.emplace_back(ng.cod_space,
                              uniform_multiplicity_pset(bcod.elements().labels(), multiplicity));
    } else {
      ng.dom_space = g.dom_space;
      ng.cod_space = g.cod_space;
    }
    const PSet* dom = out.find_space(ng.dom_space);
    const PSet* cod = out.find_space(ng.cod_space);
    ng.pm = lift(g.matrix().matrix(), *dom, *cod);
    out.gates.push_back(std::move(ng));
  }
  out.context_space = spec.context_space;
  const PSet* cs = out.find_space(spec.context_space);
  Subdist::Entries lifted;
  const Subdist& dist = spec.context->dist();
  for (const auto& [i, value] : dist.entries()) {
    const std::string& comp = dist.space().label(i);
    Rat share = value / multiplicity;
    for (int j = 0; j < multiplicity; ++j)
      lifted.emplace_back(cs->elements().index_of(microstate_label(comp, j)), share);
  }
  std::sort(lifted.begin(), lifted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.context = PhysContext(*cs, Subdist::unchecked(cs->elements(), std::move(lifted)));
  out.pipeline = spec.pipeline;
  return out;
}

}  // namespace grc
