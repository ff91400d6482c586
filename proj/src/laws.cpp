#include "grc/laws.hpp"

#include <algorithm>
#include <cmath>

#include "grc/cdu.hpp"
#include "grc/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grc {

LawOps::LawOps() : transpose([](const Matrix& m) { return grc::transpose(m); }) {}

void run_cases(int n, int threads, const std::function<void(int)>& fn) {
  if (threads == 1) {
    // Serial reference path; the parallel kernel must match it byte for byte.
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) fn(i);
#else
  for (int i = 0; i < n; ++i) fn(i);
#endif
}

namespace {

using Sig = std::vector<std::string>;

bool sig_matches(const Space& s, const Sig& sig) { return s.labels() == sig; }

std::optional<Space> space_without(const Space& s, const std::string& label) {
  if (s.size() <= 1) return std::nullopt;
  std::vector<std::string> labels;
  labels.reserve(s.size() - 1);
  for (const auto& l : s.labels())
    if (l != label) labels.push_back(l);
  return Space::of(std::move(labels));
}

Matrix::Row row_without_col(const Matrix::Row& row, int k) {
  Matrix::Row out;
  out.reserve(row.size());
  for (const auto& [j, v] : row) {
    if (j == k) continue;
    out.emplace_back(j > k ? j - 1 : j, v);
  }
  return out;
}

std::optional<Matrix> matrix_without(const Matrix& m, const Sig& sig, const std::string& label) {
  bool in_dom = sig_matches(m.dom(), sig) && m.dom().contains(label);
  bool in_cod = sig_matches(m.cod(), sig) && m.cod().contains(label);
  if (!in_dom && !in_cod) return m;
  Space dom = m.dom();
  Space cod = m.cod();
  std::vector<Matrix::Row> rows;
  for (int i = 0; i < m.dom().size(); ++i) rows.push_back(m.row(i));
  if (in_dom) {
    auto smaller = space_without(dom, label);
    if (!smaller) return std::nullopt;
    rows.erase(rows.begin() + dom.index_of(label));
    dom = *smaller;
  }
  if (in_cod) {
    auto smaller = space_without(cod, label);
    if (!smaller) return std::nullopt;
    int k = cod.index_of(label);
    for (auto& row : rows) row = row_without_col(row, k);
    cod = *smaller;
  }
  return Matrix::unchecked(std::move(dom), std::move(cod), std::move(rows));
}

std::optional<PSet> pset_without(const PSet& ps, const std::string& label) {
  auto smaller = space_without(ps.elements(), label);
  if (!smaller) return std::nullopt;
  std::vector<std::vector<std::string>> partition;
  for (int b = 0; b < ps.block_count(); ++b) {
    std::vector<std::string> block;
    for (int i : ps.block_members(b)) {
      const std::string& l = ps.elements().label(i);
      if (l != label) block.push_back(l);
    }
    if (!block.empty()) partition.push_back(std::move(block));
  }
  return PSet::make(*smaller, partition);
}

std::optional<PMatrix> pmatrix_without(const PMatrix& pm, const Sig& sig,
                                       const std::string& label) {
  bool in_dom = sig_matches(pm.domp().elements(), sig) && pm.domp().elements().contains(label);
  bool in_cod = sig_matches(pm.codp().elements(), sig) && pm.codp().elements().contains(label);
  if (!in_dom && !in_cod) return pm;
  auto m = matrix_without(pm.matrix(), sig, label);
  if (!m) return std::nullopt;
  PSet dom = pm.domp();
  PSet cod = pm.codp();
  if (in_dom) {
    auto smaller = pset_without(dom, label);
    if (!smaller) return std::nullopt;
    dom = *smaller;
  }
  if (in_cod) {
    auto smaller = pset_without(cod, label);
    if (!smaller) return std::nullopt;
    cod = *smaller;
  }
  try {
    return PMatrix::make(std::move(dom), std::move(cod), std::move(*m));
  } catch (const Error&) {
    return std::nullopt;  // deletion broke the partitioned property
  }
}

std::optional<Subdist> subdist_without(const Subdist& p, const Sig& sig,
                                       const std::string& label) {
  if (!sig_matches(p.space(), sig) || !p.space().contains(label)) return p;
  auto smaller = space_without(p.space(), label);
  if (!smaller) return std::nullopt;
  int k = p.space().index_of(label);
  Subdist::Entries entries;
  for (const auto& [i, v] : p.entries()) {
    if (i == k) continue;
    entries.emplace_back(i > k ? i - 1 : i, v);
  }
  return Subdist::unchecked(*smaller, std::move(entries));
}

std::vector<std::pair<Sig, std::string>> delete_candidates(const LawCase& c) {
  std::vector<Sig> sigs;
  auto add_space = [&](const Space& s) {
    for (const auto& sig : sigs)
      if (sig == s.labels()) return;
    sigs.push_back(s.labels());
  };
  for (const auto& item : c) {
    if (const auto* m = std::get_if<Matrix>(&item.value)) {
      add_space(m->dom());
      add_space(m->cod());
    } else if (const auto* pm = std::get_if<PMatrix>(&item.value)) {
      add_space(pm->domp().elements());
      add_space(pm->codp().elements());
    } else if (const auto* p = std::get_if<Subdist>(&item.value)) {
      add_space(p->space());
    }
  }
  std::vector<std::pair<Sig, std::string>> out;
  for (const auto& sig : sigs)
    for (const auto& label : sig) out.emplace_back(sig, label);
  return out;
}

std::optional<LawCase> delete_element(const LawCase& c, const Sig& sig,
                                      const std::string& label) {
  LawCase out;
  out.reserve(c.size());
  for (const auto& item : c) {
    if (const auto* m = std::get_if<Matrix>(&item.value)) {
      auto r = matrix_without(*m, sig, label);
      if (!r) return std::nullopt;
      out.push_back({item.name, std::move(*r)});
    } else if (const auto* pm = std::get_if<PMatrix>(&item.value)) {
      auto r = pmatrix_without(*pm, sig, label);
      if (!r) return std::nullopt;
      out.push_back({item.name, std::move(*r)});
    } else {
      auto r = subdist_without(std::get<Subdist>(item.value), sig, label);
      if (!r) return std::nullopt;
      out.push_back({item.name, std::move(*r)});
    }
  }
  return out;
}

// One simplification move: zero an entry out or halve its denominator
// (rounding). Returns nullopt when the move does not apply or breaks a
// representation invariant.
std::optional<Rat> simplify_value(const Rat& v, bool zero) {
  if (zero) return Rat(0);
  Int den = denominator(v);
  if (den < 2) return std::nullopt;
  Int d2 = den / 2;
  Int a2 = (2 * numerator(v) * d2 + den) / (2 * den);  // round half up
  if (a2 > d2) a2 = d2;
  Rat r(a2, d2);
  if (r == v) return std::nullopt;
  return r;
}

std::optional<Subdist> simplify_subdist(const Subdist& p, int entry, bool zero) {
  if (entry < 0 || entry >= static_cast<int>(p.entries().size())) return std::nullopt;
  auto nv = simplify_value(p.entries()[entry].second, zero);
  if (!nv) return std::nullopt;
  Subdist::Entries entries = p.entries();
  if (*nv == 0) {
    entries.erase(entries.begin() + entry);
  } else {
    entries[entry].second = *nv;
  }
  try {
    return Subdist::from_sparse(p.space(), std::move(entries));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Matrix> simplify_matrix(const Matrix& m, int entry, bool zero) {
  int seen = 0;
  std::vector<Matrix::Row> rows;
  rows.reserve(m.dom().size());
  bool changed = false;
  for (int i = 0; i < m.dom().size(); ++i) {
    Matrix::Row row = m.row(i);
    if (!changed) {
      int here = static_cast<int>(row.size());
      if (entry < seen + here) {
        int k = entry - seen;
        auto nv = simplify_value(row[k].second, zero);
        if (!nv) return std::nullopt;
        if (*nv == 0) {
          row.erase(row.begin() + k);
        } else {
          row[k].second = *nv;
        }
        changed = true;
      }
      seen += here;
    }
    rows.push_back(std::move(row));
  }
  if (!changed) return std::nullopt;
  try {
    return Matrix::from_rows(m.dom(), m.cod(), std::move(rows));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<LawCase> simplify_case(const LawCase& c, int item, int entry, bool zero) {
  LawCase out = c;
  if (auto* m = std::get_if<Matrix>(&out[item].value)) {
    auto r = simplify_matrix(*m, entry, zero);
    if (!r) return std::nullopt;
    out[item].value = std::move(*r);
  } else if (auto* pm = std::get_if<PMatrix>(&out[item].value)) {
    auto r = simplify_matrix(pm->matrix(), entry, zero);
    if (!r) return std::nullopt;
    try {
      out[item].value = PMatrix::make(pm->domp(), pm->codp(), std::move(*r));
    } catch (const Error&) {
      return std::nullopt;
    }
  } else {
    auto r = simplify_subdist(std::get<Subdist>(out[item].value), entry, zero);
    if (!r) return std::nullopt;
    out[item].value = std::move(*r);
  }
  return out;
}

int entry_count(const CaseItem& item) {
  if (const auto* m = std::get_if<Matrix>(&item.value)) {
    int n = 0;
    for (int i = 0; i < m->dom().size(); ++i) n += static_cast<int>(m->row(i).size());
    return n;
  }
  if (const auto* pm = std::get_if<PMatrix>(&item.value)) {
    int n = 0;
    for (int i = 0; i < pm->matrix().dom().size(); ++i)
      n += static_cast<int>(pm->matrix().row(i).size());
    return n;
  }
  return static_cast<int>(std::get<Subdist>(item.value).entries().size());
}

// During shrinking an exception means the candidate left the law's domain,
// not that it is a smaller counterexample; treat it as Skip. The main run
// maps unexpected exceptions to Fail instead (eval_check below).
Check shrink_check(const Law& law, const LawCase& c, const LawOps& ops, const LawConfig& cfg) {
  try {
    return law.check(c, ops, cfg);
  } catch (const std::exception&) {
    return Check::Skip;
  }
}

Check eval_check(const Law& law, const LawCase& c, const LawOps& ops, const LawConfig& cfg) {
  try {
    return law.check(c, ops, cfg);
  } catch (const std::exception&) {
    return Check::Fail;
  }
}

LawCase shrink(const Law& law, LawCase best, const LawOps& ops, const LawConfig& cfg) {
  int budget = 300;
  bool progress = true;
  while (progress && budget > 0) {
    progress = false;
    for (const auto& [sig, label] : delete_candidates(best)) {
      if (--budget <= 0) break;
      auto cand = delete_element(best, sig, label);
      if (!cand) continue;
      if (shrink_check(law, *cand, ops, cfg) == Check::Fail) {
        best = std::move(*cand);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (int item = 0; item < static_cast<int>(best.size()) && !progress; ++item) {
      int entries = entry_count(best[item]);
      for (int e = 0; e < entries && !progress; ++e) {
        for (bool zero : {true, false}) {
          if (--budget <= 0) break;
          auto cand = simplify_case(best, item, e, zero);
          if (!cand) continue;
          if (shrink_check(law, *cand, ops, cfg) == Check::Fail) {
            best = std::move(*cand);
            progress = true;
            break;
          }
        }
      }
    }
  }
  return best;
}

Json case_to_json(const LawCase& c) {
  Json out = Json::object();
  for (const auto& item : c) {
    if (const auto* m = std::get_if<Matrix>(&item.value)) {
      Json j = matrix_to_json(*m);
      j["kind"] = "matrix";
      out[item.name] = std::move(j);
    } else if (const auto* pm = std::get_if<PMatrix>(&item.value)) {
      Json j;
      j["kind"] = "pmatrix";
      j["dom"] = pset_to_json(pm->domp());
      j["cod"] = pset_to_json(pm->codp());
      j["matrix"] = matrix_to_json(pm->matrix());
      out[item.name] = std::move(j);
    } else {
      const auto& p = std::get<Subdist>(item.value);
      Json j;
      j["kind"] = "dist";
      j["space"] = p.space().labels();
      j["dist"] = dist_to_json(p);
      out[item.name] = std::move(j);
    }
  }
  return out;
}

}  // namespace

Check subperm_three_way_with(const Matrix& m, const std::vector<Subdist>& extra, double tol,
                             const LawOps& ops) {
  std::vector<int> supp;
  for (int i = 0; i < m.dom().size(); ++i)
    if (!m.row(i).empty()) supp.push_back(i);

  bool a = is_subpermutation(m);

  bool b = false;
  try {
    Matrix t = ops.transpose(m);
    // A transpose that hands back a malformed matrix broke its contract;
    // that is a law violation, not a negative answer.
    if (!is_wellformed(t)) return Check::Fail;
    b = verify_partial_iso({m, t});
  } catch (const Error& e) {
    if (e.code() != Errc::NotColumnSubstochastic) return Check::Fail;
    b = false;
  }

  bool c = true;
  auto probe = [&](const Subdist& p) {
    if (std::fabs(entropy(apply(p, m)) - entropy(p)) > tol) c = false;
  };
  // Singletons catch non-unit rows, pairs catch colliding rows, so the
  // sampled side can never falsely report preservation.
  for (int x : supp) probe(Subdist::unchecked(m.dom(), {{x, Rat(1)}}));
  for (size_t i = 0; i < supp.size(); ++i)
    for (size_t j = i + 1; j < supp.size(); ++j)
      probe(Subdist::unchecked(m.dom(), {{supp[i], Rat(1, 2)}, {supp[j], Rat(1, 2)}}));
  for (const Subdist& p : extra) {
    if (p.space() != m.dom()) continue;
    bool supported = true;
    for (const auto& [i, v] : p.entries())
      if (m.row(i).empty()) supported = false;
    if (supported) probe(p);
  }
  return (a == b && a == c) ? Check::Pass : Check::Fail;
}

Check subperm_three_way(const Matrix& m, Rng& rng, int samples, double tol, const LawOps& ops) {
  std::vector<int> supp;
  for (int i = 0; i < m.dom().size(); ++i)
    if (!m.row(i).empty()) supp.push_back(i);
  std::vector<Subdist> extra;
  if (!supp.empty()) {
    for (int s = 0; s < samples; ++s) {
      int den = rng.range(1, 64);
      int k = rng.range(1, static_cast<int>(supp.size()));
      std::vector<int> picks = supp;
      for (int i = static_cast<int>(picks.size()) - 1; i > 0; --i)
        std::swap(picks[i], picks[rng.below(i + 1)]);
      picks.resize(k);
      std::sort(picks.begin(), picks.end());
      std::vector<int> cuts{0, rng.range(0, den)};
      for (int i = 1; i < k; ++i) cuts.push_back(rng.range(0, den));
      std::sort(cuts.begin(), cuts.end());
      Subdist::Entries entries;
      for (int i = 0; i < k; ++i)
        if (cuts[i + 1] - cuts[i] > 0)
          entries.emplace_back(picks[i], Rat(cuts[i + 1] - cuts[i], den));
      extra.push_back(Subdist::unchecked(m.dom(), std::move(entries)));
    }
  }
  return subperm_three_way_with(m, extra, tol, ops);
}

LawReport run_laws(const LawConfig& config) { return run_laws_with(config, LawOps()); }

LawReport run_laws_with(const LawConfig& config, const LawOps& ops) {
  const std::vector<Law>& laws = all_laws();
  std::vector<int> case_counts;
  std::vector<std::pair<int, int>> tasks;  // law index, case index
  for (size_t li = 0; li < laws.size(); ++li) {
    int n = laws[li].fixed_cases > 0 ? laws[li].fixed_cases : config.cases;
    case_counts.push_back(n);
    for (int ci = 0; ci < n; ++ci) tasks.emplace_back(static_cast<int>(li), ci);
  }
  std::vector<std::vector<Check>> results(laws.size());
  for (size_t li = 0; li < laws.size(); ++li) results[li].assign(case_counts[li], Check::Skip);

  run_cases(static_cast<int>(tasks.size()), config.threads, [&](int t) {
    auto [li, ci] = tasks[t];
    const Law& law = laws[li];
    Rng rng(derive_seed(config.seed, law.id, ci));
    Check r;
    try {
      LawCase c = law.gen(rng, config, ci);
      r = eval_check(law, c, ops, config);
    } catch (const std::exception&) {
      r = Check::Fail;
    }
    results[li][ci] = r;
  });

  LawReport report;
  report.config = config;
  report.all_passed = true;
  for (size_t li = 0; li < laws.size(); ++li) {
    const Law& law = laws[li];
    LawResult lr;
    lr.id = law.id;
    lr.summary = law.summary;
    lr.cases = case_counts[li];
    int first_fail = -1;
    for (int ci = 0; ci < case_counts[li]; ++ci) {
      switch (results[li][ci]) {
        case Check::Pass: ++lr.passed; break;
        case Check::Skip: ++lr.skipped; break;
        case Check::Fail:
          ++lr.failed;
          if (first_fail < 0) first_fail = ci;
          break;
      }
    }
    if (first_fail >= 0) {
      report.all_passed = false;
      Counterexample ce;
      ce.case_index = first_fail;
      ce.note = law.summary;
      Rng rng(derive_seed(config.seed, law.id, first_fail));
      try {
        LawCase c = law.gen(rng, config, first_fail);
        ce.items = case_to_json(shrink(law, std::move(c), ops, config));
      } catch (const std::exception&) {
        ce.items = Json::object();
      }
      lr.counterexample = std::move(ce);
    }
    report.laws.push_back(std::move(lr));
  }
  std::sort(report.laws.begin(), report.laws.end(),
            [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
  return report;
}

Json law_report_to_json(const LawReport& report) {
  Json out;
  Json config;
  config["cases"] = report.config.cases;
  config["max_dim"] = report.config.max_dim;
  config["seed"] = report.config.seed;
  config["tol"] = format_bits(report.config.tol);
  out["config"] = std::move(config);
  out["all_passed"] = report.all_passed;
  Json laws = Json::array();
  for (const auto& lr : report.laws) {
    Json j;
    j["id"] = lr.id;
    j["summary"] = lr.summary;
    j["cases"] = lr.cases;
    j["passed"] = lr.passed;
    j["failed"] = lr.failed;
    j["skipped"] = lr.skipped;
    if (lr.counterexample) {
      Json ce;
      ce["case"] = lr.counterexample->case_index;
      ce["note"] = lr.counterexample->note;
      ce["items"] = lr.counterexample->items;
      j["counterexample"] = std::move(ce);
    } else {
      j["counterexample"] = nullptr;
    }
    laws.push_back(std::move(j));
  }
  out["laws"] = std::move(laws);
  return out;
}

std::string law_report_to_text(const LawReport& report) {
  std::string out;
  int total_cases = 0;
  for (const auto& lr : report.laws) {
    total_cases += lr.cases;
    std::string line = lr.failed == 0 ? "PASS " : "FAIL ";
    line += lr.id;
    if (line.size() < 40) line.append(40 - line.size(), ' ');
    line += " cases=" + std::to_string(lr.cases);
    line += " passed=" + std::to_string(lr.passed);
    line += " failed=" + std::to_string(lr.failed);
    line += " skipped=" + std::to_string(lr.skipped);
    out += line + "\n";
    if (lr.counterexample) {
      out += "  minimized counterexample (case " +
             std::to_string(lr.counterexample->case_index) + "):\n";
      Json ce;
      ce["note"] = lr.counterexample->note;
      ce["items"] = lr.counterexample->items;
      out += ce.dump(2) + "\n";
    }
  }
  out += std::to_string(report.laws.size()) + " laws, " + std::to_string(total_cases) +
         " cases, " + (report.all_passed ? "all passed" : "FAILURES") + " (seed " +
         std::to_string(report.config.seed) + ")\n";
  return out;
}

}  // namespace grc
