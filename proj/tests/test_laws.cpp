#include <doctest.h>

#include <atomic>
#include <set>
#include <string>
#include <vector>

#include "grc/laws.hpp"

using namespace grc;

namespace {

LawConfig small() {
  LawConfig cfg;
  cfg.cases = 25;
  cfg.max_dim = 4;
  cfg.seed = 1234;
  return cfg;
}

}  // namespace

TEST_CASE("the full law suite passes on a small randomized run") {
  LawReport rep = run_laws(small());
  CHECK(rep.all_passed);
  CHECK(rep.laws.size() == all_laws().size());
  for (const auto& lr : rep.laws) {
    CAPTURE(lr.id);
    CHECK(lr.failed == 0);
    CHECK(lr.passed + lr.skipped == lr.cases);
    CHECK(lr.passed > 0);  // a law that only ever skips tests nothing
    CHECK_FALSE(lr.counterexample.has_value());
  }
  // Ids are unique and sorted, so reports are stable to reorderings.
  for (size_t i = 1; i < rep.laws.size(); ++i) CHECK(rep.laws[i - 1].id < rep.laws[i].id);
}

TEST_CASE("reports are reproducible and thread-count independent") {
  LawConfig cfg = small();
  cfg.cases = 10;
  std::string first = law_report_to_json(run_laws(cfg)).dump(2);
  std::string second = law_report_to_json(run_laws(cfg)).dump(2);
  CHECK(first == second);

  LawConfig par = cfg;
  par.threads = 0;  // let the parallel runner pick its own thread count
  std::string parallel = law_report_to_json(run_laws(par)).dump(2);
  CHECK(parallel == first);

  LawConfig other = cfg;
  other.seed = cfg.seed + 1;
  CHECK(law_report_to_json(run_laws(other)).dump(2) != first);
}

TEST_CASE("the case runner visits every index exactly once in any mode") {
  for (int threads : {1, 0, 3}) {
    CAPTURE(threads);
    std::vector<std::atomic<int>> hits(97);
    run_cases(97, threads, [&](int i) { hits[i]++; });
    for (int i = 0; i < 97; ++i) CHECK(hits[i].load() == 1);
  }
}

TEST_CASE("a broken transpose is caught and minimized") {
  // The mutant silently drops every entry of the last row: a plausible
  // off-by-one. Laws that consult the transpose witness must fail; laws
  // about composition, aggregation, or entropy accounting must not.
  LawOps mutant;
  mutant.transpose = [](const Matrix& m) {
    Matrix good = transpose(m);
    std::vector<Matrix::Row> rows;
    for (int i = 0; i < good.dom().size(); ++i) rows.push_back(good.row(i));
    if (!rows.empty()) rows.back().clear();
    return Matrix::unchecked(good.dom(), good.cod(), std::move(rows));
  };

  LawConfig cfg = small();
  LawReport rep = run_laws_with(cfg, mutant);
  CHECK_FALSE(rep.all_passed);

  std::set<std::string> failing;
  for (const auto& lr : rep.laws)
    if (lr.failed > 0) failing.insert(lr.id);

  std::set<std::string> transpose_laws = {"sd.transpose.contract", "cdu.subperm.transpose",
                                          "cdu.subperm.iff_partial_iso"};
  CHECK(failing.count("sd.transpose.contract") == 1);
  for (const auto& id : failing) {
    CAPTURE(id);
    CHECK(transpose_laws.count(id) == 1);
  }

  // Failing laws carry a shrunken counterexample small enough to read.
  for (const auto& lr : rep.laws) {
    if (lr.failed == 0) continue;
    REQUIRE(lr.counterexample.has_value());
    CHECK_FALSE(lr.counterexample->items.empty());
    CHECK_FALSE(lr.counterexample->note.empty());
    std::string dump = lr.counterexample->items.dump();
    CHECK(dump.size() < 2000);
  }
}

TEST_CASE("an identity mutant cannot satisfy the transpose contract") {
  LawOps mutant;
  mutant.transpose = [](const Matrix& m) { return m; };
  LawConfig cfg = small();
  cfg.cases = 15;
  LawReport rep = run_laws_with(cfg, mutant);
  CHECK_FALSE(rep.all_passed);
  bool contract_failed = false;
  for (const auto& lr : rep.laws)
    if (lr.id == "sd.transpose.contract" && lr.failed > 0) contract_failed = true;
  CHECK(contract_failed);
}

TEST_CASE("three-way agreement holds on handmade matrices") {
  LawOps ops;
  Space x = Space::of({"a", "b", "c"});
  Space y = Space::of({"u", "v", "w"});
  Rng rng(99);

  Matrix perm = Matrix::make(x, y, {{"a", {{"v", Rat(1)}}}, {"c", {{"u", Rat(1)}}}});
  CHECK(subperm_three_way(perm, rng, 5, 1e-9, ops) == Check::Pass);

  Matrix merge = Matrix::make(x, y, {{"a", {{"v", Rat(1)}}}, {"b", {{"v", Rat(1)}}}});
  CHECK(subperm_three_way(merge, rng, 5, 1e-9, ops) == Check::Pass);

  Matrix coin = Matrix::make(x, y, {{"a", {{"u", Rat(1, 2)}, {"v", Rat(1, 2)}}}});
  CHECK(subperm_three_way(coin, rng, 5, 1e-9, ops) == Check::Pass);
}
