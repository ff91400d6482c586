#include <algorithm>
#include <cmath>

#include "grc/error.hpp"
#include "grc/laws.hpp"
#include "grc/reversibility.hpp"

namespace grc {
namespace {

Check ok(bool b) { return b ? Check::Pass : Check::Fail; }

const Matrix& gm(const LawCase& c, int i) { return std::get<Matrix>(c[i].value); }
const PMatrix& gpm(const LawCase& c, int i) { return std::get<PMatrix>(c[i].value); }
const Subdist& gd(const LawCase& c, int i) { return std::get<Subdist>(c[i].value); }

Space space_n(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Space::of(std::move(labels));
}

// Structural isomorphism between two spaces of equal size that agree on
// flat indices (unitors and the associator of the row-major product).
Matrix index_iso(const Space& from, const Space& to) {
  std::vector<Matrix::Row> rows;
  for (int i = 0; i < from.size(); ++i) rows.push_back({{i, Rat(1)}});
  return Matrix::unchecked(from, to, std::move(rows));
}

Matrix index_perm(const Space& from, const Space& to, const std::function<int(int)>& fn) {
  std::vector<Matrix::Row> rows;
  for (int i = 0; i < from.size(); ++i) rows.push_back({{fn(i), Rat(1)}});
  return Matrix::unchecked(from, to, std::move(rows));
}

// Mixed-kind matrix for laws that relate a predicate to an equation.
Matrix gen_mixed(Rng& rng, const Space& dom, const Space& cod, int max_den) {
  switch (rng.below(4)) {
    case 0: return gen_deterministic(rng, dom, cod);
    case 1: return gen_total(rng, dom, cod, max_den);
    case 2: return gen_quasi_total(rng, dom, cod, max_den);
    default: return gen_matrix(rng, dom, cod, max_den);
  }
}

// Block-preserving microstate shuffle on a partitioned set: partitioned,
// aggregate identity, entropy preserving under every context.
PMatrix block_shuffle(Rng& rng, const PSet& s) {
  int n = s.elements().size();
  std::vector<Matrix::Row> rows(n);
  for (int b = 0; b < s.block_count(); ++b) {
    std::vector<int> targets = s.block_members(b);
    for (int i = static_cast<int>(targets.size()) - 1; i > 0; --i)
      std::swap(targets[i], targets[rng.below(i + 1)]);
    for (size_t k = 0; k < targets.size(); ++k)
      rows[s.block_members(b)[k]] = {{targets[k], Rat(1)}};
  }
  return PMatrix::unchecked(s, s, Matrix::unchecked(s.elements(), s.elements(), std::move(rows)));
}

// Redistribute p inside each block of s: block sums are untouched, so the
// result is equivalent to p by construction.
Subdist spread_within_blocks(Rng& rng, const Subdist& p, const PSet& s) {
  Subdist::Entries entries;
  for (int b = 0; b < s.block_count(); ++b) {
    Rat total(0);
    for (int i : s.block_members(b)) total += p.at(i);
    if (total == 0) continue;
    const auto& members = s.block_members(b);
    int k = static_cast<int>(members.size());
    std::vector<int> weights(k);
    int sum = 0;
    for (int i = 0; i < k; ++i) sum += weights[i] = rng.range(0, 4);
    if (sum == 0) {
      weights[rng.below(k)] = 1;
      sum = 1;
    }
    for (int i = 0; i < k; ++i)
      if (weights[i] > 0) entries.emplace_back(members[i], total * Rat(weights[i], sum));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return Subdist::unchecked(p.space(), std::move(entries));
}

Subdist gen_multi_entry(Rng& rng, const Space& space, int max_den) {
  for (int tries = 0; tries < 32; ++tries) {
    Subdist p = gen_subdist(rng, space, max_den, rng.chance(1, 2));
    if (p.entries().size() >= 2) return p;
  }
  return Subdist::unchecked(space, {{0, Rat(1, 3)}, {1, Rat(1, 3)}});
}

PSet gen_pset_on(Rng& rng, const LawConfig& cfg, const std::string& prefix) {
  return gen_pset(rng, gen_space(rng, 2, std::max(2, cfg.max_dim + 1), prefix));
}

bool ledger_close(const EntropyLedger& a, const EntropyLedger& b, double tol) {
  return std::fabs(a.h_phy - b.h_phy) <= tol && std::fabs(a.h_comp - b.h_comp) <= tol &&
         std::fabs(a.h_nc - b.h_nc) <= tol;
}

std::vector<Law> build_laws() {
  std::vector<Law> laws;
  auto add = [&](std::string id, std::string summary, int fixed,
                 std::function<LawCase(Rng&, const LawConfig&, int)> gen,
                 std::function<Check(const LawCase&, const LawOps&, const LawConfig&)> check) {
    laws.push_back({std::move(id), std::move(summary), fixed, std::move(gen), std::move(check)});
  };

  // ---- subdistribution matrices -----------------------------------------

  add("sd.apply.compose", "applying a composite equals applying the factors in order", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        return LawCase{{"p", gen_subdist(rng, x, 64, false)},
                       {"m", gen_matrix(rng, x, y, 64)},
                       {"n", gen_matrix(rng, y, z, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Subdist& p = gd(c, 0);
        const Matrix &m = gm(c, 1), &n = gm(c, 2);
        if (p.space() != m.dom() || m.cod() != n.dom()) return Check::Skip;
        return ok(apply(apply(p, m), n) == apply(p, compose(m, n)));
      });

  add("sd.apply.mass", "application never gains mass and total maps preserve it", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Matrix m = rng.chance(1, 2) ? gen_total(rng, x, y, 64) : gen_matrix(rng, x, y, 64);
        return LawCase{{"p", gen_subdist(rng, x, 64, false)}, {"m", std::move(m)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Subdist& p = gd(c, 0);
        const Matrix& m = gm(c, 1);
        if (p.space() != m.dom()) return Check::Skip;
        Subdist q = apply(p, m);
        if (q.mass() > p.mass()) return Check::Fail;
        if (is_total(m) && q.mass() != p.mass()) return Check::Fail;
        return Check::Pass;
      });

  add("sd.compose.assoc", "composition is associative", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        Space w = gen_space(rng, 1, cfg.max_dim, "w");
        return LawCase{{"m", gen_matrix(rng, x, y, 64)},
                       {"n", gen_matrix(rng, y, z, 64)},
                       {"p", gen_matrix(rng, z, w, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1), &p = gm(c, 2);
        if (m.cod() != n.dom() || n.cod() != p.dom()) return Check::Skip;
        return ok(compose(compose(m, n), p) == compose(m, compose(n, p)));
      });

  add("sd.compose.distribution", "stochastic matrices compose to stochastic matrices", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        return LawCase{{"m", gen_total(rng, x, y, 64)}, {"n", gen_total(rng, y, z, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1);
        if (m.cod() != n.dom()) return Check::Skip;
        if (!is_total(m) || !is_total(n)) return Check::Skip;
        Matrix t = compose(m, n);
        return ok(is_wellformed(t) && is_total(t));
      });

  add("sd.compose.unit", "identities are neutral for composition", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        return LawCase{{"m", gen_matrix(rng, x, y, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix& m = gm(c, 0);
        return ok(compose(Matrix::identity(m.dom()), m) == m &&
                  compose(m, Matrix::identity(m.cod())) == m);
      });

  add("sd.kron.bifunctor", "the tensor respects composition and identities", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        Space u = gen_space(rng, 1, cfg.max_dim, "u");
        Space v = gen_space(rng, 1, cfg.max_dim, "v");
        Space w = gen_space(rng, 1, cfg.max_dim, "w");
        return LawCase{{"m", gen_matrix(rng, x, y, 32)},
                       {"n", gen_matrix(rng, y, z, 32)},
                       {"p", gen_matrix(rng, u, v, 32)},
                       {"q", gen_matrix(rng, v, w, 32)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1), &p = gm(c, 2), &q = gm(c, 3);
        if (m.cod() != n.dom() || p.cod() != q.dom()) return Check::Skip;
        if (kron(compose(m, n), compose(p, q)) != compose(kron(m, p), kron(n, q)))
          return Check::Fail;
        return ok(kron(Matrix::identity(m.dom()), Matrix::identity(p.dom())) ==
                  Matrix::identity(product(m.dom(), p.dom())));
      });

  add("sd.transpose.contract",
      "transpose flips entries exactly when no column carries mass above one", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Matrix m = [&] {
          switch (rng.below(3)) {
            case 0: return gen_deterministic(rng, x, y);
            case 1: return gen_subpermutation(rng, x, y);
            default: return gen_matrix(rng, x, y, 64);
          }
        }();
        return LawCase{{"m", std::move(m)}};
      },
      [](const LawCase& c, const LawOps& ops, const LawConfig&) {
        const Matrix& m = gm(c, 0);
        std::vector<Rat> col(m.cod().size(), Rat(0));
        int entries = 0;
        for (int i = 0; i < m.dom().size(); ++i)
          for (const auto& [j, v] : m.row(i)) {
            col[j] += v;
            ++entries;
          }
        bool heavy = false;
        for (const Rat& s : col)
          if (s > 1) heavy = true;
        Matrix t = Matrix::identity(m.dom());
        try {
          t = ops.transpose(m);
        } catch (const Error& e) {
          return ok(e.code() == Errc::NotColumnSubstochastic && heavy);
        }
        if (heavy) return Check::Fail;  // should have refused
        if (!is_wellformed(t)) return Check::Fail;
        if (t.dom() != m.cod() || t.cod() != m.dom()) return Check::Fail;
        int tentries = 0;
        for (int j = 0; j < t.dom().size(); ++j) tentries += static_cast<int>(t.row(j).size());
        if (tentries != entries) return Check::Fail;
        for (int i = 0; i < m.dom().size(); ++i)
          for (const auto& [j, v] : m.row(i))
            if (t.at(j, i) != v) return Check::Fail;
        return Check::Pass;
      });

  // ---- copy, discard, domain ---------------------------------------------

  add("cdu.closure.cancel_total", "post-composing a total map preserves and reflects totality", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        Matrix f = rng.chance(1, 2) ? gen_total(rng, x, y, 64) : gen_matrix(rng, x, y, 64);
        return LawCase{{"f", std::move(f)}, {"g", gen_total(rng, y, z, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &f = gm(c, 0), &g = gm(c, 1);
        if (f.cod() != g.dom()) return Check::Skip;
        if (!is_total(g)) return Check::Skip;
        return ok(is_total(compose(f, g)) == is_total(f));
      });

  // Quasi-totality is not closed under arbitrary composition (a unit-mass
  // row may land partly on a zero row), so its admissible pairs put a total
  // matrix second: totality preserves row masses exactly.
  add("cdu.closure.compose",
      "determinism and totality survive composition; quasi-totality survives a total factor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        int kind = rng.below(3);
        Matrix m = kind == 0   ? gen_deterministic(rng, x, y)
                   : kind == 1 ? gen_total(rng, x, y, 64)
                               : gen_quasi_total(rng, x, y, 64);
        Matrix n = kind == 0 ? gen_deterministic(rng, y, z) : gen_total(rng, y, z, 64);
        return LawCase{{"m", std::move(m)}, {"n", std::move(n)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1);
        if (m.cod() != n.dom()) return Check::Skip;
        Matrix t = compose(m, n);
        if (is_deterministic(m) && is_deterministic(n) && !is_deterministic(t)) return Check::Fail;
        if (is_total(m) && is_total(n) && !is_total(t)) return Check::Fail;
        if (is_quasi_total(m) && is_total(n) && !is_quasi_total(t)) return Check::Fail;
        return Check::Pass;
      });

  add("cdu.closure.kron", "determinism, totality and quasi-totality survive the tensor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space u = gen_space(rng, 1, cfg.max_dim, "u");
        Space v = gen_space(rng, 1, cfg.max_dim, "v");
        int kind = rng.below(3);
        auto pick = [&](const Space& a, const Space& b) {
          if (kind == 0) return gen_deterministic(rng, a, b);
          if (kind == 1) return gen_total(rng, a, b, 64);
          return gen_quasi_total(rng, a, b, 64);
        };
        return LawCase{{"m", pick(x, y)}, {"n", pick(u, v)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1);
        Matrix t = kron(m, n);
        if (is_deterministic(m) && is_deterministic(n) && !is_deterministic(t)) return Check::Fail;
        if (is_total(m) && is_total(n) && !is_total(t)) return Check::Fail;
        if (is_quasi_total(m) && is_quasi_total(n) && !is_quasi_total(t)) return Check::Fail;
        return Check::Pass;
      });

  add("cdu.comonoid.coassoc", "copy is coassociative", 6,
      [](Rng&, const LawConfig&, int index) {
        return LawCase{{"id", Matrix::identity(space_n("x", index + 1))}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        Space x = gm(c, 0).dom();
        Matrix d = copy_matrix(x);
        Matrix lhs = compose(d, kron(d, Matrix::identity(x)));
        Matrix rhs = compose(d, kron(Matrix::identity(x), d));
        return ok(compose(lhs, index_iso(lhs.cod(), rhs.cod())) == rhs);
      });

  add("cdu.comonoid.cocomm", "copy is cocommutative", 6,
      [](Rng&, const LawConfig&, int index) {
        return LawCase{{"id", Matrix::identity(space_n("x", index + 1))}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        Space x = gm(c, 0).dom();
        int n = x.size();
        Space xx = product(x, x);
        Matrix swap_m = index_perm(xx, xx, [n](int k) { return (k % n) * n + k / n; });
        return ok(compose(copy_matrix(x), swap_m) == copy_matrix(x));
      });

  add("cdu.comonoid.counit", "discard is the counit of copy", 6,
      [](Rng&, const LawConfig&, int index) {
        return LawCase{{"id", Matrix::identity(space_n("x", index + 1))}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        Space x = gm(c, 0).dom();
        Matrix d = copy_matrix(x);
        Matrix idm = Matrix::identity(x);
        Matrix right = compose(d, kron(idm, discard_matrix(x)));
        Matrix left = compose(d, kron(discard_matrix(x), idm));
        return ok(compose(right, index_iso(right.cod(), x)) == idm &&
                  compose(left, index_iso(left.cod(), x)) == idm);
      });

  add("cdu.comonoid.uniform", "copy and discard on a product factor through the components", 9,
      [](Rng&, const LawConfig&, int index) {
        return LawCase{{"idx", Matrix::identity(space_n("x", index / 3 + 1))},
                       {"idy", Matrix::identity(space_n("y", index % 3 + 1))}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        Space x = gm(c, 0).dom();
        Space y = gm(c, 1).dom();
        int n = x.size(), m = y.size();
        Space xy = product(x, y);
        Matrix eps = compose(kron(discard_matrix(x), discard_matrix(y)),
                             index_iso(product(unit_space(), unit_space()), unit_space()));
        if (eps != discard_matrix(xy)) return Check::Fail;
        // Middle-four interchange ((i,i'),(j,j')) -> ((i,j),(i',j')).
        Space from = product(product(x, x), product(y, y));
        Space to = product(xy, xy);
        Matrix mid = index_perm(from, to, [n, m](int k) {
          int jj = k % (m * m);
          int ii = k / (m * m);
          int j = jj / m, j2 = jj % m;
          int i = ii / n, i2 = ii % n;
          return (i * m + j) * (n * m) + (i2 * m + j2);
        });
        Matrix rhs = compose(kron(copy_matrix(x), copy_matrix(y)), mid);
        return ok(copy_matrix(xy) == rhs);
      });

  add("cdu.det.copy_natural", "a matrix commutes with copy exactly when it is deterministic", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Matrix m = rng.chance(1, 2) ? gen_deterministic(rng, x, y) : gen_matrix(rng, x, y, 64);
        return LawCase{{"m", std::move(m)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix& m = gm(c, 0);
        bool natural = compose(m, copy_matrix(m.cod())) ==
                       compose(copy_matrix(m.dom()), kron(m, m));
        return ok(is_deterministic(m) == natural);
      });

  add("cdu.dom.kron", "the domain projection is monoidal", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space u = gen_space(rng, 1, cfg.max_dim, "u");
        Space v = gen_space(rng, 1, cfg.max_dim, "v");
        return LawCase{{"m", gen_matrix(rng, x, y, 64)}, {"n", gen_matrix(rng, u, v, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m = gm(c, 0), &n = gm(c, 1);
        return ok(dom_matrix(kron(m, n)) == kron(dom_matrix(m), dom_matrix(n)));
      });

  add("cdu.dom.props", "the domain projection characterizes totality and quasi-totality", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        return LawCase{{"m", gen_mixed(rng, x, y, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix& m = gm(c, 0);
        Matrix d = dom_matrix(m);
        if (is_total(m) != (d == Matrix::identity(m.dom()))) return Check::Fail;
        if (is_quasi_total(m) != (compose(d, m) == m)) return Check::Fail;
        if (is_deterministic(m) && !is_quasi_total(m)) return Check::Fail;
        if (is_total(m) && !is_quasi_total(m)) return Check::Fail;
        return Check::Pass;
      });

  add("cdu.subperm.closure", "subpermutations are closed under composition and tensor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Space z = gen_space(rng, 1, cfg.max_dim, "z");
        Space u = gen_space(rng, 1, cfg.max_dim, "u");
        Space v = gen_space(rng, 1, cfg.max_dim, "v");
        return LawCase{{"s", gen_subpermutation(rng, x, y)},
                       {"t", gen_subpermutation(rng, y, z)},
                       {"s2", gen_subpermutation(rng, u, v)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &s = gm(c, 0), &t = gm(c, 1), &s2 = gm(c, 2);
        if (s.cod() != t.dom()) return Check::Skip;
        if (!is_subpermutation(s) || !is_subpermutation(t) || !is_subpermutation(s2))
          return Check::Skip;
        return ok(is_subpermutation(compose(s, t)) && is_subpermutation(kron(s, s2)));
      });

  add("cdu.subperm.iff_partial_iso",
      "row predicate, transpose witness and entropy preservation agree", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Matrix m = [&] {
          switch (rng.below(3)) {
            case 0: return gen_subpermutation(rng, x, y);
            case 1: return gen_deterministic(rng, x, y);
            default: return gen_matrix(rng, x, y, 64);
          }
        }();
        LawCase c{{"m", m}};
        std::vector<int> supp;
        for (int i = 0; i < m.dom().size(); ++i)
          if (!m.row(i).empty()) supp.push_back(i);
        for (int s = 0; s < 3; ++s) {
          Subdist::Entries entries;
          if (!supp.empty()) {
            int den = rng.range(2, 64);
            int left = den;
            for (int i : supp) {
              if (left <= 0) break;
              int take = rng.range(0, left);
              if (take > 0) entries.emplace_back(i, Rat(take, den));
              left -= take;
            }
          }
          c.push_back({"p" + std::to_string(s), Subdist::unchecked(x, std::move(entries))});
        }
        return c;
      },
      [](const LawCase& c, const LawOps& ops, const LawConfig& cfg) {
        std::vector<Subdist> extra;
        for (size_t i = 1; i < c.size(); ++i) extra.push_back(gd(c, static_cast<int>(i)));
        return subperm_three_way_with(gm(c, 0), extra, cfg.tol, ops);
      });

  add("cdu.subperm.transpose", "the transpose of a subpermutation is its partial inverse", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        return LawCase{{"s", gen_subpermutation(rng, x, y)}};
      },
      [](const LawCase& c, const LawOps& ops, const LawConfig&) {
        const Matrix& s = gm(c, 0);
        if (!is_subpermutation(s)) return Check::Skip;
        Matrix t = partial_inverse(s);
        if (!is_subpermutation(t)) return Check::Fail;
        if (compose(s, t) != dom_matrix(s)) return Check::Fail;
        if (compose(t, s) != dom_matrix(t)) return Check::Fail;
        if (!verify_partial_iso({s, t})) return Check::Fail;
        return ok(ops.transpose(s) == t);
      });

  // ---- partitioned sets and aggregation ----------------------------------

  add("pt.aggregate.compose", "aggregation preserves composition", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        PSet c = gen_pset_on(rng, cfg, "c");
        return LawCase{{"m", gen_pmatrix(rng, a, b, 64)}, {"n", gen_pmatrix(rng, b, c, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix &m = gpm(c, 0), &n = gpm(c, 1);
        if (m.codp() != n.domp()) return Check::Skip;
        return ok(aggregate(pm_compose(m, n)) == compose(aggregate(m), aggregate(n)));
      });

  add("pt.aggregate.identity", "aggregation preserves identities and row masses", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        return LawCase{{"idp", pm_identity(a)}, {"m", gen_pmatrix(rng, a, b, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix &idp = gpm(c, 0), &m = gpm(c, 1);
        if (aggregate(idp) != Matrix::identity(idp.domp().block_space())) return Check::Fail;
        Matrix mbar = aggregate(m);
        for (int x = 0; x < m.domp().elements().size(); ++x)
          if (m.matrix().row_mass(x) != mbar.row_mass(m.domp().block_of(x))) return Check::Fail;
        return Check::Pass;
      });

  add("pt.aggregate.kron", "aggregation preserves the tensor on the nose", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        PSet u = gen_pset_on(rng, cfg, "u");
        PSet v = gen_pset_on(rng, cfg, "v");
        return LawCase{{"m", gen_pmatrix(rng, a, b, 32)}, {"n", gen_pmatrix(rng, u, v, 32)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix &m = gpm(c, 0), &n = gpm(c, 1);
        return ok(aggregate(pm_kron(m, n)) == kron(aggregate(m), aggregate(n)));
      });

  add("pt.closure", "the partitioned property survives identity, composition and tensor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        PSet c = gen_pset_on(rng, cfg, "c");
        return LawCase{{"m", gen_pmatrix(rng, a, b, 64)}, {"n", gen_pmatrix(rng, b, c, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix &m = gpm(c, 0), &n = gpm(c, 1);
        if (m.codp() != n.domp()) return Check::Skip;
        if (!is_partitioned(pm_identity(m.domp()).matrix(), m.domp(), m.domp()))
          return Check::Fail;
        if (!is_partitioned(compose(m.matrix(), n.matrix()), m.domp(), n.codp()))
          return Check::Fail;
        return ok(is_partitioned(kron(m.matrix(), n.matrix()),
                                 product_pset(m.domp(), n.domp()),
                                 product_pset(m.codp(), n.codp())));
      });

  add("pt.dist.equiv", "partitioned maps respect distribution equivalence", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        PMatrix m = gen_pmatrix(rng, a, b, 64);
        Subdist p = gen_subdist(rng, a.elements(), 64, rng.chance(1, 2));
        Subdist q = gen_subdist(rng, a.elements(), 64, rng.chance(1, 2));
        Subdist q2 = spread_within_blocks(rng, p, a);
        return LawCase{{"m", std::move(m)}, {"p", std::move(p)}, {"q", std::move(q)},
                       {"q2", std::move(q2)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix& m = gpm(c, 0);
        const Subdist &p = gd(c, 1), &q = gd(c, 2), &q2 = gd(c, 3);
        const PSet& a = m.domp();
        const PSet& b = m.codp();
        if (p.space() != a.elements() || q.space() != a.elements() ||
            q2.space() != a.elements())
          return Check::Skip;
        if (!dist_equiv(p, p, a)) return Check::Fail;
        if (dist_equiv(p, q, a) != (aggregate_dist(p, a) == aggregate_dist(q, a)))
          return Check::Fail;
        if (aggregate_dist(apply(p, m.matrix()), b) !=
            apply(aggregate_dist(p, a), aggregate(m)))
          return Check::Fail;
        if (!dist_equiv(p, q2, a)) return Check::Fail;
        return ok(dist_equiv(apply(p, m.matrix()), apply(q2, m.matrix()), b));
      });

  add("pt.lift.roundtrip", "lift splits aggregation: aggregate(lift(m)) == m", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        Matrix mbar = gen_matrix(rng, a.block_space(), b.block_space(), 64);
        return LawCase{{"m", gen_pmatrix(rng, a, b, 64)}, {"mbar", std::move(mbar)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const PMatrix& m = gpm(c, 0);
        const Matrix& mbar = gm(c, 1);
        const PSet& a = m.domp();
        const PSet& b = m.codp();
        if (mbar.dom() != a.block_space() || mbar.cod() != b.block_space()) return Check::Skip;
        PMatrix lifted = lift(mbar, a, b);
        if (!is_wellformed(lifted.matrix())) return Check::Fail;
        if (!is_partitioned(lifted.matrix(), a, b)) return Check::Fail;
        if (aggregate(lifted) != mbar) return Check::Fail;
        // Lifting the aggregate recovers the original up to equivalence.
        return ok(pmatrix_equiv(lift(aggregate(m), a, b), m));
      });

  // ---- entropy and reversibility -----------------------------------------

  add("en.condrev.closure",
      "conditional reversibility is closed under identity, composition and tensor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 2, std::max(2, cfg.max_dim), "x");
        Space u = gen_space(rng, 2, std::max(2, cfg.max_dim), "u");
        CondrevInstance first = gen_condrev_instance(rng, x, rng.range(0, 2), 64);
        CompContext mid(apply(first.p.dist(), first.m));
        Matrix second = gen_condrev_given(rng, mid, rng.range(0, 2));
        CondrevInstance other = gen_condrev_instance(rng, u, rng.range(0, 2), 64);
        return LawCase{{"m1", first.m},
                       {"p1", first.p.dist()},
                       {"m2", std::move(second)},
                       {"ma", other.m},
                       {"pa", other.p.dist()}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig&) {
        const Matrix &m1 = gm(c, 0), &m2 = gm(c, 2), &ma = gm(c, 3);
        try {
          CompContext p1(gd(c, 1));
          CompContext pa(gd(c, 4));
          if (m1.dom() != p1.space() || m1.cod() != m2.dom() || ma.dom() != pa.space())
            return Check::Skip;
          if (!is_conditionally_reversible(m1, p1)) return Check::Skip;
          CompContext q(apply(p1.dist(), m1));
          if (!is_conditionally_reversible(m2, q)) return Check::Skip;
          if (!is_conditionally_reversible(ma, pa)) return Check::Skip;
          if (!is_conditionally_reversible(Matrix::identity(m1.dom()), p1)) return Check::Fail;
          if (!is_conditionally_reversible(compose(m1, m2), p1)) return Check::Fail;
          return ok(is_conditionally_reversible(kron(m1, ma),
                                                CompContext(kron(p1.dist(), pa.dist()))));
        } catch (const Error&) {
          return Check::Skip;
        }
      });

  add("en.condrev.entropy",
      "a deterministic step preserves context entropy exactly when conditionally reversible", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 2, std::max(2, cfg.max_dim), "x");
        int extra = rng.range(0, 2);
        Space y = space_n("y", x.size() + extra);
        Subdist p = gen_subdist(rng, x, 64, true);
        // Unit rows everywhere; collisions on the support are the point.
        std::vector<Matrix::Row> rows;
        for (int i = 0; i < x.size(); ++i) rows.push_back({{rng.below(y.size()), Rat(1)}});
        return LawCase{{"m", Matrix::unchecked(x, y, std::move(rows))}, {"p", std::move(p)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const Matrix& m = gm(c, 0);
        try {
          CompContext p(gd(c, 1));
          if (p.space() != m.dom()) return Check::Skip;
          if (!is_deterministic(m)) return Check::Skip;
          Subdist q = apply(p.dist(), m);
          if (q.mass() != 1) return Check::Skip;
          bool preserved = std::fabs(entropy(q) - entropy(p.dist())) <= cfg.tol;
          return ok(is_conditionally_reversible(m, p) == preserved);
        } catch (const Error&) {
          return Check::Skip;
        }
      });

  add("en.entropy.additive", "entropy is additive exactly on product distributions", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        return LawCase{{"p", gen_subdist(rng, x, 64, rng.chance(1, 2))},
                       {"q", gen_subdist(rng, y, 64, rng.chance(1, 2))}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const Subdist &p = gd(c, 0), &q = gd(c, 1);
        double hp = entropy(p), hq = entropy(q), hpq = entropy(kron(p, q));
        if (hpq > hp + hq + cfg.tol) return Check::Fail;  // sub-additivity
        bool equal = std::fabs(hpq - (hp + hq)) <= cfg.tol;
        if (p.is_distribution() && q.is_distribution() && !equal) return Check::Fail;
        // The converse degenerates when a factor has zero entropy: restrict
        // it to instances whose entropies clear the smallest positive value
        // representable at this denominator bound.
        if (equal && hp > 0.01 && hq > 0.01 &&
            !(p.is_distribution() && q.is_distribution()))
          return Check::Fail;
        return Check::Pass;
      });

  add("en.entropy.det", "entropy never increases exactly under deterministic maps", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Space y = gen_space(rng, 1, cfg.max_dim, "y");
        Matrix m = rng.chance(1, 2) ? gen_deterministic(rng, x, y) : gen_matrix(rng, x, y, 64);
        return LawCase{{"m", std::move(m)},
                       {"p1", gen_subdist(rng, x, 64, false)},
                       {"p2", gen_subdist(rng, x, 64, true)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const Matrix& m = gm(c, 0);
        bool never_increases = true;
        auto probe = [&](const Subdist& p) {
          if (p.space() != m.dom()) return;
          if (entropy(apply(p, m)) > entropy(p) + cfg.tol) never_increases = false;
        };
        for (int x = 0; x < m.dom().size(); ++x)
          probe(Subdist::unchecked(m.dom(), {{x, Rat(1)}}));
        probe(gd(c, 1));
        probe(gd(c, 2));
        return ok(is_deterministic(m) == never_increases);
      });

  add("en.entropy.kernel", "zero entropy characterizes point masses and the zero vector", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 1, cfg.max_dim, "x");
        Subdist p = [&] {
          switch (rng.below(4)) {
            case 0: return Subdist::zero(x);
            case 1: return Subdist::unit(x, x.label(rng.below(x.size())));
            case 2: return gen_subdist(rng, x, 64, true);
            default: return gen_subdist(rng, x, 64, false);
          }
        }();
        return LawCase{{"p", std::move(p)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const Subdist& p = gd(c, 0);
        return ok((entropy(p) <= cfg.tol) == (p.is_zero() || p.is_unit()));
      });

  add("en.entropy.superadditive", "merging distinct outcomes strictly lowers entropy", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        Space x = gen_space(rng, 2, std::max(2, cfg.max_dim), "x");
        return LawCase{{"p", gen_multi_entry(rng, x, 64)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const Subdist& p = gd(c, 0);
        if (p.entries().size() < 2) return Check::Skip;
        auto merged = [](const Rat& s) {
          return entropy(Subdist::unchecked(unit_space(), {{0, s}}));
        };
        if (entropy(p) <= merged(p.mass()) + cfg.tol) return Check::Fail;
        const Rat& s = p.entries()[0].second;
        const Rat& t = p.entries()[1].second;
        Space two = space_n("b", 2);
        double pair_h = entropy(Subdist::unchecked(two, {{0, s}, {1, t}}));
        return ok(pair_h > merged(s + t) + cfg.tol);
      });

  add("en.fundamental",
      "closed deterministic-aggregate steps: non-ejecting iff conditionally reversible", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        ClosedInstance inst = gen_closed_instance(rng, std::max(2, cfg.max_dim - 1), 3, 10);
        return LawCase{{"m", std::move(inst.m)}, {"p", inst.p.dist()}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        const PMatrix& m = gpm(c, 0);
        try {
          PhysContext p(m.domp(), gd(c, 1));
          FundamentalReport r = check_fundamental(m, p, cfg.tol);
          if (!r.agree) return Check::Fail;
          if (r.nee != is_non_entropy_ejecting(m, p, cfg.tol)) return Check::Fail;
          return ok(r.condrev == is_free_comp(aggregate(m), aggregate_context(p)));
        } catch (const Error&) {
          return Check::Skip;
        }
      });

  add("en.ledger.monoidal", "entropy ledgers add across independent contexts", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        PSet a = gen_pset_on(rng, cfg, "a");
        PSet b = gen_pset_on(rng, cfg, "b");
        Subdist pa = gen_subdist(rng, a.elements(), 64, true);
        Subdist pb = gen_subdist(rng, b.elements(), 64, true);
        return LawCase{{"a", pm_identity(a)}, {"pa", std::move(pa)},
                       {"b", pm_identity(b)}, {"pb", std::move(pb)}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        try {
          PhysContext a(gpm(c, 0).domp(), gd(c, 1));
          PhysContext b(gpm(c, 2).domp(), gd(c, 3));
          EntropyLedger la = ledger(a), lb = ledger(b), lab = ledger(kron(a, b));
          EntropyLedger sum{la.h_phy + lb.h_phy, la.h_comp + lb.h_comp, la.h_nc + lb.h_nc};
          return ok(ledger_close(lab, sum, cfg.tol));
        } catch (const Error&) {
          return Check::Skip;
        }
      });

  add("en.nee.closure",
      "non-entropy-ejection is closed under composition and tensor", 0,
      [](Rng& rng, const LawConfig& cfg, int) {
        int blocks = std::max(2, cfg.max_dim - 1);
        if (rng.chance(1, 2)) {
          ClosedInstance first = gen_nee_instance(rng, blocks, 3, 10);
          PMatrix second = block_shuffle(rng, first.m.codp());
          return LawCase{{"m1", std::move(first.m)}, {"p1", first.p.dist()},
                         {"m2", std::move(second)}};
        }
        ClosedInstance a = gen_nee_instance(rng, blocks, 3, 10);
        ClosedInstance b = gen_nee_instance(rng, blocks, 3, 10);
        return LawCase{{"ma", std::move(a.m)}, {"pa", a.p.dist()},
                       {"mb", std::move(b.m)}, {"pb", b.p.dist()}};
      },
      [](const LawCase& c, const LawOps&, const LawConfig& cfg) {
        try {
          if (c.size() == 3) {
            const PMatrix &m1 = gpm(c, 0), &m2 = gpm(c, 2);
            PhysContext p1(m1.domp(), gd(c, 1));
            if (!is_non_entropy_ejecting(m1, p1, cfg.tol)) return Check::Skip;
            PhysContext q(m1.codp(), apply(p1.dist(), m1.matrix()));
            if (!is_non_entropy_ejecting(m2, q, cfg.tol)) return Check::Skip;
            return ok(is_non_entropy_ejecting(pm_compose(m1, m2), p1, cfg.tol));
          }
          const PMatrix &ma = gpm(c, 0), &mb = gpm(c, 2);
          PhysContext pa(ma.domp(), gd(c, 1));
          PhysContext pb(mb.domp(), gd(c, 3));
          if (!is_non_entropy_ejecting(ma, pa, cfg.tol)) return Check::Skip;
          if (!is_non_entropy_ejecting(mb, pb, cfg.tol)) return Check::Skip;
          return ok(is_non_entropy_ejecting(pm_kron(ma, mb), kron(pa, pb), cfg.tol));
        } catch (const Error&) {
          return Check::Skip;
        }
      });

  std::sort(laws.begin(), laws.end(), [](const Law& a, const Law& b) { return a.id < b.id; });
  return laws;
}

}  // namespace

const std::vector<Law>& all_laws() {
  static const std::vector<Law> laws = build_laws();
  return laws;
}

}  // namespace grc
