#include "grc/gen.hpp"

#include <algorithm>
#include <numeric>

namespace grc {

uint64_t derive_seed(uint64_t root, const std::string& tag, int index) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  Rng mix(root ^ h ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(index + 1)));
  return mix.next();
}

namespace {

std::vector<std::string> numbered_labels(const std::string& prefix, int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

std::vector<int> shuffled(Rng& rng, int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[rng.below(i + 1)]);
  return v;
}

// Split `total` numerators of denominator `den` into `parts` nonnegative
// summands via sorted cut points.
std::vector<int> split_numerator(Rng& rng, int total, int parts) {
  std::vector<int> cuts{0, total};
  for (int i = 1; i < parts; ++i) cuts.push_back(rng.range(0, total));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out(parts);
  for (int i = 0; i < parts; ++i) out[i] = cuts[i + 1] - cuts[i];
  return out;
}

}  // namespace

Space gen_space(Rng& rng, int min_size, int max_size, const std::string& prefix) {
  return Space::of(numbered_labels(prefix, rng.range(min_size, max_size)));
}

Subdist gen_subdist(Rng& rng, const Space& space, int max_den, bool full_mass) {
  int den = rng.range(1, max_den);
  int k = rng.range(1, space.size());
  std::vector<int> order = shuffled(rng, space.size());
  std::vector<int> picks(order.begin(), order.begin() + k);
  std::sort(picks.begin(), picks.end());
  int total = full_mass ? den : rng.range(0, den);
  std::vector<int> parts = split_numerator(rng, total, k);
  Subdist::Entries entries;
  for (int i = 0; i < k; ++i)
    if (parts[i] > 0) entries.emplace_back(picks[i], Rat(parts[i], den));
  return Subdist::unchecked(space, std::move(entries));
}

Matrix gen_matrix(Rng& rng, const Space& dom, const Space& cod, int max_den) {
  std::vector<Matrix::Row> rows(dom.size());
  for (int i = 0; i < dom.size(); ++i) {
    if (rng.chance(1, 6)) continue;  // zero row
    rows[i] = gen_subdist(rng, cod, max_den, rng.chance(1, 3)).entries();
  }
  return Matrix::unchecked(dom, cod, std::move(rows));
}

Matrix gen_deterministic(Rng& rng, const Space& dom, const Space& cod) {
  std::vector<Matrix::Row> rows(dom.size());
  for (int i = 0; i < dom.size(); ++i) {
    if (rng.chance(1, 5)) continue;
    rows[i] = {{rng.below(cod.size()), Rat(1)}};
  }
  return Matrix::unchecked(dom, cod, std::move(rows));
}

Matrix gen_total(Rng& rng, const Space& dom, const Space& cod, int max_den) {
  std::vector<Matrix::Row> rows(dom.size());
  for (int i = 0; i < dom.size(); ++i) rows[i] = gen_subdist(rng, cod, max_den, true).entries();
  return Matrix::unchecked(dom, cod, std::move(rows));
}

Matrix gen_quasi_total(Rng& rng, const Space& dom, const Space& cod, int max_den) {
  std::vector<Matrix::Row> rows(dom.size());
  for (int i = 0; i < dom.size(); ++i) {
    if (rng.chance(1, 3)) continue;
    rows[i] = gen_subdist(rng, cod, max_den, true).entries();
  }
  return Matrix::unchecked(dom, cod, std::move(rows));
}

Matrix gen_subpermutation(Rng& rng, const Space& dom, const Space& cod) {
  std::vector<int> targets = shuffled(rng, cod.size());
  std::vector<Matrix::Row> rows(dom.size());
  size_t used = 0;
  for (int i = 0; i < dom.size(); ++i) {
    if (used >= targets.size() || rng.chance(1, 4)) continue;
    rows[i] = {{targets[used++], Rat(1)}};
  }
  return Matrix::unchecked(dom, cod, std::move(rows));
}

PSet gen_pset(Rng& rng, const Space& elements) {
  int nblocks = rng.range(1, elements.size());
  std::vector<std::vector<std::string>> lists(nblocks);
  for (int i = 0; i < elements.size(); ++i) lists[rng.below(nblocks)].push_back(elements.label(i));
  std::vector<std::vector<std::string>> nonempty;
  for (auto& block : lists)
    if (!block.empty()) nonempty.push_back(std::move(block));
  return PSet::make(elements, nonempty);
}

PMatrix gen_pmatrix(Rng& rng, const PSet& dom, const PSet& cod, int max_den) {
  // Two-stage denominators keep entries within max_den.
  int outer = std::max(1, max_den / 8);
  std::vector<Matrix::Row> rows(dom.elements().size());
  for (int b = 0; b < dom.block_count(); ++b) {
    Subdist block_sums = gen_subdist(rng, cod.block_space(), outer, rng.chance(1, 3));
    for (int x : dom.block_members(b)) {
      std::vector<Rat> dense(cod.elements().size(), Rat(0));
      for (const auto& [c, t] : block_sums.entries()) {
        const auto& members = cod.block_members(c);
        std::vector<int> parts = split_numerator(rng, 8, static_cast<int>(members.size()));
        for (size_t k = 0; k < members.size(); ++k)
          if (parts[k] > 0) dense[members[k]] += t * Rat(parts[k], 8);
      }
      Matrix::Row row;
      for (size_t j = 0; j < dense.size(); ++j)
        if (dense[j] != 0) row.emplace_back(static_cast<int>(j), dense[j]);
      rows[x] = std::move(row);
    }
  }
  return PMatrix::unchecked(
      dom, cod, Matrix::unchecked(dom.elements(), cod.elements(), std::move(rows)));
}

namespace {

PSet contiguous_pset(const std::string& prefix, const std::vector<int>& sizes) {
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Space elements = Space::of(numbered_labels(prefix, n));
  std::vector<std::vector<std::string>> partition;
  int at = 0;
  for (int s : sizes) {
    std::vector<std::string> block;
    for (int i = 0; i < s; ++i) block.push_back(elements.label(at++));
    partition.push_back(std::move(block));
  }
  return PSet::make(std::move(elements), partition);
}

std::vector<int> gen_sizes(Rng& rng, int max_blocks, int max_block_size) {
  int nb = rng.range(1, max_blocks);
  std::vector<int> sizes(nb);
  for (int& s : sizes) s = rng.range(1, max_block_size);
  return sizes;
}

// Microstate permutation mapping every domain block into one codomain
// block; `groups[i]` assigns dom block i to its cod block.
PMatrix block_perm(Rng& rng, const PSet& dom, const std::vector<int>& groups, int ngroups) {
  std::vector<std::vector<int>> members(ngroups);  // dom element indices per group
  for (int b = 0; b < dom.block_count(); ++b)
    for (int x : dom.block_members(b)) members[groups[b]].push_back(x);
  std::vector<int> sizes;
  for (int g = 0; g < ngroups; ++g)
    if (!members[g].empty()) sizes.push_back(static_cast<int>(members[g].size()));
  PSet cod = contiguous_pset("w", sizes);
  std::vector<Matrix::Row> rows(dom.elements().size());
  int base = 0, cb = 0;
  for (int g = 0; g < ngroups; ++g) {
    if (members[g].empty()) continue;
    std::vector<int> slots = shuffled(rng, static_cast<int>(members[g].size()));
    for (size_t k = 0; k < members[g].size(); ++k)
      rows[members[g][k]] = {{base + slots[k], Rat(1)}};
    base += static_cast<int>(members[g].size());
    ++cb;
  }
  return PMatrix::unchecked(
      dom, cod, Matrix::unchecked(dom.elements(), cod.elements(), std::move(rows)));
}

ClosedInstance perm_instance(Rng& rng, int max_blocks, int max_block_size, int max_den,
                             bool allow_coarsen) {
  PSet dom = contiguous_pset("m", gen_sizes(rng, max_blocks, max_block_size));
  int nb = dom.block_count();
  int ngroups = allow_coarsen ? rng.range(1, nb) : nb;
  std::vector<int> groups(nb);
  if (allow_coarsen) {
    for (int b = 0; b < nb; ++b) groups[b] = rng.below(ngroups);
  } else {
    std::iota(groups.begin(), groups.end(), 0);
  }
  PMatrix m = block_perm(rng, dom, groups, ngroups);
  // Permutations preserve microstate entropy under any context.
  Subdist p = gen_subdist(rng, dom.elements(), max_den, true);
  return {std::move(m), PhysContext(dom, std::move(p))};
}

ClosedInstance lift_instance(Rng& rng, int max_blocks, int max_block_size, bool injective) {
  PSet dom = contiguous_pset("m", gen_sizes(rng, max_blocks, max_block_size));
  int nb = dom.block_count();
  int ngroups = injective ? nb : rng.range(1, nb);
  std::vector<int> groups(nb);
  if (injective) {
    std::iota(groups.begin(), groups.end(), 0);
  } else {
    for (int b = 0; b < nb; ++b) groups[b] = rng.below(ngroups);
  }
  // Codomain block g absorbs the microstates of the blocks mapped into it,
  // so blockwise-uniform contexts keep microstate entropy exactly.
  std::vector<int> csize(ngroups, 0);
  for (int b = 0; b < nb; ++b) csize[groups[b]] += static_cast<int>(dom.block_members(b).size());
  std::vector<int> csizes_nonzero;
  std::vector<int> cblock_of_group(ngroups, -1);
  for (int g = 0; g < ngroups; ++g)
    if (csize[g] > 0) {
      cblock_of_group[g] = static_cast<int>(csizes_nonzero.size());
      csizes_nonzero.push_back(csize[g]);
    }
  PSet cod = contiguous_pset("w", csizes_nonzero);

  std::vector<Matrix::Row> rows(dom.elements().size());
  for (int b = 0; b < nb; ++b) {
    int c = cblock_of_group[groups[b]];
    Matrix::Row row;
    for (int j : cod.block_members(c))
      row.emplace_back(j, Rat(1, static_cast<int>(cod.block_members(c).size())));
    for (int x : dom.block_members(b)) rows[x] = row;
  }
  PMatrix m = PMatrix::unchecked(
      dom, cod, Matrix::unchecked(dom.elements(), cod.elements(), std::move(rows)));

  // Context: mass v_c on cod block c, spread as v_c / |c| over every
  // microstate that feeds it. Then p and pm have the same value multiset.
  int den = rng.range(1, 10);
  std::vector<int> vnum = split_numerator(rng, den, cod.block_count());
  Subdist::Entries entries;
  for (int b = 0; b < nb; ++b) {
    int c = cblock_of_group[groups[b]];
    if (vnum[c] == 0) continue;
    Rat share = Rat(vnum[c], den) / static_cast<int>(cod.block_members(c).size());
    for (int x : dom.block_members(b)) entries.emplace_back(x, share);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b2) { return a.first < b2.first; });
  Subdist p = Subdist::unchecked(dom.elements(), std::move(entries));
  return {std::move(m), PhysContext(dom, std::move(p))};
}

}  // namespace

ClosedInstance gen_closed_instance(Rng& rng, int max_blocks, int max_block_size, int max_den) {
  if (rng.chance(1, 2)) return perm_instance(rng, max_blocks, max_block_size, max_den, true);
  return lift_instance(rng, max_blocks, max_block_size, false);
}

ClosedInstance gen_nee_instance(Rng& rng, int max_blocks, int max_block_size, int max_den) {
  if (rng.chance(1, 2)) return perm_instance(rng, max_blocks, max_block_size, max_den, false);
  return lift_instance(rng, max_blocks, max_block_size, true);
}

CondrevInstance gen_condrev_instance(Rng& rng, const Space& dom, int cod_extra, int max_den) {
  Subdist p = gen_subdist(rng, dom, max_den, true);
  CompContext ctx(std::move(p));
  Matrix m = gen_condrev_given(rng, ctx, cod_extra);
  return {std::move(m), std::move(ctx)};
}

Matrix gen_condrev_given(Rng& rng, const CompContext& p, int cod_extra) {
  const Space& dom = p.space();
  int support = static_cast<int>(p.dist().entries().size());
  int cod_size = support + rng.range(0, cod_extra);
  Space cod = Space::of(
      [&] {
        std::vector<std::string> labels;
        for (int i = 0; i < cod_size; ++i) labels.push_back("y" + std::to_string(i));
        return labels;
      }());
  std::vector<int> targets = shuffled(rng, cod_size);
  std::vector<Matrix::Row> rows(dom.size());
  size_t next_target = 0;
  std::vector<bool> on_support(dom.size(), false);
  for (const auto& [i, value] : p.dist().entries()) {
    rows[i] = {{targets[next_target++], Rat(1)}};
    on_support[i] = true;
  }
  for (int i = 0; i < dom.size(); ++i) {
    if (on_support[i] || rng.chance(1, 2)) continue;
    rows[i] = {{rng.below(cod_size), Rat(1)}};  // may collide off support
  }
  return Matrix::unchecked(dom, cod, std::move(rows));
}

}  // namespace grc
