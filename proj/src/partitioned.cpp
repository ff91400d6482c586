#include "grc/partitioned.hpp"

#include <algorithm>

#include "grc/error.hpp"

namespace grc {

PSet PSet::make(Space elements, const std::vector<std::vector<std::string>>& partition) {
  int n = elements.size();
  std::vector<int> given_block(n, -1);
  for (size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) fail(Errc::NotAPartition, "empty block");
    for (const auto& label : partition[b]) {
      auto i = elements.find(label);
      if (!i) fail(Errc::NotAPartition, "block member '" + label + "' is not an element");
      if (given_block[*i] != -1)
        fail(Errc::NotAPartition, "element '" + label + "' appears in two blocks");
      given_block[*i] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i)
    if (given_block[i] == -1)
      fail(Errc::NotAPartition, "element '" + elements.label(i) + "' is in no block");

  // Canonical block order: first occurrence in element order.
  std::vector<int> block_of(n, -1);
  std::vector<int> renumber(partition.size(), -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    int g = given_block[i];
    if (renumber[g] == -1) {
      renumber[g] = static_cast<int>(members.size());
      members.emplace_back();
    }
    block_of[i] = renumber[g];
    members[block_of[i]].push_back(i);
  }
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (const auto& block : members) {
    const std::string* least = &elements.label(block[0]);
    for (int i : block)
      if (elements.label(i) < *least) least = &elements.label(i);
    labels.push_back(*least);
  }
  Space block_space = Space::of(std::move(labels));
  return PSet(std::move(elements), std::move(block_of), std::move(members),
              std::move(block_space));
}

PSet PSet::discrete(Space elements) {
  int n = elements.size();
  std::vector<int> block_of(n);
  std::vector<std::vector<int>> members(n);
  for (int i = 0; i < n; ++i) {
    block_of[i] = i;
    members[i] = {i};
  }
  Space block_space = Space::of(elements.labels());
  return PSet(std::move(elements), std::move(block_of), std::move(members),
              std::move(block_space));
}

int PSet::block_of_label(const std::string& label) const {
  return block_of_[elements_.index_of(label)];
}

bool PSet::operator==(const PSet& other) const {
  return elements_ == other.elements_ && block_of_ == other.block_of_;
}

PSet product_pset(const PSet& x, const PSet& y) {
  Space elements = product(x.elements(), y.elements());
  int ny = y.elements().size();
  int nby = y.block_count();
  std::vector<std::vector<std::string>> partition(
      static_cast<size_t>(x.block_count()) * nby);
  for (int i = 0; i < x.elements().size(); ++i)
    for (int j = 0; j < ny; ++j)
      partition[x.block_of(i) * nby + y.block_of(j)].push_back(elements.label(i * ny + j));
  return PSet::make(std::move(elements), partition);
}

Space aggregate_set(const PSet& s) { return s.block_space(); }

Subdist aggregate_dist(const Subdist& p, const PSet& s) {
  if (p.space() != s.elements())
    fail(Errc::ShapeMismatch, "subdistribution must live on the partitioned elements");
  std::vector<Rat> acc(s.block_count(), Rat(0));
  for (const auto& [i, value] : p.entries()) acc[s.block_of(i)] += value;
  Subdist::Entries entries;
  for (int b = 0; b < s.block_count(); ++b)
    if (acc[b] != 0) entries.emplace_back(b, acc[b]);
  return Subdist::unchecked(s.block_space(), std::move(entries));
}

bool dist_equiv(const Subdist& p, const Subdist& q, const PSet& s) {
  return aggregate_dist(p, s) == aggregate_dist(q, s);
}

namespace {

// Codomain block sums of one row.
std::vector<Rat> row_block_sums(const Matrix& m, const PSet& cod, int i) {
  std::vector<Rat> acc(cod.block_count(), Rat(0));
  for (const auto& [j, value] : m.row(i)) acc[cod.block_of(j)] += value;
  return acc;
}

}  // namespace

bool is_partitioned(const Matrix& m, const PSet& dom, const PSet& cod) {
  if (m.dom() != dom.elements() || m.cod() != cod.elements())
    fail(Errc::ShapeMismatch, "matrix spaces must match the partitioned sets");
  for (int b = 0; b < dom.block_count(); ++b) {
    const auto& block = dom.block_members(b);
    std::vector<Rat> first = row_block_sums(m, cod, block[0]);
    for (size_t k = 1; k < block.size(); ++k)
      if (row_block_sums(m, cod, block[k]) != first) return false;
  }
  return true;
}

PMatrix PMatrix::make(PSet dom, PSet cod, Matrix m) {
  if (!is_partitioned(m, dom, cod))
    fail(Errc::NotPartitioned, "equivalent domain states have inequivalent rows");
  return PMatrix(std::move(dom), std::move(cod), std::move(m));
}

PMatrix PMatrix::unchecked(PSet dom, PSet cod, Matrix m) {
  return PMatrix(std::move(dom), std::move(cod), std::move(m));
}

bool PMatrix::operator==(const PMatrix& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && matrix_ == other.matrix_;
}

PMatrix pm_identity(const PSet& s) {
  return PMatrix::unchecked(s, s, Matrix::identity(s.elements()));
}

// Closure of the partitioned property under composition and tensor is
// theorem-backed; the law suite re-checks it with is_partitioned.
PMatrix pm_compose(const PMatrix& m, const PMatrix& n) {
  if (m.codp() != n.domp()) fail(Errc::ShapeMismatch, "partitioned shapes do not chain");
  return PMatrix::unchecked(m.domp(), n.codp(), compose(m.matrix(), n.matrix()));
}

PMatrix pm_kron(const PMatrix& m, const PMatrix& n) {
  return PMatrix::unchecked(product_pset(m.domp(), n.domp()),
                            product_pset(m.codp(), n.codp()),
                            kron(m.matrix(), n.matrix()));
}

bool pmatrix_equiv(const PMatrix& a, const PMatrix& b) {
  if (a.domp() != b.domp() || a.codp() != b.codp())
    fail(Errc::ShapeMismatch, "equivalence needs matching partitioned shapes");
  for (int i = 0; i < a.matrix().dom().size(); ++i)
    if (row_block_sums(a.matrix(), a.codp(), i) != row_block_sums(b.matrix(), b.codp(), i))
      return false;
  return true;
}

Matrix aggregate(const PMatrix& m) {
  const PSet& dom = m.domp();
  const PSet& cod = m.codp();
  std::vector<Matrix::Row> rows(dom.block_count());
  for (int b = 0; b < dom.block_count(); ++b) {
    // Canonical representative: the least member, which names the block.
    int rep = dom.elements().index_of(dom.block_label(b));
    std::vector<Rat> acc = row_block_sums(m.matrix(), cod, rep);
    for (int c = 0; c < cod.block_count(); ++c)
      if (acc[c] != 0) rows[b].emplace_back(c, acc[c]);
  }
  return Matrix::unchecked(dom.block_space(), cod.block_space(), std::move(rows));
}

PMatrix lift(const Matrix& mbar, const PSet& dom, const PSet& cod) {
  if (mbar.dom() != dom.block_space() || mbar.cod() != cod.block_space())
    fail(Errc::ShapeMismatch, "matrix must live on the block labels of the partitioned sets");
  std::vector<Matrix::Row> rows(dom.elements().size());
  for (int b = 0; b < dom.block_count(); ++b) {
    Matrix::Row row;
    for (const auto& [c, value] : mbar.row(b)) {
      Rat share = value / cod.block_members(c).size();
      for (int j : cod.block_members(c)) row.emplace_back(j, share);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b2) { return a.first < b2.first; });
    for (int i : dom.block_members(b)) rows[i] = row;
  }
  return PMatrix::unchecked(dom, cod, Matrix::unchecked(dom.elements(), cod.elements(), std::move(rows)));
}

}  // namespace grc
