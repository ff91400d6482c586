#include "grc/matrix.hpp"

#include <algorithm>
#include <unordered_set>

#include "grc/error.hpp"

namespace grc {

Matrix Matrix::from_rows(Space dom, Space cod, std::vector<Row> rows) {
  if (static_cast<int>(rows.size()) != dom.size())
    fail(Errc::ShapeMismatch, "expected one row per domain state");
  for (auto& row : rows) {
    // Row validity = subdistribution validity over cod.
    Subdist::from_sparse(cod, row);
  }
  return Matrix(std::move(dom), std::move(cod), std::move(rows));
}

Matrix Matrix::make(Space dom, Space cod,
                    const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>>& rows) {
  std::vector<Row> sparse(dom.size());
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [label, entries] : rows) {
    int i = dom.index_of(label);
    if (seen[i]) fail(Errc::ParseError, "duplicate row '" + label + "'");
    seen[i] = true;
    sparse[i] = Subdist::make(cod, entries).entries();
  }
  return Matrix(std::move(dom), std::move(cod), std::move(sparse));
}

Matrix Matrix::unchecked(Space dom, Space cod, std::vector<Row> rows) {
  return Matrix(std::move(dom), std::move(cod), std::move(rows));
}

Matrix Matrix::identity(const Space& x) {
  std::vector<Row> rows(x.size());
  for (int i = 0; i < x.size(); ++i) rows[i] = {{i, Rat(1)}};
  return Matrix(x, x, std::move(rows));
}

Rat Matrix::row_mass(int i) const {
  Rat total(0);
  for (const auto& [j, value] : rows_[i]) total += value;
  return total;
}

Rat Matrix::at(int i, int j) const {
  const Row& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != row.end() && it->first == j) return it->second;
  return Rat(0);
}

Rat Matrix::at(const std::string& x, const std::string& y) const {
  return at(dom_.index_of(x), cod_.index_of(y));
}

bool Matrix::operator==(const Matrix& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && rows_ == other.rows_;
}

namespace {

Matrix::Row sparsify(const std::vector<Rat>& dense) {
  Matrix::Row row;
  for (size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) row.emplace_back(static_cast<int>(j), dense[j]);
  return row;
}

}  // namespace

Matrix compose(const Matrix& m, const Matrix& n) {
  if (m.cod() != n.dom())
    fail(Errc::ShapeMismatch, "cod of the first factor must equal dom of the second");
  std::vector<Matrix::Row> rows(m.dom().size());
  std::vector<Rat> acc(n.cod().size());
  for (int i = 0; i < m.dom().size(); ++i) {
    std::fill(acc.begin(), acc.end(), Rat(0));
    for (const auto& [y, mv] : m.row(i))
      for (const auto& [z, nv] : n.row(y)) acc[z] += mv * nv;
    rows[i] = sparsify(acc);
  }
  return Matrix::unchecked(m.dom(), n.cod(), std::move(rows));
}

Matrix kron(const Matrix& m, const Matrix& n) {
  Space dom = product(m.dom(), n.dom());
  Space cod = product(m.cod(), n.cod());
  int ncod = n.cod().size();
  std::vector<Matrix::Row> rows;
  rows.reserve(dom.size());
  for (int i = 0; i < m.dom().size(); ++i) {
    for (int k = 0; k < n.dom().size(); ++k) {
      Matrix::Row row;
      row.reserve(m.row(i).size() * n.row(k).size());
      for (const auto& [j, mv] : m.row(i))
        for (const auto& [l, nv] : n.row(k)) row.emplace_back(j * ncod + l, mv * nv);
      rows.push_back(std::move(row));
    }
  }
  return Matrix::unchecked(std::move(dom), std::move(cod), std::move(rows));
}

Matrix transpose(const Matrix& m) {
  std::vector<Rat> column_mass(m.cod().size(), Rat(0));
  std::vector<Matrix::Row> rows(m.cod().size());
  for (int i = 0; i < m.dom().size(); ++i) {
    for (const auto& [j, value] : m.row(i)) {
      column_mass[j] += value;
      if (column_mass[j] > 1)
        fail(Errc::NotColumnSubstochastic,
             "column '" + m.cod().label(j) + "' sums above one");
      rows[j].emplace_back(i, value);
    }
  }
  // Rows collected in increasing i, so they are already sorted.
  return Matrix::unchecked(m.cod(), m.dom(), std::move(rows));
}

Subdist apply(const Subdist& p, const Matrix& m) {
  if (p.space() != m.dom()) fail(Errc::ShapeMismatch, "state space must equal dom of the matrix");
  std::vector<Rat> acc(m.cod().size(), Rat(0));
  for (const auto& [x, pv] : p.entries())
    for (const auto& [y, mv] : m.row(x)) acc[y] += pv * mv;
  return Subdist::unchecked(m.cod(), sparsify(acc));
}

std::vector<std::string> support_matrix(const Matrix& m) {
  std::vector<std::string> out;
  for (int i = 0; i < m.dom().size(); ++i)
    if (!m.row(i).empty()) out.push_back(m.dom().label(i));
  return out;
}

bool is_wellformed(const Matrix& m) {
  if (m.dom().size() < 1 || m.cod().size() < 1) return false;
  for (int i = 0; i < m.dom().size(); ++i) {
    Rat total(0);
    int prev = -1;
    for (const auto& [j, value] : m.row(i)) {
      if (j <= prev || j >= m.cod().size()) return false;
      prev = j;
      if (value <= 0) return false;
      total += value;
    }
    if (total > 1) return false;
  }
  return true;
}

Matrix relabel_matrix(const Space& from, const Space& to,
                      const std::function<std::string(const std::string&)>& f) {
  if (from.size() != to.size()) fail(Errc::ShapeMismatch, "relabeling must be a bijection");
  std::vector<Matrix::Row> rows(from.size());
  std::unordered_set<int> hit;
  for (int i = 0; i < from.size(); ++i) {
    int j = to.index_of(f(from.label(i)));
    if (!hit.insert(j).second) fail(Errc::ShapeMismatch, "relabeling must be a bijection");
    rows[i] = {{j, Rat(1)}};
  }
  return Matrix::unchecked(from, to, std::move(rows));
}

}  // namespace grc
