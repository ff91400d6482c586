#include "grc/cdu.hpp"

#include <unordered_set>

#include "grc/error.hpp"

namespace grc {

Matrix copy_matrix(const Space& x) {
  Space cod = product(x, x);
  int n = x.size();
  std::vector<Matrix::Row> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = {{i * n + i, Rat(1)}};
  return Matrix::unchecked(x, std::move(cod), std::move(rows));
}

Matrix discard_matrix(const Space& x) {
  std::vector<Matrix::Row> rows(x.size());
  for (int i = 0; i < x.size(); ++i) rows[i] = {{0, Rat(1)}};
  return Matrix::unchecked(x, unit_space(), std::move(rows));
}

Matrix dom_matrix(const Matrix& m) {
  std::vector<Matrix::Row> rows(m.dom().size());
  for (int i = 0; i < m.dom().size(); ++i) {
    Rat mass = m.row_mass(i);
    if (mass != 0) rows[i] = {{i, mass}};
  }
  return Matrix::unchecked(m.dom(), m.dom(), std::move(rows));
}

bool is_deterministic(const Matrix& m) {
  for (int i = 0; i < m.dom().size(); ++i) {
    const auto& row = m.row(i);
    if (row.empty()) continue;
    if (row.size() != 1 || row[0].second != 1) return false;
  }
  return true;
}

bool is_total(const Matrix& m) {
  for (int i = 0; i < m.dom().size(); ++i)
    if (m.row_mass(i) != 1) return false;
  return true;
}

bool is_quasi_total(const Matrix& m) {
  for (int i = 0; i < m.dom().size(); ++i) {
    if (m.row(i).empty()) continue;
    if (m.row_mass(i) != 1) return false;
  }
  return true;
}

bool is_subpermutation(const Matrix& m) {
  std::unordered_set<int> targets;
  for (int i = 0; i < m.dom().size(); ++i) {
    const auto& row = m.row(i);
    if (row.empty()) continue;
    if (row.size() != 1 || row[0].second != 1) return false;
    if (!targets.insert(row[0].first).second) return false;
  }
  return true;
}

Matrix partial_inverse(const Matrix& m) {
  if (!is_subpermutation(m))
    fail(Errc::NotSubpermutation, "partial inverse needs a subpermutation");
  return transpose(m);
}

bool verify_partial_iso(const PartialIsoWitness& w) {
  if (w.forward.dom() != w.reverse.cod() || w.forward.cod() != w.reverse.dom())
    fail(Errc::ShapeMismatch, "witness shapes must be mutually transposed");
  return compose(w.forward, w.reverse) == dom_matrix(w.forward) &&
         compose(w.reverse, w.forward) == dom_matrix(w.reverse);
}

}  // namespace grc
