#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grc/rational.hpp"
#include "grc/space.hpp"
#include "grc/subdist.hpp"

namespace grc {

// A subdistribution matrix: one sparse row per domain state, each row a
// subdistribution over the codomain. Zero rows are legal (partial maps).
// Morphism composition is diagrammatic throughout: compose(m, n) runs m
// first, so dom(compose(m, n)) = dom(m) and cod = cod(n).
class Matrix {
 public:
  using Row = Subdist::Entries;  // sorted by column index, values in (0,1]

  // Rows indexed by dom order; each row validated as a subdistribution.
  static Matrix from_rows(Space dom, Space cod, std::vector<Row> rows);

  // Label-keyed builder for tests and deserialization. Missing rows are zero.
  static Matrix make(Space dom, Space cod,
                     const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>>& rows);

  // Caller guarantees the row invariant (compose/kron outputs, etc.).
  static Matrix unchecked(Space dom, Space cod, std::vector<Row> rows);

  static Matrix identity(const Space& x);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  const Row& row(int i) const { return rows_[i]; }
  Subdist row_dist(int i) const { return Subdist::unchecked(cod_, rows_[i]); }
  Rat row_mass(int i) const;

  Rat at(int i, int j) const;
  Rat at(const std::string& x, const std::string& y) const;

  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  Matrix(Space dom, Space cod, std::vector<Row> rows)
      : dom_(std::move(dom)), cod_(std::move(cod)), rows_(std::move(rows)) {}
  Space dom_;
  Space cod_;
  std::vector<Row> rows_;
};

// (m ; n)_{x,z} = sum_y m_{x,y} n_{y,z}. Throws ShapeMismatch unless
// cod(m) == dom(n).
Matrix compose(const Matrix& m, const Matrix& n);

// Tensor on product spaces: (m ⊗ n)_{(x,u),(y,v)} = m_{x,y} n_{u,v}.
Matrix kron(const Matrix& m, const Matrix& n);

// Flip: (⊤m)_{y,x} = m_{x,y}. Rows of the result must be subdistributions,
// so every column of m must sum to <= 1; otherwise NotColumnSubstochastic.
Matrix transpose(const Matrix& m);

// Row vector times matrix: (p m)_y = sum_x p_x m_{x,y}. Mass never grows.
Subdist apply(const Subdist& p, const Matrix& m);

// Domain states with a nonzero row, in dom order.
std::vector<std::string> support_matrix(const Matrix& m);

// Re-checks every representation invariant (spaces, sorted positive rows,
// row masses). The law suite uses this to audit operation outputs.
bool is_wellformed(const Matrix& m);

// Permutation matrix x ↦ δ_{f(x)} for a bijective relabeling f: from → to.
// Structural isomorphisms (unitors, associators, braidings) are built this
// way in tests. Throws ShapeMismatch if f is not a bijection onto `to`.
Matrix relabel_matrix(const Space& from, const Space& to,
                      const std::function<std::string(const std::string&)>& f);

}  // namespace grc
