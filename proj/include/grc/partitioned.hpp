#pragma once

#include <string>
#include <vector>

#include "grc/matrix.hpp"

namespace grc {

// A finite set of microstates partitioned into blocks of computationally
// equivalent states. Blocks are canonicalized on construction: they are
// ordered by first occurrence in element order, members are kept in element
// order, and each block is named by its lexicographically least member.
class PSet {
 public:
  // `partition` must list every element exactly once; otherwise NotAPartition.
  static PSet make(Space elements, const std::vector<std::vector<std::string>>& partition);

  // Every element in its own block.
  static PSet discrete(Space elements);

  const Space& elements() const { return elements_; }
  int block_count() const { return static_cast<int>(members_.size()); }
  int block_of(int element_index) const { return block_of_[element_index]; }
  int block_of_label(const std::string& label) const;
  const std::vector<int>& block_members(int b) const { return members_[b]; }
  const std::string& block_label(int b) const { return block_space_.label(b); }

  // The aggregated set: block labels as an ordered space.
  const Space& block_space() const { return block_space_; }

  bool operator==(const PSet& other) const;
  bool operator!=(const PSet& other) const { return !(*this == other); }

 private:
  PSet(Space elements, std::vector<int> block_of, std::vector<std::vector<int>> members,
       Space block_space)
      : elements_(std::move(elements)),
        block_of_(std::move(block_of)),
        members_(std::move(members)),
        block_space_(std::move(block_space)) {}
  Space elements_;
  std::vector<int> block_of_;
  std::vector<std::vector<int>> members_;
  Space block_space_;
};

// Product of partitioned sets: (x,y) ~ (x',y') iff x ~ x' and y ~ y'.
// Product block labels come out as pairs of block labels.
PSet product_pset(const PSet& x, const PSet& y);

Space aggregate_set(const PSet& s);

// Blockwise sums agree. Both subdistributions must live on s.elements().
bool dist_equiv(const Subdist& p, const Subdist& q, const PSet& s);

Subdist aggregate_dist(const Subdist& p, const PSet& s);

// Rows of equivalent domain states are equivalent on the codomain
// partition; decided by comparing codomain block sums within each domain
// block.
bool is_partitioned(const Matrix& m, const PSet& dom, const PSet& cod);

// A subdistribution matrix between partitioned sets that respects both
// partitions (see is_partitioned).
class PMatrix {
 public:
  // Throws ShapeMismatch if the spaces disagree, NotPartitioned otherwise.
  static PMatrix make(PSet dom, PSet cod, Matrix m);

  // For outputs of operations that preserve the invariant by construction.
  static PMatrix unchecked(PSet dom, PSet cod, Matrix m);

  const PSet& domp() const { return dom_; }
  const PSet& codp() const { return cod_; }
  const Matrix& matrix() const { return matrix_; }

  bool operator==(const PMatrix& other) const;
  bool operator!=(const PMatrix& other) const { return !(*this == other); }

 private:
  PMatrix(PSet dom, PSet cod, Matrix m)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(m)) {}
  PSet dom_;
  PSet cod_;
  Matrix matrix_;
};

PMatrix pm_identity(const PSet& s);
PMatrix pm_compose(const PMatrix& m, const PMatrix& n);
PMatrix pm_kron(const PMatrix& m, const PMatrix& n);

// Rowwise equivalence: same shape and every pair of corresponding rows has
// equal codomain block sums.
bool pmatrix_equiv(const PMatrix& a, const PMatrix& b);

// The aggregated matrix on block labels. Any block representative gives the
// same row; the canonical representative (least member) is used.
Matrix aggregate(const PMatrix& m);

// The uniform-spread lift: entry at (x, y) is mbar at ([x], [y]) divided by
// the size of [y]. Satisfies aggregate(lift(mbar)) == mbar.
PMatrix lift(const Matrix& mbar, const PSet& dom, const PSet& cod);

}  // namespace grc
