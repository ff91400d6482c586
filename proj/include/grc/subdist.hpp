#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grc/rational.hpp"
#include "grc/space.hpp"

namespace grc {

// A subdistribution: sparse map from states to rational probabilities with
// total mass <= 1. Stored entries are strictly positive and sorted by state
// index, so equality is structural.
class Subdist {
 public:
  using Entries = std::vector<std::pair<int, Rat>>;

  static Subdist zero(Space space);
  static Subdist unit(Space space, const std::string& label);

  // Validates keys and values; zero values are dropped.
  // Throws KeyOutsideSpace, NegativeEntry, MassExceedsOne.
  static Subdist make(Space space, const std::vector<std::pair<std::string, Rat>>& entries);

  // Entries must be sorted by index, positive, in range; mass is checked.
  static Subdist from_sparse(Space space, Entries entries);

  // Caller guarantees the invariant (used where it holds by construction).
  static Subdist unchecked(Space space, Entries entries);

  const Space& space() const { return space_; }
  const Entries& entries() const { return entries_; }

  Rat at(int index) const;
  Rat at(const std::string& label) const;

  Rat mass() const;
  bool is_zero() const { return entries_.empty(); }
  bool is_distribution() const { return mass() == 1; }
  // Exactly one state carrying probability one.
  bool is_unit() const { return entries_.size() == 1 && entries_[0].second == 1; }

  std::vector<std::string> support() const;  // labels in space order

  bool operator==(const Subdist& other) const;
  bool operator!=(const Subdist& other) const { return !(*this == other); }

 private:
  Subdist(Space space, Entries entries)
      : space_(std::move(space)), entries_(std::move(entries)) {}
  Space space_;
  Entries entries_;
};

// Product subdistribution on product(x, y): (p ⊗ q)(a,b) = p(a) q(b).
Subdist kron(const Subdist& p, const Subdist& q);

}  // namespace grc
