#pragma once

#include "grc/partitioned.hpp"
#include "grc/subdist.hpp"

namespace grc {

// Absolute tolerance for comparing entropy values. Test inputs keep
// denominators small (<= 64), where the smallest nonzero entropy gap is far
// above this.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultBase = 2.0;

// Shannon entropy -sum p_x log_base(p_x), with 0 log 0 = 0. Defined for any
// subdistribution; always >= 0.
double entropy(const Subdist& p, double base = kDefaultBase);

// A distribution on a plain space: the state of a computational system.
class CompContext {
 public:
  explicit CompContext(Subdist dist);  // mass must be exactly one
  const Subdist& dist() const { return dist_; }
  const Space& space() const { return dist_.space(); }

 private:
  Subdist dist_;
};

// A distribution on the microstates of a partitioned set: the state of a
// physical system together with its computational reading.
class PhysContext {
 public:
  PhysContext(PSet pspace, Subdist dist);  // dist on pspace.elements(), mass one
  const PSet& pspace() const { return pspace_; }
  const Subdist& dist() const { return dist_; }

 private:
  PSet pspace_;
  Subdist dist_;
};

// Physical, computational, and non-computational entropy of a physical
// context: h_phy is the entropy of the microstate distribution, h_comp the
// entropy of its block aggregate, h_nc the difference.
struct EntropyLedger {
  double h_phy = 0;
  double h_comp = 0;
  double h_nc = 0;
};

EntropyLedger ledger(const PhysContext& ctx, double base = kDefaultBase);

CompContext aggregate_context(const PhysContext& ctx);

PhysContext kron(const PhysContext& a, const PhysContext& b);
CompContext kron(const CompContext& a, const CompContext& b);

}  // namespace grc
