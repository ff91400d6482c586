#pragma once

#include "grc/cdu.hpp"
#include "grc/entropy.hpp"

namespace grc {

// p m == q exactly.
bool is_comp_transformation(const Matrix& m, const CompContext& p, const CompContext& q);

// p m == q exactly and the transformation is closed: microstate entropy is
// preserved within tol.
bool is_phys_transformation(const PMatrix& m, const PhysContext& p, const PhysContext& q,
                            double tol = kDefaultTol, double base = kDefaultBase);

// Rows of m at the support of p; the codomain is unchanged. Throws
// KeyOutsideSpace if supp(p) is not inside dom(m), ShapeMismatch if the
// support is empty.
Matrix restrict_to_support(const Matrix& m, const Subdist& p);

// A deterministic m is reversible conditioned on p iff supp(p) lies in the
// support of m and the restriction of m to supp(p) is a subpermutation.
// Throws NotDeterministic if m is not deterministic.
bool is_conditionally_reversible(const Matrix& m, const CompContext& p);

// The step p -> p m ejects no entropy from the computational ledger:
// h_comp never decreases (boundary equality counts as non-ejecting).
// Requires a closed transformation; otherwise NotClosedTransformation.
bool is_non_entropy_ejecting(const PMatrix& m, const PhysContext& p,
                             double tol = kDefaultTol, double base = kDefaultBase);

// Free step of the physical resource theory: non-entropy-ejecting with a
// deterministic aggregate.
bool is_free_phy(const PMatrix& m, const PhysContext& p,
                 double tol = kDefaultTol, double base = kDefaultBase);

// Free step of the computational resource theory: conditional reversibility.
bool is_free_comp(const Matrix& m, const CompContext& p);

struct FundamentalReport {
  bool nee = false;
  bool condrev = false;
  bool agree = false;  // nee == condrev
};

// Instance-wise fundamental check for a closed physical transformation with
// deterministic aggregate: the step is non-entropy-ejecting iff its
// aggregate is conditionally reversible on the aggregated context. Throws
// NotDeterministic or NotClosedTransformation when the preconditions fail.
FundamentalReport check_fundamental(const PMatrix& m, const PhysContext& p,
                                    double tol = kDefaultTol, double base = kDefaultBase);

}  // namespace grc
