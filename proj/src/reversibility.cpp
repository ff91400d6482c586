#include "grc/reversibility.hpp"

#include <cmath>

#include "grc/error.hpp"

namespace grc {

bool is_comp_transformation(const Matrix& m, const CompContext& p, const CompContext& q) {
  if (p.space() != m.dom() || q.space() != m.cod()) return false;
  return apply(p.dist(), m) == q.dist();
}

bool is_phys_transformation(const PMatrix& m, const PhysContext& p, const PhysContext& q,
                            double tol, double base) {
  if (p.pspace() != m.domp() || q.pspace() != m.codp()) return false;
  if (apply(p.dist(), m.matrix()) != q.dist()) return false;
  return std::fabs(entropy(p.dist(), base) - entropy(q.dist(), base)) <= tol;
}

Matrix restrict_to_support(const Matrix& m, const Subdist& p) {
  if (p.is_zero()) fail(Errc::ShapeMismatch, "cannot restrict to an empty support");
  std::vector<std::string> labels;
  std::vector<Matrix::Row> rows;
  for (const auto& [i, value] : p.entries()) {
    const std::string& label = p.space().label(i);
    if (!m.dom().contains(label))
      fail(Errc::KeyOutsideSpace, "support state '" + label + "' is outside dom");
    labels.push_back(label);
    rows.push_back(m.row(m.dom().index_of(label)));
  }
  return Matrix::unchecked(Space::of(std::move(labels)), m.cod(), std::move(rows));
}

bool is_conditionally_reversible(const Matrix& m, const CompContext& p) {
  if (p.space() != m.dom())
    fail(Errc::ShapeMismatch, "context space must equal dom of the matrix");
  if (!is_deterministic(m))
    fail(Errc::NotDeterministic, "conditional reversibility is defined for deterministic maps");
  for (const auto& [i, value] : p.dist().entries())
    if (m.row(i).empty()) return false;  // supp(p) must lie inside supp(m)
  return is_subpermutation(restrict_to_support(m, p.dist()));
}

namespace {

// Shared precondition: p -> p m must be a closed physical transformation.
Subdist closed_image(const PMatrix& m, const PhysContext& p, double tol, double base) {
  if (p.pspace() != m.domp())
    fail(Errc::ShapeMismatch, "context must live on dom of the matrix");
  Subdist q = apply(p.dist(), m.matrix());
  if (q.mass() != 1)
    fail(Errc::NotClosedTransformation, "the image is not a distribution");
  if (std::fabs(entropy(p.dist(), base) - entropy(q, base)) > tol)
    fail(Errc::NotClosedTransformation, "microstate entropy is not preserved");
  return q;
}

}  // namespace

bool is_non_entropy_ejecting(const PMatrix& m, const PhysContext& p, double tol, double base) {
  Subdist q = closed_image(m, p, tol, base);
  double before = entropy(aggregate_dist(p.dist(), m.domp()), base);
  double after = entropy(aggregate_dist(q, m.codp()), base);
  return before <= after + tol;
}

bool is_free_phy(const PMatrix& m, const PhysContext& p, double tol, double base) {
  return is_non_entropy_ejecting(m, p, tol, base) && is_deterministic(aggregate(m));
}

bool is_free_comp(const Matrix& m, const CompContext& p) {
  return is_conditionally_reversible(m, p);
}

FundamentalReport check_fundamental(const PMatrix& m, const PhysContext& p, double tol,
                                    double base) {
  Matrix qm = aggregate(m);
  if (!is_deterministic(qm))
    fail(Errc::NotDeterministic, "the aggregate must be deterministic");
  FundamentalReport r;
  r.nee = is_non_entropy_ejecting(m, p, tol, base);
  r.condrev = is_conditionally_reversible(qm, aggregate_context(p));
  r.agree = (r.nee == r.condrev);
  return r;
}

}  // namespace grc
