#include "grc/entropy.hpp"

#include <cmath>

#include "grc/error.hpp"

namespace grc {

double entropy(const Subdist& p, double base) {
  double h = 0;
  for (const auto& [i, value] : p.entries()) {
    double v = rat_to_double(value);
    if (v > 0) h -= v * std::log(v);
  }
  double h_base = h / std::log(base);
  // Clamp the -0.0 that unit distributions produce.
  return h_base == 0 ? 0 : h_base;
}

CompContext::CompContext(Subdist dist) : dist_(std::move(dist)) {
  if (dist_.mass() != 1)
    fail(Errc::ShapeMismatch, "a computational context must have mass exactly one");
}

PhysContext::PhysContext(PSet pspace, Subdist dist)
    : pspace_(std::move(pspace)), dist_(std::move(dist)) {
  if (dist_.space() != pspace_.elements())
    fail(Errc::ShapeMismatch, "context distribution must live on the microstates");
  if (dist_.mass() != 1)
    fail(Errc::ShapeMismatch, "a physical context must have mass exactly one");
}

EntropyLedger ledger(const PhysContext& ctx, double base) {
  EntropyLedger l;
  l.h_phy = entropy(ctx.dist(), base);
  l.h_comp = entropy(aggregate_dist(ctx.dist(), ctx.pspace()), base);
  l.h_nc = l.h_phy - l.h_comp;
  return l;
}

CompContext aggregate_context(const PhysContext& ctx) {
  return CompContext(aggregate_dist(ctx.dist(), ctx.pspace()));
}

PhysContext kron(const PhysContext& a, const PhysContext& b) {
  return PhysContext(product_pset(a.pspace(), b.pspace()), kron(a.dist(), b.dist()));
}

CompContext kron(const CompContext& a, const CompContext& b) {
  return CompContext(kron(a.dist(), b.dist()));
}

}  // namespace grc
