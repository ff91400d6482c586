#include <doctest.h>

#include <cmath>
#include <functional>

#include "grc/entropy.hpp"
#include "grc/error.hpp"

using namespace grc;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::ParseError;
}

bool near(double a, double b, double tol = 1e-12) { return std::fabs(a - b) <= tol; }

Subdist uniform(const Space& x) {
  Subdist::Entries e;
  for (int i = 0; i < x.size(); ++i) e.emplace_back(i, Rat(1, x.size()));
  return Subdist::unchecked(x, std::move(e));
}

// Four microstates carrying one bit: two blocks of two.
PSet bit_pair() {
  return PSet::make(Space::of({"0", "0.e1", "1", "1.e1"}),
                    {{"0", "0.e1"}, {"1", "1.e1"}});
}

}  // namespace

TEST_CASE("entropy matches independently computed values") {
  Space xy = Space::of({"x", "y"});
  // Reference values computed with an arbitrary-precision calculator.
  CHECK(near(entropy(Subdist::make(xy, {{"x", Rat(1, 4)}, {"y", Rat(3, 4)}})),
             0.8112781244591328));
  CHECK(near(entropy(uniform(Space::of({"a", "b", "c"}))), 1.584962500721156));
  CHECK(near(entropy(uniform(Space::of({"a", "b", "c", "d"}))), 2.0));
  CHECK(near(entropy(uniform(xy), std::exp(1.0)), 0.6931471805599453));
  CHECK(near(entropy(uniform(Space::of({"a", "b", "c", "d"})), 4.0), 1.0));
}

TEST_CASE("entropy of point masses and the empty subdistribution is zero") {
  Space xy = Space::of({"x", "y"});
  CHECK(entropy(Subdist::unit(xy, "y")) == 0.0);
  CHECK(entropy(Subdist::zero(xy)) == 0.0);
  CHECK(std::signbit(entropy(Subdist::unit(xy, "y"))) == false);
  // Subdistributions below mass one still have well-defined entropy.
  CHECK(near(entropy(Subdist::make(xy, {{"x", Rat(1, 2)}})), 0.5));
}

TEST_CASE("contexts must carry mass exactly one") {
  Space xy = Space::of({"x", "y"});
  CHECK(code_of([&] { CompContext(Subdist::make(xy, {{"x", Rat(1, 2)}})); }) ==
        Errc::ShapeMismatch);
  CompContext ok(uniform(xy));
  CHECK(ok.space() == xy);

  PSet ps = bit_pair();
  CHECK(code_of([&] { PhysContext(ps, uniform(xy)); }) == Errc::ShapeMismatch);
  CHECK(code_of([&] {
          PhysContext(ps, Subdist::make(ps.elements(), {{"0", Rat(1, 2)}}));
        }) == Errc::ShapeMismatch);
}

TEST_CASE("the ledger splits microstate entropy into computational and residual parts") {
  PSet ps = bit_pair();
  EntropyLedger full = ledger(PhysContext(ps, uniform(ps.elements())));
  CHECK(near(full.h_phy, 2.0));
  CHECK(near(full.h_comp, 1.0));
  CHECK(near(full.h_nc, 1.0));

  // All mass inside one block: computational reading is certain.
  PhysContext supported(
      ps, Subdist::make(ps.elements(), {{"0", Rat(1, 2)}, {"0.e1", Rat(1, 2)}}));
  EntropyLedger l = ledger(supported);
  CHECK(near(l.h_phy, 1.0));
  CHECK(l.h_comp == 0.0);
  CHECK(near(l.h_nc, 1.0));

  CompContext reading = aggregate_context(supported);
  CHECK(reading.space() == Space::of({"0", "1"}));
  CHECK(reading.dist().at("0") == 1);
}

TEST_CASE("ledger entries add under independent composition of contexts") {
  PSet ps = bit_pair();
  PhysContext a(ps, uniform(ps.elements()));
  PhysContext b(ps, Subdist::make(ps.elements(), {{"0", Rat(1, 4)}, {"1", Rat(3, 4)}}));
  EntropyLedger la = ledger(a);
  EntropyLedger lb = ledger(b);
  EntropyLedger lab = ledger(kron(a, b));
  CHECK(near(lab.h_phy, la.h_phy + lb.h_phy));
  CHECK(near(lab.h_comp, la.h_comp + lb.h_comp));
  CHECK(near(lab.h_nc, la.h_nc + lb.h_nc));
  CHECK(near(lb.h_phy, 0.8112781244591328));
  CHECK(lb.h_nc == 0.0);

  CompContext ca = aggregate_context(a);
  CompContext cb = aggregate_context(b);
  CHECK(near(entropy(kron(ca, cb).dist()), entropy(ca.dist()) + entropy(cb.dist())));
}

TEST_CASE("entropy in other bases rescales by the logarithm of the base") {
  Subdist p = Subdist::make(Space::of({"x", "y"}), {{"x", Rat(1, 4)}, {"y", Rat(3, 4)}});
  double h2 = entropy(p, 2.0);
  double h4 = entropy(p, 4.0);
  CHECK(near(h2, 2.0 * h4));
}
