#include <doctest.h>

#include <functional>

#include "grc/error.hpp"
#include "grc/reversibility.hpp"

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

Subdist uniform(const Space& x) {
  Subdist::Entries e;
  for (int i = 0; i < x.size(); ++i) e.emplace_back(i, Rat(1, x.size()));
  return Subdist::unchecked(x, std::move(e));
}

PSet bit_pair() {
  return PSet::make(Space::of({"0", "0.e1", "1", "1.e1"}),
                    {{"0", "0.e1"}, {"1", "1.e1"}});
}

// Bit erasure as a microstate bijection: one bit with one noise microstate per
// reading is mapped onto four microstates that all read the same.
PMatrix erase_bit() {
  PSet dom = bit_pair();
  PSet cod = PSet::make(Space::of({"o0", "o1", "o2", "o3"}), {{"o0", "o1", "o2", "o3"}});
  Matrix m = Matrix::make(dom.elements(), cod.elements(),
                          {{"0", {{"o0", Rat(1)}}},
                           {"0.e1", {{"o1", Rat(1)}}},
                           {"1", {{"o2", Rat(1)}}},
                           {"1.e1", {{"o3", Rat(1)}}}});
  return PMatrix::make(dom, cod, m);
}

}  // namespace

TEST_CASE("computational transformations are exact image checks") {
  Space b = Space::of({"0", "1"});
  Matrix flip = Matrix::make(b, b, {{"0", {{"1", Rat(1)}}}, {"1", {{"0", Rat(1)}}}});
  CompContext p(Subdist::make(b, {{"0", Rat(1, 4)}, {"1", Rat(3, 4)}}));
  CompContext q(Subdist::make(b, {{"0", Rat(3, 4)}, {"1", Rat(1, 4)}}));
  CHECK(is_comp_transformation(flip, p, q));
  CHECK_FALSE(is_comp_transformation(flip, p, p));
  CHECK_FALSE(is_comp_transformation(flip, CompContext(uniform(Space::of({"x", "y"}))), q));
}

TEST_CASE("physical transformations also require microstate entropy preservation") {
  PMatrix er = erase_bit();
  PhysContext p(er.domp(), uniform(er.domp().elements()));
  PhysContext q(er.codp(), uniform(er.codp().elements()));
  CHECK(is_phys_transformation(er, p, q));

  // Right image but the matrix is presented against the wrong codomain reading.
  PhysContext wrong(er.domp(), Subdist::unit(er.domp().elements(), "0"));
  CHECK_FALSE(is_phys_transformation(er, p, wrong));
}

TEST_CASE("restriction keeps exactly the supported rows") {
  Space x = Space::of({"a", "b", "c"});
  Space y = Space::of({"u", "v"});
  Matrix m = Matrix::make(x, y,
                          {{"a", {{"u", Rat(1)}}},
                           {"b", {{"v", Rat(1, 2)}}},
                           {"c", {{"v", Rat(1)}}}});
  Subdist p = Subdist::make(x, {{"a", Rat(1, 2)}, {"c", Rat(1, 4)}});
  Matrix r = restrict_to_support(m, p);
  CHECK(r.dom() == Space::of({"a", "c"}));
  CHECK(r.cod() == y);
  CHECK(r.at("a", "u") == 1);
  CHECK(r.at("c", "v") == 1);

  CHECK(code_of([&] { restrict_to_support(m, Subdist::zero(x)); }) == Errc::ShapeMismatch);
  Subdist outside = Subdist::unit(Space::of({"z"}), "z");
  CHECK(code_of([&] { restrict_to_support(m, outside); }) == Errc::KeyOutsideSpace);
}

TEST_CASE("conditional reversibility depends on the context support") {
  Space b = Space::of({"0", "1"});
  Matrix merge = Matrix::make(b, b, {{"0", {{"0", Rat(1)}}}, {"1", {{"0", Rat(1)}}}});
  CHECK_FALSE(is_conditionally_reversible(merge, CompContext(uniform(b))));
  CHECK(is_conditionally_reversible(merge, CompContext(Subdist::unit(b, "1"))));

  Matrix partial = Matrix::make(b, b, {{"0", {{"1", Rat(1)}}}});
  CHECK(is_conditionally_reversible(partial, CompContext(Subdist::unit(b, "0"))));
  // Supported state with a zero row: the map is undefined where mass sits.
  CHECK_FALSE(is_conditionally_reversible(partial, CompContext(Subdist::unit(b, "1"))));

  Matrix coin = Matrix::make(b, b, {{"0", {{"0", Rat(1, 2)}, {"1", Rat(1, 2)}}}});
  CHECK(code_of([&] { is_conditionally_reversible(coin, CompContext(Subdist::unit(b, "0"))); }) ==
        Errc::NotDeterministic);
  CHECK(code_of([&] {
          is_conditionally_reversible(merge, CompContext(uniform(Space::of({"x", "y"}))));
        }) == Errc::ShapeMismatch);
}

TEST_CASE("erasing a uniform bit ejects entropy; erasing a known bit does not") {
  PMatrix er = erase_bit();
  PhysContext hot(er.domp(), uniform(er.domp().elements()));
  CHECK_FALSE(is_non_entropy_ejecting(er, hot));
  CHECK_FALSE(is_free_phy(er, hot));

  PhysContext cold(er.domp(), Subdist::make(er.domp().elements(),
                                            {{"0", Rat(1, 2)}, {"0.e1", Rat(1, 2)}}));
  CHECK(is_non_entropy_ejecting(er, cold));
  CHECK(is_free_phy(er, cold));

  FundamentalReport rh = check_fundamental(er, hot);
  CHECK_FALSE(rh.nee);
  CHECK_FALSE(rh.condrev);
  CHECK(rh.agree);
  FundamentalReport rc = check_fundamental(er, cold);
  CHECK(rc.nee);
  CHECK(rc.condrev);
  CHECK(rc.agree);
}

TEST_CASE("steps that leak mass or microstate entropy are not closed") {
  PSet d2 = PSet::discrete(Space::of({"a", "b"}));
  PhysContext p(d2, uniform(d2.elements()));

  Matrix leaky = Matrix::make(d2.elements(), d2.elements(), {{"a", {{"a", Rat(1)}}}});
  PMatrix pleaky = PMatrix::make(d2, d2, leaky);
  CHECK(code_of([&] { is_non_entropy_ejecting(pleaky, p); }) == Errc::NotClosedTransformation);

  PSet d1 = PSet::discrete(Space::of({"z"}));
  Matrix squash = Matrix::make(d2.elements(), d1.elements(),
                               {{"a", {{"z", Rat(1)}}}, {"b", {{"z", Rat(1)}}}});
  PMatrix psquash = PMatrix::make(d2, d1, squash);
  CHECK(code_of([&] { is_non_entropy_ejecting(psquash, p); }) == Errc::NotClosedTransformation);

  PhysContext other(PSet::discrete(Space::of({"x", "y"})),
                    uniform(Space::of({"x", "y"})));
  CHECK(code_of([&] { is_non_entropy_ejecting(pleaky, other); }) == Errc::ShapeMismatch);
}

TEST_CASE("acquiring randomness in the computational layer is non-ejecting") {
  // A fair coin flip: both microstates of the single input block spread
  // identically over two distinct readings. h_comp rises from 0 to 1, which
  // the ledger allows for free (nothing left the computational account).
  PSet dom = PSet::make(Space::of({"a", "b"}), {{"a", "b"}});
  PSet cod = PSet::discrete(Space::of({"a2", "b2"}));
  Matrix::Row spread = {{0, Rat(1, 2)}, {1, Rat(1, 2)}};
  Matrix m = Matrix::unchecked(dom.elements(), cod.elements(), {spread, spread});
  PMatrix pm = PMatrix::make(dom, cod, m);
  PhysContext p(dom, uniform(dom.elements()));
  CHECK(is_non_entropy_ejecting(pm, p));
  CHECK_FALSE(is_free_phy(pm, p));  // the aggregate is a coin, not a function

  // Splitting the block deterministically is not a partitioned map at all:
  // equivalent microstates would get inequivalent readings.
  Matrix split = Matrix::make(dom.elements(), cod.elements(),
                              {{"a", {{"a2", Rat(1)}}}, {"b", {{"b2", Rat(1)}}}});
  CHECK(code_of([&] { PMatrix::make(dom, cod, split); }) == Errc::NotPartitioned);
}

TEST_CASE("the instance check requires a deterministic aggregate") {
  PSet ps = bit_pair();
  std::vector<Matrix::Row> rows(4, uniform(ps.elements()).entries());
  Matrix scramble = Matrix::unchecked(ps.elements(), ps.elements(), std::move(rows));
  PMatrix pm = PMatrix::make(ps, ps, scramble);
  PhysContext p(ps, uniform(ps.elements()));
  // Doubly uniform: closed, and the computational reading stays uniform.
  CHECK(is_non_entropy_ejecting(pm, p));
  CHECK_FALSE(is_free_phy(pm, p));
  CHECK(code_of([&] { check_fundamental(pm, p); }) == Errc::NotDeterministic);
}
