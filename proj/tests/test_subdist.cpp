#include <doctest.h>

#include <functional>

#include "grc/error.hpp"
#include "grc/subdist.hpp"

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

}  // namespace

TEST_CASE("spaces are ordered label sequences") {
  Space x = Space::of({"a", "b", "c"});
  CHECK(x.size() == 3);
  CHECK(x.label(1) == "b");
  CHECK(x.index_of("c") == 2);
  CHECK(x.contains("a"));
  CHECK_FALSE(x.contains("d"));
  CHECK(code_of([&] { x.index_of("d"); }) == Errc::KeyOutsideSpace);
  CHECK(x == Space::of({"a", "b", "c"}));
  CHECK(x != Space::of({"b", "a", "c"}));  // order is identity
}

TEST_CASE("space construction rejects degenerate label lists") {
  CHECK(code_of([] { Space::of({}); }) == Errc::ShapeMismatch);
  CHECK(code_of([] { Space::of({"a", "a"}); }) == Errc::ParseError);
  CHECK(code_of([] { Space::of({"a", ""}); }) == Errc::ParseError);
}

TEST_CASE("product spaces pair labels in row-major order") {
  Space x = Space::of({"a", "b"});
  Space y = Space::of({"u", "v", "w"});
  Space xy = product(x, y);
  CHECK(xy.labels() == std::vector<std::string>{"(a,u)", "(a,v)", "(a,w)",
                                                "(b,u)", "(b,v)", "(b,w)"});
  CHECK(unit_space().labels() == std::vector<std::string>{"*"});
}

TEST_CASE("user labels are restricted to an unambiguous charset") {
  for (const char* good : {"x", "A-1", "a.b", "q:r", "state_0"}) {
    CAPTURE(good);
    CHECK_NOTHROW(validate_user_label(good));
  }
  for (const char* bad : {"", "(a)", "a,b", "a b", "a*", "a/b"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(validate_user_label(bad), Error);
  }
}

TEST_CASE("subdistributions validate labels, sign and mass") {
  Space x = Space::of({"a", "b", "c"});
  Subdist p = Subdist::make(x, {{"a", Rat(1, 4)}, {"c", Rat(1, 2)}, {"b", Rat(0)}});
  CHECK(p.mass() == Rat(3, 4));
  CHECK(p.at("a") == Rat(1, 4));
  CHECK(p.at("b") == 0);  // zero entries are dropped
  CHECK(p.support() == std::vector<std::string>{"a", "c"});
  CHECK_FALSE(p.is_distribution());
  CHECK_FALSE(p.is_zero());

  CHECK(code_of([&] { Subdist::make(x, {{"d", Rat(1)}}); }) == Errc::KeyOutsideSpace);
  CHECK(code_of([&] { Subdist::make(x, {{"a", Rat(-1, 2)}}); }) == Errc::NegativeEntry);
  CHECK(code_of([&] { Subdist::make(x, {{"a", Rat(2, 3)}, {"b", Rat(2, 3)}}); }) ==
        Errc::MassExceedsOne);
  CHECK(code_of([&] { Subdist::make(x, {{"a", Rat(1, 3)}, {"a", Rat(1, 3)}}); }) ==
        Errc::ParseError);
}

TEST_CASE("sparse constructor audits its invariants") {
  Space x = Space::of({"a", "b"});
  CHECK_NOTHROW(Subdist::from_sparse(x, {{0, Rat(1, 2)}, {1, Rat(1, 2)}}));
  CHECK(code_of([&] { Subdist::from_sparse(x, {{1, Rat(1, 4)}, {0, Rat(1, 4)}}); }) ==
        Errc::KeyOutsideSpace);  // unsorted
  CHECK(code_of([&] { Subdist::from_sparse(x, {{0, Rat(0)}}); }) == Errc::ParseError);
  CHECK(code_of([&] { Subdist::from_sparse(x, {{2, Rat(1)}}); }) == Errc::KeyOutsideSpace);
}

TEST_CASE("point masses and the zero vector") {
  Space x = Space::of({"a", "b"});
  CHECK(Subdist::unit(x, "b").is_unit());
  CHECK(Subdist::unit(x, "b").is_distribution());
  CHECK(Subdist::zero(x).is_zero());
  CHECK(Subdist::zero(x).mass() == 0);
  CHECK_FALSE(Subdist::make(x, {{"a", Rat(1, 2)}, {"b", Rat(1, 2)}}).is_unit());
}

TEST_CASE("product of subdistributions multiplies entrywise") {
  Space x = Space::of({"a", "b"});
  Space y = Space::of({"u", "v"});
  Subdist p = Subdist::make(x, {{"a", Rat(1, 3)}, {"b", Rat(1, 2)}});
  Subdist q = Subdist::make(y, {{"v", Rat(3, 4)}});
  Subdist pq = kron(p, q);
  CHECK(pq.space() == product(x, y));
  CHECK(pq.mass() == p.mass() * q.mass());
  CHECK(pq.at("(a,v)") == Rat(1, 4));
  CHECK(pq.at("(b,v)") == Rat(3, 8));
  CHECK(pq.at("(a,u)") == 0);
}
