#include "grc/rational.hpp"

#include "grc/error.hpp"

namespace grc {

std::string rat_to_string(const Rat& q) { return q.str(); }

Rat rat_from_string(const std::string& text) {
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t n = from;
    while (n < text.size() && text[n] >= '0' && text[n] <= '9') ++n;
    return n;
  };
  if (i < text.size() && text[i] == '-') ++i;
  size_t num_end = digits(i);
  if (num_end == i) fail(Errc::ParseError, "not a rational: '" + text + "'");
  if (num_end == text.size()) return Rat(Int(text));
  if (text[num_end] != '/') fail(Errc::ParseError, "not a rational: '" + text + "'");
  size_t den_end = digits(num_end + 1);
  if (den_end == num_end + 1 || den_end != text.size())
    fail(Errc::ParseError, "not a rational: '" + text + "'");
  Int den(text.substr(num_end + 1));
  if (den == 0) fail(Errc::ParseError, "zero denominator: '" + text + "'");
  return Rat(Int(text.substr(0, num_end)), den);
}

bool is_probability(const Rat& q) { return q >= 0 && q <= 1; }

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace grc
