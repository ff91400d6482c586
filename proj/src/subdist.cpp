#include "grc/subdist.hpp"

#include <algorithm>

#include "grc/error.hpp"

namespace grc {

Subdist Subdist::zero(Space space) { return Subdist(std::move(space), {}); }

Subdist Subdist::unit(Space space, const std::string& label) {
  int i = space.index_of(label);
  return Subdist(std::move(space), {{i, Rat(1)}});
}

Subdist Subdist::make(Space space, const std::vector<std::pair<std::string, Rat>>& entries) {
  Entries sparse;
  sparse.reserve(entries.size());
  for (const auto& [label, value] : entries) {
    int i = space.index_of(label);
    if (value < 0) fail(Errc::NegativeEntry, "state '" + label + "' has value " + value.str());
    if (value == 0) continue;
    sparse.emplace_back(i, value);
  }
  std::sort(sparse.begin(), sparse.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < sparse.size(); ++i)
    if (sparse[i - 1].first == sparse[i].first)
      fail(Errc::ParseError, "duplicate state '" + space.label(sparse[i].first) + "'");
  return from_sparse(std::move(space), std::move(sparse));
}

Subdist Subdist::from_sparse(Space space, Entries entries) {
  Rat total(0);
  int prev = -1;
  for (const auto& [i, value] : entries) {
    if (i <= prev || i >= space.size()) fail(Errc::KeyOutsideSpace, "bad sparse index");
    prev = i;
    if (value < 0) fail(Errc::NegativeEntry, "state '" + space.label(i) + "' has value " + value.str());
    if (value == 0) fail(Errc::ParseError, "explicit zero entry");
    total += value;
  }
  if (total > 1) fail(Errc::MassExceedsOne, "total mass " + total.str() + " exceeds one");
  return Subdist(std::move(space), std::move(entries));
}

Subdist Subdist::unchecked(Space space, Entries entries) {
  return Subdist(std::move(space), std::move(entries));
}

Rat Subdist::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rat(0);
}

Rat Subdist::at(const std::string& label) const { return at(space_.index_of(label)); }

Rat Subdist::mass() const {
  Rat total(0);
  for (const auto& [i, value] : entries_) total += value;
  return total;
}

std::vector<std::string> Subdist::support() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [i, value] : entries_) out.push_back(space_.label(i));
  return out;
}

bool Subdist::operator==(const Subdist& other) const {
  return space_ == other.space_ && entries_ == other.entries_;
}

Subdist kron(const Subdist& p, const Subdist& q) {
  Space prod = product(p.space(), q.space());
  Subdist::Entries entries;
  entries.reserve(p.entries().size() * q.entries().size());
  int n = q.space().size();
  for (const auto& [i, pv] : p.entries())
    for (const auto& [j, qv] : q.entries()) entries.emplace_back(i * n + j, pv * qv);
  return Subdist::unchecked(std::move(prod), std::move(entries));
}

}  // namespace grc
