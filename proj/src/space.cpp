#include "grc/space.hpp"

#include "grc/error.hpp"

namespace grc {

const char* const kUnitLabel = "*";

Space Space::of(std::vector<std::string> labels) {
  if (labels.empty()) fail(Errc::ShapeMismatch, "a space needs at least one state");
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->index.reserve(data->labels.size());
  for (size_t i = 0; i < data->labels.size(); ++i) {
    if (data->labels[i].empty()) fail(Errc::ParseError, "empty state label");
    auto [it, inserted] = data->index.emplace(data->labels[i], static_cast<int>(i));
    if (!inserted) fail(Errc::ParseError, "duplicate state label '" + data->labels[i] + "'");
  }
  return Space(std::move(data));
}

std::optional<int> Space::find(const std::string& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

int Space::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) fail(Errc::KeyOutsideSpace, "state '" + label + "' is not in the space");
  return *i;
}

bool Space::operator==(const Space& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

Space unit_space() {
  static const Space one = Space::of({kUnitLabel});
  return one;
}

std::string pair_label(const std::string& a, const std::string& b) {
  std::string out;
  out.reserve(a.size() + b.size() + 3);
  out += '(';
  out += a;
  out += ',';
  out += b;
  out += ')';
  return out;
}

Space product(const Space& x, const Space& y) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(x.size()) * y.size());
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) labels.push_back(pair_label(x.label(i), y.label(j)));
  return Space::of(std::move(labels));
}

void validate_user_label(const std::string& label) {
  if (label.empty()) fail(Errc::ParseError, "empty state label");
  for (char c : label) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '.' || c == '_' || c == ':' || c == '-';
    if (!ok)
      fail(Errc::ParseError,
           "label '" + label + "' contains '" + std::string(1, c) +
               "'; allowed characters are [A-Za-z0-9._:-]");
  }
}

}  // namespace grc
