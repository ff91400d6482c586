#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace grc {

// An ordered set of state labels. Label order is part of the identity: two
// spaces are equal iff their label sequences are equal. Instances are
// immutable and cheap to copy.
class Space {
 public:
  static Space of(std::vector<std::string> labels);

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::string& label(int i) const { return data_->labels[i]; }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<int> find(const std::string& label) const;
  int index_of(const std::string& label) const;  // throws KeyOutsideSpace
  bool contains(const std::string& label) const { return find(label).has_value(); }

  bool operator==(const Space& other) const;
  bool operator!=(const Space& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
  };
  explicit Space(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// The tensor unit: a single reserved label.
extern const char* const kUnitLabel;  // "*"
Space unit_space();

// Canonical product label "(a,b)". Pair labels order lexicographically the
// same way the (a, b) pairs do, provided user labels stay inside the
// charset enforced by validate_user_label.
std::string pair_label(const std::string& a, const std::string& b);

// Product space: pairs in row-major order (left factor outer).
Space product(const Space& x, const Space& y);

// User-supplied labels (circuit files, builtin gate names) must be nonempty
// and drawn from [A-Za-z0-9._:-]. This keeps pair labels unambiguous and
// order-coherent. Throws ParseError.
void validate_user_label(const std::string& label);

}  // namespace grc
