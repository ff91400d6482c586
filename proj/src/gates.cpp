#include "grc/gates.hpp"

#include <functional>

#include "grc/error.hpp"

namespace grc {

std::string microstate_label(const std::string& comp, int index) {
  if (index == 0) return comp;
  return comp + ".e" + std::to_string(index);
}

PSet uniform_multiplicity_pset(const std::vector<std::string>& comp_labels, int multiplicity) {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> partition;
  elements.reserve(comp_labels.size() * multiplicity);
  for (const auto& comp : comp_labels) {
    std::vector<std::string> block;
    for (int j = 0; j < multiplicity; ++j) {
      elements.push_back(microstate_label(comp, j));
      block.push_back(elements.back());
    }
    partition.push_back(std::move(block));
  }
  return PSet::make(Space::of(std::move(elements)), partition);
}

namespace {

std::vector<std::string> bit_states(int bits) {
  std::vector<std::string> out;
  for (int v = 0; v < (1 << bits); ++v) {
    std::string s(bits, '0');
    for (int b = 0; b < bits; ++b)
      if (v & (1 << (bits - 1 - b))) s[b] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

// A reversible gate: the computational permutation acts on microstates with
// the microstate index carried along unchanged.
PMatrix permutation_gate(int bits, int m,
                         const std::function<std::string(const std::string&)>& perm) {
  PSet ps = uniform_multiplicity_pset(bit_states(bits), m);
  const Space& space = ps.elements();
  std::vector<Matrix::Row> rows(space.size());
  for (const auto& comp : bit_states(bits)) {
    std::string image = perm(comp);
    for (int j = 0; j < m; ++j) {
      int from = space.index_of(microstate_label(comp, j));
      int to = space.index_of(microstate_label(image, j));
      rows[from] = {{to, Rat(1)}};
    }
  }
  return PMatrix::unchecked(ps, ps, Matrix::unchecked(space, space, std::move(rows)));
}

PMatrix erase_gate(int m) {
  PSet dom = uniform_multiplicity_pset({"0", "1"}, m);
  std::vector<std::string> cod_elements;
  for (int j = 0; j < 2 * m; ++j) cod_elements.push_back(microstate_label("0", j));
  PSet cod = PSet::make(Space::of(cod_elements), {cod_elements});
  std::vector<Matrix::Row> rows(dom.elements().size());
  for (int j = 0; j < m; ++j) {
    rows[dom.elements().index_of(microstate_label("0", j))] = {{j, Rat(1)}};
    rows[dom.elements().index_of(microstate_label("1", j))] = {{m + j, Rat(1)}};
  }
  return PMatrix::unchecked(dom, cod,
                            Matrix::unchecked(dom.elements(), cod.elements(), std::move(rows)));
}

PMatrix merge_gate(int m) {
  PSet dom = uniform_multiplicity_pset({"0", "1"}, m);
  PSet cod = uniform_multiplicity_pset({"0"}, m);
  Matrix comp_merge = Matrix::make(dom.block_space(), cod.block_space(),
                                   {{"0", {{"0", Rat(1)}}}, {"1", {{"0", Rat(1)}}}});
  return lift(comp_merge, dom, cod);
}

std::string flip_bit(const std::string& s, int i) {
  std::string out = s;
  out[i] = (out[i] == '0') ? '1' : '0';
  return out;
}

}  // namespace

PMatrix builtin_gate(const std::string& name, int multiplicity) {
  if (multiplicity < 1)
    fail(Errc::InvalidMultiplicity,
         "gate '" + name + "' needs multiplicity >= 1, got " + std::to_string(multiplicity));
  int m = multiplicity;
  if (name == "id") return permutation_gate(1, m, [](const std::string& s) { return s; });
  if (name == "not") return permutation_gate(1, m, [](const std::string& s) { return flip_bit(s, 0); });
  if (name == "cnot")
    return permutation_gate(2, m, [](const std::string& s) {
      return s[0] == '1' ? flip_bit(s, 1) : s;
    });
  if (name == "toffoli")
    return permutation_gate(3, m, [](const std::string& s) {
      return (s[0] == '1' && s[1] == '1') ? flip_bit(s, 2) : s;
    });
  if (name == "fredkin")
    return permutation_gate(3, m, [](const std::string& s) {
      if (s[0] != '1') return s;
      std::string out = s;
      std::swap(out[1], out[2]);
      return out;
    });
  if (name == "erase") return erase_gate(m);
  if (name == "merge") return merge_gate(m);
  fail(Errc::UnknownGate, "no builtin gate named '" + name + "'");
}

std::vector<std::string> builtin_gate_names() {
  return {"id", "not", "cnot", "toffoli", "fredkin", "erase", "merge"};
}

}  // namespace grc
