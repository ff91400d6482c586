#pragma once

#include <string>
#include <vector>

#include "grc/partitioned.hpp"

namespace grc {

// Microstate label for computational state `s`: "s" itself for index 0,
// "s.e<j>" beyond. The first microstate keeping the bare label makes block
// labels (least members) coincide with computational labels, so aggregation
// recovers the computational space verbatim.
std::string microstate_label(const std::string& comp, int index);

// Each computational label becomes a block of `multiplicity` microstates.
PSet uniform_multiplicity_pset(const std::vector<std::string>& comp_labels, int multiplicity);

// Builtin gates: id, not, cnot, toffoli, fredkin, erase, merge. Reversible
// gates are permutations acting on microstates and leaving the microstate
// index fixed. `erase` is the entropy-preserving merge: a bijection sending
// block [1]'s microstates to fresh microstates of block [0], so the
// codomain is a single block of 2m microstates and the aggregate is the
// two-to-one merge. `merge` is the uniform-spread lift of that merge.
// Throws UnknownGate or InvalidMultiplicity.
PMatrix builtin_gate(const std::string& name, int multiplicity = 1);

std::vector<std::string> builtin_gate_names();

}  // namespace grc
