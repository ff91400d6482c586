#pragma once

#include "grc/entropy.hpp"
#include "grc/partitioned.hpp"
#include "grc/rng.hpp"

namespace grc {

// Random test-instance generators. All values are exact rationals with
// denominators bounded by max_den, so generated instances stay inside the
// regime where the entropy tolerance is sound.

Space gen_space(Rng& rng, int min_size, int max_size, const std::string& prefix);

// Mass <= 1 (or exactly 1 with full_mass), entries share one denominator.
Subdist gen_subdist(Rng& rng, const Space& space, int max_den, bool full_mass);

Matrix gen_matrix(Rng& rng, const Space& dom, const Space& cod, int max_den);
Matrix gen_deterministic(Rng& rng, const Space& dom, const Space& cod);
Matrix gen_total(Rng& rng, const Space& dom, const Space& cod, int max_den);
Matrix gen_quasi_total(Rng& rng, const Space& dom, const Space& cod, int max_den);
Matrix gen_subpermutation(Rng& rng, const Space& dom, const Space& cod);

PSet gen_pset(Rng& rng, const Space& elements);

// Generic partitioned matrix: per domain block, random codomain block sums,
// then each row spreads every block sum independently inside the block.
PMatrix gen_pmatrix(Rng& rng, const PSet& dom, const PSet& cod, int max_den);

// A closed physical transformation with deterministic aggregate, plus a
// context witnessing closure. Two families:
//  - block-respecting microstate permutations with randomly coarsened
//    codomain partitions, under an arbitrary context;
//  - uniform-spread lifts of deterministic block maps whose codomain block
//    sizes absorb the merged domain blocks, under blockwise-uniform
//    contexts. Both ejecting and non-ejecting instances occur.
struct ClosedInstance {
  PMatrix m;
  PhysContext p;
};
ClosedInstance gen_closed_instance(Rng& rng, int max_blocks, int max_block_size, int max_den);

// Closed, deterministic-aggregate, and guaranteed non-entropy-ejecting
// (no block merging within the context's support).
ClosedInstance gen_nee_instance(Rng& rng, int max_blocks, int max_block_size, int max_den);

// A deterministic matrix that is conditionally reversible on the returned
// context (injective unit rows on the support).
struct CondrevInstance {
  Matrix m;
  CompContext p;
};
CondrevInstance gen_condrev_instance(Rng& rng, const Space& dom, int cod_extra, int max_den);

// Same, but for a context chosen by the caller (used to chain steps).
Matrix gen_condrev_given(Rng& rng, const CompContext& p, int cod_extra);

}  // namespace grc
