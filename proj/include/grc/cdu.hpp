#pragma once

#include "grc/matrix.hpp"

namespace grc {

// Copy: X → X×X, x ↦ δ_{(x,x)}.
Matrix copy_matrix(const Space& x);

// Discard: X → 𝟏, every state to the unit label with probability one.
Matrix discard_matrix(const Space& x);

// Diagonal of row masses on dom(m); identity iff m is total.
Matrix dom_matrix(const Matrix& m);

// Every nonzero row is a unit distribution.
bool is_deterministic(const Matrix& m);

// Every row has mass exactly one.
bool is_total(const Matrix& m);

// Every row has mass zero or one; equivalently dom(m) ; m == m.
bool is_quasi_total(const Matrix& m);

// Deterministic and injective on support: distinct supported rows hit
// distinct states.
bool is_subpermutation(const Matrix& m);

// The transpose of a subpermutation, which is its partial inverse.
// Throws NotSubpermutation otherwise.
Matrix partial_inverse(const Matrix& m);

struct PartialIsoWitness {
  Matrix forward;
  Matrix reverse;
};

// forward ; reverse == dom(forward) and reverse ; forward == dom(reverse).
// Throws ShapeMismatch unless the shapes are mutually transposed.
bool verify_partial_iso(const PartialIsoWitness& w);

}  // namespace grc
