#pragma once

#include <vector>

#include "multiform/objectives.hpp"
#include "multiform/types.hpp"

namespace multiform {

// One search formulation: either a random embedding g(y) = f(My) with
// y in [-1,1]^d, or the original task itself (identity lift, d = D).
struct Formulation {
  enum class Kind { Embedded, Original };

  int id = 0;
  Kind kind = Kind::Original;
  Matrix embedding;  // D x d, empty for Original
  Index dim = 0;     // genome length d
};

struct FormulationSet {
  std::vector<Formulation> formulations;
  bool includes_original = false;
};

// D x d matrix with i.i.d. standard-normal entries, filled column-major.
Matrix make_embedding_matrix(Index ambient_dim, Index dim, Rng& rng);

// One formulation per entry of dims, plus the original task last when
// include_original is set. Ids run 0..N-1 in that order.
FormulationSet make_formulation_set(Index ambient_dim, const std::vector<Index>& dims,
                                    bool include_original, Rng& rng);

// Maps a low-dimensional genome into the ambient space (My, or identity).
Vector lift(const Formulation& f, const Vector& y);

// Nearest point of [-1,1]^D in Euclidean distance: coordinate-wise clip.
Vector project_to_box(const Vector& x);

// g(y) = f(project(My)); consumes exactly one FE.
double evaluate_low_dim(const Formulation& f, EmbeddedObjective& obj, const Vector& y);

}  // namespace multiform
