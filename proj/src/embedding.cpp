#include "multiform/embedding.hpp"

#include <stdexcept>

namespace multiform {

Matrix make_embedding_matrix(Index ambient_dim, Index dim, Rng& rng) {
  if (dim < 1 || dim >= ambient_dim) {
    throw std::invalid_argument("make_embedding_matrix: need 1 <= d < D");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(ambient_dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < ambient_dim; ++i) m(i, j) = gauss(rng);
  }
  return m;
}

FormulationSet make_formulation_set(Index ambient_dim, const std::vector<Index>& dims,
                                    bool include_original, Rng& rng) {
  if (dims.empty() && !include_original) {
    throw std::invalid_argument("make_formulation_set: no formulations requested");
  }
  FormulationSet set;
  set.includes_original = include_original;
  int id = 0;
  for (Index d : dims) {
    Formulation f;
    f.id = id++;
    f.kind = Formulation::Kind::Embedded;
    f.embedding = make_embedding_matrix(ambient_dim, d, rng);
    f.dim = d;
    set.formulations.push_back(std::move(f));
  }
  if (include_original) {
    Formulation f;
    f.id = id++;
    f.kind = Formulation::Kind::Original;
    f.dim = ambient_dim;
    set.formulations.push_back(std::move(f));
  }
  return set;
}

Vector lift(const Formulation& f, const Vector& y) {
  if (y.size() != f.dim) throw std::invalid_argument("lift: genome length mismatch");
  if (f.kind == Formulation::Kind::Original) return y;
  return f.embedding * y;
}

Vector project_to_box(const Vector& x) {
  if (!x.allFinite()) throw std::invalid_argument("project_to_box: non-finite input");
  return x.cwiseMax(-1.0).cwiseMin(1.0);
}

double evaluate_low_dim(const Formulation& f, EmbeddedObjective& obj, const Vector& y) {
  return obj.evaluate(project_to_box(lift(f, y)));
}

}  // namespace multiform
