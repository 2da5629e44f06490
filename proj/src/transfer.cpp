#include "multiform/transfer.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace multiform {

namespace {

// Genome columns in stored member order, zero-padded to padded_dim rows.
Matrix stack_members(const SubPopulation& pop, std::size_t q, Index padded_dim) {
  Matrix out = Matrix::Zero(padded_dim, static_cast<Index>(q));
  for (std::size_t c = 0; c < q; ++c) {
    const Vector& g = pop.members[c].genome;
    out.col(static_cast<Index>(c)).head(g.size()) = g;
  }
  return out;
}

}  // namespace

std::pair<Matrix, Matrix> pair_populations(const SubPopulation& pop_i,
                                           const SubPopulation& pop_j) {
  if (pop_i.members.empty() || pop_j.members.empty()) {
    throw std::invalid_argument("pair_populations: empty population");
  }
  const std::size_t q = std::min(pop_i.members.size(), pop_j.members.size());
  const Index d_i = pop_i.members.front().genome.size();
  const Index d_j = pop_j.members.front().genome.size();
  const Index padded = std::max(d_i, d_j);
  return {stack_members(pop_i, q, padded), stack_members(pop_j, q, padded)};
}

TransferMap build_mapping(const Matrix& a_i, const Matrix& a_j, double ridge,
                          int source_id, int target_id, Index target_dim) {
  if (a_i.cols() != a_j.cols() || a_i.cols() < 1 || a_i.rows() != a_j.rows()) {
    throw std::invalid_argument("build_mapping: incompatible paired matrices");
  }
  const Index p = a_i.rows();
  Matrix gram = a_i * a_i.transpose();
  gram.diagonal().array() += ridge;
  Eigen::FullPivLU<Matrix> lu(gram);
  if (ridge == 0.0 && !lu.isInvertible()) {
    throw std::runtime_error("build_mapping: singular Gram matrix with ridge 0");
  }
  const Matrix cross = a_j * a_i.transpose();
  TransferMap map;
  map.source_id = source_id;
  map.target_id = target_id;
  map.target_dim = target_dim > 0 ? target_dim : p;
  map.ridge = ridge;
  // W^T = gram^{-1} cross^T since gram is symmetric.
  map.weights = lu.solve(cross.transpose()).transpose();
  return map;
}

Vector apply_mapping(const TransferMap& map, const Vector& genome) {
  const Index p = map.weights.cols();
  if (genome.size() > p) throw std::invalid_argument("apply_mapping: genome too long");
  Vector padded = Vector::Zero(p);
  padded.head(genome.size()) = genome;
  Vector mapped = map.weights * padded;
  return mapped.head(map.target_dim).cwiseMax(-1.0).cwiseMin(1.0);
}

Vector apply_mapping_implicit(const Matrix& a_i, const Matrix& a_j, double ridge,
                              const Vector& genome, Index target_dim) {
  if (ridge <= 0.0) {
    throw std::invalid_argument("apply_mapping_implicit: requires ridge > 0");
  }
  if (genome.size() > a_i.rows()) {
    throw std::invalid_argument("apply_mapping_implicit: genome too long");
  }
  Vector padded = Vector::Zero(a_i.rows());
  padded.head(genome.size()) = genome;
  Matrix gram = a_i.transpose() * a_i;
  gram.diagonal().array() += ridge;
  const Vector coeffs = gram.ldlt().solve(a_i.transpose() * padded);
  Vector mapped = a_j * coeffs;
  return mapped.head(target_dim).cwiseMax(-1.0).cwiseMin(1.0);
}

namespace {

void inject(SubPopulation& recipient, const Formulation& form, Vector genome,
            EmbeddedObjective& obj) {
  const double fitness = evaluate_low_dim(form, obj, genome);
  std::size_t slot = recipient.worst_index();
  const std::size_t best = recipient.best_index();
  if (slot == best) slot = (slot + 1) % recipient.members.size();
  recipient.members[slot].genome = std::move(genome);
  recipient.members[slot].fitness = fitness;
}

}  // namespace

std::size_t cross_form_transfer(SubPopulation& pop_i, SubPopulation& pop_j,
                                const Formulation& form_i, const Formulation& form_j,
                                EmbeddedObjective& obj, double ridge) {
  if (pop_i.members.size() < 5 || pop_j.members.size() < 5) {
    throw std::invalid_argument("cross_form_transfer: populations too small");
  }
  const auto [a_i, a_j] = pair_populations(pop_i, pop_j);
  Vector into_j, into_i;
  if (ridge > 0.0) {
    // Column-count-sized solves; identical to the explicit maps up to fp noise.
    into_j = apply_mapping_implicit(a_i, a_j, ridge, pop_i.best().genome, form_j.dim);
    into_i = apply_mapping_implicit(a_j, a_i, ridge, pop_j.best().genome, form_i.dim);
  } else {
    const TransferMap forward =
        build_mapping(a_i, a_j, ridge, form_i.id, form_j.id, form_j.dim);
    const TransferMap backward =
        build_mapping(a_j, a_i, ridge, form_j.id, form_i.id, form_i.dim);
    into_j = apply_mapping(forward, pop_i.best().genome);
    into_i = apply_mapping(backward, pop_j.best().genome);
  }
  inject(pop_j, form_j, std::move(into_j), obj);
  inject(pop_i, form_i, std::move(into_i), obj);
  return 2;
}

}  // namespace multiform
