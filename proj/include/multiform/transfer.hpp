#pragma once

#include <utility>

#include "multiform/de.hpp"
#include "multiform/types.hpp"

namespace multiform {

// Closed-form linear mapping between two formulations' genome spaces,
// built on zero-padded representations of dimension max(d_source, d_target).
struct TransferMap {
  int source_id = 0;
  int target_id = 0;
  Matrix weights;  // padded_dim x padded_dim
  Index target_dim = 0;
  double ridge = 0.0;
};

// Stacks genomes column-wise in stored member order, truncated to the common
// size Q; shorter genomes are zero-padded so both matrices share
// max(d_i, d_j) rows. Stored-order pairing keeps the column correspondence
// arbitrary: pairing elites with elites instead would make the fitted map
// return the recipient's own best for any donor best, turning the elite
// exchange into a duplicate injection.
std::pair<Matrix, Matrix> pair_populations(const SubPopulation& pop_i,
                                           const SubPopulation& pop_j);

// W = (A_j A_i^T)(A_i A_i^T + ridge I)^{-1}; ridge 0 requires an invertible
// Gram matrix, otherwise a singular-system error is thrown.
TransferMap build_mapping(const Matrix& a_i, const Matrix& a_j, double ridge,
                          int source_id, int target_id, Index target_dim);

// W * genome (zero-padded), truncated to target_dim and clipped to [-1,1].
Vector apply_mapping(const TransferMap& map, const Vector& genome);

// Same map applied without materializing W, via the push-through identity
// W g = A_j (A_i^T A_i + ridge I)^{-1} A_i^T g. Requires ridge > 0; the
// cost scales with the column count instead of the padded dimension.
Vector apply_mapping_implicit(const Matrix& a_i, const Matrix& a_j, double ridge,
                              const Vector& genome, Index target_dim);

// Bidirectional elite exchange between two subpopulations (2 FEs): each side's
// best is mapped into the other's space, evaluated, and replaces the
// recipient's worst member unconditionally. Returns FEs used.
std::size_t cross_form_transfer(SubPopulation& pop_i, SubPopulation& pop_j,
                                const Formulation& form_i, const Formulation& form_j,
                                EmbeddedObjective& obj, double ridge);

}  // namespace multiform
