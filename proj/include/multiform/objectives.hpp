#pragma once

#include <cstdint>
#include <string>

#include "multiform/types.hpp"

namespace multiform {

// The six base benchmark functions. Each attains its minimum value 0.
enum class BaseFunction { Ackley, Rastrigin, Weierstrass, Rosenbrock, Griewank, Elliptic };

struct NativeRange {
  double lower;
  double upper;
};

NativeRange native_range(BaseFunction fn);

BaseFunction base_function_from_name(const std::string& name);
std::string base_function_name(BaseFunction fn);

// Evaluates the base formula at normalized coordinates z in [-1,1]^d
// (affinely mapped to the native range first). Total function: z outside
// the unit box is still evaluated.
double eval_base(BaseFunction fn, const Vector& z);

// Normalized coordinates of the base function's global optimum in d dimensions.
Vector base_optimum(BaseFunction fn, Index d);

// Haar-uniform random orthogonal matrix: QR of a standard-Gaussian matrix
// with column signs fixed so diag(R) > 0. Consumes D*D normal draws.
Matrix random_rotation(Index dim, Rng& rng);

// A rotated, shifted high-dimensional objective whose value depends only on
// an effective subspace of dimension effective_dim. Search box is [-1,1]^D.
class EmbeddedObjective {
 public:
  EmbeddedObjective(BaseFunction base, Index ambient_dim, Index effective_dim,
                    Matrix rotation, Vector shift);

  // One function evaluation; x must lie in [-1,1]^D. Increments eval_count.
  double evaluate(const Vector& x);

  // x* = s + R^T pad(z*, 0); evaluate(known_optimum()) == 0.
  Vector known_optimum() const;

  BaseFunction base() const { return base_; }
  Index ambient_dim() const { return ambient_dim_; }
  Index effective_dim() const { return effective_dim_; }
  const Matrix& rotation() const { return rotation_; }
  const Vector& shift() const { return shift_; }
  std::uint64_t eval_count() const { return eval_count_; }

 private:
  BaseFunction base_;
  Index ambient_dim_;
  Index effective_dim_;
  Matrix rotation_;
  Vector shift_;
  std::uint64_t eval_count_ = 0;
};

// Builds rotation and shift from the rng. The shift is uniform in
// [-0.25,0.25]^D, redrawn until the known optimum lies inside [-1,1]^D.
EmbeddedObjective make_embedded(BaseFunction fn, Index ambient_dim,
                                Index effective_dim, Rng& rng);

}  // namespace multiform
