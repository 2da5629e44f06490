#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace multiform {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Single RNG type used everywhere; draw order is part of the reproducibility
// contract, so all stochastic routines document their consumption.
using Rng = std::mt19937_64;

}  // namespace multiform
