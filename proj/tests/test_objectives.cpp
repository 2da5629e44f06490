#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "multiform/objectives.hpp"

using namespace multiform;

namespace {

Vector native_to_normalized(BaseFunction fn, const Vector& x) {
  const NativeRange r = native_range(fn);
  return 2.0 * (x.array() - r.lower) / (r.upper - r.lower) - 1.0;
}

}  // namespace

TEST_CASE("native ranges match the benchmark table") {
  CHECK(native_range(BaseFunction::Ackley).lower == -32.0);
  CHECK(native_range(BaseFunction::Ackley).upper == 32.0);
  CHECK(native_range(BaseFunction::Rastrigin).lower == -5.0);
  CHECK(native_range(BaseFunction::Weierstrass).upper == 0.5);
  CHECK(native_range(BaseFunction::Rosenbrock).upper == 5.0);
  CHECK(native_range(BaseFunction::Griewank).lower == -500.0);
  CHECK(native_range(BaseFunction::Elliptic).upper == 5.0);
}

TEST_CASE("eval_base at the known optima") {
  for (Index d : {1, 3, 7}) {
    for (BaseFunction fn :
         {BaseFunction::Ackley, BaseFunction::Rastrigin, BaseFunction::Weierstrass,
          BaseFunction::Rosenbrock, BaseFunction::Griewank, BaseFunction::Elliptic}) {
      CHECK(eval_base(fn, base_optimum(fn, d)) == doctest::Approx(0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("eval_base hand-computed values") {
  // Rastrigin, native x = [0.5]: 10 + 0.25 - 10 cos(pi) = 20.25.
  Vector x(1);
  x << 0.5;
  CHECK(eval_base(BaseFunction::Rastrigin,
                  native_to_normalized(BaseFunction::Rastrigin, x)) ==
        doctest::Approx(20.25).epsilon(1e-12));

  // Ackley, native x = [1]: 20(1 - e^{-0.2}).
  x << 1.0;
  CHECK(eval_base(BaseFunction::Ackley,
                  native_to_normalized(BaseFunction::Ackley, x)) ==
        doctest::Approx(20.0 * (1.0 - std::exp(-0.2))).epsilon(1e-12));
}

TEST_CASE("eval_base rejects bad inputs") {
  CHECK_THROWS_AS(eval_base(BaseFunction::Ackley, Vector{}), std::invalid_argument);
  Vector bad(2);
  bad << 0.0, std::nan("");
  CHECK_THROWS_AS(eval_base(BaseFunction::Ackley, bad), std::invalid_argument);
}

TEST_CASE("eval_base is non-negative at random points") {
  Rng rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (BaseFunction fn :
       {BaseFunction::Ackley, BaseFunction::Rastrigin, BaseFunction::Weierstrass,
        BaseFunction::Rosenbrock, BaseFunction::Griewank, BaseFunction::Elliptic}) {
    double min_seen = 1.0;
    for (int trial = 0; trial < 10000; ++trial) {
      Vector z(3);
      for (Index i = 0; i < 3; ++i) z[i] = unit(rng);
      min_seen = std::min(min_seen, eval_base(fn, z));
    }
    CHECK(min_seen >= -1e-12);
  }
}

TEST_CASE("random_rotation is orthogonal and Haar-signed") {
  Rng rng(42);
  const Matrix one = random_rotation(1, rng);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);

  const Matrix q3 = random_rotation(3, rng);
  CHECK(((q3 * q3.transpose() - Matrix::Identity(3, 3)).array().abs().maxCoeff()) <=
        1e-12);

  const Matrix q50 = random_rotation(50, rng);
  Eigen::FullPivLU<Matrix> lu(q50);
  CHECK(std::abs(std::abs(lu.determinant()) - 1.0) < 1e-9);

  CHECK_THROWS_AS(random_rotation(0, rng), std::invalid_argument);
}

TEST_CASE("random_rotation is seed-deterministic") {
  Rng a(11), b(11);
  CHECK(random_rotation(8, a) == random_rotation(8, b));
}

TEST_CASE("make_embedded places the optimum inside the box") {
  for (BaseFunction fn :
       {BaseFunction::Ackley, BaseFunction::Rastrigin, BaseFunction::Weierstrass,
        BaseFunction::Rosenbrock, BaseFunction::Griewank, BaseFunction::Elliptic}) {
    Rng rng(3);
    EmbeddedObjective obj = make_embedded(fn, 10, 2, rng);
    const Vector xstar = obj.known_optimum();
    CHECK((xstar.array().abs() <= 1.0).all());
    CHECK(obj.evaluate(xstar) <= 1e-9);
  }
}

TEST_CASE("make_embedded rejects d_e >= D") {
  Rng rng(0);
  CHECK_THROWS_AS(make_embedded(BaseFunction::Ackley, 5, 5, rng),
                  std::invalid_argument);
}

TEST_CASE("identity rotation depends only on leading coordinates") {
  EmbeddedObjective obj(BaseFunction::Rastrigin, 6, 2, Matrix::Identity(6, 6),
                        Vector::Zero(6));
  Rng rng(5);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = Vector::Zero(6);
    for (Index i = 0; i < 6; ++i) x[i] = unit(rng);
    Vector y = x;
    for (Index i = 2; i < 6; ++i) y[i] = unit(rng);
    CHECK(obj.evaluate(x) == doctest::Approx(obj.evaluate(y)).epsilon(1e-12));
  }
}

TEST_CASE("constant-subspace perturbations leave the value unchanged") {
  Rng rng(17);
  EmbeddedObjective obj = make_embedded(BaseFunction::Griewank, 20, 4, rng);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const Matrix null_rows = obj.rotation().bottomRows(16);
  for (int trial = 0; trial < 100; ++trial) {
    Vector x(20);
    for (Index i = 0; i < 20; ++i) x[i] = 0.4 * unit(rng);
    Vector coeffs(16);
    for (Index i = 0; i < 16; ++i) coeffs[i] = unit(rng);
    Vector delta = null_rows.transpose() * coeffs;
    // Scale so x + delta stays inside the box.
    delta /= std::max(1.0, delta.array().abs().maxCoeff() / 0.5);
    CHECK(std::abs(obj.evaluate(x) - obj.evaluate(x + delta)) <= 1e-9);
  }
}

TEST_CASE("eval_count increments by exactly one per evaluation") {
  Rng rng(1);
  EmbeddedObjective obj = make_embedded(BaseFunction::Ackley, 8, 2, rng);
  CHECK(obj.eval_count() == 0);
  obj.evaluate(Vector::Zero(8));
  obj.evaluate(Vector::Zero(8));
  CHECK(obj.eval_count() == 2);
}

TEST_CASE("evaluate rejects points outside the box") {
  Rng rng(1);
  EmbeddedObjective obj = make_embedded(BaseFunction::Ackley, 8, 2, rng);
  Vector x = Vector::Zero(8);
  x[3] = 1.5;
  CHECK_THROWS_AS(obj.evaluate(x), std::invalid_argument);
}

TEST_CASE("known_optimum equals the shift for zero-optimum functions") {
  for (BaseFunction fn :
       {BaseFunction::Ackley, BaseFunction::Rastrigin, BaseFunction::Griewank,
        BaseFunction::Weierstrass, BaseFunction::Elliptic}) {
    Rng rng(9);
    EmbeddedObjective obj = make_embedded(fn, 12, 3, rng);
    CHECK((obj.known_optimum() - obj.shift()).norm() < 1e-14);
  }
}

TEST_CASE("known_optimum for Rosenbrock with identity rotation") {
  EmbeddedObjective obj(BaseFunction::Rosenbrock, 5, 2, Matrix::Identity(5, 5),
                        Vector::Zero(5));
  Vector expected(5);
  expected << 0.2, 0.2, 0.0, 0.0, 0.0;
  CHECK((obj.known_optimum() - expected).norm() < 1e-14);
  CHECK(obj.evaluate(obj.known_optimum()) <= 1e-12);
}

TEST_CASE("same seed gives bit-identical rotation and shift") {
  Rng a(123), b(123);
  EmbeddedObjective o1 = make_embedded(BaseFunction::Elliptic, 15, 4, a);
  EmbeddedObjective o2 = make_embedded(BaseFunction::Elliptic, 15, 4, b);
  CHECK(o1.rotation() == o2.rotation());
  CHECK(o1.shift() == o2.shift());
}
