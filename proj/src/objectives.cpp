#include "multiform/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace multiform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite_nonempty(const Vector& z) {
  if (z.size() == 0) throw std::invalid_argument("eval_base: empty input vector");
  if (!z.allFinite()) throw std::invalid_argument("eval_base: non-finite input");
}

double ackley(const Vector& x) {
  const double d = static_cast<double>(x.size());
  const double sum_sq = x.squaredNorm() / d;
  const double sum_cos = (kTwoPi * x.array()).cos().sum() / d;
  return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq)) - std::exp(sum_cos) + 20.0 +
         std::numbers::e;
}

double rastrigin(const Vector& x) {
  const double d = static_cast<double>(x.size());
  return 10.0 * d + (x.array().square() - 10.0 * (kTwoPi * x.array()).cos()).sum();
}

double weierstrass(const Vector& x) {
  const double d = static_cast<double>(x.size());
  double total = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    double pow_half = 1.0;
    double pow_three = 1.0;
    for (int k = 0; k <= 20; ++k) {
      total += pow_half * std::cos(kTwoPi * pow_three * (x[i] + 0.5));
      pow_half *= 0.5;
      pow_three *= 3.0;
    }
  }
  double offset = 0.0;
  {
    double pow_half = 1.0;
    double pow_three = 1.0;
    for (int k = 0; k <= 20; ++k) {
      offset += pow_half * std::cos(kTwoPi * pow_three * 0.5);
      pow_half *= 0.5;
      pow_three *= 3.0;
    }
  }
  return total - d * offset;
}

double rosenbrock(const Vector& x) {
  double total = 0.0;
  for (Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    total += 100.0 * a * a + b * b;
  }
  return total;
}

double griewank(const Vector& x) {
  double prod = 1.0;
  for (Index i = 0; i < x.size(); ++i) {
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return x.squaredNorm() / 4000.0 - prod + 1.0;
}

double elliptic(const Vector& x) {
  const Index d = x.size();
  if (d == 1) return x[0] * x[0];
  double total = 0.0;
  for (Index i = 0; i < d; ++i) {
    const double expo = 6.0 * static_cast<double>(i) / static_cast<double>(d - 1);
    total += std::pow(10.0, expo) * x[i] * x[i];
  }
  return total;
}

}  // namespace

NativeRange native_range(BaseFunction fn) {
  switch (fn) {
    case BaseFunction::Ackley: return {-32.0, 32.0};
    case BaseFunction::Rastrigin: return {-5.0, 5.0};
    case BaseFunction::Weierstrass: return {-0.5, 0.5};
    case BaseFunction::Rosenbrock: return {-5.0, 5.0};
    case BaseFunction::Griewank: return {-500.0, 500.0};
    case BaseFunction::Elliptic: return {-5.0, 5.0};
  }
  throw std::invalid_argument("unknown base function");
}

BaseFunction base_function_from_name(const std::string& name) {
  if (name == "ackley") return BaseFunction::Ackley;
  if (name == "rastrigin") return BaseFunction::Rastrigin;
  if (name == "weierstrass") return BaseFunction::Weierstrass;
  if (name == "rosenbrock") return BaseFunction::Rosenbrock;
  if (name == "griewank") return BaseFunction::Griewank;
  if (name == "elliptic") return BaseFunction::Elliptic;
  throw std::invalid_argument("unknown function name: " + name);
}

std::string base_function_name(BaseFunction fn) {
  switch (fn) {
    case BaseFunction::Ackley: return "ackley";
    case BaseFunction::Rastrigin: return "rastrigin";
    case BaseFunction::Weierstrass: return "weierstrass";
    case BaseFunction::Rosenbrock: return "rosenbrock";
    case BaseFunction::Griewank: return "griewank";
    case BaseFunction::Elliptic: return "elliptic";
  }
  throw std::invalid_argument("unknown base function");
}

double eval_base(BaseFunction fn, const Vector& z) {
  require_finite_nonempty(z);
  const NativeRange r = native_range(fn);
  const Vector x = r.lower + (z.array() + 1.0) * (r.upper - r.lower) * 0.5;
  switch (fn) {
    case BaseFunction::Ackley: return ackley(x);
    case BaseFunction::Rastrigin: return rastrigin(x);
    case BaseFunction::Weierstrass: return weierstrass(x);
    case BaseFunction::Rosenbrock: return rosenbrock(x);
    case BaseFunction::Griewank: return griewank(x);
    case BaseFunction::Elliptic: return elliptic(x);
  }
  throw std::invalid_argument("unknown base function");
}

Vector base_optimum(BaseFunction fn, Index d) {
  if (fn == BaseFunction::Rosenbrock) {
    // Native optimum at all-ones; [-5,5] maps 1 to normalized 0.2.
    return Vector::Constant(d, 0.2);
  }
  return Vector::Zero(d);
}

Matrix random_rotation(Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_rotation: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix a(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) a(i, j) = gauss(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix& packed = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    if (packed(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

EmbeddedObjective::EmbeddedObjective(BaseFunction base, Index ambient_dim,
                                     Index effective_dim, Matrix rotation,
                                     Vector shift)
    : base_(base),
      ambient_dim_(ambient_dim),
      effective_dim_(effective_dim),
      rotation_(std::move(rotation)),
      shift_(std::move(shift)) {
  if (effective_dim_ < 1 || effective_dim_ >= ambient_dim_) {
    throw std::invalid_argument("EmbeddedObjective: need 1 <= d_e < D");
  }
  if (rotation_.rows() != ambient_dim_ || rotation_.cols() != ambient_dim_ ||
      shift_.size() != ambient_dim_) {
    throw std::invalid_argument("EmbeddedObjective: shape mismatch");
  }
}

double EmbeddedObjective::evaluate(const Vector& x) {
  if (x.size() != ambient_dim_) {
    throw std::invalid_argument("evaluate: wrong dimension");
  }
  if (!x.allFinite() || (x.array().abs() > 1.0).any()) {
    throw std::invalid_argument("evaluate: point outside [-1,1]^D");
  }
  // Extended-precision accumulation keeps the constant-subspace invariance
  // tight even for the ill-scaled elliptic coefficients.
  const Vector centered = x - shift_;
  Vector z(effective_dim_);
  for (Index r = 0; r < effective_dim_; ++r) {
    long double acc = 0.0L;
    for (Index c = 0; c < ambient_dim_; ++c) {
      acc += static_cast<long double>(rotation_(r, c)) * centered[c];
    }
    z[r] = static_cast<double>(acc);
  }
  ++eval_count_;
  return eval_base(base_, z);
}

Vector EmbeddedObjective::known_optimum() const {
  const Vector zstar = base_optimum(base_, effective_dim_);
  return shift_ + rotation_.topRows(effective_dim_).transpose() * zstar;
}

EmbeddedObjective make_embedded(BaseFunction fn, Index ambient_dim,
                                Index effective_dim, Rng& rng) {
  if (effective_dim < 1 || effective_dim >= ambient_dim) {
    throw std::invalid_argument("make_embedded: need 1 <= d_e < D");
  }
  Matrix rotation = random_rotation(ambient_dim, rng);
  const Vector zstar = base_optimum(fn, effective_dim);
  const Vector lifted = rotation.topRows(effective_dim).transpose() * zstar;
  std::uniform_real_distribution<double> shift_draw(-0.25, 0.25);
  Vector shift(ambient_dim);
  while (true) {
    for (Index i = 0; i < ambient_dim; ++i) shift[i] = shift_draw(rng);
    if (((shift + lifted).array().abs() <= 1.0).all()) break;
  }
  return EmbeddedObjective(fn, ambient_dim, effective_dim, std::move(rotation),
                           std::move(shift));
}

}  // namespace multiform
