#pragma once

// Exact spectral data of the model hypersurfaces S^k(r) x R^(n-k) solving
// H = -<X, N> + lambda. All quantities live in Q(sqrt(lambda^2 + 4k)).
//
// Orientation: the unit normal is chosen so that <X, N> = -r on the sphere
// factor, which gives H = k / r > 0.

#include <stdexcept>
#include <string>
#include <vector>

#include "pinch/exact/quadratic.hpp"

namespace pinch {

enum class ModelKind { round_sphere, cylinder };
enum class SurfaceEquation { shrinker, lambda_hypersurface };

const char* to_string(ModelKind kind);
const char* to_string(SurfaceEquation eq);

struct ModelSurface {
  ModelKind kind = ModelKind::round_sphere;
  int n = 1;
  int k = 1;
  Rational lambda;
  QuadraticNumber radius;
};

// r = (sqrt(lambda^2 + 4k) - lambda) / 2, or 0 + 1*sqrt(k) when lambda = 0.
// Throws std::invalid_argument unless 1 <= k <= n. Asserts r > 0 and
// lambda r = k - r^2.
ModelSurface make_model(const Rational& lambda, int k, int n);

// k copies of (sqrt(lambda^2 + 4k) + lambda) / (2k) followed by n - k zeros.
std::vector<QuadraticNumber> principal_curvatures(const ModelSurface& m);

// H + <X, N> - lambda. The shrinker equation requires lambda = 0
// (std::invalid_argument otherwise).
QuadraticNumber residual(const ModelSurface& m, SurfaceEquation eq);

// |A|^2 = k mu^2, checked against
//   (lambda^2 + 2k + sign(lambda) |lambda| sqrt(lambda^2 + 4k)) / (2k).
// Throws std::logic_error if the two disagree.
QuadraticNumber norm_S_k(const ModelSurface& m);

struct Admissibility {
  int k = 1;
  bool admissible = false;
  /// Exact sign of S_k - beta.
  Sign versus_beta = Sign::zero;
  QuadraticNumber s_k;
};

// For each 1 <= k <= n, whether S_k equals beta exactly. Throws
// std::invalid_argument for lambda = 0 (every model pinches at |A|^2 = 1).
std::vector<Admissibility> classify_admissible(const Rational& lambda, int n);

// Every exact check on the family S^k(r) x R^(n-k), k = 1..n, at one lambda:
// radius relation, mu r = 1, zero residuals, closed form of S_k, G = 0, the
// sign of S_k - beta (zero only for k = 1 and lambda > 0; for lambda = 0
// every S_k equals 1) and F = 0 on the admissible cylinder.
struct FamilyCheck {
  Rational lambda;
  int n = 1;
  std::vector<Admissibility> admissibility;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::vector<int> admissible_k() const;
};
FamilyCheck check_family(const Rational& lambda, int n);

}  // namespace pinch
