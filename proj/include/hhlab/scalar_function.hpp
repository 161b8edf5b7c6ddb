#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhlab {

enum class Convexity { Convex, OperatorConvex, Concave, Neither, Unverified };

std::string to_string(Convexity c);

/// Real interval with independently open/closed endpoints; function domains.
/// Evaluation at an open endpoint is a domain error, never an extrapolation.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool open_lo = false;
  bool open_hi = false;

  bool contains(double x) const {
    if (open_lo ? !(x > lo) : !(x >= lo)) return false;
    if (open_hi ? !(x < hi) : !(x <= hi)) return false;
    return true;
  }
  bool contains(double a, double b) const { return contains(a) && contains(b); }

  static Interval all() { return {}; }
  static Interval at_least(double lo, bool open = false) {
    return {lo, std::numeric_limits<double>::infinity(), open, false};
  }

  std::string describe() const;
};

/// Evaluable scalar function with an optional derivative and a declared
/// convexity class. The class is a label carried by the catalog (operator
/// convexity is never certified numerically here); probe_convexity() can
/// verify plain convexity on a grid.
class ScalarFunction {
public:
  using Fn = std::function<double(double)>;

  ScalarFunction(std::string name, Fn eval, Fn deriv, Interval domain, Convexity cls);

  const std::string& name() const { return name_; }
  const Interval& domain() const { return domain_; }
  Convexity convexity_class() const { return class_; }
  bool has_deriv() const { return static_cast<bool>(deriv_); }

  /// Domain-checked evaluation; throws std::domain_error outside the domain.
  double operator()(double x) const;

  /// Domain-checked derivative; throws std::logic_error when absent.
  double deriv(double x) const;

private:
  std::string name_;
  Fn eval_;
  Fn deriv_;
  Interval domain_;
  Convexity class_;
};

/// Secant line of f through (m, f(m)) and (M, f(M)): slope a, intercept b.
/// For convex f the chord dominates f on [m, M].
struct ChordCoefficients {
  double a = 0.0;
  double b = 0.0;
  double m = 0.0;
  double M = 0.0;

  double operator()(double x) const { return a * x + b; }
};

ChordCoefficients chord_coefficients(const ScalarFunction& f, double m, double M);

struct ConvexityProbe {
  Convexity verdict = Convexity::Unverified;
  /// Pair (x, y) violating the midpoint inequality when verdict is Neither.
  std::optional<std::pair<double, double>> witness;
};

/// Midpoint-inequality probe on a uniform grid over [m, M]. Returns Convex
/// when f((x+y)/2) <= (f(x)+f(y))/2 + 1e-9 for all grid pairs, otherwise
/// Neither with a witness pair.
ConvexityProbe probe_convexity(const ScalarFunction& f, double m, double M,
                               int grid_points = 101);

/// Built-in function catalog. Operator-convex labels follow the classical
/// facts (t^p for 1<=p<=2, t^-1 on (0,inf), affine maps); t^3, t^4 and e^t
/// are convex but not operator convex.
const std::vector<ScalarFunction>& builtin_catalog();

/// Catalog lookup by name; throws std::out_of_range for unknown names.
const ScalarFunction& find_function(const std::string& name);
const ScalarFunction* try_find_function(const std::string& name);

/// Polynomial sum coeffs[k] * t^k with exact derivative, domain R, class
/// Unverified (probe before relying on convexity).
ScalarFunction polynomial_function(std::string name, std::vector<double> coeffs);

}  // namespace hhlab
