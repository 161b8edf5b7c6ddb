#include "hhlab/scalar_function.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hhlab {

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::Convex: return "Convex";
    case Convexity::OperatorConvex: return "OperatorConvex";
    case Convexity::Concave: return "Concave";
    case Convexity::Neither: return "Neither";
    case Convexity::Unverified: return "Unverified";
  }
  return "Unverified";
}

std::string Interval::describe() const {
  std::ostringstream os;
  os << (open_lo ? '(' : '[') << lo << ", " << hi << (open_hi ? ')' : ']');
  return os.str();
}

ScalarFunction::ScalarFunction(std::string name, Fn eval, Fn deriv, Interval domain,
                               Convexity cls)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      domain_(domain),
      class_(cls) {
  if (!eval_) throw std::invalid_argument("ScalarFunction '" + name_ + "': eval is required");
}

double ScalarFunction::operator()(double x) const {
  if (!domain_.contains(x)) {
    std::ostringstream os;
    os << "function '" << name_ << "': argument " << x << " outside domain "
       << domain_.describe();
    throw std::domain_error(os.str());
  }
  return eval_(x);
}

double ScalarFunction::deriv(double x) const {
  if (!deriv_) throw std::logic_error("function '" + name_ + "' has no derivative");
  if (!domain_.contains(x)) {
    std::ostringstream os;
    os << "function '" << name_ << "': derivative argument " << x << " outside domain "
       << domain_.describe();
    throw std::domain_error(os.str());
  }
  return deriv_(x);
}

ChordCoefficients chord_coefficients(const ScalarFunction& f, double m, double M) {
  if (!(m < M)) throw std::invalid_argument("chord_coefficients: requires m < M");
  if (!f.domain().contains(m, M)) {
    throw std::domain_error("chord_coefficients: [" + std::to_string(m) + ", " +
                            std::to_string(M) + "] not inside domain of '" + f.name() +
                            "' " + f.domain().describe());
  }
  const double fm = f(m);
  const double fM = f(M);
  ChordCoefficients ch;
  ch.a = (fM - fm) / (M - m);
  ch.b = (M * fm - m * fM) / (M - m);
  ch.m = m;
  ch.M = M;
  return ch;
}

ConvexityProbe probe_convexity(const ScalarFunction& f, double m, double M,
                               int grid_points) {
  if (grid_points < 3) throw std::invalid_argument("probe_convexity: grid_points >= 3");
  if (!(m < M)) throw std::invalid_argument("probe_convexity: requires m < M");
  if (!f.domain().contains(m, M)) {
    throw std::domain_error("probe_convexity: interval not inside domain of '" + f.name() +
                            "'");
  }
  std::vector<double> xs(static_cast<std::size_t>(grid_points));
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = m + (M - m) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    fs[i] = f(xs[i]);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i; j < xs.size(); ++j) {
      const double mid = 0.5 * (xs[i] + xs[j]);
      if (f(mid) > 0.5 * (fs[i] + fs[j]) + 1e-9) {
        return {Convexity::Neither, std::make_pair(xs[i], xs[j])};
      }
    }
  }
  return {Convexity::Convex, std::nullopt};
}

const std::vector<ScalarFunction>& builtin_catalog() {
  static const std::vector<ScalarFunction> catalog = [] {
    std::vector<ScalarFunction> fns;
    fns.emplace_back("id", [](double t) { return t; }, [](double) { return 1.0; },
                     Interval::all(), Convexity::OperatorConvex);
    fns.emplace_back("square", [](double t) { return t * t; },
                     [](double t) { return 2.0 * t; }, Interval::all(),
                     Convexity::OperatorConvex);
    fns.emplace_back("pow1.5", [](double t) { return t * std::sqrt(t); },
                     [](double t) { return 1.5 * std::sqrt(t); }, Interval::at_least(0.0),
                     Convexity::OperatorConvex);
    fns.emplace_back("inv", [](double t) { return 1.0 / t; },
                     [](double t) { return -1.0 / (t * t); },
                     Interval::at_least(0.0, /*open=*/true), Convexity::OperatorConvex);
    // t^3 is convex on [0, inf) only; the domain records that restriction.
    fns.emplace_back("cube", [](double t) { return t * t * t; },
                     [](double t) { return 3.0 * t * t; }, Interval::at_least(0.0),
                     Convexity::Convex);
    fns.emplace_back("quart", [](double t) { return (t * t) * (t * t); },
                     [](double t) { return 4.0 * t * t * t; }, Interval::all(),
                     Convexity::Convex);
    fns.emplace_back("exp", [](double t) { return std::exp(t); },
                     [](double t) { return std::exp(t); }, Interval::all(),
                     Convexity::Convex);
    fns.emplace_back("abs", [](double t) { return std::abs(t); }, ScalarFunction::Fn{},
                     Interval::all(), Convexity::Convex);
    fns.emplace_back("sin", [](double t) { return std::sin(t); },
                     [](double t) { return std::cos(t); }, Interval::all(),
                     Convexity::Neither);
    return fns;
  }();
  return catalog;
}

const ScalarFunction* try_find_function(const std::string& name) {
  for (const auto& f : builtin_catalog()) {
    if (f.name() == name) return &f;
  }
  return nullptr;
}

const ScalarFunction& find_function(const std::string& name) {
  if (const ScalarFunction* f = try_find_function(name)) return *f;
  throw std::out_of_range("unknown function '" + name + "'");
}

ScalarFunction polynomial_function(std::string name, std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  auto eval = [coeffs](double t) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
  };
  auto deriv = [coeffs](double t) {
    double acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;)
      acc = acc * t + coeffs[k] * static_cast<double>(k);
    return acc;
  };
  return ScalarFunction(std::move(name), eval, deriv, Interval::all(),
                        Convexity::Unverified);
}

}  // namespace hhlab
