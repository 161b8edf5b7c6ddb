#include "hhlab/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hhlab {

namespace {

constexpr double kAsymmetryTol = 1e-8;

std::size_t idx(int dim, int i, int j) {
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
         static_cast<std::size_t>(j);
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(int dim, std::vector<double> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim_ < 1) throw std::invalid_argument("SymmetricMatrix: dim must be positive");
  const auto n = static_cast<std::size_t>(dim_);
  if (entries_.size() != n * n) {
    throw std::invalid_argument("SymmetricMatrix: expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (double e : entries_) {
    if (!std::isfinite(e)) {
      throw std::invalid_argument("SymmetricMatrix: non-finite entry");
    }
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      const double upper = entries_[idx(dim_, i, j)];
      const double lower = entries_[idx(dim_, j, i)];
      if (std::abs(upper - lower) > kAsymmetryTol) {
        std::ostringstream os;
        os << "SymmetricMatrix: entries (" << i << "," << j << ")=" << upper << " and ("
           << j << "," << i << ")=" << lower << " differ by more than " << kAsymmetryTol;
        throw std::invalid_argument(os.str());
      }
      const double sym = 0.5 * (upper + lower);
      entries_[idx(dim_, i, j)] = sym;
      entries_[idx(dim_, j, i)] = sym;
    }
  }
}

SymmetricMatrix SymmetricMatrix::zero(int dim) {
  if (dim < 1) throw std::invalid_argument("SymmetricMatrix::zero: dim must be positive");
  return SymmetricMatrix(dim, std::vector<double>(
                                  static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                                  0.0));
}

SymmetricMatrix SymmetricMatrix::identity(int dim) {
  SymmetricMatrix m = zero(dim);
  for (int i = 0; i < dim; ++i) m.entries_[idx(dim, i, i)] = 1.0;
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> diag) {
  SymmetricMatrix m = zero(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m.entries_[idx(m.dim(), i, i)] = diag[static_cast<std::size_t>(i)];
  return m;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix addition: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix subtraction: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
  for (double& e : entries_) e *= s;
  return *this;
}

double SymmetricMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double e : entries_) acc += e * e;
  return std::sqrt(acc);
}

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
  a += b;
  return a;
}

SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) {
  a -= b;
  return a;
}

SymmetricMatrix operator*(double s, SymmetricMatrix a) {
  a *= s;
  return a;
}

std::string to_string(LoewnerRelation r) {
  switch (r) {
    case LoewnerRelation::LessEqual: return "LessEqual";
    case LoewnerRelation::GreaterEqual: return "GreaterEqual";
    case LoewnerRelation::Equal: return "Equal";
    case LoewnerRelation::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

SpectralDecomposition spectral_decompose(const SymmetricMatrix& input) {
  const int n = input.dim();
  std::vector<double> a = input.entries();
  std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) v[idx(n, i, i)] = 1.0;

  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += a[idx(n, p, q)] * a[idx(n, p, q)];
    return std::sqrt(2.0 * s);
  };

  const double threshold = 1e-13 * input.frobenius_norm();
  const int max_sweeps = 100;
  bool converged = off_norm() <= threshold;

  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[idx(n, p, q)];
        if (std::abs(apq) == 0.0) continue;
        const double app = a[idx(n, p, p)];
        const double aqq = a[idx(n, q, q)];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[idx(n, p, q)] = 0.0;
        a[idx(n, q, p)] = 0.0;
        a[idx(n, p, p)] = app - t * apq;
        a[idx(n, q, q)] = aqq + t * apq;
        for (int r = 0; r < n; ++r) {
          const double vrp = v[idx(n, r, p)];
          const double vrq = v[idx(n, r, q)];
          v[idx(n, r, p)] = vrp - s * (vrq + tau * vrp);
          v[idx(n, r, q)] = vrq + s * (vrp - tau * vrq);
          if (r == p || r == q) continue;
          const double arp = a[idx(n, r, p)];
          const double arq = a[idx(n, r, q)];
          a[idx(n, r, p)] = arp - s * (arq + tau * arp);
          a[idx(n, p, r)] = a[idx(n, r, p)];
          a[idx(n, r, q)] = arq + s * (arp - tau * arq);
          a[idx(n, q, r)] = a[idx(n, r, q)];
        }
      }
    }
    converged = off_norm() <= threshold;
  }

  if (!converged) {
    std::ostringstream os;
    os << "spectral_decompose: Jacobi iteration on " << n << "x" << n
       << " matrix did not converge after " << max_sweeps
       << " sweeps; off-diagonal residual " << off_norm() << " exceeds threshold "
       << threshold;
    throw std::runtime_error(os.str());
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[idx(n, x, x)] < a[idx(n, y, y)]; });

  SpectralDecomposition sd;
  sd.dim = n;
  sd.eigenvalues.resize(static_cast<std::size_t>(n));
  sd.eigenvectors.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    sd.eigenvalues[static_cast<std::size_t>(k)] = a[idx(n, src, src)];
    for (int i = 0; i < n; ++i) sd.eigenvectors[idx(n, i, k)] = v[idx(n, i, src)];
  }
  return sd;
}

SymmetricMatrix apply_eigen_scalars(const SpectralDecomposition& sd,
                                    std::span<const double> scalars) {
  const int n = sd.dim;
  if (static_cast<int>(scalars.size()) != n) {
    throw std::invalid_argument("apply_eigen_scalars: scalar count != dim");
  }
  std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += sd.eigenvector(i, k) * scalars[static_cast<std::size_t>(k)] *
             sd.eigenvector(j, k);
      }
      out[idx(n, i, j)] = s;
      out[idx(n, j, i)] = s;
    }
  }
  return SymmetricMatrix(n, std::move(out));
}

SymmetricMatrix apply_function(const SymmetricMatrix& a, const ScalarFunction& f) {
  const SpectralDecomposition sd = spectral_decompose(a);
  std::vector<double> mapped(sd.eigenvalues.size());
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    const double lambda = sd.eigenvalues[k];
    if (!f.domain().contains(lambda)) {
      std::ostringstream os;
      os << "apply_function: eigenvalue " << lambda << " outside domain "
         << f.domain().describe() << " of '" << f.name() << "'";
      throw std::domain_error(os.str());
    }
    mapped[k] = f(lambda);
  }
  return apply_eigen_scalars(sd, mapped);
}

LoewnerVerdict loewner_compare(const SymmetricMatrix& a, const SymmetricMatrix& b,
                               double tol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("loewner_compare: dimension mismatch");
  }
  if (tol < 0.0) throw std::invalid_argument("loewner_compare: tolerance must be >= 0");
  const SpectralDecomposition sd = spectral_decompose(b - a);
  LoewnerVerdict verdict;
  verdict.min_eig_of_difference = sd.eigenvalues.front();
  verdict.max_eig_of_difference = sd.eigenvalues.back();
  verdict.tolerance_used = tol;
  const bool le = verdict.min_eig_of_difference >= -tol;  // A <= B
  const bool ge = verdict.max_eig_of_difference <= tol;   // A >= B
  if (le && ge) {
    verdict.relation = LoewnerRelation::Equal;
  } else if (le) {
    verdict.relation = LoewnerRelation::LessEqual;
  } else if (ge) {
    verdict.relation = LoewnerRelation::GreaterEqual;
  } else {
    verdict.relation = LoewnerRelation::Incomparable;
  }
  return verdict;
}

LoewnerVerdict loewner_compare(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  return loewner_compare(a, b, 1e-9 * scale);
}

double operator_norm(const SymmetricMatrix& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  return std::max(std::abs(sd.eigenvalues.front()), std::abs(sd.eigenvalues.back()));
}

SymmetricMatrix absolute_value(const SymmetricMatrix& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  std::vector<double> mapped(sd.eigenvalues.size());
  for (std::size_t k = 0; k < mapped.size(); ++k) mapped[k] = std::abs(sd.eigenvalues[k]);
  return apply_eigen_scalars(sd, mapped);
}

std::pair<double, double> spectral_bounds(std::span<const SymmetricMatrix> ms) {
  if (ms.empty()) throw std::invalid_argument("spectral_bounds: empty matrix list");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const SymmetricMatrix& m : ms) {
    const SpectralDecomposition sd = spectral_decompose(m);
    lo = std::min(lo, sd.eigenvalues.front());
    hi = std::max(hi, sd.eigenvalues.back());
  }
  return {lo, hi};
}

std::vector<double> mat_vec(const SymmetricMatrix& a, std::span<const double> x) {
  const int n = a.dim();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("mat_vec: vector length != dim");
  }
  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

double quadratic_form(const SymmetricMatrix& a, std::span<const double> x) {
  const std::vector<double> ax = mat_vec(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) s += ax[i] * x[i];
  return s;
}

}  // namespace hhlab
