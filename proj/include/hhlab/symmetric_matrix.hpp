#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hhlab/scalar_function.hpp"

namespace hhlab {

/// Dense real symmetric matrix; the finite-dimensional stand-in for a self
/// adjoint operator. Construction symmetrizes (M^T + M)/2; asymmetry beyond
/// 1e-8 or a non-finite entry is an error.
class SymmetricMatrix {
public:
  SymmetricMatrix(int dim, std::vector<double> row_major);

  static SymmetricMatrix zero(int dim);
  static SymmetricMatrix identity(int dim);
  static SymmetricMatrix diagonal(std::span<const double> diag);

  int dim() const { return dim_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                    static_cast<std::size_t>(j)];
  }
  const std::vector<double>& entries() const { return entries_; }

  SymmetricMatrix& operator+=(const SymmetricMatrix& o);
  SymmetricMatrix& operator-=(const SymmetricMatrix& o);
  SymmetricMatrix& operator*=(double s);

  double frobenius_norm() const;

private:
  int dim_;
  std::vector<double> entries_;  // row-major dim x dim
};

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double s, SymmetricMatrix a);

/// Eigenvalues (ascending) with orthonormal eigenvectors; column k of the
/// eigenvector matrix pairs with eigenvalue k. Eigenvector signs and the
/// ordering inside an eigenvalue tie are solver artifacts; nothing downstream
/// may depend on them.
struct SpectralDecomposition {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // row-major dim x dim

  double eigenvector(int i, int k) const {
    return eigenvectors[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                        static_cast<std::size_t>(k)];
  }
};

enum class LoewnerRelation { LessEqual, GreaterEqual, Equal, Incomparable };

std::string to_string(LoewnerRelation r);

/// Outcome of comparing A and B in the Loewner order, computed from the
/// spectrum of B - A.
struct LoewnerVerdict {
  LoewnerRelation relation = LoewnerRelation::Incomparable;
  double min_eig_of_difference = 0.0;  // of B - A
  double max_eig_of_difference = 0.0;
  double tolerance_used = 0.0;
};

/// Cyclic Jacobi eigensolver; deterministic for a fixed input (fixed sweep
/// order, off-diagonal Frobenius threshold 1e-13 * ||A||_F, 100 sweep cap).
SpectralDecomposition spectral_decompose(const SymmetricMatrix& a);

/// Functional calculus f(A) = U f(Lambda) U^T. Every eigenvalue must lie in
/// the domain of f.
SymmetricMatrix apply_function(const SymmetricMatrix& a, const ScalarFunction& f);

/// U diag(scalars) U^T for an existing decomposition; scalars[k] pairs with
/// eigenvalue k.
SymmetricMatrix apply_eigen_scalars(const SpectralDecomposition& sd,
                                    std::span<const double> scalars);

LoewnerVerdict loewner_compare(const SymmetricMatrix& a, const SymmetricMatrix& b,
                               double tol);

/// Default tolerance 1e-9 scaled by max(1, ||A||, ||B||).
LoewnerVerdict loewner_compare(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Spectral norm: max |eigenvalue|.
double operator_norm(const SymmetricMatrix& a);

/// |A| = (A^2)^(1/2) = U |Lambda| U^T.
SymmetricMatrix absolute_value(const SymmetricMatrix& a);

/// (m, M) with m the least and M the greatest eigenvalue over all matrices.
std::pair<double, double> spectral_bounds(std::span<const SymmetricMatrix> ms);

std::vector<double> mat_vec(const SymmetricMatrix& a, std::span<const double> x);

/// <Ax, x>.
double quadratic_form(const SymmetricMatrix& a, std::span<const double> x);

}  // namespace hhlab
