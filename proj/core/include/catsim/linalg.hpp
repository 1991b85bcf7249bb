#ifndef CATSIM_LINALG_HPP
#define CATSIM_LINALG_HPP

#include <complex>
#include <vector>

#include "catsim/errors.hpp"
#include "catsim/fock.hpp"

namespace catsim {

/// Dense row-major complex matrix, sized for the truncated Fock spaces
/// this library works with (dimensions of a few hundred).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  Complex trace() const;
  double frobenius_norm() const;
  ComplexMatrix adjoint() const;

  /// this += weight * v v^dagger (v given as a contiguous vector).
  void add_outer(const std::vector<Complex>& v, double weight = 1.0);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(double scale);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Stops when the
/// off-diagonal Frobenius mass drops below `tolerance` (relative to the
/// input scale) or after `max_sweeps` sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a,
                                  bool compute_vectors = true,
                                  double tolerance = 1e-12,
                                  int max_sweeps = 100);

/// Eigenvalues only; same stopping rule.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tolerance = 1e-12,
                                          int max_sweeps = 100);

}  // namespace catsim

#endif
