#include "catsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace catsim {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex total(0.0, 0.0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) total += (*this)(i, i);
  return total;
}

double ComplexMatrix::frobenius_norm() const {
  double total = 0.0;
  for (const auto& v : data_) total += std::norm(v);
  return std::sqrt(total);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

void ComplexMatrix::add_outer(const std::vector<Complex>& v, double weight) {
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) {
    const Complex vi = weight * v[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) {
      (*this)(i, j) += vi * std::conj(v[static_cast<size_t>(j)]);
    }
  }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  out -= b;
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double total = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) total += std::norm(a(i, j));
    }
  }
  return std::sqrt(total);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& input,
                                  bool compute_vectors, double tolerance,
                                  int max_sweeps) {
  if (input.rows() != input.cols()) {
    throw InvalidArgumentError("hermitian_eigensystem: matrix not square");
  }
  const int n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix v =
      compute_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

  const double scale = std::max(1.0, a.frobenius_norm());
  const double stop = tolerance * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double phi = std::arg(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // tan(2 theta) = 2 r / (app - aqq), solved through the stable
        // quadratic root.
        double t;
        const double tau = (app - aqq) / (2.0 * r);
        if (std::abs(tau) > 1e150) {
          t = 1.0 / (2.0 * tau);
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) /
              (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex e_pos = std::polar(1.0, phi);
        const Complex e_neg = std::conj(e_pos);

        // Columns: A <- A J with J[:,p] = (c, s e^{-i phi}),
        // J[:,q] = (-s e^{i phi}, c).
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + s * e_neg * akq;
          a(k, q) = -s * e_pos * akp + c * akq;
        }
        // Rows: A <- J^dagger A.
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + s * e_pos * aqk;
          a(q, k) = -s * e_neg * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (compute_vectors) {
          for (int k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = c * vkp + s * e_neg * vkq;
            v(k, q) = -s * e_pos * vkp + c * vkq;
          }
        }
      }
    }
  }

  EigenSystem out;
  out.eigenvalues.resize(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](int lhs, int rhs) {
    return a(lhs, lhs).real() < a(rhs, rhs).real();
  });
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[static_cast<size_t>(k)] = a(order[static_cast<size_t>(k)],
                                                order[static_cast<size_t>(k)])
                                                  .real();
  }
  if (compute_vectors) {
    out.eigenvectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        out.eigenvectors(i, k) = v(i, order[static_cast<size_t>(k)]);
      }
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          double tolerance, int max_sweeps) {
  return hermitian_eigensystem(a, false, tolerance, max_sweeps).eigenvalues;
}

}  // namespace catsim
