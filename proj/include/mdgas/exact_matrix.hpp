#pragma once

#include <cstddef>
#include <vector>

#include "mdgas/gaussian_rational.hpp"

namespace mdgas {

/// Square matrix over the Gaussian rationals. Products skip zero entries, so
/// the sparse operators of the regular representation stay cheap.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim);

  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  bool is_zero() const;
  bool is_permutation_matrix() const;
  std::size_t nonzeros() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> data_;
};

}  // namespace mdgas
