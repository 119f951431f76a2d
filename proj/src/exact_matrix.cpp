#include "mdgas/exact_matrix.hpp"

#include "mdgas/error.hpp"

namespace mdgas {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) m(r, r) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_permutation_matrix() const {
  std::vector<int> col_count(dim_, 0);
  for (std::size_t r = 0; r < dim_; ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto& x = (*this)(r, c);
      if (x.is_zero()) continue;
      if (!(x == GaussianRational(1))) return false;
      ++row_count;
      ++col_count[c];
    }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (!x.is_zero()) ++n;
  return n;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw InvalidArgument("matrix dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidArgument("matrix dimensions differ");
  const std::size_t n = a.dim_;
  // Row-sparse view of b.
  std::vector<std::vector<std::size_t>> b_cols(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c)
      if (!b(k, c).is_zero()) b_cols[k].push_back(c);

  ExactMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c : b_cols[k]) out(r, c) += x * b(k, c);
    }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.dim_ == b.dim_ && a.data_ == b.data_;
}

std::vector<GaussianRational> ExactMatrix::apply(const std::vector<GaussianRational>& v) const {
  if (v.size() != dim_) throw InvalidArgument("vector dimension differs");
  std::vector<GaussianRational> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto& x = (*this)(r, c);
      if (!x.is_zero() && !v[c].is_zero()) out[r] += x * v[c];
    }
  return out;
}

}  // namespace mdgas
