#include "mdgas/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mdgas/error.hpp"

namespace mdgas {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
      throw InvalidArgument("not a permutation in one-line notation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::adjacent_transposition(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw InvalidArgument("adjacent transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i], p.images_[i + 1]);
  return p;
}

Permutation Permutation::sorting(std::span<const double> x) {
  Permutation q = identity(x.size());
  std::sort(q.images_.begin(), q.images_.end(),
            [&](int a, int b) { return x[a] < x[b]; });
  for (std::size_t r = 1; r < x.size(); ++r)
    if (!(x[q.images_[r - 1]] < x[q.images_[r]]))
      throw DegenerateInput("coinciding coordinates: point lies on a sector boundary");
  return q;
}

int Permutation::sign() const {
  std::vector<bool> seen(size(), false);
  int s = 1;
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t j = start; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(size());
  for (std::size_t j = 0; j < size(); ++j) p.images_[images_[j]] = static_cast<int>(j);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < size(); ++j)
    if (images_[j] != static_cast<int>(j)) return false;
  return true;
}

std::size_t Permutation::lex_rank() const {
  // Lehmer code read in factorial base.
  std::size_t rank = 0;
  const std::size_t n = size();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t smaller = 0;
    for (std::size_t l = j + 1; l < n; ++l)
      if (images_[l] < images_[j]) ++smaller;
    rank = rank * (n - j) + smaller;
  }
  return rank;
}

Permutation Permutation::from_lex_rank(std::size_t n, std::size_t rank) {
  if (rank >= factorial(n)) throw InvalidArgument("lexicographic rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> im;
  im.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t block = factorial(n - 1 - j);
    const std::size_t pick = rank / block;
    rank %= block;
    im.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < size(); ++j) os << (j ? "," : "") << images_[j] + 1;
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InvalidArgument("permutation sizes differ");
  Permutation r;
  r.images_.resize(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) r.images_[j] = p.images_[q.images_[j]];
  return r;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t j = 2; j <= n; ++j) f *= j;
  return f;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace mdgas
