#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace mdgas {

/// Element of S_N in zero-based one-line notation: p(j) = images()[j].
///
/// Products compose right to left, (p * q)(j) = p(q(j)), so that the
/// regular representation R -> R^ with (R^ v)(Q) = v(Q R) is a homomorphism.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  /// Adjacent transposition T_i swapping positions i and i+1 (zero-based i).
  static Permutation adjacent_transposition(std::size_t n, std::size_t i);
  /// Q with x[Q(0)] < x[Q(1)] < ... ; throws DegenerateInput on ties.
  static Permutation sorting(std::span<const double> x);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t j) const { return images_[j]; }
  const std::vector<int>& images() const { return images_; }

  int sign() const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Rank in lexicographic order of one-line notation, 0 .. n!-1.
  std::size_t lex_rank() const;
  static Permutation from_lex_rank(std::size_t n, std::size_t rank);

  std::string to_string() const;  // one-based, e.g. "[2,1,3]"

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::size_t factorial(std::size_t n);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace mdgas
