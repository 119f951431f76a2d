#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mdgas/exact_matrix.hpp"
#include "mdgas/permutation.hpp"

namespace mdgas {

/// Regular-representation matrices are N! x N!; exact products are kept to N <= 6.
inline constexpr std::size_t kMaxYangParticles = 6;

/// Right-regular representation of S_N on functions of S_N,
/// (R^ v)(Q) = v(Q R), in the lexicographic basis of one-line notation.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Permutation>& basis() const { return basis_; }

  ExactMatrix matrix(const Permutation& r) const;
  /// T^_i for the adjacent transposition of sites i, i+1 (one-based site).
  ExactMatrix transposition(std::size_t site) const;

  /// Spans of the trivial (T^_i -> +1) and sign (T^_i -> -1) subrepresentations.
  std::vector<GaussianRational> trivial_vector() const;
  std::vector<GaussianRational> sign_vector() const;

 private:
  std::size_t n_;
  std::vector<Permutation> basis_;
};

ExactMatrix regular_rep(const Permutation& r);

struct YangOperator {
  std::size_t n = 0;
  std::size_t site = 0;  // one-based
  Rational u;
  Rational inv_lambda;
  ExactMatrix matrix;
};

/// Y_i(u) = (i u I - (1/lambda) T^_i) / (i u - 1/lambda).
YangOperator yang_op(std::size_t site, const Rational& u, const Rational& lambda,
                     std::size_t n);

/// Y_i(u) restricted to a one-dimensional representation where T^_i acts as
/// `t_eigenvalue` (+1 trivial, -1 sign).
GaussianRational yang_scalar(const Rational& u, const Rational& lambda, int t_eigenvalue);

/// Exact truth of Y_i(-u) Y_i(u) = I.
bool check_unitarity(std::size_t site, const Rational& u, const Rational& lambda,
                     std::size_t n);

struct DefectReport {
  ExactMatrix defect;
  bool nonzero = false;
  std::size_t first_row = 0;  // first nonzero entry in row-major order
  std::size_t first_col = 0;
  GaussianRational first_entry;
  GaussianRational max_entry;  // entry of largest modulus
  Rational max_norm2;          // its squared modulus
  bool zero_on_trivial = false;
  bool zero_on_sign = false;
  GaussianRational trivial_scalar_defect;
  GaussianRational sign_scalar_defect;
};

/// Operator family u -> Y_site(u) on the regular representation.
using SiteOperator = std::function<ExactMatrix(std::size_t site, const Rational& u)>;

/// D = Y_i(v) Y_{i+1}(u+v) Y_i(u) - Y_{i+1}(u) Y_i(v+u) Y_{i+1}(v) with the
/// one-dimensional projections filled from `scalar` (nullptr leaves them
/// derived from the matrix alone).
DefectReport braid_defect(const RegularRepresentation& rep, const SiteOperator& op,
                          std::size_t site, const Rational& u, const Rational& v);

DefectReport yb_defect(std::size_t site, const Rational& u, const Rational& v,
                       const Rational& lambda, std::size_t n);

/// Sign choice in (s_u u T^_i + s_c i c I) / (u - i c).
struct DeltaVariant {
  int u_sign = +1;
  int c_sign = +1;
  std::string label() const;
};

/// Candidate order: (+,+), (+,-), (-,+), (-,-).
std::vector<DeltaVariant> delta_variants();

ExactMatrix delta_yang_matrix(std::size_t site, const Rational& u, const Rational& c,
                              std::size_t n, const DeltaVariant& variant);

bool delta_unitarity(std::size_t site, const Rational& u, const Rational& c, std::size_t n,
                     const DeltaVariant& variant);

/// First candidate passing exact unitarity and exact Yang-Baxter at the probe
/// N = 3, i = 1, u = 1, v = 2, c = 1. Throws if none does.
DeltaVariant select_delta_variant();

struct DeltaControlReport {
  DeltaVariant variant;
  DefectReport report;
  bool unitary = false;
};

DeltaControlReport delta_control_defect(std::size_t site, const Rational& u, const Rational& v,
                                        const Rational& c, std::size_t n);

}  // namespace mdgas
