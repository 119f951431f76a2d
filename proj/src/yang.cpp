#include "mdgas/yang.hpp"

#include "mdgas/error.hpp"

namespace mdgas {

namespace {

void check_n(std::size_t n) {
  if (n < 2 || n > kMaxYangParticles)
    throw InvalidArgument("regular representation limited to 2 <= N <= 6");
}

void check_site(std::size_t site, std::size_t n, std::size_t reach) {
  if (site < 1 || site + reach > n) throw InvalidArgument("site index out of range");
}

GaussianRational iu(const Rational& u) { return {0, u}; }

}  // namespace

RegularRepresentation::RegularRepresentation(std::size_t n) : n_(n) {
  check_n(n);
  basis_ = all_permutations(n);
}

ExactMatrix RegularRepresentation::matrix(const Permutation& r) const {
  if (r.size() != n_) throw InvalidArgument("permutation size differs from N");
  ExactMatrix m(dim());
  for (std::size_t row = 0; row < dim(); ++row) m(row, (basis_[row] * r).lex_rank()) = 1;
  return m;
}

ExactMatrix RegularRepresentation::transposition(std::size_t site) const {
  check_site(site, n_, 1);
  return matrix(Permutation::adjacent_transposition(n_, site - 1));
}

std::vector<GaussianRational> RegularRepresentation::trivial_vector() const {
  return std::vector<GaussianRational>(dim(), GaussianRational(1));
}

std::vector<GaussianRational> RegularRepresentation::sign_vector() const {
  std::vector<GaussianRational> v;
  v.reserve(dim());
  for (const auto& q : basis_) v.emplace_back(static_cast<long>(q.sign()));
  return v;
}

ExactMatrix regular_rep(const Permutation& r) {
  return RegularRepresentation(r.size()).matrix(r);
}

YangOperator yang_op(std::size_t site, const Rational& u, const Rational& lambda,
                     std::size_t n) {
  check_n(n);
  check_site(site, n, 1);
  if (sgn(lambda) == 0) throw InvalidArgument("Yang operator undefined at lambda = 0");
  RegularRepresentation rep(n);
  YangOperator y;
  y.n = n;
  y.site = site;
  y.u = u;
  y.inv_lambda = 1 / lambda;
  const GaussianRational denom = iu(u) - GaussianRational(y.inv_lambda);
  y.matrix = ExactMatrix::identity(rep.dim()) * iu(u) -
             rep.transposition(site) * GaussianRational(y.inv_lambda);
  y.matrix *= GaussianRational(1) / denom;
  return y;
}

GaussianRational yang_scalar(const Rational& u, const Rational& lambda, int t_eigenvalue) {
  if (sgn(lambda) == 0) throw InvalidArgument("Yang operator undefined at lambda = 0");
  const Rational a = 1 / lambda;
  return (iu(u) - GaussianRational(a * t_eigenvalue)) / (iu(u) - GaussianRational(a));
}

bool check_unitarity(std::size_t site, const Rational& u, const Rational& lambda,
                     std::size_t n) {
  const auto plus = yang_op(site, u, lambda, n);
  const auto minus = yang_op(site, -u, lambda, n);
  return minus.matrix * plus.matrix == ExactMatrix::identity(plus.matrix.dim());
}

DefectReport braid_defect(const RegularRepresentation& rep, const SiteOperator& op,
                          std::size_t site, const Rational& u, const Rational& v) {
  check_site(site, rep.n(), 2);
  const Rational w = u + v;
  const ExactMatrix lhs = op(site, v) * op(site + 1, w) * op(site, u);
  const ExactMatrix rhs = op(site + 1, u) * op(site, w) * op(site + 1, v);

  DefectReport r;
  r.defect = lhs - rhs;
  for (std::size_t row = 0; row < rep.dim(); ++row)
    for (std::size_t col = 0; col < rep.dim(); ++col) {
      const auto& x = r.defect(row, col);
      if (x.is_zero()) continue;
      if (!r.nonzero) {
        r.nonzero = true;
        r.first_row = row;
        r.first_col = col;
        r.first_entry = x;
      }
      const Rational m = x.norm2();
      if (m > r.max_norm2) {
        r.max_norm2 = m;
        r.max_entry = x;
      }
    }

  auto all_zero = [](const std::vector<GaussianRational>& vec) {
    for (const auto& x : vec)
      if (!x.is_zero()) return false;
    return true;
  };
  r.zero_on_trivial = all_zero(r.defect.apply(rep.trivial_vector()));
  r.zero_on_sign = all_zero(r.defect.apply(rep.sign_vector()));
  return r;
}

DefectReport yb_defect(std::size_t site, const Rational& u, const Rational& v,
                       const Rational& lambda, std::size_t n) {
  check_n(n);
  check_site(site, n, 2);
  if (sgn(lambda) == 0) throw InvalidArgument("Yang operator undefined at lambda = 0");
  RegularRepresentation rep(n);
  const GaussianRational inv_lambda(1 / lambda);
  const ExactMatrix id = ExactMatrix::identity(rep.dim());
  std::vector<ExactMatrix> t;
  for (std::size_t s = 1; s < n; ++s) t.push_back(rep.transposition(s));

  SiteOperator op = [&](std::size_t s, const Rational& arg) {
    ExactMatrix m = id * iu(arg) - t[s - 1] * inv_lambda;
    m *= GaussianRational(1) / (iu(arg) - inv_lambda);
    return m;
  };
  DefectReport r = braid_defect(rep, op, site, u, v);

  const Rational w = u + v;
  for (int t_eig : {+1, -1}) {
    auto y = [&](const Rational& arg) { return yang_scalar(arg, lambda, t_eig); };
    const GaussianRational d = y(v) * y(w) * y(u) - y(u) * y(w) * y(v);
    (t_eig > 0 ? r.trivial_scalar_defect : r.sign_scalar_defect) = d;
  }
  return r;
}

std::string DeltaVariant::label() const {
  std::string s = "(";
  s += u_sign > 0 ? "+u T" : "-u T";
  s += c_sign > 0 ? " + i c I" : " - i c I";
  s += ") / (u - i c)";
  return s;
}

std::vector<DeltaVariant> delta_variants() {
  return {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
}

namespace {

ExactMatrix delta_matrix(const ExactMatrix& id, const ExactMatrix& t, const Rational& u,
                         const Rational& c, const DeltaVariant& var) {
  const GaussianRational num_t(u * var.u_sign);
  const GaussianRational num_i(0, c * var.c_sign);
  ExactMatrix m = t * num_t + id * num_i;
  m *= GaussianRational(1) / GaussianRational(u, -c);
  return m;
}

}  // namespace

ExactMatrix delta_yang_matrix(std::size_t site, const Rational& u, const Rational& c,
                              std::size_t n, const DeltaVariant& variant) {
  check_n(n);
  check_site(site, n, 1);
  if (sgn(c) == 0) throw InvalidArgument("delta coupling c must be nonzero");
  RegularRepresentation rep(n);
  return delta_matrix(ExactMatrix::identity(rep.dim()), rep.transposition(site), u, c,
                      variant);
}

bool delta_unitarity(std::size_t site, const Rational& u, const Rational& c, std::size_t n,
                     const DeltaVariant& variant) {
  const auto plus = delta_yang_matrix(site, u, c, n, variant);
  const auto minus = delta_yang_matrix(site, -u, c, n, variant);
  return minus * plus == ExactMatrix::identity(plus.dim());
}

namespace {

DefectReport delta_braid(std::size_t site, const Rational& u, const Rational& v,
                         const Rational& c, std::size_t n, const DeltaVariant& var) {
  check_n(n);
  check_site(site, n, 2);
  if (sgn(c) == 0) throw InvalidArgument("delta coupling c must be nonzero");
  RegularRepresentation rep(n);
  const ExactMatrix id = ExactMatrix::identity(rep.dim());
  std::vector<ExactMatrix> t;
  for (std::size_t s = 1; s < n; ++s) t.push_back(rep.transposition(s));
  SiteOperator op = [&](std::size_t s, const Rational& arg) {
    return delta_matrix(id, t[s - 1], arg, c, var);
  };
  DefectReport r = braid_defect(rep, op, site, u, v);
  const Rational w = u + v;
  for (int t_eig : {+1, -1}) {
    auto y = [&](const Rational& arg) {
      return (GaussianRational(arg * var.u_sign * t_eig) + GaussianRational(0, c * var.c_sign)) /
             GaussianRational(arg, -c);
    };
    const GaussianRational d = y(v) * y(w) * y(u) - y(u) * y(w) * y(v);
    (t_eig > 0 ? r.trivial_scalar_defect : r.sign_scalar_defect) = d;
  }
  return r;
}

}  // namespace

DeltaVariant select_delta_variant() {
  const Rational u(1), v(2), c(1);
  for (const auto& var : delta_variants()) {
    if (!delta_unitarity(1, u, c, 3, var)) continue;
    if (delta_braid(1, u, v, c, 3, var).nonzero) continue;
    return var;
  }
  throw std::logic_error("no delta-interaction sign variant satisfies unitarity and Yang-Baxter");
}

DeltaControlReport delta_control_defect(std::size_t site, const Rational& u, const Rational& v,
                                        const Rational& c, std::size_t n) {
  static const DeltaVariant selected = select_delta_variant();
  DeltaControlReport out;
  out.variant = selected;
  out.report = delta_braid(site, u, v, c, n, selected);
  out.unitary = delta_unitarity(site, u, c, n, selected) &&
                delta_unitarity(site + 1, v, c, n, selected);
  return out;
}

}  // namespace mdgas
