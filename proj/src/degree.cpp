#include "compmat/degree.hpp"

#include "compmat/errors.hpp"
#include "compmat/linalg.hpp"
#include "compmat/lp.hpp"

namespace compmat {

std::string to_string(ConeMembership m) {
  switch (m) {
    case ConeMembership::Interior: return "interior";
    case ConeMembership::Boundary: return "boundary";
    case ConeMembership::Outside: return "outside";
    case ConeMembership::Singular: return "singular";
  }
  return "?";
}

namespace {

void check_dims(const Matrix& a, const Vector& q) {
  if (!a.is_square() || a.rows() != q.size()) {
    throw DimensionMismatch("A must be square with dim(q) = dim(A)");
  }
}

bool in_singular_cone(const Matrix& c, const Vector& q) {
  const std::size_t n = c.cols();
  LinearSystem sys(n);
  for (std::size_t i = 0; i < n; ++i) sys.add_bound(i, Relation::Ge);
  for (std::size_t i = 0; i < c.rows(); ++i) sys.add(c.row(i), Relation::Eq, q[i]);
  return lp_feasible(sys).feasible;
}

}  // namespace

Matrix cone_matrix(const Matrix& a, const IndexSet& alpha) {
  const std::size_t n = a.rows();
  Matrix c = Matrix::identity(n);
  for (auto j : alpha) {
    for (std::size_t i = 0; i < n; ++i) c(i, j) = -a(i, j);
  }
  return c;
}

ConeMembership cone_membership(const Matrix& a, const Vector& q, const IndexSet& alpha) {
  check_dims(a, q);
  const Matrix c = cone_matrix(a, alpha);
  if (det(c).is_zero()) return ConeMembership::Singular;
  const Vector x = solve_linear(c, q).particular;
  if (is_positive(x)) return ConeMembership::Interior;
  if (is_nonnegative(x)) return ConeMembership::Boundary;
  return ConeMembership::Outside;
}

bool is_q_nondegenerate(const Matrix& a, const Vector& q) {
  check_dims(a, q);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, true)) {
    const IndexSet alpha = IndexSet::from_mask(n, mask);
    switch (cone_membership(a, q, alpha)) {
      case ConeMembership::Boundary:
        return false;
      case ConeMembership::Singular:
        if (in_singular_cone(cone_matrix(a, alpha), q)) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

DegreeResult local_degree(const Matrix& a, const Vector& q) {
  check_dims(a, q);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  if (!is_q_nondegenerate(a, q)) {
    throw DegenerateQ("q = " + to_string(q) + " is degenerate with respect to A");
  }
  DegreeResult out;
  for (auto mask : subsets_by_cardinality(n, true)) {
    const IndexSet alpha = IndexSet::from_mask(n, mask);
    if (cone_membership(a, q, alpha) != ConeMembership::Interior) continue;
    const int s = det(a.principal(alpha)).sign();
    out.contributions.push_back({alpha, s});
    out.value += s;
  }
  return out;
}

Vector ppt_transform_q(const Matrix& a, const Vector& q, const IndexSet& beta) {
  check_dims(a, q);
  if (beta.empty()) return q;
  const IndexSet rest = beta.complement();
  const Matrix inv = inverse(a.principal(beta));
  const Vector y = inv * restrict(q, beta);  // A_ββ⁻¹ q_β
  const Vector tail = restrict(q, rest) - a.block(rest, beta) * y;
  Vector out(q.size());
  for (std::size_t k = 0; k < beta.size(); ++k) out[beta[k]] = -y[k];
  for (std::size_t k = 0; k < rest.size(); ++k) out[rest[k]] = tail[k];
  return out;
}

PptDegreeReport verify_ppt_degree_relation(const Matrix& a, const Vector& q, const IndexSet& beta) {
  check_dims(a, q);
  PptDegreeReport r;
  r.beta = beta;
  r.pivot_det_sign = det(a.principal(beta)).sign();
  r.pivot_nonsingular = r.pivot_det_sign != 0;
  r.q_nondegenerate = is_q_nondegenerate(a, q);
  if (!r.pivot_nonsingular) return r;
  r.transformed_a = ppt(a, beta).transformed;
  r.transformed_q = ppt_transform_q(a, q, beta);
  r.transformed_q_nondegenerate = is_q_nondegenerate(*r.transformed_a, *r.transformed_q);
  if (!r.preconditions_hold()) return r;
  r.lhs = local_degree(*r.transformed_a, *r.transformed_q);
  r.rhs = local_degree(a, q);
  r.holds = r.lhs->value == r.pivot_det_sign * r.rhs->value;
  return r;
}

}  // namespace compmat
