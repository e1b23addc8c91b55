#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

enum class ConeMembership { Interior, Boundary, Outside, Singular };

std::string to_string(ConeMembership m);

/// C_α: column i of −A for i ∈ α, column i of I otherwise.
Matrix cone_matrix(const Matrix& a, const IndexSet& alpha);

/// Position of q relative to pos(C_α).
ConeMembership cone_membership(const Matrix& a, const Vector& q, const IndexSet& alpha);

/// q lies on no boundary of a nonsingular complementary cone and in no
/// singular complementary cone.
bool is_q_nondegenerate(const Matrix& a, const Vector& q);

struct DegreeContribution {
  IndexSet support;
  int index = 0;  // sgn det A_αα
};

struct DegreeResult {
  long value = 0;
  std::vector<DegreeContribution> contributions;
  bool q_nondegenerate = true;
};

/// deg_A(q) = Σ sgn det A_αα over the cones containing q in their interior.
/// Throws DegenerateQ when q is degenerate, CapExceeded above the cap.
DegreeResult local_degree(const Matrix& a, const Vector& q);

/// q'_β = −A_ββ⁻¹ q_β, q'_β̄ = q_β̄ − A_β̄β A_ββ⁻¹ q_β.
/// Throws SingularPivot when A_ββ is singular.
Vector ppt_transform_q(const Matrix& a, const Vector& q, const IndexSet& beta);

struct PptDegreeReport {
  IndexSet beta;
  bool pivot_nonsingular = false;
  bool q_nondegenerate = false;
  bool transformed_q_nondegenerate = false;
  int pivot_det_sign = 0;
  std::optional<Matrix> transformed_a;
  std::optional<Vector> transformed_q;
  std::optional<DegreeResult> lhs;  // deg_{A'}(q')
  std::optional<DegreeResult> rhs;  // deg_A(q)
  bool holds = false;

  bool preconditions_hold() const {
    return pivot_nonsingular && q_nondegenerate && transformed_q_nondegenerate;
  }
};

/// Checks deg_{A'}(q') = sgn(det A_ββ) · deg_A(q). Failed preconditions are
/// recorded in the report, not thrown.
PptDegreeReport verify_ppt_degree_relation(const Matrix& a, const Vector& q, const IndexSet& beta);

}  // namespace compmat
