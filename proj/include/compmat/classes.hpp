#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

enum class MatrixClass {
  ColumnCompetent,
  ColumnAdequate,
  P0,
  P,
  PrincipallyNonDegenerate,
  Z,
  E0,
  R0,
  R,
};

std::string to_string(MatrixClass c);
const std::vector<MatrixClass>& all_matrix_classes();

struct ClassVerdict {
  MatrixClass matrix_class;
  bool member = false;
  /// On non-membership: the vector demonstrating the defining failure.
  std::optional<Vector> witness_vector;
  /// On non-membership: the offending support or principal index set.
  std::optional<IndexSet> witness_set;
  std::string certificate_note;
};

/// Decided by the support characterization: A is column competent iff for
/// every σ the kernel of A_σσ, embedded by zeros, lies in ker A. On failure
/// the witness z satisfies z_i (Az)_i = 0 for all i and Az ≠ 0.
ClassVerdict is_column_competent(const Matrix& a);

ClassVerdict is_P0(const Matrix& a);
ClassVerdict is_P(const Matrix& a);
ClassVerdict is_principally_nondegenerate(const Matrix& a);
ClassVerdict is_Z(const Matrix& a);

/// Semimonotone: no nonempty σ admits z_σ > 0 with A_σσ z_σ < 0.
ClassVerdict is_E0(const Matrix& a);

/// LCP(0, A) has only the zero solution.
ClassVerdict is_R0(const Matrix& a);

/// Regular: for every t ≥ 0, z = 0 is the only solution of
/// z ≥ 0, Az + t e ≥ 0, z ∘ (Az + t e) = 0. The witness note records t.
ClassVerdict is_R(const Matrix& a);

enum class AdequacyMode {
  /// Column competent and P0.
  Theorem,
  /// Sign-orthant search for z with z_i (Az)_i ≤ 0 for all i and Az ≠ 0.
  Direct,
  /// Runs both and throws ModeDisagreement when they differ.
  Checked,
};

ClassVerdict is_column_adequate(const Matrix& a, AdequacyMode mode);

/// ker ψ = {0}, decided from the principal kernels alone (no determinants).
bool ker_psi_trivial(const Matrix& a);

struct ConsistencyFlag {
  std::string name;
  bool holds = true;
};

struct ClassificationReport {
  Matrix matrix;
  std::vector<ClassVerdict> verdicts;
  std::vector<ConsistencyFlag> consistency_flags;

  const ClassVerdict& verdict(MatrixClass c) const;
  bool member(MatrixClass c) const { return verdict(c).member; }
};

/// Every verdict plus the theorem cross-checks. Throws ModeDisagreement or
/// InternalInconsistency rather than return an inconsistent report.
ClassificationReport classify(const Matrix& a);

}  // namespace compmat
