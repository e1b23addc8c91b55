#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compmat/matrix.hpp"

namespace compmat {

enum class Relation { Eq, Le, Lt, Ge, Gt };

std::string to_string(Relation r);

/// coeffs · x (rel) rhs
struct LinearConstraint {
  Vector coeffs;
  Relation rel = Relation::Eq;
  Rational rhs;
};

/// A finite system of linear relations over free rational variables.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  void add(Vector coeffs, Relation rel, Rational rhs = Rational(0));
  /// x_var (rel) rhs
  void add_bound(std::size_t var, Relation rel, Rational rhs = Rational(0));

  bool has_strict() const;
  bool is_homogeneous() const;

  /// Exact evaluation of every constraint at x.
  bool satisfied_by(const Vector& x) const;

 private:
  std::size_t num_vars_;
  std::vector<LinearConstraint> constraints_;
};

struct LpResult {
  bool feasible = false;
  Vector witness;
};

/// Exact phase-1 simplex with Bland's rule. Strict relations are accepted only
/// when every right-hand side is zero; they are then replaced by the margin
/// form (> 0 becomes ≥ 1, < 0 becomes ≤ −1), which is equivalent on a cone.
/// Throws UnsupportedSystem for strict relations in non-homogeneous systems.
/// A returned witness always satisfies the original system exactly.
LpResult lp_feasible(const LinearSystem& system);

}  // namespace compmat
