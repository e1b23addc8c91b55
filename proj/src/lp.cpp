#include "compmat/lp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "compmat/errors.hpp"

namespace compmat {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
  }
  return "?";
}

void LinearSystem::add(Vector coeffs, Relation rel, Rational rhs) {
  if (coeffs.size() != num_vars_) throw DimensionMismatch("constraint length mismatch");
  constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearSystem::add_bound(std::size_t var, Relation rel, Rational rhs) {
  Vector c = zero_vector(num_vars_);
  c.at(var) = 1;
  add(std::move(c), rel, std::move(rhs));
}

bool LinearSystem::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(), [](const auto& c) {
    return c.rel == Relation::Lt || c.rel == Relation::Gt;
  });
}

bool LinearSystem::is_homogeneous() const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [](const auto& c) { return c.rhs.is_zero(); });
}

bool LinearSystem::satisfied_by(const Vector& x) const {
  if (x.size() != num_vars_) return false;
  for (const auto& c : constraints_) {
    const auto lhs = dot(c.coeffs, x);
    bool ok = false;
    switch (c.rel) {
      case Relation::Eq: ok = lhs == c.rhs; break;
      case Relation::Le: ok = lhs <= c.rhs; break;
      case Relation::Lt: ok = lhs < c.rhs; break;
      case Relation::Ge: ok = lhs >= c.rhs; break;
      case Relation::Gt: ok = lhs > c.rhs; break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

enum class VarKind { Free, NonNeg, NonPos };

struct Row {
  std::vector<mpq_class> coeffs;  // over structural columns
  Relation rel;                   // Eq, Le or Ge after margin conversion
  mpq_class rhs;
};

class Phase1 {
 public:
  Phase1(std::vector<Row> rows, std::size_t structural)
      : m_(rows.size()), structural_(structural) {
    // Column layout: [structural | slacks | artificials].
    std::vector<int> slack_col(m_, -1);
    std::size_t next = structural_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows[i].rel != Relation::Eq) slack_col[i] = static_cast<int>(next++);
    }
    first_artificial_ = next;

    // Decide the initial basis before sizing the tableau.
    std::vector<bool> negate(m_);
    std::vector<bool> needs_artificial(m_);
    std::size_t artificials = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      negate[i] = sgn(rows[i].rhs) < 0;
      int slack_sign = rows[i].rel == Relation::Le ? 1 : (rows[i].rel == Relation::Ge ? -1 : 0);
      if (negate[i]) slack_sign = -slack_sign;
      needs_artificial[i] = slack_sign != 1;
      artificials += needs_artificial[i];
    }
    width_ = first_artificial_ + artificials;

    tab_.assign(m_, std::vector<mpq_class>(width_));
    rhs_.assign(m_, 0);
    basis_.assign(m_, 0);
    std::size_t art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const mpq_class s = negate[i] ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j) tab_[i][j] = s * rows[i].coeffs[j];
      if (slack_col[i] >= 0) {
        tab_[i][static_cast<std::size_t>(slack_col[i])] =
            s * (rows[i].rel == Relation::Le ? 1 : -1);
      }
      rhs_[i] = s * rows[i].rhs;
      if (needs_artificial[i]) {
        tab_[i][art] = 1;
        basis_[i] = art++;
      } else {
        basis_[i] = static_cast<std::size_t>(slack_col[i]);
      }
    }

    // Phase-1 reduced costs: d_j = c_j − Σ_{i: artificial basic} T_ij.
    cost_.assign(width_, 0);
    objective_ = 0;
    for (std::size_t j = first_artificial_; j < width_; ++j) cost_[j] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= tab_[i][j];
      objective_ += rhs_[i];
    }
  }

  /// Runs Bland's rule to optimality. Returns the structural part of the
  /// final basic solution when the phase-1 optimum is zero.
  std::optional<std::vector<mpq_class>> solve() {
    while (true) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) break;

      std::size_t leave = m_;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        mpq_class ratio = rhs_[i] / tab_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) throw std::logic_error("phase-1 simplex: unbounded direction");
      pivot(leave, enter);
    }
    if (sgn(objective_) != 0) return std::nullopt;
    std::vector<mpq_class> x(structural_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const mpq_class p = tab_[r][c];
    for (auto& v : tab_[r]) {
      if (sgn(v) != 0) v /= p;
    }
    rhs_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(tab_[i][c]) == 0) continue;
      const mpq_class f = tab_[i][c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(tab_[r][j]) != 0) tab_[i][j] -= f * tab_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(cost_[c]) != 0) {
      const mpq_class f = cost_[c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(tab_[r][j]) != 0) cost_[j] -= f * tab_[r][j];
      }
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t width_ = 0;
  std::vector<std::vector<mpq_class>> tab_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
  mpq_class objective_;
};

/// Single-variable constraint "x_j ≥ 0" or "x_j ≤ 0" with zero right-hand side.
std::optional<std::pair<std::size_t, VarKind>> as_sign_bound(const LinearConstraint& c) {
  if (!c.rhs.is_zero() || c.rel == Relation::Eq) return std::nullopt;
  std::optional<std::size_t> var;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    if (c.coeffs[j].is_zero()) continue;
    if (var) return std::nullopt;
    var = j;
  }
  if (!var) return std::nullopt;
  const bool pos = c.coeffs[*var].is_positive();
  const bool ge = c.rel == Relation::Ge;
  return std::make_pair(*var, pos == ge ? VarKind::NonNeg : VarKind::NonPos);
}

}  // namespace

LpResult lp_feasible(const LinearSystem& system) {
  if (system.has_strict() && !system.is_homogeneous()) {
    throw UnsupportedSystem(
        "strict inequalities are only supported in homogeneous systems");
  }
  const std::size_t n = system.num_vars();

  // Margin form for strict relations; everything else unchanged.
  std::vector<LinearConstraint> cons;
  cons.reserve(system.constraints().size());
  for (const auto& c : system.constraints()) {
    LinearConstraint d = c;
    if (c.rel == Relation::Gt) {
      d.rel = Relation::Ge;
      d.rhs = 1;
    } else if (c.rel == Relation::Lt) {
      d.rel = Relation::Le;
      d.rhs = -1;
    }
    cons.push_back(std::move(d));
  }

  // Sign bounds become variable kinds instead of rows.
  std::vector<VarKind> kind(n, VarKind::Free);
  std::vector<bool> consumed(cons.size(), false);
  for (std::size_t k = 0; k < cons.size(); ++k) {
    const auto b = as_sign_bound(cons[k]);
    if (!b) continue;
    auto& kd = kind[b->first];
    if (kd == VarKind::Free || kd == b->second) {
      kd = b->second;
      consumed[k] = true;
    }
  }

  // Structural columns: x_j = Σ sign · col.
  std::vector<std::vector<std::pair<std::size_t, int>>> var_cols(n);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    switch (kind[j]) {
      case VarKind::NonNeg: var_cols[j] = {{structural++, 1}}; break;
      case VarKind::NonPos: var_cols[j] = {{structural++, -1}}; break;
      case VarKind::Free:
        var_cols[j] = {{structural, 1}, {structural + 1, -1}};
        structural += 2;
        break;
    }
  }

  std::vector<Row> rows;
  for (std::size_t k = 0; k < cons.size(); ++k) {
    if (consumed[k]) continue;
    Row r{std::vector<mpq_class>(structural, 0), cons[k].rel, cons[k].rhs.raw()};
    for (std::size_t j = 0; j < n; ++j) {
      if (cons[k].coeffs[j].is_zero()) continue;
      for (auto [col, s] : var_cols[j]) r.coeffs[col] = s * cons[k].coeffs[j].raw();
    }
    rows.push_back(std::move(r));
  }

  Phase1 simplex(std::move(rows), structural);
  const auto x_std = simplex.solve();
  LpResult out;
  if (!x_std) return out;

  out.feasible = true;
  out.witness = zero_vector(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class v = 0;
    for (auto [col, s] : var_cols[j]) v += s * (*x_std)[col];
    out.witness[j] = Rational(std::move(v));
  }
  if (!system.satisfied_by(out.witness)) {
    throw std::logic_error("lp_feasible: witness failed exact re-evaluation");
  }
  return out;
}

}  // namespace compmat
