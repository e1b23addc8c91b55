#include "compmat/classes.hpp"

#include <stdexcept>

#include "compmat/errors.hpp"
#include "compmat/linalg.hpp"
#include "compmat/lp.hpp"

namespace compmat {

std::string to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::ColumnCompetent: return "ColumnCompetent";
    case MatrixClass::ColumnAdequate: return "ColumnAdequate";
    case MatrixClass::P0: return "P0";
    case MatrixClass::P: return "P";
    case MatrixClass::PrincipallyNonDegenerate: return "PrincipallyNonDegenerate";
    case MatrixClass::Z: return "Z";
    case MatrixClass::E0: return "E0";
    case MatrixClass::R0: return "R0";
    case MatrixClass::R: return "R";
  }
  return "?";
}

const std::vector<MatrixClass>& all_matrix_classes() {
  static const std::vector<MatrixClass> all = {
      MatrixClass::ColumnCompetent, MatrixClass::ColumnAdequate,
      MatrixClass::P0,              MatrixClass::P,
      MatrixClass::PrincipallyNonDegenerate,
      MatrixClass::Z,               MatrixClass::E0,
      MatrixClass::R0,              MatrixClass::R,
  };
  return all;
}

namespace {

void require_square(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionMismatch("matrix class tests need a nonempty square matrix");
  }
}

ClassVerdict member(MatrixClass c, std::string note) {
  return ClassVerdict{c, true, std::nullopt, std::nullopt, std::move(note)};
}

enum class MinorRule { NonNegative, Positive, NonZero };

ClassVerdict minor_class(const Matrix& a, MatrixClass c, MinorRule rule,
                         const std::vector<int>& signs) {
  const std::size_t n = a.rows();
  for (auto mask : subsets_by_cardinality(n, false)) {
    const int s = signs[mask];
    const bool ok = rule == MinorRule::NonNegative ? s >= 0
                    : rule == MinorRule::Positive  ? s > 0
                                                   : s != 0;
    if (ok) continue;
    const auto sigma = IndexSet::from_mask(n, mask);
    ClassVerdict v{c, false, std::nullopt, sigma, {}};
    v.certificate_note = "principal minor det A_σσ for σ = " + sigma.str() +
                         (s < 0 ? " is negative" : " is zero");
    return v;
  }
  const char* what = rule == MinorRule::NonNegative ? "nonnegative"
                     : rule == MinorRule::Positive  ? "positive"
                                                    : "nonzero";
  return member(c, std::string("all principal minors ") + what);
}

/// The system over z_σ: z_σ > 0, then per-row relations on (A z)_i for
/// i ∈ σ and i ∉ σ. Returns the witness embedded in R^n when feasible.
std::optional<Vector> positive_support_system(const Matrix& a, const IndexSet& sigma,
                                              Relation inside, std::optional<Relation> outside) {
  const std::size_t k = sigma.size();
  LinearSystem sys(k);
  for (std::size_t v = 0; v < k; ++v) sys.add_bound(v, Relation::Gt);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool in = sigma.contains(i);
    if (!in && !outside) continue;
    Vector row(k);
    for (std::size_t v = 0; v < k; ++v) row[v] = a(i, sigma[v]);
    sys.add(std::move(row), in ? inside : *outside);
  }
  const auto res = lp_feasible(sys);
  if (!res.feasible) return std::nullopt;
  return embed(sigma, primitive(res.witness));
}

ClassVerdict adequacy_by_theorem(const Matrix& a) {
  const auto cc = is_column_competent(a);
  if (!cc.member) {
    ClassVerdict v = cc;
    v.matrix_class = MatrixClass::ColumnAdequate;
    v.certificate_note = "not column competent; " + cc.certificate_note;
    return v;
  }
  const auto p0 = is_P0(a);
  if (!p0.member) {
    ClassVerdict v = p0;
    v.matrix_class = MatrixClass::ColumnAdequate;
    v.certificate_note = "column competent but not P0; " + p0.certificate_note;
    return v;
  }
  return member(MatrixClass::ColumnAdequate, "column competent and P0");
}

ClassVerdict adequacy_direct(const Matrix& a) {
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  // Sign patterns s ∈ {0,+,−}^n in base-3 counting order, skipping s = 0.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<int> s(n);
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = static_cast<int>(c % 3) == 2 ? -1 : static_cast<int>(c % 3);
      c /= 3;
      if (s[i] != 0) support.push_back(i);
    }
    const IndexSet sup(n, support);
    const std::size_t k = sup.size();
    auto az_row = [&](std::size_t i) {
      Vector row(k);
      for (std::size_t v = 0; v < k; ++v) row[v] = a(i, sup[v]);
      return row;
    };
    LinearSystem base(k);
    for (std::size_t v = 0; v < k; ++v) {
      const std::size_t i = sup[v];
      base.add_bound(v, s[i] > 0 ? Relation::Gt : Relation::Lt);
      base.add(az_row(i), s[i] > 0 ? Relation::Le : Relation::Ge);
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (const Relation strict : {Relation::Gt, Relation::Lt}) {
        // (Az)_j > 0 contradicts (Az)_j ≤ 0 when s_j = +, and symmetrically.
        if ((strict == Relation::Gt && s[j] > 0) || (strict == Relation::Lt && s[j] < 0)) {
          continue;
        }
        LinearSystem sys = base;
        sys.add(az_row(j), strict);
        const auto res = lp_feasible(sys);
        if (!res.feasible) continue;
        ClassVerdict v{MatrixClass::ColumnAdequate, false, {}, sup, {}};
        v.witness_vector = embed(sup, primitive(res.witness));
        v.certificate_note = "direct sign-orthant search: z_i(Az)_i <= 0 for all i with (Az)_" +
                             std::to_string(j + 1) + (strict == Relation::Gt ? " > 0" : " < 0");
        return v;
      }
    }
  }
  return member(MatrixClass::ColumnAdequate,
                "direct sign-orthant search: z_i(Az)_i <= 0 for all i forces Az = 0");
}

}  // namespace

ClassVerdict is_column_competent(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, false)) {
    const auto sigma = IndexSet::from_mask(n, mask);
    const auto kernel = null_space_basis(a.principal(sigma));
    if (kernel.empty()) continue;
    const Matrix cols = a.columns(sigma);
    for (const auto& b : kernel) {
      if (is_zero(cols * b)) continue;
      ClassVerdict v{MatrixClass::ColumnCompetent, false, embed(sigma, b), sigma, {}};
      v.certificate_note = "rank(A[:,σ]) > rank(A_σσ) for σ = " + sigma.str() +
                           ": z_i(Az)_i = 0 for all i but Az != 0";
      return v;
    }
  }
  return member(MatrixClass::ColumnCompetent, "rank(A[:,σ]) = rank(A_σσ) for every σ");
}

ClassVerdict is_P0(const Matrix& a) {
  require_square(a);
  return minor_class(a, MatrixClass::P0, MinorRule::NonNegative, principal_minor_signs(a));
}

ClassVerdict is_P(const Matrix& a) {
  require_square(a);
  return minor_class(a, MatrixClass::P, MinorRule::Positive, principal_minor_signs(a));
}

ClassVerdict is_principally_nondegenerate(const Matrix& a) {
  require_square(a);
  return minor_class(a, MatrixClass::PrincipallyNonDegenerate, MinorRule::NonZero,
                     principal_minor_signs(a));
}

ClassVerdict is_Z(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !a(i, j).is_positive()) continue;
      ClassVerdict v{MatrixClass::Z, false, std::nullopt, IndexSet(n, {i, j}), {}};
      v.certificate_note = "off-diagonal entry a_" + std::to_string(i + 1) +
                           std::to_string(j + 1) + " = " + a(i, j).str() + " is positive";
      return v;
    }
  }
  return member(MatrixClass::Z, "all off-diagonal entries nonpositive");
}

ClassVerdict is_E0(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, false)) {
    const auto sigma = IndexSet::from_mask(n, mask);
    auto z = positive_support_system(a, sigma, Relation::Lt, std::nullopt);
    if (!z) continue;
    ClassVerdict v{MatrixClass::E0, false, std::move(z), sigma, {}};
    v.certificate_note = "z_σ > 0 with A_σσ z_σ < 0 for σ = " + sigma.str();
    return v;
  }
  return member(MatrixClass::E0, "{z_σ > 0, A_σσ z_σ < 0} infeasible for every σ");
}

ClassVerdict is_R0(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, false)) {
    const auto sigma = IndexSet::from_mask(n, mask);
    auto z = positive_support_system(a, sigma, Relation::Eq, Relation::Ge);
    if (!z) continue;
    ClassVerdict v{MatrixClass::R0, false, std::move(z), sigma, {}};
    v.certificate_note = "nonzero solution of LCP(0,A) with support " + sigma.str();
    return v;
  }
  return member(MatrixClass::R0, "LCP(0,A) has only z = 0 (checked on every support)");
}

ClassVerdict is_R(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, false)) {
    const auto sigma = IndexSet::from_mask(n, mask);
    const std::size_t k = sigma.size();
    // Variables (z_σ, t).
    LinearSystem sys(k + 1);
    for (std::size_t v = 0; v < k; ++v) sys.add_bound(v, Relation::Gt);
    sys.add_bound(k, Relation::Ge);
    for (std::size_t i = 0; i < n; ++i) {
      Vector row(k + 1);
      for (std::size_t v = 0; v < k; ++v) row[v] = a(i, sigma[v]);
      row[k] = 1;
      sys.add(std::move(row), sigma.contains(i) ? Relation::Eq : Relation::Ge);
    }
    const auto res = lp_feasible(sys);
    if (!res.feasible) continue;
    const Vector scaled = primitive(res.witness);
    const Vector zs(scaled.begin(), scaled.begin() + static_cast<std::ptrdiff_t>(k));
    ClassVerdict v{MatrixClass::R, false, embed(sigma, zs), sigma, {}};
    v.certificate_note = "nonzero solution of the regularity system with support " +
                         sigma.str() + " and t = " + scaled[k].str();
    return v;
  }
  return member(MatrixClass::R, "regularity system infeasible on every support");
}

ClassVerdict is_column_adequate(const Matrix& a, AdequacyMode mode) {
  require_square(a);
  switch (mode) {
    case AdequacyMode::Theorem: return adequacy_by_theorem(a);
    case AdequacyMode::Direct: return adequacy_direct(a);
    case AdequacyMode::Checked: {
      auto t = adequacy_by_theorem(a);
      const auto d = adequacy_direct(a);
      if (t.member != d.member) {
        throw ModeDisagreement("column adequacy: theorem mode says " +
                               std::string(t.member ? "member" : "non-member") +
                               ", direct mode says " + (d.member ? "member" : "non-member") +
                               " for A = " + a.str());
      }
      t.certificate_note += " (confirmed by direct sign-orthant search)";
      return t;
    }
  }
  throw std::logic_error("unknown adequacy mode");
}

bool ker_psi_trivial(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  for (auto mask : subsets_by_cardinality(n, false)) {
    if (!null_space_basis(a.principal(IndexSet::from_mask(n, mask))).empty()) return false;
  }
  return true;
}

const ClassVerdict& ClassificationReport::verdict(MatrixClass c) const {
  for (const auto& v : verdicts) {
    if (v.matrix_class == c) return v;
  }
  throw std::out_of_range("no verdict for " + to_string(c));
}

ClassificationReport classify(const Matrix& a) {
  require_square(a);
  ClassificationReport r;
  r.matrix = a;
  const auto signs = principal_minor_signs(a);
  r.verdicts.push_back(is_column_competent(a));
  r.verdicts.push_back(is_column_adequate(a, AdequacyMode::Checked));
  r.verdicts.push_back(minor_class(a, MatrixClass::P0, MinorRule::NonNegative, signs));
  r.verdicts.push_back(minor_class(a, MatrixClass::P, MinorRule::Positive, signs));
  r.verdicts.push_back(
      minor_class(a, MatrixClass::PrincipallyNonDegenerate, MinorRule::NonZero, signs));
  r.verdicts.push_back(is_Z(a));
  r.verdicts.push_back(is_E0(a));
  r.verdicts.push_back(is_R0(a));
  r.verdicts.push_back(is_R(a));

  const bool cc = r.member(MatrixClass::ColumnCompetent);
  const bool adequate = r.member(MatrixClass::ColumnAdequate);
  const bool p0 = r.member(MatrixClass::P0);
  const bool p = r.member(MatrixClass::P);
  const bool nd = r.member(MatrixClass::PrincipallyNonDegenerate);
  const bool e0 = r.member(MatrixClass::E0);
  const bool r0 = r.member(MatrixClass::R0);
  const bool reg = r.member(MatrixClass::R);

  auto flag = [&](std::string name, bool holds) {
    r.consistency_flags.push_back({std::move(name), holds});
  };
  flag("adequate(theorem) == adequate(direct)", true);  // enforced by Checked mode
  flag("adequate <=> column competent and P0", adequate == (cc && p0));
  flag("principally non-degenerate <=> ker psi = {0}", nd == ker_psi_trivial(a));
  flag("E0 => (R0 <=> R)", !e0 || r0 == reg);
  flag("R => R0", !reg || r0);
  flag("P => P0", !p || p0);
  flag("P => principally non-degenerate", !p || nd);
  flag("principally non-degenerate => column competent", !nd || cc);
  flag("column competent and non-degenerate => R0", !(cc && nd) || r0);

  for (const auto& f : r.consistency_flags) {
    if (!f.holds) {
      throw InternalInconsistency("classification cross-check failed: " + f.name +
                                  " for A = " + a.str());
    }
  }
  return r;
}

}  // namespace compmat
