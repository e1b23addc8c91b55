#include "compmat/lcp.hpp"

#include <stdexcept>
#include <unordered_map>

#include "compmat/errors.hpp"
#include "compmat/linalg.hpp"
#include "compmat/lp.hpp"

namespace compmat {

LCPInstance::LCPInstance(Matrix a, Vector q) : a_(std::move(a)), q_(std::move(q)) {
  if (!a_.is_square() || a_.rows() != q_.size() || q_.empty()) {
    throw DimensionMismatch("LCP instance needs a nonempty square A with dim(q) = dim(A)");
  }
}

bool is_solution(const LCPInstance& inst, const Solution& sol) {
  const std::size_t n = inst.n();
  if (sol.w.size() != n || sol.z.size() != n) return false;
  if (sol.w != inst.q() + inst.A() * sol.z) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sol.w[i].is_negative() || sol.z[i].is_negative()) return false;
    if (!sol.w[i].is_zero() && !sol.z[i].is_zero()) return false;
  }
  return true;
}

Solution solution_from_z(const LCPInstance& inst, const Vector& z) {
  return Solution{inst.q() + inst.A() * z, z};
}

Vector psi(const Matrix& a, const Vector& z) {
  if (!a.is_square() || a.cols() != z.size()) throw DimensionMismatch("psi: size mismatch");
  const Vector az = a * z;
  Vector r(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) r[i] = z[i] * az[i];
  return r;
}

Vector f_map(const Matrix& a, const Vector& z) {
  if (!a.is_square() || a.cols() != z.size()) throw DimensionMismatch("f_map: size mismatch");
  Vector plus(z.size());
  Vector minus(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    plus[i] = z[i].is_positive() ? z[i] : Rational(0);
    minus[i] = z[i].is_negative() ? -z[i] : Rational(0);
  }
  return plus - a * minus;
}

Vector f_preimage(const Solution& sol) {
  Vector u(sol.z.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = sol.z[i].is_zero() ? sol.w[i] : -sol.z[i];
  return u;
}

// ---------------------------------------------------------------------------
// Lemke

namespace {

class LemkeTableau {
 public:
  explicit LemkeTableau(const LCPInstance& inst) : n_(inst.n()) {
    // Columns: w (0..n-1), z (n..2n-1), z0 (2n). Rows hold B⁻¹[I, −A, −e].
    tab_.assign(n_, std::vector<mpq_class>(2 * n_ + 1, 0));
    rhs_.resize(n_);
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      tab_[i][i] = 1;
      for (std::size_t j = 0; j < n_; ++j) tab_[i][n_ + j] = -inst.A()(i, j).raw();
      tab_[i][2 * n_] = -1;
      rhs_[i] = inst.q()[i].raw();
      basis_[i] = i;
    }
  }

  std::size_t z0() const { return 2 * n_; }
  std::size_t complement(std::size_t col) const { return col < n_ ? col + n_ : col - n_; }

  /// Row leaving when the artificial enters: the lexicographic minimum of
  /// (q_i, e_i), i.e. the most negative q_i with ties to the larger index.
  std::size_t initial_row() const {
    std::size_t r = 0;
    for (std::size_t i = 1; i < n_; ++i) {
      if (rhs_[i] <= rhs_[r]) r = i;
    }
    return r;
  }

  /// Lexicographic minimum ratio over rows with a positive entry in `col`.
  std::optional<std::size_t> ratio_test(std::size_t col) const {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(tab_[i][col]) <= 0) continue;
      if (!best || lex_less(i, *best, col)) best = i;
    }
    return best;
  }

  /// Pivots and returns the column that left the basis.
  std::size_t pivot(std::size_t r, std::size_t c) {
    const mpq_class p = tab_[r][c];
    for (auto& v : tab_[r]) {
      if (sgn(v) != 0) v /= p;
    }
    rhs_[r] /= p;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == r || sgn(tab_[i][c]) == 0) continue;
      const mpq_class f = tab_[i][c];
      for (std::size_t j = 0; j < tab_[i].size(); ++j) {
        if (sgn(tab_[r][j]) != 0) tab_[i][j] -= f * tab_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    const std::size_t left = basis_[r];
    basis_[r] = c;
    return left;
  }

  Solution extract() const {
    Solution s{zero_vector(n_), zero_vector(n_)};
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t c = basis_[i];
      if (c < n_) {
        s.w[c] = Rational(rhs_[i]);
      } else if (c < 2 * n_) {
        s.z[c - n_] = Rational(rhs_[i]);
      }
    }
    return s;
  }

 private:
  bool lex_less(std::size_t a, std::size_t b, std::size_t col) const {
    const mpq_class& da = tab_[a][col];
    const mpq_class& db = tab_[b][col];
    const int c = cmp(mpq_class(rhs_[a] * db), mpq_class(rhs_[b] * da));
    if (c != 0) return c < 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const int cj = cmp(mpq_class(tab_[a][j] * db), mpq_class(tab_[b][j] * da));
      if (cj != 0) return cj < 0;
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<mpq_class>> tab_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LemkeResult lemke_solve(const LCPInstance& inst) {
  LemkeResult out;
  if (is_nonnegative(inst.q())) {
    out.status = LemkeResult::Status::Solved;
    out.solution = Solution{inst.q(), zero_vector(inst.n())};
    return out;
  }
  LemkeTableau t(inst);
  std::size_t left = t.pivot(t.initial_row(), t.z0());
  out.pivots = 1;
  while (true) {
    const std::size_t entering = t.complement(left);
    const auto row = t.ratio_test(entering);
    if (!row) {
      out.status = LemkeResult::Status::RayTermination;
      return out;
    }
    left = t.pivot(*row, entering);
    ++out.pivots;
    if (left == t.z0()) break;
  }
  auto sol = t.extract();
  if (!is_solution(inst, sol)) {
    throw std::logic_error("lemke_solve: terminal basis is not a solution");
  }
  out.status = LemkeResult::Status::Solved;
  out.solution = std::move(sol);
  return out;
}

// ---------------------------------------------------------------------------
// Solution enumeration

namespace {

/// Homogenized description of P_σ over (x = z_σ, s):
///   s > 0, x ≥ 0, A_σσ x + q_σ s = 0, A_σ̄σ x + q_σ̄ s ≥ 0.
/// Coordinate i of R^n names the inequality z_i ≥ 0 (i ∈ σ) or w_i ≥ 0 (i ∉ σ).
class SupportSystem {
 public:
  SupportSystem(const LCPInstance& inst, const IndexSet& sigma)
      : inst_(inst), sigma_(sigma), k_(sigma.size()) {}

  LinearSystem build(std::uint64_t strict_coords) const {
    const std::size_t n = inst_.n();
    LinearSystem sys(k_ + 1);
    sys.add_bound(k_, Relation::Gt);
    for (std::size_t v = 0; v < k_; ++v) {
      const bool strict = strict_coords & (std::uint64_t{1} << sigma_[v]);
      sys.add_bound(v, strict ? Relation::Gt : Relation::Ge);
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vector row(k_ + 1);
      for (std::size_t v = 0; v < k_; ++v) row[v] = inst_.A()(i, sigma_[v]);
      row[k_] = inst_.q()[i];
      if (sigma_.contains(i)) {
        sys.add(std::move(row), Relation::Eq);
      } else {
        const bool strict = strict_coords & (std::uint64_t{1} << i);
        sys.add(std::move(row), strict ? Relation::Gt : Relation::Ge);
      }
    }
    return sys;
  }

  /// Coordinates whose inequality is strict at the (x, s) witness.
  std::uint64_t strict_at(const Vector& xs) const {
    const std::size_t n = inst_.n();
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < k_; ++v) {
      if (xs[v].is_positive()) m |= std::uint64_t{1} << sigma_[v];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma_.contains(i)) continue;
      Rational wi = inst_.q()[i] * xs[k_];
      for (std::size_t v = 0; v < k_; ++v) wi += inst_.A()(i, sigma_[v]) * xs[v];
      if (wi.is_positive()) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  /// Dehomogenize (x, s) to z ∈ R^n.
  Vector to_z(const Vector& xs) const {
    const Rational s = xs[k_];
    Vector x(k_);
    for (std::size_t v = 0; v < k_; ++v) x[v] = xs[v] / s;
    return embed(sigma_, x);
  }

 private:
  const LCPInstance& inst_;
  const IndexSet& sigma_;
  std::size_t k_;
};

struct SupportInfo {
  bool feasible = false;
  /// Coordinates whose inequality holds with equality on all of P_σ.
  std::uint64_t implicit = 0;
};

SupportInfo analyse_support(const LCPInstance& inst, const IndexSet& sigma) {
  SupportInfo info;
  const SupportSystem ss(inst, sigma);
  const auto base = lp_feasible(ss.build(0));
  if (!base.feasible) return info;
  info.feasible = true;
  std::uint64_t loose = ss.strict_at(base.witness);
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (loose & bit) continue;
    const auto r = lp_feasible(ss.build(bit));
    if (r.feasible) loose |= ss.strict_at(r.witness) | bit;
  }
  const std::uint64_t all = (std::uint64_t{1} << inst.n()) - 1;
  info.implicit = all & ~loose;
  return info;
}

SolutionPiece build_piece(const LCPInstance& inst, const IndexSet& sigma, const SupportInfo& info) {
  const std::size_t n = inst.n();
  const std::size_t k = sigma.size();
  const Matrix& a = inst.A();
  const Vector& q = inst.q();
  const SupportSystem ss(inst, sigma);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  SolutionPiece piece;
  piece.support = sigma;

  const auto interior = lp_feasible(ss.build(all & ~info.implicit));
  if (!interior.feasible) throw std::logic_error("relative interior system infeasible");
  piece.relative_interior = solution_from_z(inst, ss.to_z(interior.witness));

  // A basic feasible solution of the weak system is a vertex of P_σ.
  LinearSystem weak(k);
  for (std::size_t v = 0; v < k; ++v) weak.add_bound(v, Relation::Ge);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(k);
    for (std::size_t v = 0; v < k; ++v) row[v] = a(i, sigma[v]);
    weak.add(std::move(row), sigma.contains(i) ? Relation::Eq : Relation::Ge, -q[i]);
  }
  const auto vertex = lp_feasible(weak);
  if (!vertex.feasible) throw std::logic_error("vertex system infeasible");
  piece.particular = solution_from_z(inst, embed(sigma, vertex.witness));

  // Affine hull directions: A_σσ d = 0 and A_jσ d = 0 for implicit w_j.
  std::vector<Vector> eq_rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma.contains(i) || (info.implicit & (std::uint64_t{1} << i))) {
      Vector row(k);
      for (std::size_t v = 0; v < k; ++v) row[v] = a(i, sigma[v]);
      eq_rows.push_back(std::move(row));
    }
  }
  std::vector<Vector> dirs;
  if (k > 0) dirs = null_space_basis(Matrix::from_rows(eq_rows));
  piece.w_constant = true;
  for (const auto& d : dirs) {
    if (!is_zero(a.columns(sigma) * d)) piece.w_constant = false;
  }
  if (dirs.empty()) return piece;

  // Feasible directions from the vertex: d_k = (r + ε b_k) − v, where r + ε b_k
  // stays inside P_σ. Shrink ε until the d_k are independent.
  const Vector r = restrict(piece.relative_interior.z, sigma);
  const Vector v = restrict(piece.particular.z, sigma);
  auto slack_and_rate = [&](std::size_t coord, const Vector& x, const Vector& b) {
    if (sigma.contains(coord)) {
      std::size_t pos = 0;
      while (sigma[pos] != coord) ++pos;
      return std::make_pair(x[pos], b[pos]);
    }
    Rational val = q[coord];
    Rational rate;
    for (std::size_t t = 0; t < k; ++t) {
      val += a(coord, sigma[t]) * x[t];
      rate += a(coord, sigma[t]) * b[t];
    }
    return std::make_pair(val, rate);
  };
  Rational eps(1);
  for (const auto& b : dirs) {
    for (std::size_t c = 0; c < n; ++c) {
      if (info.implicit & (std::uint64_t{1} << c)) continue;
      const auto [val, rate] = slack_and_rate(c, r, b);
      if (rate.is_negative()) {
        const Rational bound = val / (-rate) / Rational(2);
        if (bound < eps) eps = bound;
      }
    }
  }
  while (true) {
    std::vector<Vector> cand;
    for (const auto& b : dirs) cand.push_back(r + (eps * b) - v);
    if (rank(Matrix::from_rows(cand)) == dirs.size()) {
      for (auto& c : cand) piece.ray_basis.push_back(embed(sigma, primitive(c)));
      break;
    }
    eps /= Rational(2);
  }
  return piece;
}

}  // namespace

bool piece_contains(const LCPInstance& inst, const SolutionPiece& piece, const Vector& z) {
  if (z.size() != inst.n()) return false;
  const auto sol = solution_from_z(inst, z);
  if (!is_solution(inst, sol)) return false;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    const bool in = piece.support.contains(i);
    if (!in && !z[i].is_zero()) return false;
    if (in && !sol.w[i].is_zero()) return false;
  }
  return true;
}

std::vector<SolutionPiece> enumerate_solutions(const LCPInstance& inst) {
  const std::size_t n = inst.n();
  check_enumeration_cap(n);
  const auto order = subsets_by_cardinality(n, true);
  std::vector<SupportInfo> info(std::size_t{1} << n);
  for (auto mask : order) info[mask] = analyse_support(inst, IndexSet::from_mask(n, mask));

  std::vector<SolutionPiece> pieces;
  for (auto mask : order) {
    const auto& inf = info[mask];
    if (!inf.feasible) continue;
    // z_i ≡ 0 for some i ∈ σ: the same set is P_{σ∖{i}} or inside it.
    if (inf.implicit & mask) continue;
    // w_j ≡ 0 for j ∈ W0: P_σ ⊆ P_{σ∪W'}; drop P_σ when some W' grows it.
    const std::uint64_t w0 = inf.implicit & ~mask;
    bool maximal = true;
    for (std::uint64_t sub = w0; sub != 0 && maximal; sub = (sub - 1) & w0) {
      const auto& bigger = info[mask | sub];
      if ((bigger.implicit & sub) != sub) maximal = false;
    }
    if (!maximal) continue;
    pieces.push_back(build_piece(inst, IndexSet::from_mask(n, mask), inf));
  }
  return pieces;
}

WSolutionSet w_solution_set(const LCPInstance& inst) {
  WSolutionSet out;
  for (auto& piece : enumerate_solutions(inst)) {
    if (!piece.w_constant) {
      out.finite = false;
      out.w_values.clear();
      out.infinite_witness = std::move(piece);
      return out;
    }
    const auto& w = piece.particular.w;
    bool seen = false;
    for (const auto& x : out.w_values) seen = seen || x == w;
    if (!seen) out.w_values.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local w-uniqueness certificates

namespace {

std::pair<IndexSet, IndexSet> split_by_w(const LCPInstance& inst, const Solution& sol) {
  if (!is_solution(inst, sol)) {
    throw InvalidSolution("(w, z) is not a solution of the LCP: w = " + to_string(sol.w) +
                          ", z = " + to_string(sol.z));
  }
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    (sol.w[i].is_positive() ? alpha : beta).push_back(i);
  }
  return {IndexSet(inst.n(), alpha), IndexSet(inst.n(), beta)};
}

}  // namespace

WUniquenessVerdict check_local_w_uniqueness(const LCPInstance& inst, const Solution& sol) {
  auto [alpha, beta] = split_by_w(inst, sol);
  WUniquenessVerdict out{alpha, beta, false, std::nullopt};
  const Matrix transformed = ppt(inst.A(), alpha).transformed;

  // x_i is w_i on α and z_i on β; the system is A' x = 0, x > 0.
  const std::size_t n = inst.n();
  LinearSystem sys(n);
  for (std::size_t i = 0; i < n; ++i) sys.add_bound(i, Relation::Gt);
  for (std::size_t i = 0; i < n; ++i) sys.add(transformed.row(i), Relation::Eq);
  const auto res = lp_feasible(sys);
  out.certificate_holds = !res.feasible;
  if (res.feasible) {
    const Vector x = primitive(res.witness);
    out.violating_pair = ViolatingPair{restrict(x, alpha), restrict(x, beta)};
  }
  return out;
}

ConverseCheck check_w_uniqueness_converse(const LCPInstance& inst, const Solution& sol) {
  auto [alpha, beta] = split_by_w(inst, sol);
  ConverseCheck out{alpha, beta, true, std::nullopt};
  if (beta.empty()) return out;
  // z_α = 0 is part of the hypothesis, so only A_ββ z_β = 0 remains.
  const auto kernel = null_space_basis(inst.A().principal(beta));
  if (!kernel.empty()) {
    out.trivial_kernel = false;
    out.witness = embed(beta, kernel.front());
  }
  return out;
}

}  // namespace compmat
