#include "compmat/linalg.hpp"

#include <utility>

#include "compmat/errors.hpp"

namespace compmat {

namespace {

using IntRow = std::vector<mpz_class>;

/// Fraction-free row echelon form of an integer-scaled copy of a matrix.
/// Row i of `rows` is an integer combination of the scaled input rows.
struct IntegerEchelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;
  /// Input row i was multiplied by scale[i] to clear denominators.
  std::vector<mpz_class> scale;
  int swap_sign = 1;
};

/// Bareiss elimination restricted to pivots in columns [0, pivot_limit).
/// Columns past the limit (augmented right-hand sides) are carried along.
IntegerEchelon bareiss(const std::vector<Vector>& input, std::size_t width,
                       std::size_t pivot_limit) {
  IntegerEchelon e;
  const std::size_t m = input.size();
  e.rows.assign(m, IntRow(width));
  e.scale.assign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (const auto& x : input[i]) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    }
    e.scale[i] = l;
    for (std::size_t j = 0; j < width; ++j) {
      e.rows[i][j] = input[i][j].numerator() * (l / input[i][j].denominator());
    }
  }

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < m; ++c) {
    std::size_t p = r;
    while (p < m && e.rows[p][c] == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      e.swap_sign = -e.swap_sign;
    }
    const mpz_class& piv = e.rows[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const mpz_class lead = e.rows[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        mpz_class v = piv * e.rows[i][j] - lead * e.rows[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        e.rows[i][j] = std::move(v);
      }
      e.rows[i][c] = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

/// Back-substitution on an echelon form: pivot variables are solved from
/// right-hand side column `rhs_col` (or zero when absent) with the given
/// values for the free variables.
Vector back_substitute(const IntegerEchelon& e, std::size_t n_vars,
                       Vector x, std::ptrdiff_t rhs_col) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const std::size_t p = e.pivot_cols[k];
    mpq_class s = rhs_col >= 0 ? mpq_class(e.rows[k][static_cast<std::size_t>(rhs_col)]) : mpq_class(0);
    for (std::size_t j = p + 1; j < n_vars; ++j) {
      if (e.rows[k][j] != 0 && !x[j].is_zero()) s -= e.rows[k][j] * x[j].raw();
    }
    x[p] = Rational(mpq_class(s / e.rows[k][p]));
  }
  return x;
}

std::vector<Vector> kernel_from_echelon(const IntegerEchelon& e, std::size_t n_vars) {
  std::vector<bool> is_pivot(n_vars, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n_vars; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(n_vars);
    x[f] = 1;
    basis.push_back(primitive(back_substitute(e, n_vars, std::move(x), -1)));
  }
  return basis;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  return bareiss(rows_of(m), m.cols(), m.cols()).pivot_cols.size();
}

std::vector<Vector> null_space_basis(const Matrix& m) {
  return kernel_from_echelon(bareiss(rows_of(m), m.cols(), m.cols()), m.cols());
}

Rational det(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  const auto e = bareiss(rows_of(m), n, n);
  if (e.pivot_cols.size() < n) return Rational(0);
  mpz_class scale = 1;
  for (const auto& s : e.scale) scale *= s;
  return Rational(mpq_class(e.swap_sign * e.rows[n - 1][n - 1], scale));
}

LinearSolution solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve_linear: rhs length mismatch");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  std::vector<Vector> aug(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    aug[i] = m.row(i);
    aug[i].push_back(b[i]);
  }
  auto e = bareiss(aug, cols + 1, cols);
  const std::size_t r = e.pivot_cols.size();

  LinearSolution out;
  for (std::size_t k = r; k < rows; ++k) {
    if (e.rows[k][cols] == 0) continue;
    // Inconsistent. Redo the elimination with an identity block attached to
    // recover which combination of input rows produced the bad row.
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < rows; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
    }
    const auto t = bareiss(aug, cols + 1 + rows, cols);
    for (std::size_t kk = t.pivot_cols.size(); kk < rows; ++kk) {
      if (t.rows[kk][cols] == 0) continue;
      Vector y(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        y[i] = Rational(mpq_class(t.rows[kk][cols + 1 + i] * t.scale[i]));
      }
      out.certificate = primitive(y);
      break;
    }
    out.consistent = false;
    return out;
  }

  out.consistent = true;
  out.particular = back_substitute(e, cols, zero_vector(cols), static_cast<std::ptrdiff_t>(cols));
  out.null_basis = kernel_from_echelon(e, cols);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Vector> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = m.row(i);
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
  }
  const auto e = bareiss(aug, 2 * n, n);
  if (e.pivot_cols.size() < n) throw SingularPivot("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // Row scaling hits [M | I] uniformly, so the solution is unchanged.
    const auto x = back_substitute(e, n, zero_vector(n), static_cast<std::ptrdiff_t>(n + j));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
  }
  return inv;
}

PPTResult ppt(const Matrix& a, const IndexSet& alpha) {
  if (!a.is_square()) throw DimensionMismatch("ppt: matrix is not square");
  if (alpha.ambient() != a.rows()) throw DimensionMismatch("ppt: index set ambient mismatch");
  PPTResult out;
  out.pivot_set = alpha;
  if (alpha.empty()) {
    out.transformed = a;
    return out;
  }
  const auto bar = alpha.complement();
  const Matrix a_aa = a.principal(alpha);
  const Rational d = det(a_aa);
  if (d.is_zero()) throw SingularPivot("ppt: A_αα is singular for α = " + alpha.str());
  out.pivot_det_sign = d.sign();

  const Matrix inv = inverse(a_aa);
  const Matrix a_ab = a.block(alpha, bar);
  const Matrix a_ba = a.block(bar, alpha);
  const Matrix a_bb = a.block(bar, bar);

  const Matrix p_ab = -(inv * a_ab);
  const Matrix p_ba = a_ba * inv;
  const Matrix p_bb = a_bb - a_ba * inv * a_ab;

  Matrix t(a.rows(), a.cols());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) t(alpha[i], alpha[j]) = inv(i, j);
    for (std::size_t j = 0; j < bar.size(); ++j) t(alpha[i], bar[j]) = p_ab(i, j);
  }
  for (std::size_t i = 0; i < bar.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) t(bar[i], alpha[j]) = p_ba(i, j);
    for (std::size_t j = 0; j < bar.size(); ++j) t(bar[i], bar[j]) = p_bb(i, j);
  }
  out.transformed = std::move(t);
  return out;
}

Matrix schur_complement(const Matrix& a, const IndexSet& alpha) {
  if (!a.is_square()) throw DimensionMismatch("schur_complement: matrix is not square");
  const auto bar = alpha.complement();
  const Matrix a_bb = a.block(bar, bar);
  if (alpha.empty()) return a_bb;
  const Matrix a_aa = a.principal(alpha);
  const Matrix a_ab = a.block(alpha, bar);
  const Matrix a_ba = a.block(bar, alpha);

  // Solve A_αα X = A_αᾱ column by column rather than forming the inverse.
  Matrix x(alpha.size(), bar.size());
  for (std::size_t j = 0; j < bar.size(); ++j) {
    const auto sol = solve_linear(a_aa, a_ab.column(j));
    if (!sol.consistent || !sol.null_basis.empty()) {
      throw SingularPivot("schur_complement: A_αα is singular for α = " + alpha.str());
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) x(i, j) = sol.particular[i];
  }
  if (bar.empty() && det(a_aa).is_zero()) {
    throw SingularPivot("schur_complement: A_αα is singular for α = " + alpha.str());
  }
  return a_bb - a_ba * x;
}

std::vector<int> principal_minor_signs(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("principal minors: matrix is not square");
  const std::size_t n = a.rows();
  check_enumeration_cap(n);
  std::vector<int> signs(std::size_t{1} << n, 1);
  for (std::uint64_t m = 1; m < signs.size(); ++m) {
    signs[m] = det(a.principal(IndexSet::from_mask(n, m))).sign();
  }
  return signs;
}

}  // namespace compmat
