#include "compmat/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "compmat/errors.hpp"

namespace compmat {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool is_nonnegative(const Vector& v) {
  return std::none_of(v.begin(), v.end(), [](const Rational& x) { return x.is_negative(); });
}

bool is_positive(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_positive(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector primitive(const Vector& v) {
  if (is_zero(v)) return v;
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    const mpz_class scaled = x.numerator() * (den_lcm / x.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  const Rational factor(mpq_class(den_lcm, num_gcd));
  return factor * v;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("index set has duplicate members");
  }
  if (!indices_.empty() && indices_.back() >= ambient_) {
    throw std::out_of_range("index " + std::to_string(indices_.back() + 1) +
                            " outside {1.." + std::to_string(ambient_) + "}");
  }
}

IndexSet IndexSet::full(std::size_t ambient) {
  std::vector<std::size_t> all(ambient);
  for (std::size_t i = 0; i < ambient; ++i) all[i] = i;
  return IndexSet(ambient, std::move(all));
}

IndexSet IndexSet::from_mask(std::size_t ambient, std::uint64_t mask) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (mask & (std::uint64_t{1} << i)) members.push_back(i);
  }
  return IndexSet(ambient, std::move(members));
}

IndexSet IndexSet::parse_one_based(std::size_t ambient, std::string_view text) {
  std::vector<std::size_t> members;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '{') {
    std::size_t end = text.find_last_not_of(" \t");
    if (text[end] != '}') throw std::invalid_argument("invalid index set '" + std::string(text) + "'");
    return parse_one_based(ambient, text.substr(pos + 1, end - pos - 1));
  }
  if (pos == text.size()) return empty(ambient);
  while (true) {
    skip_ws();
    std::size_t value = 0;
    const auto* first = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0) {
      throw std::invalid_argument("invalid index set '" + std::string(text) + "'");
    }
    members.push_back(value - 1);
    pos += static_cast<std::size_t>(ptr - first);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("invalid index set '" + std::string(text) + "'");
    }
    ++pos;
  }
  return IndexSet(ambient, std::move(members));
}

bool IndexSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (auto i : indices_) m |= std::uint64_t{1} << i;
  return m;
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!contains(i)) rest.push_back(i);
  }
  return IndexSet(ambient_, std::move(rest));
}

std::string IndexSet::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices_[k] + 1);
  }
  return s + "}";
}

std::vector<std::uint64_t> subsets_by_cardinality(std::size_t n, bool include_empty) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << n);
  if (include_empty) out.push_back(0);
  std::vector<std::size_t> comb;
  for (std::size_t k = 1; k <= n; ++k) {
    comb.resize(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::uint64_t m = 0;
      for (auto i : comb) m |= std::uint64_t{1} << i;
      out.push_back(m);
      // Advance to the next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::block(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.ambient() != rows_ || cols.ambient() != cols_) {
    throw DimensionMismatch("block: index set ambient dimension mismatch");
  }
  Matrix m(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = (*this)(rows[a], cols[b]);
  }
  return m;
}

Matrix Matrix::columns(const IndexSet& cols) const {
  return block(IndexSet::full(rows_), cols);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: size mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) s += a.raw() * v[j].raw();
    }
    r[i] = Rational(std::move(s));
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) s += a(i, k).raw() * b(k, j).raw();
      r(i, j) = Rational(std::move(s));
    }
  }
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw DimensionMismatch("matrix difference: shape mismatch");
  }
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
  return r;
}

Matrix operator-(const Matrix& a) {
  Matrix r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Vector embed(const IndexSet& support, const Vector& values) {
  if (support.size() != values.size()) throw DimensionMismatch("embed: size mismatch");
  Vector v = zero_vector(support.ambient());
  for (std::size_t k = 0; k < support.size(); ++k) v[support[k]] = values[k];
  return v;
}

Vector restrict(const Vector& v, const IndexSet& set) {
  if (set.ambient() != v.size()) throw DimensionMismatch("restrict: size mismatch");
  Vector r(set.size());
  for (std::size_t k = 0; k < set.size(); ++k) r[k] = v[set[k]];
  return r;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("COMPMAT_NMAX")) {
    std::size_t value = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0 && value < 63) {
      return value;
    }
  }
  return 14;
}

void check_enumeration_cap(std::size_t n) {
  const auto cap = enumeration_cap();
  if (n > cap) throw CapExceeded(n, cap);
}

}  // namespace compmat
