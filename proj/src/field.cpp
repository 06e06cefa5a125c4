#include "repkit/field.hpp"

#include <stdexcept>
#include <utility>

namespace repkit {

std::string FieldSpec::describe() const {
  return is_prime() ? "F_" + std::to_string(p) : "Q";
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_field(const FieldSpec& f) {
  if (!f.is_prime()) return;
  if (f.p < 3 || f.p >= (1u << 31) || !is_prime_number(f.p))
    throw std::invalid_argument("field modulus must be a prime in [3, 2^31): " + std::to_string(f.p));
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("no inverse mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

namespace {

std::uint32_t reduce_ll(long long v, std::uint32_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

void require_same(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrix field mismatch");
}

}  // namespace

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    pv_.assign(rows * cols, 0);
  else
    qv_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("from_ints: entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

Matrix Matrix::random(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                      int rational_range) {
  Matrix m(f, rows, cols);
  if (f.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.p - 1);
    for (auto& e : m.pv_) e = d(rng);
  } else {
    std::uniform_int_distribution<int> d(-rational_range, rational_range);
    for (auto& e : m.qv_) e = d(rng);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, long long v) {
  if (field_.is_prime())
    pv_[i * cols_ + j] = reduce_ll(v, field_.p);
  else
    qv_[i * cols_ + j] = mpq_class(static_cast<long>(v));
}

void Matrix::set(std::size_t i, std::size_t j, const mpq_class& v) {
  if (field_.is_prime()) {
    mpz_class num = v.get_num() % field_.p;
    mpz_class den = v.get_den() % field_.p;
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    long long n = num.get_si();
    auto dn = static_cast<std::uint32_t>(den.get_si());
    pv_[i * cols_ + j] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(reduce_ll(n, field_.p)) * mod_inverse(dn, field_.p)) % field_.p);
  } else {
    mpq_class c = v;
    c.canonicalize();
    qv_[i * cols_ + j] = c;
  }
}

void Matrix::copy_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si, std::size_t sj) {
  if (field_.is_prime())
    pv_[i * cols_ + j] = src.pv_[si * src.cols_ + sj];
  else
    qv_[i * cols_ + j] = src.qv_[si * src.cols_ + sj];
}

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  return field_.is_prime() ? pv_[i * cols_ + j] == 0 : sgn(qv_[i * cols_ + j]) == 0;
}

bool Matrix::is_one_at(std::size_t i, std::size_t j) const {
  return field_.is_prime() ? pv_[i * cols_ + j] == 1 : qv_[i * cols_ + j] == 1;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto e : pv_)
      if (e) return false;
    return true;
  }
  for (const auto& e : qv_)
    if (sgn(e) != 0) return false;
  return true;
}

mpq_class Matrix::rational_at(std::size_t i, std::size_t j) const {
  if (field_.is_prime()) return mpq_class(static_cast<unsigned long>(pv_[i * cols_ + j]));
  return qv_[i * cols_ + j];
}

std::uint32_t Matrix::residue_at(std::size_t i, std::size_t j) const {
  if (!field_.is_prime()) throw std::logic_error("residue_at on a rational matrix");
  return pv_[i * cols_ + j];
}

std::string Matrix::entry_string(std::size_t i, std::size_t j) const {
  if (field_.is_prime()) return std::to_string(pv_[i * cols_ + j]);
  return qv_[i * cols_ + j].get_str();
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(*this, o);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_prime()) {
    const std::uint64_t p = field_.p;
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t a = pv_[i * cols_ + k];
        if (!a) continue;
        const std::uint32_t* row = &o.pv_[k * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * row[j]) % p;
      }
      for (std::size_t j = 0; j < o.cols_; ++j) out.pv_[i * o.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& a = qv_[i * cols_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.qv_[i * o.cols_ + j] += a * o.qv_[k * o.cols_ + j];
      }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = *this;
  if (field_.is_prime()) {
    for (std::size_t k = 0; k < pv_.size(); ++k) {
      std::uint32_t s = out.pv_[k] + o.pv_[k];
      out.pv_[k] = s >= field_.p ? s - field_.p : s;
    }
  } else {
    for (std::size_t k = 0; k < qv_.size(); ++k) out.qv_[k] += o.qv_[k];
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  if (field_.is_prime()) {
    for (auto& e : out.pv_) e = e ? field_.p - e : 0;
  } else {
    for (auto& e : out.qv_) e = -e;
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(long long c) const {
  Matrix s(field_, 1, 1);
  s.set(0, 0, c);
  return scaled_by_entry(s);
}

Matrix Matrix::scaled_by_entry(const Matrix& scalar) const {
  Matrix out = *this;
  if (field_.is_prime()) {
    std::uint64_t c = scalar.pv_[0];
    for (auto& e : out.pv_) e = static_cast<std::uint32_t>((e * c) % field_.p);
  } else {
    for (auto& e : out.qv_) e *= scalar.qv_[0];
  }
  return out;
}

Matrix& Matrix::add_scaled(const Matrix& o, const Matrix& scalar) {
  require_same(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add_scaled shape mismatch");
  if (field_.is_prime()) {
    std::uint64_t c = scalar.pv_[0];
    if (!c) return *this;
    for (std::size_t k = 0; k < pv_.size(); ++k)
      pv_[k] = static_cast<std::uint32_t>((pv_[k] + c * o.pv_[k]) % field_.p);
  } else {
    for (std::size_t k = 0; k < qv_.size(); ++k) qv_[k] += scalar.qv_[0] * o.qv_[k];
  }
  return *this;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.copy_entry(j, i, *this, i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.copy_entry(i, j, *this, r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) copy_entry(r0 + i, c0 + j, b, i, j);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.copy_entry(i, j, *this, idx[i], j);
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.copy_entry(i, j, *this, i, idx[j]);
  return out;
}

Matrix Matrix::vectorize() const {
  Matrix out(field_, rows_ * cols_, 1);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) out.copy_entry(j * rows_ + i, 0, *this, i, j);
  return out;
}

Matrix Matrix::unvectorize(const Matrix& v, std::size_t offset, std::size_t rows, std::size_t cols) {
  Matrix out(v.field(), rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) out.copy_entry(i, j, v, offset + j * rows + i, 0);
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Matrix Matrix::to_prime(std::uint32_t p) const {
  FieldSpec f = FieldSpec::prime_field(p);
  if (field_ == f) return *this;
  if (field_.is_prime()) throw std::invalid_argument("cannot change prime modulus");
  Matrix out(f, rows_, cols_);
  for (std::size_t k = 0; k < qv_.size(); ++k) out.set(k / cols_, k % cols_, qv_[k]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.pv_ == b.pv_ && a.qv_ == b.qv_;
}

namespace {

// Gauss-Jordan on the first `limit` columns; the remaining columns ride along.
std::vector<std::size_t> rref_prime(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols,
                                    std::size_t limit, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    std::uint64_t inv = mod_inverse(a[r * cols + c], p);
    std::uint32_t* prow = &a[r * cols];
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>((prow[j] * inv) % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = &a[i * cols];
      std::uint64_t f = row[c];
      if (!f) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = static_cast<std::uint32_t>((row[j] + nf * prow[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_rational(std::vector<mpq_class>& a, std::size_t rows, std::size_t cols,
                                       std::size_t limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(a[i * cols + c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    mpq_class inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      mpq_class f = a[i * cols + c];
      if (sgn(f) == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a[r * cols + j]) != 0) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> rref_limited(Matrix& m, std::size_t limit) {
  if (m.field().is_prime()) return rref_prime(m.prime_data(), m.rows(), m.cols(), limit, m.field().p);
  return rref_rational(m.rational_data(), m.rows(), m.cols(), limit);
}

}  // namespace

std::vector<std::size_t> rref_in_place(Matrix& a) { return rref_limited(a, a.cols()); }

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Matrix w = a.rows() < a.cols() ? a : a.transpose();
  return rref_in_place(w).size();
}

Matrix kernel_basis(const Matrix& a) {
  Matrix w = a;
  auto piv = rref_in_place(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.field(), a.cols(), free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t f = free_cols[t];
    k.set(f, t, 1);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (w.is_zero_at(i, f)) continue;
      Matrix e = w.block(i, f, 1, 1);
      k.set_block(piv[i], t, -e);
    }
  }
  return k;
}

Matrix image_basis(const Matrix& a) {
  Matrix w = a;
  auto piv = rref_in_place(w);
  return a.select_cols(piv);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Matrix aug = Matrix::hstack(a, b);
  auto piv = rref_limited(aug, a.cols());
  for (std::size_t i = piv.size(); i < aug.rows(); ++i)
    for (std::size_t j = a.cols(); j < aug.cols(); ++j)
      if (!aug.is_zero_at(i, j)) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.copy_entry(piv[i], j, aug, i, a.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

Matrix cokernel_projection(const Matrix& a) { return kernel_basis(a.transpose()).transpose(); }

bool is_injective(const Matrix& a) { return rank(a) == a.cols(); }
bool is_surjective(const Matrix& a) { return rank(a) == a.rows(); }

}  // namespace repkit
