#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace repkit {

inline constexpr std::uint32_t kDefaultPrime = 32003;

struct FieldSpec {
  enum class Kind { rational, prime };

  Kind kind = Kind::prime;
  std::uint32_t p = kDefaultPrime;  // 0 for the rationals

  static FieldSpec rationals() { return {Kind::rational, 0}; }
  static FieldSpec prime_field(std::uint32_t p = kDefaultPrime) { return {Kind::prime, p}; }

  bool is_prime() const { return kind == Kind::prime; }
  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_number(std::uint64_t n);

// Throws std::invalid_argument unless p is a prime in [3, 2^31).
void validate_field(const FieldSpec& f);

// Dense row-major matrix over a FieldSpec. Entries are stored canonically
// (residues in [0,p) or rationals in lowest terms) so == is structural.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix from_ints(FieldSpec f, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& entries);
  static Matrix random(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                       int rational_range = 5);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  void set(std::size_t i, std::size_t j, long long v);
  void set(std::size_t i, std::size_t j, const mpq_class& v);
  // Copies entry (si,sj) of src, which must share the field.
  void copy_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si, std::size_t sj);

  bool is_zero_at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool is_one_at(std::size_t i, std::size_t j) const;
  mpq_class rational_at(std::size_t i, std::size_t j) const;
  std::uint32_t residue_at(std::size_t i, std::size_t j) const;
  // "a", "-a" or "a/b" for rationals; decimal residue for the prime field.
  std::string entry_string(std::size_t i, std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(long long c) const;
  Matrix scaled_by_entry(const Matrix& scalar) const;  // scalar is 1x1
  Matrix& add_scaled(const Matrix& o, const Matrix& scalar);  // this += scalar * o
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  // Column-major flattening into a cols*rows x 1 column.
  Matrix vectorize() const;
  static Matrix unvectorize(const Matrix& v, std::size_t offset, std::size_t rows, std::size_t cols);

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  // Reduces an integer/rational matrix into F_p; throws if a denominator vanishes mod p.
  Matrix to_prime(std::uint32_t p) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Low-level storage access for the elimination kernels.
  std::vector<std::uint32_t>& prime_data() { return pv_; }
  const std::vector<std::uint32_t>& prime_data() const { return pv_; }
  std::vector<mpq_class>& rational_data() { return qv_; }
  const std::vector<mpq_class>& rational_data() const { return qv_; }

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> pv_;
  std::vector<mpq_class> qv_;
};

std::size_t rank(const Matrix& a);
// Columns form a basis of the right null space.
Matrix kernel_basis(const Matrix& a);
// Columns form a basis of the column space (a subset of a's columns).
Matrix image_basis(const Matrix& a);
// Some x with a*x = b, or nullopt when inconsistent. Throws on row mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
// Rows q with q*a = 0 and q of full row rank: a basis of the cokernel functionals.
Matrix cokernel_projection(const Matrix& a);
// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& a);

bool is_injective(const Matrix& a);
bool is_surjective(const Matrix& a);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace repkit
