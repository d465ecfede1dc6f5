// Exact scalars and dense matrices over Q.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

using BigInt = mpz_class;

// Reduced fraction with positive denominator.  GMP keeps mpq values
// canonical after every arithmetic operation, so equality is structural.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& v) : v_(v) {}
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "p", "p/q" with optional sign.
  static Rational parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  long to_long() const;  // throws unless integral and in range

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long e) const;

  // "num/den", always with the denominator.
  std::string str() const;
  // "num" for integers, otherwise "num/den".
  std::string pretty() const;

  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class v_;
};

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matadd(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matsub(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix scale(const ExactMatrix& a, const Rational& s);
ExactMatrix entrywise_product(const ExactMatrix& a, const ExactMatrix& b);
Rational trace(const ExactMatrix& a);
ExactMatrix transpose(const ExactMatrix& a);
std::size_t rank(ExactMatrix a);

// One solution of a·x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const ExactMatrix& a,
                                                  std::span<const Rational> b);

struct IntPolynomial {
  std::vector<BigInt> coeffs;  // lowest degree first

  int degree() const;  // -1 for the zero polynomial
  BigInt evaluate(const BigInt& x) const;
  void trim();
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);

struct IntegerRoot {
  BigInt root;
  int multiplicity = 0;
};

// Integer roots of a monic polynomial, largest root first.
std::vector<IntegerRoot> integer_roots(const IntPolynomial& p);

// Gaussian binomial [i choose j]_q; q = 1 gives the ordinary binomial.
Rational qbinomial(long i, long j, long q);
// [i]_q = [i choose 1]_q.
Rational qint(long i, long q);

}  // namespace drg
