#include "drgdesc/exactmath.hpp"

#include <algorithm>
#include <climits>
#include <utility>

#include "drgdesc/errors.hpp"

namespace drg {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("Rational: cannot parse '" + s + "'");
  }
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw InvalidArgument("Rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::string Rational::pretty() const { return is_integer() ? v_.get_num().get_str() : str(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.v_ = -a.v_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.v_, b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- matrices

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  std::fill(m.data_.begin(), m.data_.end(), Rational(1));
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument(std::string(op) + ": dimension mismatch");
}
}  // namespace

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matmul: dimension mismatch");
  ExactMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExactMatrix matadd(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matadd");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ExactMatrix matsub(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "matsub");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

ExactMatrix scale(const ExactMatrix& a, const Rational& s) {
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * s;
  return c;
}

ExactMatrix entrywise_product(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "entrywise_product");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

Rational trace(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("trace: matrix not square");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

ExactMatrix transpose(const ExactMatrix& a) {
  ExactMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(ExactMatrix& m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}
}  // namespace

std::size_t rank(ExactMatrix a) { return row_reduce(a, a.cols()).size(); }

std::optional<std::vector<Rational>> solve_linear(const ExactMatrix& a,
                                                  std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve_linear: dimension mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = row_reduce(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, a.cols()).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

// ------------------------------------------------------------- polynomials

int IntPolynomial::degree() const {
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) return static_cast<int>(i);
  return -1;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  IntPolynomial c;
  c.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  c.trim();
  return c;
}

IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial c;
  c.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c.coeffs[i] -= b.coeffs[i];
  c.trim();
  return c;
}

namespace {
// Divide by (x - r); returns false and leaves p untouched if r is not a root.
bool deflate(IntPolynomial& p, const BigInt& r) {
  int n = p.degree();
  if (n < 1) return false;
  std::vector<BigInt> q(static_cast<std::size_t>(n));
  BigInt carry = 0;
  for (int i = n; i >= 1; --i) {
    carry = carry * r + p.coeffs[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  if (carry * r + p.coeffs[0] != 0) return false;
  p.coeffs = std::move(q);
  return true;
}

// Every root z of a monic polynomial satisfies |z| <= 2 max_k |a_{n-k}|^{1/k}.
BigInt root_bound(const IntPolynomial& p) {
  int n = p.degree();
  BigInt best = 0;
  for (int k = 1; k <= n; ++k) {
    BigInt a = abs(p.coeffs[static_cast<std::size_t>(n - k)]);
    if (a == 0) continue;
    BigInt r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
    r += 1;
    if (r > best) best = r;
  }
  return 2 * best;
}
}  // namespace

std::vector<IntegerRoot> integer_roots(const IntPolynomial& input) {
  IntPolynomial p = input;
  p.trim();
  int n = p.degree();
  if (n < 1) return {};
  if (p.coeffs.back() != 1) throw InvalidArgument("integer_roots: polynomial not monic");

  std::vector<IntegerRoot> roots;
  int zero_mult = 0;
  while (p.degree() >= 1 && p.coeffs[0] == 0) {
    p.coeffs.erase(p.coeffs.begin());
    ++zero_mult;
  }
  if (p.degree() >= 1) {
    BigInt bound = root_bound(p);
    const BigInt low = abs(p.coeffs[0]);
    if (low < bound) bound = low;
    for (BigInt z = bound; z >= -bound && p.degree() >= 1; --z) {
      if (z == 0 || !mpz_divisible_p(p.coeffs[0].get_mpz_t(), z.get_mpz_t())) continue;
      int mult = 0;
      while (deflate(p, z)) ++mult;
      if (mult > 0) roots.push_back({z, mult});
    }
  }
  if (zero_mult > 0) roots.push_back({BigInt(0), zero_mult});
  std::sort(roots.begin(), roots.end(),
            [](const IntegerRoot& a, const IntegerRoot& b) { return a.root > b.root; });
  return roots;
}

// --------------------------------------------------------------- q-numbers

Rational qbinomial(long i, long j, long q) {
  if (q == 0) throw InvalidArgument("qbinomial: q must be nonzero");
  if (i < 0 || j < 0) throw InvalidArgument("qbinomial: negative index");
  if (j > i) return Rational(0);
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], evaluated at the integer q.
  std::vector<BigInt> row(static_cast<std::size_t>(j) + 1, 0);
  row[0] = 1;
  std::vector<BigInt> qpow(static_cast<std::size_t>(j) + 1, 1);
  for (long k = 1; k <= j; ++k) qpow[static_cast<std::size_t>(k)] = qpow[static_cast<std::size_t>(k - 1)] * q;
  for (long n = 1; n <= i; ++n)
    for (long k = std::min(n, j); k >= 1; --k) {
      auto ku = static_cast<std::size_t>(k);
      row[ku] = row[ku - 1] + qpow[ku] * row[ku];
    }
  return Rational(row[static_cast<std::size_t>(j)]);
}

Rational qint(long i, long q) { return qbinomial(i, 1, q); }

}  // namespace drg
