#include "drgdesc/finite_field.hpp"

#include <utility>

#include "drgdesc/errors.hpp"

namespace drg {

int field_inverse(int a, int q) {
  a %= q;
  for (int b = 1; b < q; ++b)
    if ((a * b) % q == 1) return b;
  throw InvalidArgument("field_inverse: zero has no inverse");
}

namespace {
// Row reduce in place; returns the rank and leaves rows 0..rank-1 in RREF.
int reduce(std::vector<std::vector<std::uint8_t>>& m, int q) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    int inv = field_inverse(m[row][col], q);
    for (auto& x : m[row]) x = static_cast<std::uint8_t>((x * inv) % q);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      int f = m[r][col];
      for (std::size_t j = 0; j < cols; ++j)
        m[r][j] = static_cast<std::uint8_t>(((m[r][j] - f * m[row][j]) % q + q) % q);
    }
    ++row;
  }
  return static_cast<int>(row);
}
}  // namespace

int field_rank(std::vector<std::vector<std::uint8_t>> m, int q) { return reduce(m, q); }

FieldSpace::FieldSpace(int q, int n) : q_(q), n_(n), size_(1) {
  if (q != 2 && q != 3) throw InvalidArgument("only F_2 and F_3 are supported");
  if (n < 0) throw InvalidArgument("negative dimension");
  for (int i = 0; i < n; ++i) size_ *= q;
}

int FieldSpace::encode(const std::vector<std::uint8_t>& v) const {
  int c = 0;
  for (auto x : v) c = c * q_ + x;
  return c;
}

std::vector<std::uint8_t> FieldSpace::decode(int code) const {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % q_);
    code /= q_;
  }
  return v;
}

Subspace FieldSpace::span(const std::vector<std::vector<std::uint8_t>>& rows) const {
  auto m = rows;
  int r = reduce(m, q_);
  m.resize(static_cast<std::size_t>(r));
  Subspace s;
  s.dim = r;
  s.rref = m;
  s.elements = Bitset(static_cast<std::size_t>(size_));
  // Walk all coefficient vectors in base q.
  std::vector<int> coef(static_cast<std::size_t>(r), 0);
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n_));
  while (true) {
    for (int j = 0; j < n_; ++j) {
      int x = 0;
      for (int i = 0; i < r; ++i) x += coef[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(x % q_);
    }
    s.elements.set(static_cast<std::size_t>(encode(v)));
    int i = 0;
    while (i < r && ++coef[static_cast<std::size_t>(i)] == q_) coef[static_cast<std::size_t>(i++)] = 0;
    if (i == r) break;
  }
  return s;
}

std::vector<Subspace> FieldSpace::subspaces(int k) const {
  std::vector<Subspace> out;
  if (k < 0 || k > n_) return out;
  std::vector<int> piv(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
  while (true) {
    // Free positions: row i, column c > piv[i], c not a pivot column.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < n_; ++c) {
        bool is_pivot = false;
        for (int p : piv) is_pivot = is_pivot || p == c;
        if (!is_pivot) free.emplace_back(i, c);
      }
    std::vector<int> val(free.size(), 0);
    while (true) {
      std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(k),
                                                  std::vector<std::uint8_t>(static_cast<std::size_t>(n_), 0));
      for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t f = 0; f < free.size(); ++f)
        rows[static_cast<std::size_t>(free[f].first)][static_cast<std::size_t>(free[f].second)] = static_cast<std::uint8_t>(val[f]);
      out.push_back(span(rows));
      // Odometer with the last free entry varying fastest.
      std::size_t f = free.size();
      while (f > 0 && ++val[f - 1] == q_) val[--f] = 0;
      if (f == 0) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == n_ - k + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int FieldSpace::dim_of_count(std::size_t count) const {
  int d = 0;
  std::size_t c = 1;
  while (c < count) {
    c *= static_cast<std::size_t>(q_);
    ++d;
  }
  if (c != count) throw InternalError("subspace size is not a power of q");
  return d;
}

std::string FieldSpace::row_label(const std::vector<std::uint8_t>& row) {
  std::string s;
  for (auto x : row) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::string FieldSpace::label(const Subspace& s) {
  std::string out;
  for (std::size_t i = 0; i < s.rref.size(); ++i) {
    if (i) out.push_back('|');
    out += row_label(s.rref[i]);
  }
  return out;
}

}  // namespace drg
