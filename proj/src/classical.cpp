#include "drgdesc/classical.hpp"

#include <cstdlib>

namespace drg {

std::string ClassicalParameters::str() const {
  return "(" + std::to_string(d) + "," + std::to_string(q) + "," + alpha.pretty() + "," + beta.pretty() + ")";
}

std::vector<Rational> classical_b(const ClassicalParameters& cp) {
  std::vector<Rational> b(cp.d + 1);
  const Rational qd = qint(cp.d, cp.q);
  for (int i = 0; i <= cp.d; ++i) {
    const Rational qi = qint(i, cp.q);
    b[i] = (qd - qi) * (cp.beta - cp.alpha * qi);
  }
  return b;
}

std::vector<Rational> classical_c(const ClassicalParameters& cp) {
  std::vector<Rational> c(cp.d + 1);
  for (int i = 1; i <= cp.d; ++i) c[i] = qint(i, cp.q) * (Rational(1) + cp.alpha * qint(i - 1, cp.q));
  return c;
}

bool satisfies_classical(const IntersectionArray& ia, const ClassicalParameters& cp) {
  if (ia.diameter() != cp.d) return false;
  auto b = classical_b(cp);
  auto c = classical_c(cp);
  for (int i = 0; i <= cp.d; ++i)
    if (b[i] != Rational(ia.b[i]) || c[i] != Rational(ia.c[i])) return false;
  return true;
}

std::vector<ClassicalParameters> classical_candidates(const IntersectionArray& ia) {
  const int d = ia.diameter();
  std::vector<ClassicalParameters> out;
  if (d < 1) return out;
  if (d == 1) {
    out.push_back({1, 1, Rational(0), Rational(ia.b[0])});
    return out;
  }
  const long b0 = ia.b[0];
  for (long mag = 1; mag <= std::max(b0, 1L); ++mag)
    for (long q : {mag, -mag}) {
      if (q == -1) continue;
      const Rational q2 = qint(2, q), qd = qint(d, q);
      if (q2.is_zero() || qd.is_zero()) continue;
      ClassicalParameters cp{d, q, Rational(ia.c[2]) / q2 - Rational(1), Rational(b0) / qd};
      if (satisfies_classical(ia, cp)) out.push_back(cp);
    }
  return out;
}

}  // namespace drg
