// Classical parameters (d,q,alpha,beta) and their intersection arrays.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgdesc/exactmath.hpp"
#include "drgdesc/graphs.hpp"

namespace drg {

struct ClassicalParameters {
  int d = 0;
  long q = 1;
  Rational alpha;
  Rational beta;

  std::string str() const;  // "(d,q,alpha,beta)"
  friend bool operator==(const ClassicalParameters&, const ClassicalParameters&) = default;
};

// b_i = ([d]-[i])(beta - alpha[i]),  c_i = [i](1 + alpha[i-1]).
std::vector<Rational> classical_b(const ClassicalParameters& cp);
std::vector<Rational> classical_c(const ClassicalParameters& cp);
bool satisfies_classical(const IntersectionArray& ia, const ClassicalParameters& cp);

// Every integer q != 0,-1 with |q| <= b_0 that fits, ordered by |q| then sign
// (positive first).  For d = 1 alpha is free and pinned to 0 with q = 1.
std::vector<ClassicalParameters> classical_candidates(const IntersectionArray& ia);

}  // namespace drg
