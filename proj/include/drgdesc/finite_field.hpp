// Subspaces of F_q^n for the prime fields F_2 and F_3.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drgdesc/bitset.hpp"

namespace drg {

// Vectors of F_q^n are encoded as integers in base q (first coordinate most
// significant).  A subspace is stored by its reduced echelon basis and by the
// bitset of the codes of all its vectors.
struct Subspace {
  int dim = 0;
  std::vector<std::vector<std::uint8_t>> rref;
  Bitset elements;
};

class FieldSpace {
 public:
  FieldSpace(int q, int n);

  int q() const { return q_; }
  int n() const { return n_; }
  int vector_count() const { return size_; }

  int encode(const std::vector<std::uint8_t>& v) const;
  std::vector<std::uint8_t> decode(int code) const;

  // All k-dimensional subspaces in a fixed deterministic order.
  std::vector<Subspace> subspaces(int k) const;
  Subspace span(const std::vector<std::vector<std::uint8_t>>& rows) const;
  // dim(U) from the number of vectors it contains.
  int dim_of_count(std::size_t count) const;

  static std::string row_label(const std::vector<std::uint8_t>& row);
  static std::string label(const Subspace& s);

 private:
  int q_;
  int n_;
  int size_;
};

int field_inverse(int a, int q);
// Rank over F_q of a matrix with entries in [0,q).
int field_rank(std::vector<std::vector<std::uint8_t>> m, int q);

}  // namespace drg
