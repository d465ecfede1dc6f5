// Parameter arrays of Leonard systems: the seven-case catalog, expansion,
// intersection numbers, recognition from a Q-polynomial graph, classical
// parameters and rho-descendents.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drgdesc/classical.hpp"
#include "drgdesc/exactmath.hpp"
#include "drgdesc/scheme.hpp"

namespace drg {

enum class LeonardCase { I, IA, II, IIA, IIB, IIC, III };

std::string case_name(LeonardCase c);
LeonardCase parse_case(const std::string& name);

// Scalars of p(case; ...; d).  Cases with a single r keep it in r1; unused
// fields stay zero.  q is only meaningful for I and IA.
struct ParameterArray {
  LeonardCase kind = LeonardCase::IIC;
  int d = 1;
  Rational q, h, h_star, r1, r2, s, s_star, theta0, theta0_star;

  // Scalar tuple of the case in catalog order, e.g. IIC: r, s, s*, theta0, theta0*.
  std::vector<std::pair<std::string, Rational>> scalars() const;
  static ParameterArray from_scalars(LeonardCase kind, int d, const std::map<std::string, Rational>& values);
  std::string str() const;
  friend bool operator==(const ParameterArray&, const ParameterArray&) = default;
};

// phi[i-1] holds varphi_i and phi_dn[i-1] holds phi_i (1 <= i <= d).
struct ExpandedArray {
  int d = 0;
  std::vector<Rational> theta, theta_star, phi, phi_dn;
  friend bool operator==(const ExpandedArray&, const ExpandedArray&) = default;
};

struct IntersectionNumbers {
  std::vector<Rational> b, c;  // indices 0..d, b_d = c_0 = 0
  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;
};

// Throws InvalidArgument on a case-constraint violation and InfeasibleArray
// when eigenvalues repeat or some varphi_i / phi_i vanishes.
ExpandedArray expand(const ParameterArray& pa);
void check_feasible(const ExpandedArray& ea);

IntersectionNumbers intersection_numbers(const ExpandedArray& ea);
// b_i / c_1 and c_i / c_1; invariant under affine transformations.
IntersectionNumbers normalized_intersection_numbers(const ExpandedArray& ea);
ExpandedArray affine_transform(const ExpandedArray& ea, const Rational& xi, const Rational& xi_star,
                               const Rational& zeta, const Rational& zeta_star);

// Parameter array of Phi(Gamma) read off the graph: theta_i in the ordering,
// theta*_i the dual eigenvalues, varphi/phi by inverting the b_i, c_i formulas.
ExpandedArray graph_parameter_array(const SchemeData& s, const QPolyOrdering& ord);

// Case and scalars reproducing ea exactly, in canonical form.  Throws
// InfeasibleArray when no case fits.
ParameterArray recognize(const ExpandedArray& ea);
ParameterArray fit_from_graph(const SchemeData& s, const QPolyOrdering& ord);

struct ClassicalDetection {
  std::optional<ClassicalParameters> value;  // direct search over q
  std::optional<ClassicalParameters> table;  // from the fitted case
  bool routes_agree = true;
};
// Direct search only (no fit needed).
std::optional<ClassicalParameters> detect_classical(const IntersectionArray& ia);
// Both routes; the table route uses pa.
ClassicalDetection detect_classical(const IntersectionArray& ia, const ParameterArray& pa);
std::optional<ClassicalParameters> classical_from_case(const ParameterArray& pa);

ParameterArray rho_descendent(const ParameterArray& pa, int d_prime, int rho);

// Whether Gamma_Y is connected (and distance-regular) for a descendent of
// dual width w_star, 0 < w_star < d.
bool predict_connectivity(const ParameterArray& pa, int w_star);

}  // namespace drg
