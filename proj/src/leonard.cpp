#include "drgdesc/leonard.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "drgdesc/errors.hpp"

namespace drg {

namespace {

const char* const kCaseNames[] = {"I", "IA", "II", "IIA", "IIB", "IIC", "III"};

bool is_odd(int i) { return i % 2 != 0; }

// Exact square root of a nonnegative rational, if it is a square.
std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  BigInt n = x.num(), d = x.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

// Roots of t^2 - sum t + prod, ascending, if rational.
std::optional<std::pair<Rational, Rational>> roots_from_sum_product(const Rational& sum, const Rational& prod) {
  auto root = rational_sqrt(sum * sum - Rational(4) * prod);
  if (!root) return std::nullopt;
  Rational a = (sum - *root) / Rational(2), b = (sum + *root) / Rational(2);
  return std::pair{a, b};
}

Rational tau(const std::vector<Rational>& th, int i, const Rational& x) {
  Rational p(1);
  for (int l = 0; l < i; ++l) p *= x - th[l];
  return p;
}

Rational eta(const std::vector<Rational>& th, int i, const Rational& x) {
  const int d = static_cast<int>(th.size()) - 1;
  Rational p(1);
  for (int l = 0; l < i; ++l) p *= x - th[d - l];
  return p;
}

}  // namespace

std::string case_name(LeonardCase c) { return kCaseNames[static_cast<int>(c)]; }

LeonardCase parse_case(const std::string& name) {
  for (int i = 0; i < 7; ++i)
    if (name == kCaseNames[i]) return static_cast<LeonardCase>(i);
  throw InvalidArgument("unknown Leonard case '" + name + "'");
}

// ------------------------------------------------------------------ scalars

std::vector<std::pair<std::string, Rational>> ParameterArray::scalars() const {
  using L = LeonardCase;
  switch (kind) {
    case L::I:
      return {{"q", q}, {"h", h}, {"h*", h_star}, {"r1", r1}, {"r2", r2}, {"s", s}, {"s*", s_star},
              {"theta0", theta0}, {"theta0*", theta0_star}};
    case L::IA:
      return {{"q", q}, {"h*", h_star}, {"r", r1}, {"s", s}, {"theta0", theta0}, {"theta0*", theta0_star}};
    case L::II:
    case L::III:
      return {{"h", h}, {"h*", h_star}, {"r1", r1}, {"r2", r2}, {"s", s}, {"s*", s_star},
              {"theta0", theta0}, {"theta0*", theta0_star}};
    case L::IIA:
      return {{"h", h}, {"r", r1}, {"s", s}, {"s*", s_star}, {"theta0", theta0}, {"theta0*", theta0_star}};
    case L::IIB:
      return {{"h*", h_star}, {"r", r1}, {"s", s}, {"s*", s_star}, {"theta0", theta0}, {"theta0*", theta0_star}};
    case L::IIC:
      return {{"r", r1}, {"s", s}, {"s*", s_star}, {"theta0", theta0}, {"theta0*", theta0_star}};
  }
  throw InternalError("bad case");
}

ParameterArray ParameterArray::from_scalars(LeonardCase kind, int d, const std::map<std::string, Rational>& values) {
  ParameterArray pa;
  pa.kind = kind;
  pa.d = d;
  const std::map<std::string, Rational*> slots = {
      {"q", &pa.q},   {"h", &pa.h},   {"h*", &pa.h_star}, {"r1", &pa.r1},         {"r2", &pa.r2},
      {"r", &pa.r1},  {"s", &pa.s},   {"s*", &pa.s_star}, {"theta0", &pa.theta0}, {"theta0*", &pa.theta0_star}};
  for (const auto& [name, unused] : pa.scalars()) {
    auto it = values.find(name);
    if (it == values.end()) throw InvalidArgument("case " + case_name(kind) + " requires scalar '" + name + "'");
    *slots.at(name) = it->second;
  }
  for (const auto& [name, unused] : values) {
    auto expected = pa.scalars();
    if (std::none_of(expected.begin(), expected.end(), [&](const auto& e) { return e.first == name; }))
      throw InvalidArgument("case " + case_name(kind) + " has no scalar '" + name + "'");
  }
  return pa;
}

std::string ParameterArray::str() const {
  std::ostringstream os;
  os << "p(" << case_name(kind);
  for (const auto& [name, v] : scalars()) os << ';' << name << '=' << v.pretty();
  os << ";d=" << d << ')';
  return os.str();
}

// ---------------------------------------------------------------- expansion

void check_feasible(const ExpandedArray& ea) {
  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(ea.theta)) throw InfeasibleArray("eigenvalues theta_i are not distinct");
  if (!distinct(ea.theta_star)) throw InfeasibleArray("dual eigenvalues theta*_i are not distinct");
  for (int i = 1; i <= ea.d; ++i) {
    if (ea.phi[i - 1].is_zero()) throw InfeasibleArray("varphi_" + std::to_string(i) + " vanishes");
    if (ea.phi_dn[i - 1].is_zero()) throw InfeasibleArray("phi_" + std::to_string(i) + " vanishes");
  }
}

ExpandedArray expand(const ParameterArray& pa) {
  using L = LeonardCase;
  const int d = pa.d;
  if (d < 1) throw InvalidArgument("diameter must be at least 1");
  const Rational one(1);
  const Rational& q = pa.q;
  const Rational &h = pa.h, &hs = pa.h_star, &r1 = pa.r1, &r2 = pa.r2, &s = pa.s, &ss = pa.s_star;

  switch (pa.kind) {
    case L::I:
    case L::IA:
      if (q.is_zero()) throw InvalidArgument("q must be nonzero");
      break;
    default:
      break;
  }
  if (pa.kind == L::I && r1 * r2 != s * ss * q.pow(d + 1))
    throw InvalidArgument("Case I requires r1 r2 = s s* q^(d+1)");
  if (pa.kind == L::II && r1 + r2 != s + ss + Rational(d + 1))
    throw InvalidArgument("Case II requires r1 + r2 = s + s* + d + 1");
  if (pa.kind == L::III && r1 + r2 != -s - ss + Rational(d + 1))
    throw InvalidArgument("Case III requires r1 + r2 = -s - s* + d + 1");

  ExpandedArray ea;
  ea.d = d;
  for (int i = 0; i <= d; ++i) {
    const Rational I(i);
    Rational t, ts;
    switch (pa.kind) {
      case L::I:
        t = h * (one - q.pow(i)) * (one - s * q.pow(i + 1)) * q.pow(-i);
        ts = hs * (one - q.pow(i)) * (one - ss * q.pow(i + 1)) * q.pow(-i);
        break;
      case L::IA:
        t = -s * q * (one - q.pow(i));
        ts = hs * (one - q.pow(i)) * q.pow(-i);
        break;
      case L::II:
        t = h * I * (I + one + s);
        ts = hs * I * (I + one + ss);
        break;
      case L::IIA:
        t = h * I * (I + one + s);
        ts = ss * I;
        break;
      case L::IIB:
        t = s * I;
        ts = hs * I * (I + one + ss);
        break;
      case L::IIC:
        t = s * I;
        ts = ss * I;
        break;
      case L::III: {
        const Rational sign(is_odd(i) ? -1 : 1);
        t = h * (s - one + (one - s + Rational(2 * i)) * sign);
        ts = hs * (ss - one + (one - ss + Rational(2 * i)) * sign);
        break;
      }
    }
    ea.theta.push_back(pa.theta0 + t);
    ea.theta_star.push_back(pa.theta0_star + ts);
  }
  const Rational D1(d + 1);
  for (int i = 1; i <= d; ++i) {
    const Rational I(i);
    Rational f, g;
    switch (pa.kind) {
      case L::I: {
        const Rational base = h * hs * (one - q.pow(i)) * (one - q.pow(i - d - 1));
        f = base * q.pow(1 - 2 * i) * (one - r1 * q.pow(i)) * (one - r2 * q.pow(i));
        if (!ss.is_zero())
          g = base * q.pow(1 - 2 * i) * (r1 - ss * q.pow(i)) * (r2 - ss * q.pow(i)) / ss;
        else
          g = base * q.pow(d + 2 - 2 * i) * (s - r1 * q.pow(i - d - 1) - r2 * q.pow(i - d - 1));
        break;
      }
      case L::IA: {
        const Rational base = hs * (one - q.pow(i)) * (one - q.pow(i - d - 1));
        f = -r1 * q.pow(1 - i) * base;
        g = base * q.pow(d + 2 - 2 * i) * (s - r1 * q.pow(i - d - 1));
        break;
      }
      case L::II:
        f = h * hs * I * (I - D1) * (I + r1) * (I + r2);
        g = h * hs * I * (I - D1) * (I + ss - r1) * (I + ss - r2);
        break;
      case L::IIA:
        f = h * ss * I * (I - D1) * (I + r1);
        g = h * ss * I * (I - D1) * (I + r1 - s - D1);
        break;
      case L::IIB:
        f = hs * s * I * (I - D1) * (I + r1);
        g = -hs * s * I * (I - D1) * (I + ss - r1);
        break;
      case L::IIC:
        f = r1 * I * (I - D1);
        g = (r1 - s * ss) * I * (I - D1);
        break;
      case L::III: {
        const Rational k = Rational(4) * h * hs;
        const bool de = !is_odd(d), ie = !is_odd(i);
        if (ie && de) {
          f = -k * I * (I + r1);
          g = k * I * (I - ss - r1);
        } else if (!ie && de) {
          f = -k * (I - D1) * (I + r2);
          g = k * (I - D1) * (I - ss - r2);
        } else if (ie) {
          f = -k * I * (I - D1);
          g = -k * I * (I - D1);
        } else {
          f = -k * (I + r1) * (I + r2);
          g = -k * (I - ss - r1) * (I - ss - r2);
        }
        break;
      }
    }
    ea.phi.push_back(f);
    ea.phi_dn.push_back(g);
  }
  check_feasible(ea);
  return ea;
}

// ------------------------------------------------------ intersection numbers

IntersectionNumbers intersection_numbers(const ExpandedArray& ea) {
  const int d = ea.d;
  const auto& ts = ea.theta_star;
  IntersectionNumbers out;
  out.b.assign(d + 1, Rational());
  out.c.assign(d + 1, Rational());
  // b_d = c_0 = 0 by the conventions varphi_{d+1} = phi_0 = 0, so the
  // indeterminates theta*_{-1}, theta*_{d+1} never enter.
  for (int i = 0; i < d; ++i) {
    const Rational den = tau(ts, i + 1, ts[i + 1]);
    if (den.is_zero()) throw InfeasibleArray("repeated dual eigenvalues");
    out.b[i] = ea.phi[i] * tau(ts, i, ts[i]) / den;
  }
  for (int i = 1; i <= d; ++i) {
    const Rational den = eta(ts, d - i + 1, ts[i - 1]);
    if (den.is_zero()) throw InfeasibleArray("repeated dual eigenvalues");
    out.c[i] = ea.phi_dn[i - 1] * eta(ts, d - i, ts[i]) / den;
  }
  return out;
}

IntersectionNumbers normalized_intersection_numbers(const ExpandedArray& ea) {
  auto n = intersection_numbers(ea);
  const Rational c1 = n.c[1];
  for (auto& v : n.b) v /= c1;
  for (auto& v : n.c) v /= c1;
  return n;
}

ExpandedArray affine_transform(const ExpandedArray& ea, const Rational& xi, const Rational& xi_star,
                               const Rational& zeta, const Rational& zeta_star) {
  if (xi.is_zero() || xi_star.is_zero()) throw InvalidArgument("affine transformation needs xi, xi* nonzero");
  ExpandedArray out = ea;
  for (auto& t : out.theta) t = xi * t + zeta;
  for (auto& t : out.theta_star) t = xi_star * t + zeta_star;
  for (auto& f : out.phi) f *= xi * xi_star;
  for (auto& f : out.phi_dn) f *= xi * xi_star;
  return out;
}

ExpandedArray graph_parameter_array(const SchemeData& s, const QPolyOrdering& ord) {
  const int d = s.d;
  ExpandedArray ea;
  ea.d = d;
  for (int i = 0; i <= d; ++i) ea.theta.push_back(s.eigenvalues[ord.perm[i]]);
  ea.theta_star = ord.dual_eigenvalues;
  const auto& ts = ea.theta_star;
  for (int i = 0; i < d; ++i)
    ea.phi.push_back(Rational(s.ia.b[i]) * tau(ts, i + 1, ts[i + 1]) / tau(ts, i, ts[i]));
  for (int i = 1; i <= d; ++i)
    ea.phi_dn.push_back(Rational(s.ia.c[i]) * eta(ts, d - i + 1, ts[i - 1]) / eta(ts, d - i, ts[i]));
  return ea;
}

// --------------------------------------------------------------- recognition

namespace {

using Candidate = std::optional<ParameterArray>;

bool reproduces(const ParameterArray& pa, const ExpandedArray& ea) {
  try {
    return expand(pa) == ea;
  } catch (const InvalidArgument&) {
    return false;
  } catch (const InfeasibleArray&) {
    return false;
  }
}

ParameterArray base(LeonardCase kind, const ExpandedArray& ea) {
  ParameterArray pa;
  pa.kind = kind;
  pa.d = ea.d;
  pa.theta0 = ea.theta[0];
  pa.theta0_star = ea.theta_star[0];
  return pa;
}

// theta_i = theta_0 + B (q^i - 1) + C (q^{-i} - 1) through i = 1, 2 (or i = 1
// alone when d = 1, taking C = 0).
std::pair<Rational, Rational> fit_q_terms(const std::vector<Rational>& th, const Rational& q) {
  const Rational one(1);
  const Rational y1 = th[1] - th[0];
  if (th.size() < 3) return {y1 / (q - one), Rational()};
  const Rational y2 = th[2] - th[0];
  const Rational a11 = q - one, a12 = q.inverse() - one, a21 = q * q - one, a22 = q.pow(-2) - one;
  const Rational det = a11 * a22 - a12 * a21;
  return {(y1 * a22 - a12 * y2) / det, (a11 * y2 - a21 * y1) / det};
}

std::vector<Candidate> q_case_candidates(const ExpandedArray& ea, const Rational& q) {
  const Rational one(1);
  const int d = ea.d;
  auto [b, c] = fit_q_terms(ea.theta, q);
  auto [bs, cs] = fit_q_terms(ea.theta_star, q);
  const Rational phi1 = ea.phi[0];
  const Rational edge = (one - q) * (one - q.pow(-d));
  std::vector<Candidate> out;
  if (!c.is_zero() && !cs.is_zero()) {
    ParameterArray pa = base(LeonardCase::I, ea);
    pa.q = q;
    pa.h = c;
    pa.s = b / (c * q);
    pa.h_star = cs;
    pa.s_star = bs / (cs * q);
    const Rational prod = pa.s * pa.s_star * q.pow(d + 1);
    // (1 - r1 q)(1 - r2 q) = 1 - q (r1 + r2) + q^2 r1 r2
    const Rational k = phi1 / (pa.h * pa.h_star * q.inverse() * edge);
    const Rational sum = (one + q * q * prod - k) / q;
    if (auto r = roots_from_sum_product(sum, prod)) {
      pa.r1 = r->first;
      pa.r2 = r->second;
      // With s* = 0 one root is zero; keep it in r1 to match the classical table.
      if (pa.s_star.is_zero() && pa.r1 != 0) std::swap(pa.r1, pa.r2);
      out.push_back(pa);
    }
  }
  if (c.is_zero() && !b.is_zero() && !cs.is_zero() && bs.is_zero()) {
    ParameterArray pa = base(LeonardCase::IA, ea);
    pa.q = q;
    pa.s = b / q;
    pa.h_star = cs;
    pa.r1 = -phi1 / (pa.h_star * edge);
    out.push_back(pa);
  }
  return out;
}

// Quadratic part h and linear part s of theta_i = theta_0 + h i (i + 1 + s);
// h = 0 means theta_i = theta_0 + s i.
std::pair<Rational, Rational> fit_quadratic(const std::vector<Rational>& th) {
  const Rational one(1);
  Rational h;
  if (th.size() >= 3) h = (th[2] - Rational(2) * th[1] + th[0]) / Rational(2);
  const Rational step = th[1] - th[0];
  if (h.is_zero()) return {Rational(), step};
  return {h, step / h - Rational(2)};
}

std::vector<Candidate> q1_case_candidates(const ExpandedArray& ea) {
  const Rational one(1);
  const int d = ea.d;
  const Rational D(d), phi1 = ea.phi[0];
  auto [h, s] = fit_quadratic(ea.theta);
  auto [hs, ss] = fit_quadratic(ea.theta_star);
  std::vector<Candidate> out;
  if (!h.is_zero() && !hs.is_zero()) {
    ParameterArray pa = base(LeonardCase::II, ea);
    pa.h = h;
    pa.s = s;
    pa.h_star = hs;
    pa.s_star = ss;
    // varphi_1 = -d h h* (1 + r1)(1 + r2)
    const Rational sum = s + ss + Rational(d + 1);
    const Rational prod = phi1 / (-D * h * hs) - one - sum;
    if (auto r = roots_from_sum_product(sum, prod)) {
      pa.r1 = r->first;
      pa.r2 = r->second;
      out.push_back(pa);
    }
  } else if (!h.is_zero()) {
    ParameterArray pa = base(LeonardCase::IIA, ea);
    pa.h = h;
    pa.s = s;
    pa.s_star = ss;
    pa.r1 = phi1 / (-D * h * ss) - one;
    out.push_back(pa);
  } else if (!hs.is_zero()) {
    ParameterArray pa = base(LeonardCase::IIB, ea);
    pa.h_star = hs;
    pa.s = s;
    pa.s_star = ss;
    pa.r1 = phi1 / (-D * hs * s) - one;
    out.push_back(pa);
  } else {
    ParameterArray pa = base(LeonardCase::IIC, ea);
    pa.s = s;
    pa.s_star = ss;
    pa.r1 = -phi1 / D;
    out.push_back(pa);
  }
  return out;
}

std::vector<Candidate> case_iii_candidates(const ExpandedArray& ea) {
  std::vector<Candidate> out;
  if (ea.d < 2) return out;
  const Rational one(1), two(2), four(4);
  const int d = ea.d;
  ParameterArray pa = base(LeonardCase::III, ea);
  // theta_1 = theta_0 + h(2s - 4), theta_2 = theta_0 + 4h
  pa.h = (ea.theta[2] - ea.theta[0]) / four;
  pa.h_star = (ea.theta_star[2] - ea.theta_star[0]) / four;
  if (pa.h.is_zero() || pa.h_star.is_zero()) return out;
  pa.s = ((ea.theta[1] - ea.theta[0]) / pa.h + four) / two;
  pa.s_star = ((ea.theta_star[1] - ea.theta_star[0]) / pa.h_star + four) / two;
  const Rational sum = -pa.s - pa.s_star + Rational(d + 1);
  const Rational k = four * pa.h * pa.h_star;
  if (!is_odd(d)) {
    // varphi_1 = 4 h h* d (1 + r2)
    pa.r2 = ea.phi[0] / (k * Rational(d)) - one;
    pa.r1 = sum - pa.r2;
    out.push_back(pa);
  } else {
    // varphi_1 = -4 h h* (1 + r1)(1 + r2)
    const Rational prod = -ea.phi[0] / k - one - sum;
    if (auto r = roots_from_sum_product(sum, prod)) {
      pa.r1 = r->first;
      pa.r2 = r->second;
      out.push_back(pa);
    }
  }
  return out;
}

std::vector<Candidate> candidates_for_q(const ExpandedArray& ea, const Rational& q) {
  if (q == Rational(1)) return q1_case_candidates(ea);
  if (q == Rational(-1)) return case_iii_candidates(ea);
  return q_case_candidates(ea, q);
}

// Roots of q^2 - beta q + 1, larger absolute value first.
std::vector<Rational> q_from_beta(const Rational& beta) {
  if (beta == Rational(2)) return {Rational(1)};
  if (beta == Rational(-2)) return {Rational(-1)};
  auto r = roots_from_sum_product(beta, Rational(1));
  if (!r) return {};
  std::vector<Rational> qs{r->first, r->second};
  std::stable_sort(qs.begin(), qs.end(), [](const Rational& a, const Rational& b) { return a.abs() > b.abs(); });
  if (qs[0] == qs[1]) qs.pop_back();
  return qs;
}

}  // namespace

ParameterArray recognize(const ExpandedArray& ea) {
  if (ea.d < 1 || static_cast<int>(ea.theta.size()) != ea.d + 1 ||
      static_cast<int>(ea.theta_star.size()) != ea.d + 1 || static_cast<int>(ea.phi.size()) != ea.d ||
      static_cast<int>(ea.phi_dn.size()) != ea.d)
    throw InvalidArgument("malformed expanded array");
  check_feasible(ea);
  std::vector<Rational> qs;
  if (ea.d >= 3) {
    qs = q_from_beta((ea.theta[0] - ea.theta[3]) / (ea.theta[1] - ea.theta[2]) - Rational(1));
  } else {
    // Too few eigenvalues to pin beta; try the ratios suggested by a
    // classical-type dual sequence, then the q = 1 and q = -1 families.
    auto add = [&](const Rational& q) {
      if (!q.is_zero() && std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    };
    if (ea.d == 2) {
      const Rational rs = (ea.theta_star[0] - ea.theta_star[1]) / (ea.theta_star[1] - ea.theta_star[2]);
      const Rational rt = (ea.theta[0] - ea.theta[1]) / (ea.theta[1] - ea.theta[2]);
      for (const Rational& r : {rs, rt})
        if (!r.is_zero()) {
          add(r.abs() >= Rational(1) ? r : r.inverse());
          add(r.abs() >= Rational(1) ? r.inverse() : r);
        }
    }
    add(Rational(1));
    add(Rational(-1));
  }
  for (const auto& q : qs)
    for (const auto& cand : candidates_for_q(ea, q))
      if (cand && reproduces(*cand, ea)) return *cand;
  throw InfeasibleArray("no case of the parameter-array catalog reproduces the given array");
}

ParameterArray fit_from_graph(const SchemeData& s, const QPolyOrdering& ord) {
  try {
    return recognize(graph_parameter_array(s, ord));
  } catch (const InfeasibleArray& e) {
    throw InternalError(std::string("Q-polynomial graph outside the Leonard catalog: ") + e.what());
  }
}

// ------------------------------------------------------- classical parameters

std::optional<ClassicalParameters> classical_from_case(const ParameterArray& pa) {
  using L = LeonardCase;
  const Rational one(1);
  const Rational D(pa.d);
  ClassicalParameters cp;
  cp.d = pa.d;
  switch (pa.kind) {
    case L::I: {
      if (!pa.s_star.is_zero() || (!pa.r1.is_zero() && !pa.r2.is_zero())) return std::nullopt;
      if (!pa.q.is_integer()) return std::nullopt;
      const Rational& q = pa.q;
      const Rational r = pa.r1.is_zero() ? pa.r2 : pa.r1;
      const Rational den = pa.s * q.pow(pa.d) - r;
      cp.q = q.to_long();
      cp.alpha = r * (one - q) / den;
      cp.beta = (r * q - one) / (q * den);
      return cp;
    }
    case L::IA: {
      if (!pa.q.is_integer()) return std::nullopt;
      const Rational& q = pa.q;
      const Rational den = pa.s * q.pow(pa.d) - pa.r1;
      cp.q = q.to_long();
      cp.alpha = pa.r1 * (one - q) / den;
      cp.beta = pa.r1 / den;
      return cp;
    }
    case L::IIA: {
      const Rational den = pa.r1 - pa.s - D;
      cp.q = 1;
      cp.alpha = one / den;
      cp.beta = (-one - pa.r1) / den;
      return cp;
    }
    case L::IIC:
      cp.q = 1;
      cp.alpha = Rational();
      cp.beta = -pa.r1 / (pa.r1 - pa.s * pa.s_star);
      return cp;
    default:
      return std::nullopt;
  }
}

std::optional<ClassicalParameters> detect_classical(const IntersectionArray& ia) {
  auto c = classical_candidates(ia);
  if (c.empty()) return std::nullopt;
  return c.front();
}

ClassicalDetection detect_classical(const IntersectionArray& ia, const ParameterArray& pa) {
  ClassicalDetection out;
  auto cands = classical_candidates(ia);
  try {
    out.table = classical_from_case(pa);
  } catch (const std::exception&) {
    out.table.reset();  // a vanishing denominator means the table does not apply
  }
  if (out.table && !satisfies_classical(ia, *out.table)) out.table.reset();
  if (!cands.empty()) {
    out.value = cands.front();
    if (out.table && std::find(cands.begin(), cands.end(), *out.table) != cands.end()) out.value = out.table;
  }
  out.routes_agree = out.value.has_value() == out.table.has_value() && (!out.value || *out.value == *out.table);
  return out;
}

// ---------------------------------------------------------- rho-descendents

ParameterArray rho_descendent(const ParameterArray& pa, int d_prime, int rho) {
  using L = LeonardCase;
  const int d = pa.d;
  if (d_prime < 1 || d_prime > d) throw InvalidArgument("need 1 <= d' <= d");
  if (rho < 0 || rho > d - d_prime) throw InvalidArgument("need 0 <= rho <= d - d'");
  ParameterArray out = pa;
  out.d = d_prime;
  const Rational R(rho), shift(d - d_prime);
  switch (pa.kind) {
    case L::I:
      out.r1 = pa.r1 * pa.q.pow(rho);
      out.r2 = pa.r2 * pa.q.pow(rho);
      out.s = pa.s * pa.q.pow(d - d_prime);
      out.s_star = pa.s_star * pa.q.pow(2 * rho);
      break;
    case L::IA:
      // s'/r' = q^{d-d'-rho} s/r with r' = r.
      out.s = pa.s * pa.q.pow(d - d_prime - rho);
      break;
    case L::II:
      out.r1 = pa.r1 + R;
      out.r2 = pa.r2 + R;
      out.s = pa.s + shift;
      out.s_star = pa.s_star + Rational(2 * rho);
      break;
    case L::IIA:
      out.r1 = pa.r1 + R;
      out.s = pa.s + shift;
      break;
    case L::IIB:
      out.r1 = pa.r1 + R;
      out.s_star = pa.s_star + Rational(2 * rho);
      break;
    case L::IIC:
      break;
    case L::III: {
      const bool d_even = !is_odd(d), dp_even = !is_odd(d_prime), rho_even = !is_odd(rho);
      if (d_even && d_prime == 1) {
        const auto ea = expand(pa);
        const Rational ratio = ea.phi_dn[rho] / ea.phi[rho];
        if (ratio == Rational(1)) throw InfeasibleArray("degenerate Case III descendent");
        ParameterArray c;
        c.kind = L::IIC;
        c.d = 1;
        c.s = Rational(1);
        c.s_star = Rational(1);
        c.r1 = (Rational(1) - ratio).inverse();
        c.theta0 = pa.theta0;
        c.theta0_star = pa.theta0_star;
        expand(c);
        return c;
      }
      const bool same = (d_even && dp_even && rho_even) || (!d_even && !dp_even && rho_even);
      const bool swapped = d_even && dp_even && !rho_even;
      if (!same && !swapped)
        throw InvalidArgument("Case III has no rho-descendent with d=" + std::to_string(d) +
                              ", d'=" + std::to_string(d_prime) + ", rho=" + std::to_string(rho));
      out.r1 = (swapped ? pa.r2 : pa.r1) + R;
      out.r2 = (swapped ? pa.r1 : pa.r2) + R;
      out.s = pa.s - shift;
      out.s_star = pa.s_star - Rational(2 * rho);
      break;
    }
  }
  expand(out);
  return out;
}

bool predict_connectivity(const ParameterArray& pa, int w_star) {
  if (pa.kind == LeonardCase::III) return w_star % 2 == 0;
  return true;
}

}  // namespace drg
