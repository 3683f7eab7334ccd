#pragma once
//
// Laurent polynomials in x_1,...,x_n with coefficients in the parameter
// field.  This is the module the Hecke operators act on: it provides the
// ring structure, the (affine) Weyl group action on monomials, and the
// exact divided-difference building block (s_i f - f)/(1 - x^{alpha_i}).
//
#include <map>
#include <utility>

#include "kw/field.hpp"
#include "kw/weyl.hpp"

namespace kw {

// Sparse Laurent polynomial: weight -> coefficient, no zero coefficients
// stored.  The rank n is carried explicitly so the zero polynomial knows
// its ambient ring.
struct LaurentPoly {
  int n = 0;
  std::map<Weight, FieldElem> terms;

  static LaurentPoly zero(int n) { return LaurentPoly{n, {}}; }
  static LaurentPoly one(int n);
  // c * x^wt
  static LaurentPoly monomial(Weight wt, FieldElem c);
  // x_i (0-based index)
  static LaurentPoly xi(int n, int i);

  bool is_zero() const { return terms.empty(); }
  // Adds c * x^wt in place, erasing the entry if the sum vanishes.
  void add_term(const Weight& wt, const FieldElem& c);
  const FieldElem& coeff(const Weight& wt) const;  // zero if absent

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const FieldElem& c) const;

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly& operator*=(const FieldElem& c) { return *this = *this * c; }

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact evaluation: substitutes x_i = point[i] (and the field generators
  // per pt), for randomized cross-checks.
  Rat evaluate(const EvalPoint& pt, const std::vector<Rat>& point) const;

  std::string str() const;
};

// Action of the extended ring of operators' group part on monomials:
// x^lam -> q^{m} x^{g.lam} where g.(lam, 0) = (finite part, 2m).  Simple
// reflections s_1..s_n permute/negate variables; s_0 maps x_1 to q·x_1^{-1}
// and translations t(mu) scale x^lam by q^{-<lam,mu>}.
LaurentPoly weyl_act_poly(const AffineWeylElem& g, const LaurentPoly& f);

// The wall monomial x^{alpha_i} as a (q-power coefficient, weight) pair:
// i=0 -> q·x_1^{-2}, i=n -> x_n^2, otherwise x_i/x_{i+1}.  half gives
// x^{alpha_i/2} (only meaningful for i = 0 and i = n, where it is the
// integral monomial q^{1/2}·x_1^{-1} resp. x_n).
std::pair<FieldElem, Weight> wall_monomial(int n, int i, bool half = false);

// (s_i f - f) / (1 - x^{alpha_i}), which is always a Laurent polynomial:
// each monomial contributes a finite geometric sum in x^{alpha_i}.
LaurentPoly div_exact_reflection(int i, const LaurentPoly& f);

}  // namespace kw
