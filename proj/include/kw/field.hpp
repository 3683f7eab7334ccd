#pragma once
// Exact arithmetic in the coefficient field
//   K = Q(q^{1/2}, t^{1/2}, t0^{1/2}, tn^{1/2}, u0^{1/2}, un^{1/2}),
// represented as quotients of sparse integer polynomials in the square-root
// generators.  A seventh generator z^{1/2} is available so tests can treat
// structure functions as rational functions of a free argument.
//
// Exponents are stored doubled: slot g of a monomial holds the integer power
// of the square root of generator g, so half-integer powers of q, t, ... are
// integer data.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum Gen : int { GQ = 0, GT = 1, GT0 = 2, GTN = 3, GU0 = 4, GUN = 5, GZ = 6 };
inline constexpr int kNumGens = 7;
extern const char* const kGenNames[kNumGens];

// Monomial in the square-root generators; entries are doubled exponents.
using Mono = std::array<int32_t, kNumGens>;

Mono mono_one();
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);
// Graded-lex comparison: total (doubled) degree first, then lexicographic on
// the exponent tuple.  Returns <0, 0, >0.
int grlex_cmp(const Mono& a, const Mono& b);

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZeroError : std::runtime_error {
  explicit DivisionByZeroError(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Rational values assigned to the square-root generators themselves, so that
// half powers evaluate exactly.  All entries must be nonzero.
struct EvalPoint {
  std::array<Rat, kNumGens> values;

  // Uniformly random nonzero rationals p/r with 1 <= p, r <= bound and random
  // sign on p; the z-slot gets a value too so test elements evaluate.
  static EvalPoint random(uint64_t seed, int bound = 97);
};

// Sparse integer polynomial; terms kept graded-lex descending with nonzero
// coefficients.
class ParamPoly {
 public:
  std::vector<std::pair<Mono, Int>> terms;

  ParamPoly() = default;

  static ParamPoly zero() { return ParamPoly(); }
  static ParamPoly from_int(Int c);
  static ParamPoly from_mono(const Mono& m, Int c = 1);
  // Square root of a generator raised to `doubled` (i.e. gen^{doubled/2}).
  static ParamPoly gen_pow_half(Gen g, int32_t doubled, Int c = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_one() const;
  size_t size() const { return terms.size(); }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly mul_mono(const Mono& m, const Int& c = 1) const;
  ParamPoly mul_int(const Int& c) const;
  bool operator==(const ParamPoly& o) const { return terms == o.terms; }

  // gcd of all coefficients (0 for the zero polynomial).
  Int integer_content() const;
  // Componentwise minimum exponent vector over all terms; requires nonzero.
  Mono monomial_content() const;
  // Divide every coefficient by c; requires exactness.
  ParamPoly div_int_exact(const Int& c) const;

  const std::pair<Mono, Int>& leading() const { return terms.front(); }
  int32_t total_degree_max() const;  // requires nonzero
  int32_t total_degree_min() const;  // requires nonzero
  int32_t min_exp(Gen g) const;      // requires nonzero

  // Multivariate long division attempt; returns the quotient iff the division
  // is exact within the step/degree budget, otherwise nullopt.
  static std::optional<ParamPoly> try_divide_exact(const ParamPoly& a, const ParamPoly& b);

  // Substitute q^{1/2} = 0.  Requires every q-exponent be >= 0 (the FieldElem
  // wrapper pre-shifts so this holds).
  ParamPoly substitute_q_zero() const;

  Rat evaluate(const EvalPoint& pt) const;

  std::string to_string() const;

  // Re-establish the sorted/nonzero invariants from arbitrary term data.
  void normalize_terms();
};

// Exact element of K as num/den, with the denominator kept factored:
// den = den_int * prod_i f_i^{e_i}.  Invariants: den != 0; each factor f_i
// is primitive (integer content 1), carries no monomial content, has a
// positive graded-lex leading coefficient, is non-constant, and no factor
// divides num; den_int > 0 and is coprime to num's integer content.  The
// factored form keeps chains of structure-function arithmetic reduced: a
// denominator here is typically a product of binomials 1 - (monomial).
class FieldElem {
 public:
  ParamPoly num;

  FieldElem() : num(ParamPoly::zero()) {}
  FieldElem(ParamPoly n, ParamPoly d);

  // The expanded denominator (product of the stored factors).
  ParamPoly den() const;

  static FieldElem zero() { return FieldElem(); }
  static FieldElem one() { return from_int(1); }
  static FieldElem from_int(long c);
  static FieldElem from_rat(const Rat& r);
  static FieldElem from_poly(ParamPoly p);
  // gen^{doubled/2}, e.g. half_pow(GT, 1) = t^{1/2}, half_pow(GQ, -2) = q^{-1}.
  static FieldElem half_pow(Gen g, int32_t doubled);

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return den_f_.empty() && den_int_ == 1 && num.is_one(); }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // throws DivisionByZeroError
  FieldElem inv() const;                          // throws DivisionByZeroError
  FieldElem pow(long e) const;

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  // Exact equality by cross-multiplication; no canonical form needed.
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Exact substitution q^{1/2} -> 0; throws PoleError if the denominator
  // vanishes there.
  FieldElem substitute_q_zero() const;

  // Exact rational value at a point; throws PoleError on denominator zero.
  Rat evaluate(const EvalPoint& pt) const;

  std::string format() const;
  std::string format_json() const;  // {"num": "...", "den": "..."}
  static FieldElem parse(const std::string& text);

 private:
  // den = den_int_ * prod f^e over den_f_; factors sorted, exponents >= 1.
  Int den_int_ = Int(1);
  std::vector<std::pair<ParamPoly, int>> den_f_;

  void normalize();
};

}  // namespace kw
