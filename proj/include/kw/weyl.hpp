#pragma once
// Root data of type C_n, the non-reduced affine root system containing both
// R and R-vee layers, and the (extended = affine Coxeter) Weyl group
// W = t(P) x| W_0 on generators s_0, ..., s_n.
//
// Weights and finite roots live in the epsilon basis.  An affine root is
// fin + (twok/2) delta with the delta coefficient stored doubled so that the
// half-integer layer is exact integer data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kw/field.hpp"

namespace kw {

using Weight = std::vector<int32_t>;

int64_t dot(const Weight& a, const Weight& b);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_zero(int n);
Weight eps(int n, int i);    // epsilon_i, 0-indexed
Weight omega(int n, int i);  // omega_{i+1} = eps_0 + ... + eps_i, 0-indexed

// <alpha_i-vee, mu> for i = 1..n (1-indexed simple reflection labels).
int64_t pair_alphavee(int i, const Weight& mu);
bool is_dominant(const Weight& mu);
// The unique dominant weight in the W_0-orbit: |coords| sorted descending.
Weight dominant_rep(const Weight& mu);

// Signed permutation w: eps_i |-> sign[i] * eps_{perm[i]} (0-indexed).
struct FiniteWeyl {
  std::vector<int32_t> perm;
  std::vector<int8_t> sign;

  static FiniteWeyl identity(int n);
  static FiniteWeyl longest(int n);  // -id
  int rank() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  FiniteWeyl compose(const FiniteWeyl& o) const;  // acts as this after o
  FiniteWeyl inverse() const;
  Weight act(const Weight& mu) const;
  bool operator==(const FiniteWeyl&) const = default;
};

std::vector<FiniteWeyl> enumerate_w0(int n);

// Affine root fin + (twok/2) delta.
struct AffineRoot {
  Weight fin;
  int32_t twok = 0;
  bool operator==(const AffineRoot&) const = default;
};

AffineRoot simple_root(int n, int i);  // alpha_i, i = 0..n
AffineRoot root_neg(const AffineRoot& r);

// Finite parts: eps_i - eps_j / eps_i + eps_j (medium), +-2 eps_i (long),
// +-eps_i (short, the coroot layer).
enum class RootKind { Medium, Long, Short };
std::optional<RootKind> root_kind(const AffineRoot& r);

// Hyperplane-family orbit of a root, which selects its Hecke parameter.
enum class Orbit { T, T0, TN, U0, UN };
Orbit root_orbit(const AffineRoot& r);        // throws std::invalid_argument off S
FieldElem orbit_param(Orbit o);               // t, t0, tn, u0, un as field elements

bool fin_positive(const Weight& fin);         // finite-part sign (R~ union {0} minus 0)
bool root_positive(const AffineRoot& r);      // affine sign: twok > 0, or twok = 0 and fin positive

// Element t(trans) * fin of W.
struct AffineWeylElem {
  Weight trans;
  FiniteWeyl fin;

  static AffineWeylElem identity(int n);
  static AffineWeylElem translation(const Weight& lam);
  static AffineWeylElem simple(int n, int i);  // s_i, i = 0..n
  static AffineWeylElem from_finite(const FiniteWeyl& w);
  static AffineWeylElem from_word(int n, const std::vector<int>& word);

  int rank() const { return static_cast<int>(trans.size()); }
  bool is_identity() const;
  AffineWeylElem operator*(const AffineWeylElem& o) const;
  AffineWeylElem inverse() const;
  AffineRoot act(const AffineRoot& r) const;
  std::vector<Rat> act_point(const std::vector<Rat>& x) const;
  bool operator==(const AffineWeylElem&) const = default;
};

// True iff g(alpha_i) is negative, i.e. l(g s_i) = l(g) - 1.
bool right_descent(const AffineWeylElem& g, int i);

// Greedy smallest-index right strip; deterministic reduced word.
std::vector<int> canonical_word(const AffineWeylElem& g);
size_t length(const AffineWeylElem& g);

// Prefix-transported simple roots of a reduced word: {a_{i_1}, s_{i_1} a_{i_2}, ...}.
std::vector<AffineRoot> inversion_set(int n, const std::vector<int>& word);
std::vector<AffineRoot> inversion_set(const AffineWeylElem& g);
// Hyperplanes separating vA and wA: the symmetric difference of the two sets.
std::vector<AffineRoot> inversion_symdiff(const AffineWeylElem& v, const AffineWeylElem& w);
// Signed transport v.L(v^{-1} w); equals the symmetric difference up to signs
// when v precedes w in Bruhat order, but may contain negative roots.
std::vector<AffineRoot> inversion_transport(const AffineWeylElem& v, const AffineWeylElem& w);

// Shortest element of t(mu) W_0, plus the finite factor u with t(mu) = rep * u.
AffineWeylElem min_coset_rep(const Weight& mu);
std::pair<AffineWeylElem, FiniteWeyl> min_coset_rep_factor(const Weight& mu);
bool is_min_coset_rep(const AffineWeylElem& g);

// Product of one Hecke parameter per letter: prod_k t_{i_k}^{half/2}.
FieldElem word_param_pow(int n, const std::vector<int>& word, int half);
std::vector<int> finite_canonical_word(const FiniteWeyl& w);
size_t finite_length(const FiniteWeyl& w);

struct StabilizerData {
  std::vector<FiniteWeyl> stab;        // W_mu, the stabilizer of mu in W_0
  FiniteWeyl w_mu;                     // its longest element
  std::vector<FiniteWeyl> min_reps;    // W^mu, minimal coset representatives of W_0/W_mu
  FiniteWeyl v_mu;                     // longest element of W^mu
  FieldElem poincare;                  // W_mu(t) = sum of full parameter products
  FieldElem t_half;                    // t_{w_mu}^{-1/2}
};
StabilizerData stabilizer_data(const Weight& mu);  // requires mu dominant

std::string weight_str(const Weight& w);
std::string word_str(const std::vector<int>& word);

}  // namespace kw
