#pragma once
//
// Non-symmetric Koornwinder polynomials E_mu, symmetric Koornwinder
// polynomials P_lambda, expansions of x^lambda E_mu and E_mu P_lambda in
// the E-basis, and the product expansion P_lambda P_mu = sum_nu c P_nu
// computed from colored alcove walks in the dominant chamber.  Every
// expansion is paired with an independent oracle (polynomial arithmetic
// plus triangular peeling), and the rank-1 case is tied to the classical
// Askey-Wilson three-term recurrence.
//
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kw/alcove.hpp"
#include "kw/hecke.hpp"

namespace kw {

// ---------------------------------------------------------------------------
// Expansion containers.

// Product expansion P_lambda * P_mu = sum_nu pairs[nu] * P_nu.  Pairs are
// sorted lexicographically by nu and never store zero coefficients.
// walk_count records how many (coset representative, colored walk) terms the
// walk sum visited (zero for oracle-produced expansions).
struct LRExpansion {
  int n = 0;
  Weight lambda;
  Weight mu;
  std::vector<std::pair<Weight, FieldElem>> pairs;
  std::size_t walk_count = 0;

  // Pointer to the coefficient of nu, or nullptr when absent.
  const FieldElem* find(const Weight& nu) const;
  bool same_pairs(const LRExpansion& o) const;
};

// One term of the walk sum: coefficient factors A (stabilizer-coset rho
// product), B (end-point rho product), C (per-step crossing/folding product),
// and the dominant target weight.
struct WalkTerm {
  ColoredWalk walk;
  FieldElem A;
  FieldElem B;
  FieldElem C;
  Weight target;
};

// ---------------------------------------------------------------------------
// Dominance order on weights.

// nu <= lambda in dominance: all prefix sums of lambda - nu are nonnegative
// (the weight lattice is Z^n, so no parity condition enters).
bool dominance_leq(const Weight& nu, const Weight& lambda);

// Number of dominant weights below `bound` in dominance order; used as the
// termination guard for the triangular peel.
std::size_t count_dominant_below(const Weight& bound);

// ---------------------------------------------------------------------------
// Non-symmetric polynomials E_mu.

// E_mu as the alcove-walk sum over all walks of type w(mu) starting at the
// fundamental alcove: each walk contributes
//   prod_folds psi_{i_k}^{sign}(spectral(-beta_k)) * t_{dir(p)}^{1/2} * x^{wt(p)},
// where beta_k is the suffix-transported simple root of the walk word, and
// the fold sign is the geometric side of the alcove against the wall.
LaurentPoly e_poly_ramyip(const Weight& mu);

// E_mu by applying the Y-intertwiners S_i along the canonical word of w(mu)
// to the constant 1.  Agrees with e_poly_ramyip exactly.
LaurentPoly e_poly_intertwiner(const Weight& mu);

// ---------------------------------------------------------------------------
// Symmetric polynomials P_lambda.

enum class PMethod { Symmetrize, RhoSum };

// The rho-product prefactor attached to a minimal coset representative v:
//   prod_{alpha in w(lambda)^{-1} . (L(v^{-1}) symdiff L(v_lambda^{-1}))} rho(alpha).
// This is the coefficient of E_{v.lambda} in P_lambda and the A-factor of
// the product expansions.
FieldElem rho_prefactor(const Weight& lambda, const FiniteWeyl& v);

// P_lambda, monic at x^lambda and invariant under the finite Weyl group.
// Symmetrize divides U E_lambda by t_{w_lambda}^{-1/2} W_lambda(t); RhoSum
// evaluates sum_{v} rho_prefactor(lambda, v) E_{v.lambda}.  Both agree.
// Throws std::invalid_argument if lambda is not dominant.
LaurentPoly p_poly(const Weight& lambda, PMethod method = PMethod::Symmetrize);

// ---------------------------------------------------------------------------
// Expansions in the E-basis.

// x^lambda E_mu = sum over dominant-chamber walks of type t(-lambda) from
// w(mu)^{-1}A, with factor
//   prod_{folds} (-psi^{eps_k}_{i_k}(spectral(-h_k)))
//   * prod_{descent crossings} n_{i_k}(spectral(-h_k)),
// where h_k is the sign-kept transported wall root at step k and eps_k is
// the fixed letter exponent (-1 when the k-th inversion root of the word
// has finite-positive part, +1 otherwise).  lambda and mu may be any
// weights.  Returns (target, coefficient) pairs sorted by target.
std::vector<std::pair<Weight, FieldElem>> expand_x_times_E(const Weight& lambda,
                                                           const Weight& mu);

// E_mu P_lambda = sum over v in W^lambda and colored dominant-chamber walks
// of type w(mu)^{-1} from (v w(lambda))^{-1}A of A_p C_p E_{varpi(p)}.
// C_p takes, per step: 1 (ascent crossing), n_{i_k}(spectral(-h_k)) (descent
// crossing), -psi^{eps_k}_{i_k}(spectral(-h_k)) (gray folding, letter
// exponent eps_k as in expand_x_times_E), psi^{+/-}_{i_k}(spectral(-beta_k))
// (black folding, sign of the mirrored step of the straightened reverse
// walk).  lambda must be dominant.
std::vector<std::pair<Weight, FieldElem>> expand_E_times_P(const Weight& mu,
                                                           const Weight& lambda);

// ---------------------------------------------------------------------------
// The product expansion (main theorem) and its oracle.

// P_lambda P_mu = (1 / (t_{w_lambda}^{-1/2} W_lambda(t)))
//   * sum_{v in W^mu} sum_p A_p B_p C_p P_{wt(p)}
// over colored dominant-chamber walks of type w(lambda)^{-1} starting at
// (v w(mu))^{-1}A; B_p = prod rho(-alpha) over the hyperplanes separating
// t(wt(p)) w_0 A from e(p) A.  Both weights must be dominant.  When trace is
// non-null, every walk term (A, B, C, target) is appended to it (coefficients
// exclude the global prefactor).  wlambda_word overrides the reduced word
// used for w(lambda) (it is reversed internally), for word-independence
// tests.
LRExpansion lr_expand(const Weight& lambda, const Weight& mu,
                      std::vector<WalkTerm>* trace = nullptr,
                      const std::vector<int>* wlambda_word = nullptr);

// Independent oracle: multiplies P_lambda P_mu as Laurent polynomials and
// peels dominance-maximal dominant weights (lexicographic tie-break),
// subtracting c P_nu until zero.  Throws std::runtime_error if the peel
// exceeds the dominance-interval bound (triangularity violation).
LRExpansion lr_oracle(const Weight& lambda, const Weight& mu);

// ---------------------------------------------------------------------------
// Rank-1 specialization: Askey-Wilson.

// Coefficients of P_1 P_l = P_{l+1} + F_l P_l + G_l P_{l-1} at rank 1 in
// closed form; l = 0 returns (0, 0) since P_1 P_0 = P_1.
struct PieriCoeffs {
  FieldElem F;
  FieldElem G;
};
PieriCoeffs pieri_aw(int l);

// The Askey-Wilson parameters (a, b, c, d) realized inside the coefficient
// field as signed half-monomials:
//   a = (q t0 u0)^{1/2},  b = -(q t0 / u0)^{1/2},
//   c = (tn un)^{1/2},    d = -(tn / un)^{1/2},
// so that t0 = -q^{-1}ab, tn = -cd, u0 = -a/b, un = -c/d hold exactly.
// pi = abcd, s = a+b+c+d, sp = abc+abd+acd+bcd.
struct AWParams {
  FieldElem a, b, c, d, pi, s, sp;
  static AWParams standard();
};

// gamma_l = (q^{l-1} pi; q)_l, the normalization with P_l = gamma_l^{-1} p_l.
FieldElem aw_gamma(int l);

// Recurrence coefficients of the classical (monic-leading) Askey-Wilson
// polynomials: 2z p_l = h_l p_{l+1} + f_l p_l + g_l p_{l-1}, expressed
// through the embedded parameters.  Requires l >= 1.
struct AWClassical {
  FieldElem f;
  FieldElem g;
  FieldElem h;
};
AWClassical aw_classical_coeffs(int l);

// ---------------------------------------------------------------------------
// q = 0 specialization (Hall-Littlewood limit).

// Substitute q^{1/2} = 0 into every coefficient; throws PoleError if a
// coefficient has a pole at q = 0.
LRExpansion substitute_q_zero(const LRExpansion& e);

// The q = 0 product expansion computed directly from the walk sum with every
// per-step factor replaced by its exact value at q = 0 (crossings give 1;
// gray and black folds on nonzero-level walls give +/-(T^{1/2} - T^{-1/2})
// of the dual parameter pair or kill the term, depending on the letter
// exponent and the q-power sign of the argument; level-zero walls keep
// their exact q-free psi values), so no q-dependent rational arithmetic
// occurs.  Equals substitute_q_zero(lr_expand(lambda, mu)).
LRExpansion hl_coefficients(const Weight& lambda, const Weight& mu);

// ---------------------------------------------------------------------------
// Rank-2 worked example.

// P_{omega1} P_{omega2} at n = 2, computed three ways: the walk sum, the
// closed forms F and G, and the oracle.  a_values lists the rho-product
// prefactor for each v in W^{omega2}.
struct Rank2Report {
  LRExpansion lr;
  LRExpansion oracle;
  FieldElem F_closed;
  FieldElem G_closed;
  std::vector<std::pair<std::string, FieldElem>> a_values;
  bool ok = false;
  std::string summary;
};
Rank2Report rank2_example();

}  // namespace kw
