#pragma once
//
// The basic polynomial representation of the double affine Hecke algebra of
// type (C^v_n, C_n) on Laurent polynomials: the Demazure-Lusztig operators
// T_i (i = 0..n), the commuting family Y^lambda, the symmetrizer U, the
// dual operators T_i^v and x^z, the Y-intertwiners S_i^Y, and the scalar
// structure functions c, d, phi, psi, n, b, rho together with spectral
// values q^{sh} t^{hgt}.
//
#include <utility>
#include <vector>

#include "kw/laurent.hpp"

namespace kw {

// ---------------------------------------------------------------------------
// Parameter bookkeeping.
//
// The Hecke parameter pair (t_i, u_i) attached to index i is (t, 1) for
// 1 <= i <= n-1, (t_n, u_n) for i = n, and (t_0, u_0) for i = 0.  Several
// scalar functions use instead the "dual" pair: (u_n, u_0) for i = 0,
// (t_n, t_0) for i = n, and again (t, 1) in the middle.

struct ParamPair {
  Gen t;       // main generator
  Gen u;       // companion generator; GT means the constant 1 (middle case)
  bool u_one;  // true when the companion is literally 1
};

ParamPair hecke_pair(int n, int i);  // (t_i, u_i)
ParamPair dual_pair(int n, int i);   // (u_n,u_0) / (t,1) / (t_n,t_0)

// t_i^{doubled/2} as a field element.
FieldElem param_half_pow(int n, int i, int doubled);

// ---------------------------------------------------------------------------
// Structure scalars.  All take the argument z (and, where half-integral
// powers z^{1/2} occur, the caller-supplied exact square root z_half).
// Every function throws PoleError when the defining denominator vanishes.

// c_i(z) = t_i^{-1/2} (1 - u_i^{1/2} t_i^{1/2} z^{1/2})
//                     (1 + u_i^{-1/2} t_i^{1/2} z^{1/2}) / (1 - z).
FieldElem c_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half);
// d_i(z) = t_i^{1/2} - c_i(z).
FieldElem d_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half);
// phi_i^{+-}(z) = -+ [(t_i^{1/2} - t_i^{-1/2}) + z^{+-1/2}(u_i^{1/2} - u_i^{-1/2})]
//                 / (1 - z^{+-1});  sign = +1 or -1 selects the variant.
FieldElem phi_scalar(int n, int i, int sign, const FieldElem& z,
                     const FieldElem& z_half);
// psi_i^{+-}(z): same shape as phi but over the dual parameter pair.
FieldElem psi_scalar(int n, int i, int sign, const FieldElem& z,
                     const FieldElem& z_half);
// c_i^v(z): the c-function over the dual parameter pair.
FieldElem cvee_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half);
// n_i(z) = c_i^v(z) c_i^v(z^{-1}); four-factor product for i = 0, n and
// (1 - t z)(1 - t^{-1} z)/(1 - z)^2 in the middle.
FieldElem n_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half);

// The two branches of the weight function b / rho, keyed by the finite-part
// kind of the root: Medium -> t-branch, Long -> (t_n, t_0)-branch.
FieldElem b_scalar(RootKind kind, const FieldElem& z, const FieldElem& z_half);

// ---------------------------------------------------------------------------
// Spectral values q^{sh(beta)} t^{hgt(beta)}.

// Exponent monomial (doubled exponents) of the spectral value of beta.
Mono spectral_mono(const AffineRoot& beta);
// q^{sh(beta)} t^{hgt(beta)} as a field element.
FieldElem spectral_value(const AffineRoot& beta);
// Its exact square root; throws std::invalid_argument if some exponent is odd.
FieldElem spectral_half(const AffineRoot& beta);

// rho(alpha) = b-branch of alpha evaluated at z = spectral_value(-alpha).
// Only defined for root-type alpha (Medium or Long finite part).
FieldElem rho_value(const AffineRoot& alpha);

// ---------------------------------------------------------------------------
// Operators.

// T_i f (or T_i^{-1} f): t_i^{1/2} f + c-numerator * (s_i f - f)/(1 - x^{alpha_i}).
LaurentPoly apply_T(int i, const LaurentPoly& f, bool inverse = false);
// T_{i_1} ... T_{i_r} f: letters applied right to left.
LaurentPoly apply_T_word(const std::vector<int>& word, const LaurentPoly& f,
                         bool inverse = false);
// Y^lambda f via the signed T-product along the canonical reduced word of
// the translation t(lambda).
LaurentPoly apply_Y(const Weight& lambda, const LaurentPoly& f);
// The symmetrizer U f = sum_{w in W_0} t_{w_0 w}^{-1/2} T_w f.
LaurentPoly apply_U(const LaurentPoly& f);

// Dual generators: T_i^v = T_i for i >= 1; T_0^v = T_{s_{2 eps_1}}^{-1} x_1^{-1}.
LaurentPoly apply_T_vee(int i, const LaurentPoly& f, bool inverse = false);
// x^z f for an affine Weyl group element z, as the signed T^v-product along
// the reversed canonical word of z; x^{t(mu)} is multiplication by x^mu.
LaurentPoly apply_x_element(const AffineWeylElem& z, const LaurentPoly& f);

// ---------------------------------------------------------------------------
// Spectral vectors and Y-intertwiners.
//
// A simultaneous Y-eigenfunction f has eigenvalues chi(beta) =
// spectral_value(u.act(beta)) for a group element u; the constant 1 carries
// u = e, and S_i^Y shifts u on the right by s_i.

struct SpectralVector {
  AffineWeylElem u;

  static SpectralVector trivial(int n) {
    return SpectralVector{AffineWeylElem::identity(n)};
  }
  int rank() const { return u.rank(); }
  FieldElem value_root(const AffineRoot& beta) const {
    return spectral_value(u.act(beta));
  }
  FieldElem half_root(const AffineRoot& beta) const {
    return spectral_half(u.act(beta));
  }
  FieldElem value_weight(const Weight& lambda) const {
    return value_root(AffineRoot{lambda, 0});
  }
  SpectralVector shifted(int i) const {
    return SpectralVector{u * AffineWeylElem::simple(u.rank(), i)};
  }
  bool operator==(const SpectralVector& o) const { return u == o.u; }
};

// S_i^Y f = T_i^v f + psi_i^+(chi(-alpha_i)) f for a Y-eigenfunction f with
// spectral vector sv; returns the image and the shifted spectral vector.
// With check=true the eigen-property of the output is verified against
// Y^{eps_1..eps_n} (expensive; for tests).
std::pair<LaurentPoly, SpectralVector> apply_intertwiner_Y(
    int i, const LaurentPoly& f, const SpectralVector& sv, bool check = false);

}  // namespace kw
