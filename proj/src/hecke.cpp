#include "kw/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace kw {

namespace {

FieldElem gen_half(Gen g, int doubled) { return FieldElem::half_pow(g, doubled); }

void require_nonpole(const FieldElem& den, const char* what) {
  if (den.is_zero()) throw PoleError(what);
}

// Shared shape of phi and psi:
//   -+ [(a^{1/2} - a^{-1/2}) + z^{+-1/2} (b^{1/2} - b^{-1/2})] / (1 - z^{+-1}).
FieldElem pm_shape(const ParamPair& pr, int sign, const FieldElem& z,
                   const FieldElem& z_half) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("pm_shape: sign must be +-1");
  if (sign < 0 && z.is_zero()) throw PoleError("pm_shape: z = 0 with negative variant");
  const FieldElem zp = sign > 0 ? z : z.inv();
  const FieldElem den = FieldElem::one() - zp;
  require_nonpole(den, "pm_shape: z^{+-1} = 1");
  FieldElem num = gen_half(pr.t, 1) - gen_half(pr.t, -1);
  if (!pr.u_one) {
    const FieldElem zh = sign > 0 ? z_half : z_half.inv();
    num += zh * (gen_half(pr.u, 1) - gen_half(pr.u, -1));
  }
  FieldElem r = num / den;
  return sign > 0 ? -r : r;
}

// c over a general pair (a, b):
//   a^{-1/2} (1 - a^{1/2} b^{1/2} z^{1/2}) (1 + a^{1/2} b^{-1/2} z^{1/2}) / (1 - z),
// which degenerates to a^{-1/2} (1 - a z)/(1 - z) when b = 1.
FieldElem c_shape(const ParamPair& pr, const FieldElem& z, const FieldElem& z_half) {
  const FieldElem den = FieldElem::one() - z;
  require_nonpole(den, "c: z = 1");
  if (pr.u_one) {
    return gen_half(pr.t, -1) * (FieldElem::one() - gen_half(pr.t, 2) * z) / den;
  }
  const FieldElem f1 = FieldElem::one() - gen_half(pr.t, 1) * gen_half(pr.u, 1) * z_half;
  const FieldElem f2 = FieldElem::one() + gen_half(pr.t, 1) * gen_half(pr.u, -1) * z_half;
  return gen_half(pr.t, -1) * f1 * f2 / den;
}

}  // namespace

ParamPair hecke_pair(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("hecke_pair: bad index");
  if (i == 0) return ParamPair{GT0, GU0, false};
  if (i == n) return ParamPair{GTN, GUN, false};
  return ParamPair{GT, GT, true};
}

ParamPair dual_pair(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("dual_pair: bad index");
  if (i == 0) return ParamPair{GUN, GU0, false};
  if (i == n) return ParamPair{GTN, GT0, false};
  return ParamPair{GT, GT, true};
}

FieldElem param_half_pow(int n, int i, int doubled) {
  return gen_half(hecke_pair(n, i).t, doubled);
}

FieldElem c_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half) {
  return c_shape(hecke_pair(n, i), z, z_half);
}

FieldElem d_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half) {
  return param_half_pow(n, i, 1) - c_scalar(n, i, z, z_half);
}

FieldElem phi_scalar(int n, int i, int sign, const FieldElem& z,
                     const FieldElem& z_half) {
  return pm_shape(hecke_pair(n, i), sign, z, z_half);
}

FieldElem psi_scalar(int n, int i, int sign, const FieldElem& z,
                     const FieldElem& z_half) {
  return pm_shape(dual_pair(n, i), sign, z, z_half);
}

FieldElem cvee_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half) {
  return c_shape(dual_pair(n, i), z, z_half);
}

FieldElem n_scalar(int n, int i, const FieldElem& z, const FieldElem& z_half) {
  const FieldElem den = FieldElem::one() - z;
  require_nonpole(den, "n: z = 1");
  const FieldElem den2 = den * den;
  const ParamPair pr = dual_pair(n, i);
  if (pr.u_one) {
    const FieldElem f1 = FieldElem::one() - gen_half(pr.t, 2) * z;
    const FieldElem f2 = FieldElem::one() - gen_half(pr.t, -2) * z;
    return f1 * f2 / den2;
  }
  const FieldElem f1 = FieldElem::one() - gen_half(pr.t, 1) * gen_half(pr.u, 1) * z_half;
  const FieldElem f2 = FieldElem::one() + gen_half(pr.t, 1) * gen_half(pr.u, -1) * z_half;
  const FieldElem f3 = FieldElem::one() + gen_half(pr.t, -1) * gen_half(pr.u, 1) * z_half;
  const FieldElem f4 = FieldElem::one() - gen_half(pr.t, -1) * gen_half(pr.u, -1) * z_half;
  return f1 * f2 * f3 * f4 / den2;
}

FieldElem b_scalar(RootKind kind, const FieldElem& z, const FieldElem& z_half) {
  const FieldElem den = FieldElem::one() - z;
  require_nonpole(den, "b: z = 1");
  if (kind == RootKind::Medium) {
    return gen_half(GT, 1) * (FieldElem::one() - gen_half(GT, -2) * z) / den;
  }
  if (kind == RootKind::Long) {
    const FieldElem f1 =
        FieldElem::one() + gen_half(GT0, 1) * gen_half(GTN, -1) * z_half;
    const FieldElem f2 =
        FieldElem::one() - gen_half(GT0, -1) * gen_half(GTN, -1) * z_half;
    return gen_half(GTN, 1) * f1 * f2 / den;
  }
  throw std::invalid_argument("b: only medium and long roots carry a weight");
}

Mono spectral_mono(const AffineRoot& beta) {
  const int n = static_cast<int>(beta.fin.size());
  Mono m{};
  m[GQ] = -beta.twok;
  int64_t t_exp = 0, l_exp = 0;
  for (int i = 0; i < n; ++i) {
    t_exp += 2 * static_cast<int64_t>(n - 1 - i) * beta.fin[i];
    l_exp += beta.fin[i];
  }
  m[GT] = static_cast<int32_t>(t_exp);
  m[GT0] = static_cast<int32_t>(l_exp);
  m[GTN] = static_cast<int32_t>(l_exp);
  return m;
}

FieldElem spectral_value(const AffineRoot& beta) {
  const Mono m = spectral_mono(beta);
  FieldElem r = FieldElem::one();
  for (Gen g : {GQ, GT, GT0, GTN})
    if (m[g] != 0) r *= gen_half(g, m[g]);
  return r;
}

FieldElem spectral_half(const AffineRoot& beta) {
  const Mono m = spectral_mono(beta);
  FieldElem r = FieldElem::one();
  for (Gen g : {GQ, GT, GT0, GTN}) {
    if (m[g] % 2 != 0)
      throw std::invalid_argument("spectral_half: odd exponent, no exact square root");
    if (m[g] != 0) r *= gen_half(g, m[g] / 2);
  }
  return r;
}

FieldElem rho_value(const AffineRoot& alpha) {
  const auto kind = root_kind(alpha);
  if (!kind || *kind == RootKind::Short)
    throw std::invalid_argument("rho: argument must have medium or long finite part");
  const AffineRoot neg = root_neg(alpha);
  const FieldElem z = spectral_value(neg);
  const FieldElem zh =
      *kind == RootKind::Long ? spectral_half(neg) : FieldElem::zero();
  return b_scalar(*kind, z, zh);
}

LaurentPoly apply_T(int i, const LaurentPoly& f, bool inverse) {
  const int n = f.n;
  if (i < 0 || i > n) throw std::invalid_argument("apply_T: bad index");
  const ParamPair pr = hecke_pair(n, i);
  // Numerator of c_i(x^{alpha_i}) including the t_i^{-1/2} prefactor:
  //   t_i^{-1/2} [1 + t_i^{1/2}(u_i^{-1/2} - u_i^{1/2}) x^{alpha_i/2}
  //                 - t_i x^{alpha_i}].
  LaurentPoly numer{n, {}};
  const auto [xc, xwt] = wall_monomial(n, i);
  numer.add_term(weight_zero(n), gen_half(pr.t, -1));
  numer.add_term(xwt, -(gen_half(pr.t, 1) * xc));
  if (!pr.u_one) {
    const auto [hc, hwt] = wall_monomial(n, i, /*half=*/true);
    numer.add_term(hwt, (gen_half(pr.u, -1) - gen_half(pr.u, 1)) * hc);
  }
  LaurentPoly r = f * gen_half(pr.t, 1) + numer * div_exact_reflection(i, f);
  if (inverse) r -= f * (gen_half(pr.t, 1) - gen_half(pr.t, -1));
  return r;
}

LaurentPoly apply_T_word(const std::vector<int>& word, const LaurentPoly& f,
                         bool inverse) {
  LaurentPoly g = f;
  if (!inverse) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_T(*it, g);
  } else {
    for (int i : word) g = apply_T(i, g, /*inverse=*/true);
  }
  return g;
}

LaurentPoly apply_Y(const Weight& lambda, const LaurentPoly& f) {
  const int n = f.n;
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("apply_Y: rank mismatch");
  const std::vector<int> word = canonical_word(AffineWeylElem::translation(lambda));
  // Sign of the k-th letter: +1 iff the prefix-transported simple root has
  // negative finite part (the walk crosses the wall from the - side).
  std::vector<int> sign(word.size());
  AffineWeylElem v = AffineWeylElem::identity(n);
  for (size_t k = 0; k < word.size(); ++k) {
    const AffineRoot r = v.act(simple_root(n, word[k]));
    sign[k] = fin_positive(r.fin) ? -1 : 1;
    v = v * AffineWeylElem::simple(n, word[k]);
  }
  LaurentPoly g = f;
  for (size_t k = word.size(); k-- > 0;)
    g = apply_T(word[k], g, /*inverse=*/sign[k] < 0);
  return g;
}

LaurentPoly apply_U(const LaurentPoly& f) {
  const int n = f.n;
  const FiniteWeyl w0 = FiniteWeyl::longest(n);
  LaurentPoly r = LaurentPoly::zero(n);
  for (const FiniteWeyl& w : enumerate_w0(n)) {
    const FieldElem coeff =
        word_param_pow(n, finite_canonical_word(w0.compose(w)), -1);
    r += apply_T_word(finite_canonical_word(w), f) * coeff;
  }
  return r;
}

namespace {

std::vector<int> long_reflection_word(int n) {
  // s_{2 eps_1} = s_1 ... s_{n-1} s_n s_{n-1} ... s_1
  std::vector<int> w;
  for (int j = 1; j <= n; ++j) w.push_back(j);
  for (int j = n - 1; j >= 1; --j) w.push_back(j);
  return w;
}

}  // namespace

LaurentPoly apply_T_vee(int i, const LaurentPoly& f, bool inverse) {
  const int n = f.n;
  if (i < 0 || i > n) throw std::invalid_argument("apply_T_vee: bad index");
  if (i >= 1) return apply_T(i, f, inverse);
  const std::vector<int> pal = long_reflection_word(n);
  if (!inverse) {
    // T_0^v = T_{s_{2 eps_1}}^{-1} x_1^{-1}: multiply first, then act.
    Weight e1neg = weight_zero(n);
    e1neg[0] = -1;
    LaurentPoly g = f * LaurentPoly::monomial(e1neg, FieldElem::one());
    return apply_T_word(pal, g, /*inverse=*/true);
  }
  // (T_0^v)^{-1} = x_1 T_{s_{2 eps_1}}: act first, then multiply.
  LaurentPoly g = apply_T_word(pal, f);
  return g * LaurentPoly::xi(n, 0);
}

LaurentPoly apply_x_element(const AffineWeylElem& z, const LaurentPoly& f) {
  const int n = f.n;
  if (z.rank() != n) throw std::invalid_argument("apply_x_element: rank mismatch");
  std::vector<int> word = canonical_word(z);
  std::reverse(word.begin(), word.end());
  // Descending walk from zA: the k-th sign is +1 iff the z-inclusive prefix
  // transport of the letter root has negative finite part.
  AffineWeylElem g = z;
  LaurentPoly out = f;
  for (int letter : word) {
    const AffineRoot r = g.act(simple_root(n, letter));
    const bool positive = !fin_positive(r.fin);
    out = apply_T_vee(letter, out, /*inverse=*/!positive);
    g = g * AffineWeylElem::simple(n, letter);
  }
  return out;
}

std::pair<LaurentPoly, SpectralVector> apply_intertwiner_Y(
    int i, const LaurentPoly& f, const SpectralVector& sv, bool check) {
  const int n = f.n;
  if (i < 0 || i > n) throw std::invalid_argument("apply_intertwiner_Y: bad index");
  const AffineRoot minus_alpha = root_neg(simple_root(n, i));
  const FieldElem z = sv.value_root(minus_alpha);
  const FieldElem zh =
      (i == 0 || i == n) ? sv.half_root(minus_alpha) : FieldElem::zero();
  const FieldElem scalar = psi_scalar(n, i, 1, z, zh);
  LaurentPoly out = apply_T_vee(i, f) + f * scalar;
  SpectralVector out_sv = sv.shifted(i);
  if (check) {
    for (int j = 0; j < n; ++j) {
      const Weight ej = eps(n, j);
      if (apply_Y(ej, out) != out * out_sv.value_weight(ej))
        throw std::logic_error("apply_intertwiner_Y: output is not a Y-eigenfunction");
    }
  }
  return {std::move(out), std::move(out_sv)};
}

}  // namespace kw
