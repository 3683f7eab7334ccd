#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "kw/hecke.hpp"

using namespace kw;

namespace {

FieldElem hp(Gen g, int d) { return FieldElem::half_pow(g, d); }

LaurentPoly random_poly(int n, std::mt19937_64& rng, int deg = 2, int nterms = 4) {
  std::uniform_int_distribution<int> de(-deg, deg);
  std::uniform_int_distribution<int> dc(1, 5);
  LaurentPoly f = LaurentPoly::zero(n);
  for (int k = 0; k < nterms; ++k) {
    Weight wt(n);
    for (int i = 0; i < n; ++i) wt[i] = de(rng);
    f.add_term(wt, FieldElem::from_int(dc(rng)));
  }
  return f;
}

Weight random_weight(int n, std::mt19937_64& rng, int bound = 2) {
  std::uniform_int_distribution<int> de(-bound, bound);
  Weight wt(n);
  for (int i = 0; i < n; ++i) wt[i] = de(rng);
  return wt;
}

// S^Y applied to 1 along a word (letters applied right to left), tracking
// the spectral vector.
std::pair<LaurentPoly, SpectralVector> chain(int n, const std::vector<int>& word) {
  LaurentPoly f = LaurentPoly::one(n);
  SpectralVector sv = SpectralVector::trivial(n);
  for (size_t k = word.size(); k-- > 0;) {
    auto [g, nsv] = apply_intertwiner_Y(word[k], f, sv);
    f = std::move(g);
    sv = nsv;
  }
  return {f, sv};
}

}  // namespace

TEST_CASE("reflection quotient on monomials") {
  // n = 1, i = 1: (s1 x - x)/(1 - x^2) = x^{-1}
  LaurentPoly x = LaurentPoly::xi(1, 0);
  CHECK(div_exact_reflection(1, x) ==
        LaurentPoly::monomial(Weight{-1}, FieldElem::one()));
  // n = 1, i = 0: (s0 x - x)/(1 - q x^{-2}) = -x
  CHECK(div_exact_reflection(0, x) == -x);
  // constants are s_i-fixed
  for (int i = 0; i <= 2; ++i)
    CHECK(div_exact_reflection(i, LaurentPoly::one(2)).is_zero());
  // the quotient times (1 - x^{alpha_i}) recovers s_i f - f
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      LaurentPoly f = random_poly(n, rng);
      for (int i = 0; i <= n; ++i) {
        const auto [yc, ywt] = wall_monomial(n, i);
        LaurentPoly one_minus_y = LaurentPoly::one(n);
        one_minus_y.add_term(ywt, -yc);
        LaurentPoly lhs = div_exact_reflection(i, f) * one_minus_y;
        LaurentPoly rhs =
            weyl_act_poly(AffineWeylElem::simple(n, i), f) - f;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("weyl action on monomials") {
  // s1.x1 = x2 at n = 2
  CHECK(weyl_act_poly(AffineWeylElem::simple(2, 1), LaurentPoly::xi(2, 0)) ==
        LaurentPoly::xi(2, 1));
  // s0.x1 = q x1^{-1}
  CHECK(weyl_act_poly(AffineWeylElem::simple(2, 0), LaurentPoly::xi(2, 0)) ==
        LaurentPoly::monomial(Weight{-1, 0}, hp(GQ, 2)));
  // t(eps1).x1 = q^{-1} x1
  CHECK(weyl_act_poly(AffineWeylElem::translation(Weight{1, 0}),
                      LaurentPoly::xi(2, 0)) ==
        LaurentPoly::monomial(Weight{1, 0}, hp(GQ, -2)));
  // action is a homomorphism
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 2;
    AffineWeylElem g = AffineWeylElem::translation(random_weight(n, rng, 1));
    AffineWeylElem h = AffineWeylElem::from_word(n, {1, 0});
    LaurentPoly f = random_poly(n, rng);
    CHECK(weyl_act_poly(g * h, f) == weyl_act_poly(g, weyl_act_poly(h, f)));
  }
}

TEST_CASE("T basics: normalization, quadratic relation, inverse") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) {
      // T_i 1 = t_i^{1/2}
      CHECK(apply_T(i, LaurentPoly::one(n)) ==
            LaurentPoly::one(n) * param_half_pow(n, i, 1));
      LaurentPoly f = random_poly(n, rng);
      // T^2 = (t^{1/2} - t^{-1/2}) T + 1
      LaurentPoly tf = apply_T(i, f);
      CHECK(apply_T(i, tf) ==
            tf * (param_half_pow(n, i, 1) - param_half_pow(n, i, -1)) + f);
      // T T^{-1} = T^{-1} T = id
      CHECK(apply_T(i, apply_T(i, f, true)) == f);
      CHECK(apply_T(i, apply_T(i, f), true) == f);
    }
  }
}

TEST_CASE("Lusztig relation") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 2; ++n) {
    for (int i = 0; i <= n; ++i) {
      const ParamPair pr = hecke_pair(n, i);
      // numerator of d_i: (t^{1/2} - t^{-1/2}) + (u^{1/2} - u^{-1/2}) x^{alpha_i/2}
      LaurentPoly dnum{n, {}};
      dnum.add_term(weight_zero(n), hp(pr.t, 1) - hp(pr.t, -1));
      if (!pr.u_one) {
        const auto [hc, hwt] = wall_monomial(n, i, true);
        dnum.add_term(hwt, (hp(pr.u, 1) - hp(pr.u, -1)) * hc);
      }
      for (int rep = 0; rep < 6; ++rep) {
        const Weight lam = random_weight(n, rng);
        const LaurentPoly xl = LaurentPoly::monomial(lam, FieldElem::one());
        const LaurentPoly xsl =
            weyl_act_poly(AffineWeylElem::simple(n, i), xl);
        const LaurentPoly f = random_poly(n, rng);
        // T_i x^lam f - x^{s_i.lam} T_i f = d_i(x^{alpha_i})(x^lam - x^{s_i.lam}) f
        const LaurentPoly lhs = apply_T(i, xl * f) - xsl * apply_T(i, f);
        // (x^lam - x^{s_i.lam})/(1 - x^{alpha_i}) = -(s_i x^lam - x^lam)/(1 - x^{alpha_i})
        const LaurentPoly quot = -div_exact_reflection(i, xl);
        CHECK(lhs == dnum * quot * f);
      }
    }
  }
}

TEST_CASE("braid relations") {
  std::mt19937_64 rng(17);
  auto word_op = [](const std::vector<int>& w, const LaurentPoly& f) {
    return apply_T_word(w, f);
  };
  // n = 2: both double-bond braids
  for (int rep = 0; rep < 3; ++rep) {
    LaurentPoly f = random_poly(2, rng);
    CHECK(word_op({0, 1, 0, 1}, f) == word_op({1, 0, 1, 0}, f));
    CHECK(word_op({1, 2, 1, 2}, f) == word_op({2, 1, 2, 1}, f));
  }
  // n = 3: commuting pairs and the single-bond braid
  for (int rep = 0; rep < 2; ++rep) {
    LaurentPoly f = random_poly(3, rng, 1, 3);
    CHECK(word_op({0, 2}, f) == word_op({2, 0}, f));
    CHECK(word_op({1, 3}, f) == word_op({3, 1}, f));
    CHECK(word_op({1, 2, 1}, f) == word_op({2, 1, 2}, f));
    CHECK(word_op({0, 1, 0, 1}, f) == word_op({1, 0, 1, 0}, f));
    CHECK(word_op({2, 3, 2, 3}, f) == word_op({3, 2, 3, 2}, f));
  }
}

TEST_CASE("Y operators: displayed words, eigenvalues on 1, additivity") {
  std::mt19937_64 rng(19);
  const int n = 2;
  // Y^{t(eps1)} = T_0 T_1 T_2 T_1 and Y^{t(eps2)} = T_1^{-1} T_0 T_1 T_2
  for (int rep = 0; rep < 3; ++rep) {
    LaurentPoly f = random_poly(n, rng);
    LaurentPoly g = apply_T(1, f);
    g = apply_T(2, g);
    g = apply_T(1, g);
    g = apply_T(0, g);
    CHECK(apply_Y(Weight{1, 0}, f) == g);
    LaurentPoly h = apply_T(2, f);
    h = apply_T(1, h);
    h = apply_T(0, h);
    h = apply_T(1, h, true);
    CHECK(apply_Y(Weight{0, 1}, f) == h);
  }
  // Y^0 = id
  LaurentPoly f0 = random_poly(n, rng);
  CHECK(apply_Y(weight_zero(n), f0) == f0);
  // Y^beta 1 = q^{sh} t^{hgt} for weights +-eps_i (n = 1 and n = 2)
  for (int m = 1; m <= 2; ++m) {
    for (int i = 0; i < m; ++i) {
      for (int s : {1, -1}) {
        Weight lam = weight_zero(m);
        lam[i] = s;
        CHECK(apply_Y(lam, LaurentPoly::one(m)) ==
              LaurentPoly::one(m) * spectral_value(AffineRoot{lam, 0}));
      }
    }
  }
  // commutativity and additivity
  for (int rep = 0; rep < 3; ++rep) {
    LaurentPoly f = random_poly(n, rng, 1, 3);
    CHECK(apply_Y(Weight{1, 0}, apply_Y(Weight{0, 1}, f)) ==
          apply_Y(Weight{0, 1}, apply_Y(Weight{1, 0}, f)));
    Weight a = random_weight(n, rng, 1);
    Weight b = random_weight(n, rng, 1);
    CHECK(apply_Y(weight_add(a, b), f) == apply_Y(a, apply_Y(b, f)));
  }
  // eigenvalue on 1 for a composite weight
  Weight mu{2, -1};
  CHECK(apply_Y(mu, LaurentPoly::one(n)) ==
        LaurentPoly::one(n) * spectral_value(AffineRoot{mu, 0}));
}

TEST_CASE("spectral values") {
  // n = 1: spec(2 eps - delta) = q t0 t1
  CHECK(spectral_value(AffineRoot{Weight{2}, -2}) ==
        hp(GQ, 2) * hp(GT0, 2) * hp(GTN, 2));
  // spec(delta) = q^{-1}
  CHECK(spectral_value(AffineRoot{Weight{0, 0}, 2}) == hp(GQ, -2));
  // n = 2: spec(alpha_0) = q^{-1} t^{-2} (t0 tn)^{-1}
  CHECK(spectral_value(simple_root(2, 0)) ==
        hp(GQ, -2) * hp(GT, -4) * hp(GT0, -2) * hp(GTN, -2));
  // multiplicativity and exact square roots
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2;
    AffineRoot b1{random_weight(n, rng), 2 * static_cast<int>(rng() % 5) - 4};
    AffineRoot b2{random_weight(n, rng), 2 * static_cast<int>(rng() % 5) - 4};
    AffineRoot sum{weight_add(b1.fin, b2.fin), b1.twok + b2.twok};
    CHECK(spectral_value(sum) == spectral_value(b1) * spectral_value(b2));
  }
  AffineRoot lng{Weight{2, 0}, 2};
  CHECK(spectral_half(lng) * spectral_half(lng) == spectral_value(lng));
}

TEST_CASE("structure scalars") {
  const FieldElem z = hp(GZ, 2);
  const FieldElem zh = hp(GZ, 1);
  const FieldElem one = FieldElem::one();
  for (int n : {1, 2, 3}) {
    for (int i = 0; i <= n; ++i) {
      // d = t^{1/2} - c equals its displayed numerator form
      const ParamPair pr = hecke_pair(n, i);
      FieldElem dnum = hp(pr.t, 1) - hp(pr.t, -1);
      if (!pr.u_one) dnum += zh * (hp(pr.u, 1) - hp(pr.u, -1));
      CHECK(d_scalar(n, i, z, zh) == dnum / (one - z));
      // phi^+ = -d
      CHECK(phi_scalar(n, i, 1, z, zh) == -d_scalar(n, i, z, zh));
      // c^v(z) c^v(z^{-1}) = n(z)
      CHECK(cvee_scalar(n, i, z, zh) * cvee_scalar(n, i, z.inv(), zh.inv()) ==
            n_scalar(n, i, z, zh));
      // psi^+(z) + psi^-(z^{-1}) = 0 (same displayed fraction)
      CHECK(psi_scalar(n, i, 1, z, zh) == -psi_scalar(n, i, -1, z.inv(), zh.inv()));
    }
  }
  // middle psi has no z^{1/2} term
  CHECK(psi_scalar(3, 2, 1, z, FieldElem::zero()) ==
        -(hp(GT, 1) - hp(GT, -1)) / (one - z));
  // pinned value psi_1^+((t0 t1)^{-1}) = -t1^{1/2} at n = 1
  CHECK(psi_scalar(1, 1, 1, hp(GT0, -2) * hp(GTN, -2), hp(GT0, -1) * hp(GTN, -1)) ==
        -hp(GTN, 1));
  // poles are reported
  CHECK_THROWS_AS(psi_scalar(1, 0, 1, one, one), PoleError);
  CHECK_THROWS_AS(n_scalar(2, 1, one, one), PoleError);
}

TEST_CASE("rho values") {
  const FieldElem one = FieldElem::one();
  // n = 1: rho(alpha_1) = t1^{1/2} + t1^{-1/2}, rho(-alpha_1) = 0
  CHECK(rho_value(AffineRoot{Weight{2}, 0}) == hp(GTN, 1) + hp(GTN, -1));
  CHECK(rho_value(AffineRoot{Weight{-2}, 0}) == FieldElem::zero());
  // closed rank-1 form rho(2 j eps + k delta), j = +-1
  for (int j : {1, -1}) {
    for (int k = -2; k <= 2; ++k) {
      const FieldElem chalf = hp(GQ, k) * hp(GT0, -j) * hp(GTN, -j);
      const FieldElem cfull = chalf * chalf;
      const FieldElem closed = hp(GTN, 1) *
                               (one + hp(GT0, 1) * hp(GTN, -1) * chalf) *
                               (one - hp(GT0, -1) * hp(GTN, -1) * chalf) /
                               (one - cfull);
      CHECK(rho_value(AffineRoot{Weight{2 * j}, 2 * k}) == closed);
    }
  }
  // rho(alpha) + rho(-alpha) is t_alpha^{1/2} + t_alpha^{-1/2}
  CHECK(rho_value(AffineRoot{Weight{0, 2}, 4}) +
            rho_value(AffineRoot{Weight{0, -2}, -4}) ==
        hp(GTN, 1) + hp(GTN, -1));
  CHECK(rho_value(AffineRoot{Weight{1, -1}, 2}) +
            rho_value(AffineRoot{Weight{-1, 1}, -2}) ==
        hp(GT, 1) + hp(GT, -1));
  // short roots carry no weight
  CHECK_THROWS_AS(rho_value(AffineRoot{Weight{1, 0}, 1}), std::invalid_argument);
}

TEST_CASE("symmetrizer") {
  std::mt19937_64 rng(29);
  const int n = 2;
  // U 1 = t_{w0}^{-1/2} W_0(t)
  const StabilizerData sd = stabilizer_data(weight_zero(n));
  CHECK(apply_U(LaurentPoly::one(n)) ==
        LaurentPoly::one(n) * (sd.t_half * sd.poincare));
  for (int rep = 0; rep < 2; ++rep) {
    LaurentPoly f = random_poly(n, rng, 1, 3);
    LaurentPoly uf = apply_U(f);
    // U T_i = t_i^{1/2} U
    for (int i = 1; i <= n; ++i)
      CHECK(apply_U(apply_T(i, f)) == uf * param_half_pow(n, i, 1));
    // W_0-invariance
    for (const FiniteWeyl& w : enumerate_w0(n))
      CHECK(weyl_act_poly(AffineWeylElem::from_finite(w), uf) == uf);
  }
}

TEST_CASE("dual operators and x^z") {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 2; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      LaurentPoly f = random_poly(n, rng);
      // T_0^v composes with its inverse to the identity
      CHECK(apply_T_vee(0, apply_T_vee(0, f, true)) == f);
      CHECK(apply_T_vee(0, apply_T_vee(0, f), true) == f);
      // x^{t(+-eps_i)} is multiplication by x_i^{+-1}
      for (int i = 0; i < n; ++i) {
        CHECK(apply_x_element(AffineWeylElem::translation(eps(n, i)), f) ==
              f * LaurentPoly::xi(n, i));
        Weight neg = weight_zero(n);
        neg[i] = -1;
        CHECK(apply_x_element(AffineWeylElem::translation(neg), f) ==
              f * LaurentPoly::monomial(neg, FieldElem::one()));
      }
    }
  }
  // n = 1 golden: x^{t(eps)} = (T_0^v)^{-1} (T_1^v)^{-1}
  LaurentPoly f = random_poly(1, rng);
  CHECK(apply_x_element(AffineWeylElem::translation(Weight{1}), f) ==
        apply_T_vee(0, apply_T_vee(1, f, true), true));
  // x^{t(mu)} = x^mu for a mixed weight
  LaurentPoly g = random_poly(2, rng, 1, 3);
  Weight mu{1, -2};
  CHECK(apply_x_element(AffineWeylElem::translation(mu), g) ==
        g * LaurentPoly::monomial(mu, FieldElem::one()));
}

TEST_CASE("intertwiners: base cases and eigenfunctions") {
  // S_i^Y 1 = 0 for finite i
  for (int n = 1; n <= 2; ++n) {
    for (int i = 1; i <= n; ++i) {
      auto [f, sv] = apply_intertwiner_Y(i, LaurentPoly::one(n),
                                         SpectralVector::trivial(n));
      CHECK(f.is_zero());
    }
  }
  // n = 1: S_0^Y 1 = t1^{1/2} x + psi_0^-(q t0 t1), a Y-eigenfunction
  {
    const int n = 1;
    const FieldElem z = hp(GQ, 2) * hp(GT0, 2) * hp(GTN, 2);
    const FieldElem zh = hp(GQ, 1) * hp(GT0, 1) * hp(GTN, 1);
    auto [f, sv] = apply_intertwiner_Y(0, LaurentPoly::one(n),
                                       SpectralVector::trivial(n), true);
    LaurentPoly expected = LaurentPoly::xi(n, 0) * hp(GTN, 1) +
                           LaurentPoly::one(n) * psi_scalar(n, 0, -1, z, zh);
    CHECK(f == expected);
  }
  // iterated intertwiners produce Y-eigenfunctions with the shifted spectra
  std::mt19937_64 rng(37);
  const int n = 2;
  for (int rep = 0; rep < 6; ++rep) {
    Weight mu = random_weight(n, rng, 2);
    const AffineWeylElem w = min_coset_rep(mu);
    auto [f, sv] = chain(n, canonical_word(w));
    REQUIRE(!f.is_zero());
    CHECK(sv.u == w.inverse());
    for (int j = 0; j < n; ++j) {
      const Weight ej = eps(n, j);
      CHECK(apply_Y(ej, f) == f * sv.value_weight(ej));
    }
  }
}

TEST_CASE("intertwiner products follow Bruhat order") {
  std::mt19937_64 rng(41);
  const int n = 2;
  // left products S_i S_w
  for (int rep = 0; rep < 5; ++rep) {
    Weight mu = random_weight(n, rng, 2);
    const AffineWeylElem w = min_coset_rep(mu);
    const auto [fw, svw] = chain(n, canonical_word(w));
    for (int i = 0; i <= n; ++i) {
      const AffineWeylElem sw = AffineWeylElem::simple(n, i) * w;
      auto [lhs, lsv] = apply_intertwiner_Y(i, fw, svw);
      const auto [rhs, rsv] = chain(n, canonical_word(sw));
      CHECK(lsv.u == rsv.u);
      if (length(sw) > length(w)) {
        CHECK(lhs == rhs);
      } else {
        const AffineRoot ma = root_neg(simple_root(n, i));
        const FieldElem z = rsv.value_root(ma);
        const FieldElem zh =
            (i == 0 || i == n) ? rsv.half_root(ma) : FieldElem::zero();
        CHECK(lhs == rhs * n_scalar(n, i, z, zh));
      }
    }
  }
  // right products on 1: S_w S_0 with the scalar at the trivial spectrum
  const AffineRoot ma0 = root_neg(simple_root(n, 0));
  const FieldElem z0 = spectral_value(ma0);
  const FieldElem zh0 = spectral_half(ma0);
  for (int rep = 0; rep < 5; ++rep) {
    Weight mu = random_weight(n, rng, 2);
    const AffineWeylElem w = min_coset_rep(mu);
    std::vector<int> word = canonical_word(w);
    word.push_back(0);
    const auto [lhs, lsv] = chain(n, word);
    const AffineWeylElem ws = w * AffineWeylElem::simple(n, 0);
    const auto [rhs, rsv] = chain(n, canonical_word(ws));
    CHECK(lsv.u == rsv.u);
    if (length(ws) > length(w)) {
      CHECK(lhs == rhs);
    } else {
      CHECK(lhs == rhs * n_scalar(n, 0, z0, zh0));
    }
  }
}

TEST_CASE("symmetrizer expansion over intertwiners") {
  const int n = 2;
  const FiniteWeyl w0 = FiniteWeyl::longest(n);
  LaurentPoly rhs = LaurentPoly::zero(n);
  for (const FiniteWeyl& w : enumerate_w0(n)) {
    FieldElem coeff = FieldElem::one();
    for (const AffineRoot& a :
         inversion_symdiff(AffineWeylElem::from_finite(w.inverse()),
                           AffineWeylElem::from_finite(w0)))
      coeff *= rho_value(a);
    const auto [f, sv] = chain(n, finite_canonical_word(w));
    rhs += f * coeff;
  }
  CHECK(apply_U(LaurentPoly::one(n)) == rhs);
}
