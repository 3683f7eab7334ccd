#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kw/weyl.hpp"

using namespace kw;

namespace {

AffineWeylElem random_element(int n, std::mt19937_64& rng, int max_len = 8) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter(0, n);
  std::vector<int> word(len_dist(rng));
  for (int& i : word) i = letter(rng);
  return AffineWeylElem::from_word(n, word);
}

// All affine roots with small doubled delta coefficient, for orbit sampling.
std::vector<AffineRoot> sample_roots(int n, int max_twok) {
  std::vector<AffineRoot> out;
  auto add = [&](Weight fin, int tk) {
    AffineRoot r{std::move(fin), tk};
    Orbit o = root_orbit(r);  // validates membership in S
    bool half_layer = (o == Orbit::U0 || o == Orbit::UN);
    if (!half_layer && tk % 2 != 0) return;
    out.push_back(std::move(r));
  };
  for (int tk = -max_twok; tk <= max_twok; ++tk) {
    for (int i = 0; i < n; ++i) {
      for (int s : {1, -1}) {
        Weight f = weight_zero(n);
        f[i] = 2 * s;
        if (tk % 2 == 0) add(f, tk);
        f[i] = s;
        add(f, tk);
      }
      for (int j = i + 1; j < n; ++j) {
        if (tk % 2 != 0) continue;
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            Weight f = weight_zero(n);
            f[i] = si;
            f[j] = sj;
            add(f, tk);
          }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("finite action by signed permutations") {
  CHECK(AffineWeylElem::simple(2, 1).fin.act(eps(2, 0)) == eps(2, 1));
  CHECK(AffineWeylElem::simple(2, 2).fin.act(eps(2, 1)) == weight_neg(eps(2, 1)));

  for (int n = 1; n <= 3; ++n) {
    // locate the longest element by length and check it negates weights
    FiniteWeyl longest = FiniteWeyl::identity(n);
    size_t best = 0;
    for (const FiniteWeyl& w : enumerate_w0(n)) {
      size_t l = finite_length(w);
      if (l > best) {
        best = l;
        longest = w;
      }
    }
    CHECK(best == size_t(n * n));
    CHECK(longest == FiniteWeyl::longest(n));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int it = 0; it < 20; ++it) {
      Weight mu(n);
      for (auto& x : mu) x = c(rng);
      CHECK(longest.act(mu) == weight_neg(mu));
    }
  }
}

TEST_CASE("action on affine roots") {
  int n = 2;
  AffineWeylElem s0 = AffineWeylElem::simple(n, 0);
  AffineRoot a0 = simple_root(n, 0);
  CHECK(s0.act(a0) == root_neg(a0));

  AffineRoot two_eps1{{2, 0}, 0};
  CHECK(AffineWeylElem::translation(eps(n, 0)).act(two_eps1) == AffineRoot{{2, 0}, -4});

  AffineRoot eps1{{1, 0}, 0};
  CHECK(s0.act(eps1) == AffineRoot{{-1, 0}, 2});
}

TEST_CASE("affine sign of roots") {
  int n = 2;
  CHECK(root_positive(simple_root(n, 1)));
  CHECK(root_positive(simple_root(n, 0)));
  CHECK_FALSE(root_positive(AffineRoot{{-1, 0}, 0}));
}

TEST_CASE("orbits and parameters") {
  int n = 2;
  CHECK(root_orbit(simple_root(n, 2)) == Orbit::TN);
  CHECK(orbit_param(Orbit::TN) == FieldElem::half_pow(GTN, 2));
  CHECK(root_orbit(simple_root(n, 0)) == Orbit::T0);
  CHECK(root_orbit(AffineRoot{{1, 0}, 1}) == Orbit::U0);
  CHECK(root_orbit(AffineRoot{{0, 1}, 0}) == Orbit::UN);
  CHECK(root_orbit(AffineRoot{{1, -1}, 2}) == Orbit::T);
  CHECK_THROWS_AS((void)root_orbit(AffineRoot{{3, 0}, 0}), std::invalid_argument);

  SUBCASE("orbit is stable under the group action") {
    std::mt19937_64 rng(23);
    auto roots = sample_roots(2, 4);
    for (int it = 0; it < 50; ++it) {
      AffineWeylElem g = random_element(2, rng);
      const AffineRoot& r = roots[it % roots.size()];
      CHECK(root_orbit(g.act(r)) == root_orbit(r));
    }
  }
}

TEST_CASE("lengths and canonical words") {
  CHECK(canonical_word(AffineWeylElem::identity(2)).empty());

  AffineWeylElem te1 = AffineWeylElem::translation(eps(2, 0));
  std::vector<int> w = canonical_word(te1);
  CHECK(w.size() == 4);
  std::multiset<int> ms(w.begin(), w.end());
  CHECK(ms == std::multiset<int>({0, 1, 1, 2}));
  CHECK(AffineWeylElem::from_word(2, w) == te1);

  CHECK(length(min_coset_rep(omega(2, 1))) == 3);
}

TEST_CASE("explicit reduced words for basis translations") {
  // t(eps_i) = s_{i-1}...s_1 s_0 s_1...s_{n-1} s_n s_{n-1}...s_i, length 2n.
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::vector<int> word;
      for (int j = i - 1; j >= 1; --j) word.push_back(j);
      word.push_back(0);
      for (int j = 1; j <= n; ++j) word.push_back(j);
      for (int j = n - 1; j >= i; --j) word.push_back(j);
      CHECK(word.size() == size_t(2 * n));
      AffineWeylElem g = AffineWeylElem::from_word(n, word);
      CHECK(g == AffineWeylElem::translation(eps(n, i - 1)));
      CHECK(length(g) == size_t(2 * n));
    }
  }
}

TEST_CASE("inversion sets") {
  int n = 2;
  CHECK(inversion_set(AffineWeylElem::identity(n)).empty());

  auto ls0 = inversion_set(AffineWeylElem::simple(n, 0));
  REQUIRE(ls0.size() == 1);
  CHECK(ls0[0] == simple_root(n, 0));

  SUBCASE("size equals length on random elements") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 200; ++it) {
      AffineWeylElem g = random_element(n, rng);
      auto inv = inversion_set(g);
      CHECK(inv.size() == length(g));
      std::set<std::pair<int, Weight>> uniq;
      for (const auto& r : inv) {
        CHECK(root_positive(r));
        uniq.insert({r.twok, r.fin});
      }
      CHECK(uniq.size() == inv.size());
    }
  }
  SUBCASE("symmetric difference is symmetric and vanishes on the diagonal") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 25; ++it) {
      AffineWeylElem v = random_element(n, rng);
      AffineWeylElem w = random_element(n, rng);
      CHECK(inversion_symdiff(v, v).empty());
      CHECK(inversion_symdiff(v, w) == inversion_symdiff(w, v));
    }
  }
  SUBCASE("transported sets match the symmetric difference as hyperplane sets") {
    // The transported set v.L(v^{-1}w) keeps signs (the expansion formulas
    // need them); forgetting signs must recover the separating hyperplanes.
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
      AffineWeylElem w = random_element(n, rng, 6);
      std::vector<int> word = canonical_word(w);
      std::uniform_int_distribution<int> bit(0, 1);
      std::vector<int> sub;
      for (int i : word)
        if (bit(rng)) sub.push_back(i);
      AffineWeylElem v = AffineWeylElem::from_word(n, sub);  // below w in Bruhat order
      auto a = inversion_symdiff(v, w);
      auto b = inversion_transport(v, w);
      CHECK(a.size() == b.size());
      auto key = [](const AffineRoot& r) { return std::make_pair(r.twok, r.fin); };
      std::set<std::pair<int, Weight>> sa, sb;
      for (auto& r : a) sa.insert(key(r));
      for (auto& r : b) sb.insert(key(root_positive(r) ? r : root_neg(r)));
      CHECK(sa == sb);
    }
  }
}

TEST_CASE("cover direction") {
  int n = 2;
  AffineWeylElem e = AffineWeylElem::identity(n);
  CHECK_FALSE(right_descent(e, 0));
  CHECK(right_descent(AffineWeylElem::simple(n, 0), 0));

  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> letter(0, n);
  for (int it = 0; it < 500; ++it) {
    AffineWeylElem g = random_element(n, rng);
    int i = letter(rng);
    size_t lg = length(g);
    size_t lgs = length(g * AffineWeylElem::simple(n, i));
    CHECK((lgs == lg + 1 || lgs + 1 == lg));
    CHECK(right_descent(g, i) == (lgs < lg));
  }
}

TEST_CASE("group-law and length invariants") {
  std::mt19937_64 rng(47);
  for (int n : {1, 2, 3}) {
    auto roots = sample_roots(n, 4);
    for (int it = 0; it < 30; ++it) {
      AffineWeylElem g = random_element(n, rng, 6);
      AffineWeylElem h = random_element(n, rng, 6);
      const AffineRoot& r = roots[it % roots.size()];
      CHECK((g * h).act(r) == g.act(h.act(r)));
      CHECK(length(g.inverse()) == length(g));
      CHECK((g * g.inverse()).is_identity());
    }
  }
}

TEST_CASE("simple reflections permute the positive roots off their own wall") {
  // In this non-reduced system the wall of s_0 (resp. s_n) carries two
  // positive roots: alpha_i and its half, both of which s_i negates; every
  // other positive root stays positive.
  for (int n : {1, 2}) {
    auto roots = sample_roots(n, 6);
    for (int i = 0; i <= n; ++i) {
      AffineWeylElem si = AffineWeylElem::simple(n, i);
      AffineRoot ai = simple_root(n, i);
      std::vector<AffineRoot> wall = {ai};
      if (i == 0 || i == n) {
        AffineRoot half = ai;
        for (auto& c : half.fin) c /= 2;
        half.twok /= 2;
        wall.push_back(half);
      }
      for (const auto& r : roots) {
        if (!root_positive(r)) continue;
        AffineRoot img = si.act(r);
        if (std::find(wall.begin(), wall.end(), r) != wall.end())
          CHECK(img == root_neg(r));
        else
          CHECK(root_positive(img));
      }
    }
  }
}

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_rep(weight_zero(2)).is_identity());

  SUBCASE("rank one: the fundamental weight gives the affine generator") {
    AffineWeylElem w = min_coset_rep(omega(1, 0));
    CHECK(w == AffineWeylElem::simple(1, 0));
    CHECK(canonical_word(w) == std::vector<int>({0}));
  }
  SUBCASE("rank one: multiples alternate the two generators") {
    for (int l = 2; l <= 3; ++l) {
      Weight mu{int32_t(l)};
      std::vector<int> word;
      for (int k = 0; k < l - 1; ++k) {
        word.push_back(0);
        word.push_back(1);
      }
      word.push_back(0);
      CHECK(min_coset_rep(mu) == AffineWeylElem::from_word(1, word));
    }
  }
  SUBCASE("representative times stripped factor recovers the translation") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int it = 0; it < 50; ++it) {
      int n = 1 + it % 3;
      Weight mu(n);
      for (auto& x : mu) x = c(rng);
      auto [rep, u] = min_coset_rep_factor(mu);
      CHECK(is_min_coset_rep(rep));
      CHECK(rep * AffineWeylElem::from_finite(u) == AffineWeylElem::translation(mu));
      for (const FiniteWeyl& w : enumerate_w0(n)) {
        AffineWeylElem other = AffineWeylElem::translation(mu) * AffineWeylElem::from_finite(w);
        CHECK(length(other) >= length(rep));
      }
    }
  }
}

TEST_CASE("stabilizer data") {
  SUBCASE("rank two, first fundamental weight") {
    StabilizerData sd = stabilizer_data(omega(2, 0));
    CHECK(sd.stab.size() == 2);
    bool has_s2 = false;
    for (auto& w : sd.stab) has_s2 |= (w == AffineWeylElem::simple(2, 2).fin);
    CHECK(has_s2);
    FieldElem expect = FieldElem::half_pow(GTN, -1) + FieldElem::half_pow(GTN, 1);
    CHECK(sd.t_half * sd.poincare == expect);
  }
  SUBCASE("rank two, second fundamental weight") {
    StabilizerData sd = stabilizer_data(omega(2, 1));
    std::set<std::vector<int>> words;
    for (auto& w : sd.min_reps) words.insert(finite_canonical_word(w));
    std::set<std::vector<int>> expect;
    FiniteWeyl e = FiniteWeyl::identity(2);
    auto s1 = AffineWeylElem::simple(2, 1).fin;
    auto s2 = AffineWeylElem::simple(2, 2).fin;
    expect.insert(finite_canonical_word(e));
    expect.insert(finite_canonical_word(s2));
    expect.insert(finite_canonical_word(s1.compose(s2)));
    expect.insert(finite_canonical_word(s2.compose(s1).compose(s2)));
    CHECK(words == expect);
  }
  SUBCASE("regular weights have trivial stabilizer") {
    StabilizerData sd = stabilizer_data(Weight{3, 2, 1});
    CHECK(sd.stab.size() == 1);
    CHECK(sd.poincare == FieldElem::one());
    CHECK(sd.t_half == FieldElem::one());
  }
  SUBCASE("coset factorization is a bijection with additive lengths") {
    for (Weight mu : {Weight{1, 0}, Weight{1, 1}, Weight{2, 1}, Weight{0, 0}}) {
      StabilizerData sd = stabilizer_data(mu);
      std::set<std::pair<std::vector<int32_t>, std::vector<int8_t>>> seen;
      for (const FiniteWeyl& v : sd.min_reps)
        for (const FiniteWeyl& u : sd.stab) {
          FiniteWeyl vu = v.compose(u);
          CHECK(finite_length(vu) == finite_length(v) + finite_length(u));
          seen.insert({vu.perm, {vu.sign.begin(), vu.sign.end()}});
        }
      CHECK(seen.size() == size_t(8));  // |W_0| = 2^2 * 2!
    }
  }
  CHECK_THROWS_AS((void)stabilizer_data(Weight{0, 1}), std::invalid_argument);
}

TEST_CASE("dominant representatives") {
  CHECK(dominant_rep(Weight{1, 0}) == Weight{1, 0});
  CHECK(dominant_rep(Weight{-1, 0}) == Weight{1, 0});
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + it % 3;
    Weight mu(n);
    for (auto& x : mu) x = c(rng);
    Weight dom = dominant_rep(mu);
    CHECK(is_dominant(dom));
    bool found = false;
    for (const FiniteWeyl& w : enumerate_w0(n)) found |= (w.act(mu) == dom);
    CHECK(found);
  }
}
