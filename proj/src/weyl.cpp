#include "kw/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kw {

int64_t dot(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += int64_t(a[i]) * b[i];
  return s;
}

Weight weight_add(const Weight& a, const Weight& b) {
  assert(a.size() == b.size());
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Weight weight_zero(int n) { return Weight(n, 0); }

Weight eps(int n, int i) {
  Weight r(n, 0);
  r[i] = 1;
  return r;
}

Weight omega(int n, int i) {
  Weight r(n, 0);
  for (int j = 0; j <= i; ++j) r[j] = 1;
  return r;
}

int64_t pair_alphavee(int i, const Weight& mu) {
  int n = static_cast<int>(mu.size());
  assert(1 <= i && i <= n);
  if (i < n) return mu[i - 1] - mu[i];
  return mu[n - 1];
}

bool is_dominant(const Weight& mu) {
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i)
    if (pair_alphavee(i, mu) < 0) return false;
  return true;
}

Weight dominant_rep(const Weight& mu) {
  Weight r(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) r[i] = std::abs(mu[i]);
  std::sort(r.begin(), r.end(), std::greater<int32_t>());
  return r;
}

// ---------------------------------------------------------------------------
// FiniteWeyl
// ---------------------------------------------------------------------------

FiniteWeyl FiniteWeyl::identity(int n) {
  FiniteWeyl w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

FiniteWeyl FiniteWeyl::longest(int n) {
  FiniteWeyl w = identity(n);
  w.sign.assign(n, -1);
  return w;
}

bool FiniteWeyl::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[i] != i || sign[i] != 1) return false;
  return true;
}

FiniteWeyl FiniteWeyl::compose(const FiniteWeyl& o) const {
  // (this o). eps_i = this.(o_sign_i eps_{o_perm_i})
  FiniteWeyl r;
  int n = rank();
  r.perm.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = perm[o.perm[i]];
    r.sign[i] = static_cast<int8_t>(o.sign[i] * sign[o.perm[i]]);
  }
  return r;
}

FiniteWeyl FiniteWeyl::inverse() const {
  FiniteWeyl r;
  int n = rank();
  r.perm.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[perm[i]] = i;
    r.sign[perm[i]] = sign[i];
  }
  return r;
}

Weight FiniteWeyl::act(const Weight& mu) const {
  Weight r(mu.size());
  for (int i = 0; i < rank(); ++i) r[perm[i]] = sign[i] * mu[i];
  return r;
}

std::vector<FiniteWeyl> enumerate_w0(int n) {
  std::vector<FiniteWeyl> out;
  std::vector<int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      FiniteWeyl w;
      w.perm = perm;
      w.sign.resize(n);
      for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// AffineRoot
// ---------------------------------------------------------------------------

AffineRoot simple_root(int n, int i) {
  assert(0 <= i && i <= n);
  AffineRoot r;
  r.fin = weight_zero(n);
  if (i == 0) {
    r.fin[0] = -2;
    r.twok = 2;
  } else if (i == n) {
    r.fin[n - 1] = 2;
    r.twok = 0;
  } else {
    r.fin[i - 1] = 1;
    r.fin[i] = -1;
    r.twok = 0;
  }
  return r;
}

AffineRoot root_neg(const AffineRoot& r) { return AffineRoot{weight_neg(r.fin), -r.twok}; }

std::optional<RootKind> root_kind(const AffineRoot& r) {
  int ones = 0, twos = 0, others = 0;
  for (int32_t c : r.fin) {
    if (c == 0) continue;
    if (c == 1 || c == -1)
      ++ones;
    else if (c == 2 || c == -2)
      ++twos;
    else
      ++others;
  }
  if (others) return std::nullopt;
  if (ones == 2 && twos == 0) return RootKind::Medium;
  if (ones == 0 && twos == 1) return RootKind::Long;
  if (ones == 1 && twos == 0) return RootKind::Short;
  return std::nullopt;
}

Orbit root_orbit(const AffineRoot& r) {
  auto kind = root_kind(r);
  if (!kind) throw std::invalid_argument("finite part is not in R or R-vee");
  switch (*kind) {
    case RootKind::Medium:
      if (r.twok % 2 != 0) throw std::invalid_argument("medium root with half-integer delta");
      return Orbit::T;
    case RootKind::Long: {
      if (r.twok % 2 != 0) throw std::invalid_argument("long root with half-integer delta");
      int m = ((r.twok % 4) + 4) % 4;
      return m == 0 ? Orbit::TN : Orbit::T0;
    }
    case RootKind::Short:
      return (r.twok % 2 == 0) ? Orbit::UN : Orbit::U0;
  }
  throw std::logic_error("unreachable");
}

FieldElem orbit_param(Orbit o) {
  switch (o) {
    case Orbit::T:
      return FieldElem::half_pow(GT, 2);
    case Orbit::T0:
      return FieldElem::half_pow(GT0, 2);
    case Orbit::TN:
      return FieldElem::half_pow(GTN, 2);
    case Orbit::U0:
      return FieldElem::half_pow(GU0, 2);
    case Orbit::UN:
      return FieldElem::half_pow(GUN, 2);
  }
  throw std::logic_error("unreachable");
}

bool fin_positive(const Weight& fin) {
  for (int32_t c : fin) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

bool root_positive(const AffineRoot& r) {
  if (r.twok != 0) return r.twok > 0;
  return fin_positive(r.fin);
}

// ---------------------------------------------------------------------------
// AffineWeylElem
// ---------------------------------------------------------------------------

AffineWeylElem AffineWeylElem::identity(int n) {
  return AffineWeylElem{weight_zero(n), FiniteWeyl::identity(n)};
}

AffineWeylElem AffineWeylElem::translation(const Weight& lam) {
  return AffineWeylElem{lam, FiniteWeyl::identity(static_cast<int>(lam.size()))};
}

AffineWeylElem AffineWeylElem::from_finite(const FiniteWeyl& w) {
  return AffineWeylElem{weight_zero(w.rank()), w};
}

AffineWeylElem AffineWeylElem::simple(int n, int i) {
  assert(0 <= i && i <= n);
  FiniteWeyl w = FiniteWeyl::identity(n);
  Weight tr = weight_zero(n);
  if (i == 0) {
    w.sign[0] = -1;  // s_{2 eps_1}
    tr[0] = 1;
  } else if (i == n) {
    w.sign[n - 1] = -1;
  } else {
    std::swap(w.perm[i - 1], w.perm[i]);
  }
  return AffineWeylElem{tr, w};
}

AffineWeylElem AffineWeylElem::from_word(int n, const std::vector<int>& word) {
  AffineWeylElem g = identity(n);
  for (int i : word) g = g * simple(n, i);
  return g;
}

bool AffineWeylElem::is_identity() const {
  return fin.is_identity() && trans == weight_zero(rank());
}

AffineWeylElem AffineWeylElem::operator*(const AffineWeylElem& o) const {
  return AffineWeylElem{weight_add(trans, fin.act(o.trans)), fin.compose(o.fin)};
}

AffineWeylElem AffineWeylElem::inverse() const {
  FiniteWeyl wi = fin.inverse();
  return AffineWeylElem{weight_neg(wi.act(trans)), wi};
}

AffineRoot AffineWeylElem::act(const AffineRoot& r) const {
  Weight f = fin.act(r.fin);
  int64_t tk = r.twok - 2 * dot(f, trans);
  return AffineRoot{std::move(f), static_cast<int32_t>(tk)};
}

std::vector<Rat> AffineWeylElem::act_point(const std::vector<Rat>& x) const {
  int n = rank();
  std::vector<Rat> r(n);
  for (int i = 0; i < n; ++i) r[fin.perm[i]] = x[i] * fin.sign[i];
  for (int i = 0; i < n; ++i) r[i] += trans[i];
  return r;
}

bool right_descent(const AffineWeylElem& g, int i) {
  return !root_positive(g.act(simple_root(g.rank(), i)));
}

std::vector<int> canonical_word(const AffineWeylElem& g) {
  std::vector<int> rev;
  AffineWeylElem cur = g;
  int n = g.rank();
  for (size_t guard = 0;; ++guard) {
    assert(guard < 1000000);
    int best = -1;
    for (int i = 0; i <= n; ++i) {
      if (right_descent(cur, i)) {
        best = i;
        break;
      }
    }
    if (best < 0) break;
    cur = cur * AffineWeylElem::simple(n, best);
    rev.push_back(best);
  }
  assert(cur.is_identity());
  std::reverse(rev.begin(), rev.end());
  return rev;
}

size_t length(const AffineWeylElem& g) { return canonical_word(g).size(); }

std::vector<AffineRoot> inversion_set(int n, const std::vector<int>& word) {
  std::vector<AffineRoot> out;
  out.reserve(word.size());
  AffineWeylElem prefix = AffineWeylElem::identity(n);
  for (int i : word) {
    out.push_back(prefix.act(simple_root(n, i)));
    prefix = prefix * AffineWeylElem::simple(n, i);
  }
  return out;
}

std::vector<AffineRoot> inversion_set(const AffineWeylElem& g) {
  return inversion_set(g.rank(), canonical_word(g));
}

namespace {
bool root_less(const AffineRoot& a, const AffineRoot& b) {
  if (a.twok != b.twok) return a.twok < b.twok;
  return a.fin < b.fin;
}
}  // namespace

std::vector<AffineRoot> inversion_symdiff(const AffineWeylElem& v, const AffineWeylElem& w) {
  std::vector<AffineRoot> lv = inversion_set(v);
  std::vector<AffineRoot> lw = inversion_set(w);
  std::sort(lv.begin(), lv.end(), root_less);
  std::sort(lw.begin(), lw.end(), root_less);
  std::vector<AffineRoot> out;
  std::set_symmetric_difference(lv.begin(), lv.end(), lw.begin(), lw.end(),
                                std::back_inserter(out), root_less);
  return out;
}

std::vector<AffineRoot> inversion_transport(const AffineWeylElem& v, const AffineWeylElem& w) {
  std::vector<AffineRoot> base = inversion_set(v.inverse() * w);
  for (auto& r : base) r = v.act(r);
  return base;
}

std::pair<AffineWeylElem, FiniteWeyl> min_coset_rep_factor(const Weight& mu) {
  int n = static_cast<int>(mu.size());
  AffineWeylElem g = AffineWeylElem::translation(mu);
  FiniteWeyl u = FiniteWeyl::identity(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= n; ++i) {
      if (right_descent(g, i)) {
        g = g * AffineWeylElem::simple(n, i);
        u = AffineWeylElem::simple(n, i).fin.compose(u);
        changed = true;
        break;
      }
    }
  }
  return {g, u};
}

AffineWeylElem min_coset_rep(const Weight& mu) { return min_coset_rep_factor(mu).first; }

bool is_min_coset_rep(const AffineWeylElem& g) {
  for (int i = 1; i <= g.rank(); ++i)
    if (right_descent(g, i)) return false;
  return true;
}

FieldElem word_param_pow(int n, const std::vector<int>& word, int half) {
  FieldElem r = FieldElem::one();
  for (int i : word) {
    Gen g = (i == 0) ? GT0 : (i == n ? GTN : GT);
    r *= FieldElem::half_pow(g, half);
  }
  return r;
}

std::vector<int> finite_canonical_word(const FiniteWeyl& w) {
  return canonical_word(AffineWeylElem::from_finite(w));
}

size_t finite_length(const FiniteWeyl& w) { return finite_canonical_word(w).size(); }

StabilizerData stabilizer_data(const Weight& mu) {
  if (!is_dominant(mu)) throw std::invalid_argument("stabilizer_data requires a dominant weight");
  int n = static_cast<int>(mu.size());
  StabilizerData out;
  std::map<Weight, std::pair<FiniteWeyl, size_t>> best_per_orbit_point;
  size_t stab_longest = 0;
  bool have_w_mu = false;
  for (const FiniteWeyl& w : enumerate_w0(n)) {
    size_t len = finite_length(w);
    Weight img = w.act(mu);
    if (img == mu) {
      out.stab.push_back(w);
      if (!have_w_mu || len > stab_longest) {
        stab_longest = len;
        out.w_mu = w;
        have_w_mu = true;
      }
    }
    auto it = best_per_orbit_point.find(img);
    if (it == best_per_orbit_point.end() || len < it->second.second)
      best_per_orbit_point[img] = {w, len};
  }
  size_t rep_longest = 0;
  for (auto& [img, rep] : best_per_orbit_point) {
    out.min_reps.push_back(rep.first);
    if (rep.second >= rep_longest) {
      rep_longest = rep.second;
      out.v_mu = rep.first;
    }
  }
  out.poincare = FieldElem::zero();
  for (const FiniteWeyl& w : out.stab)
    out.poincare += word_param_pow(n, finite_canonical_word(w), 2);
  out.t_half = word_param_pow(n, finite_canonical_word(out.w_mu), -1);
  return out;
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += "s" + std::to_string(word[i]);
  }
  return s;
}

}  // namespace kw
