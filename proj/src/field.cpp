#include "kw/field.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <sstream>

namespace kw {

const char* const kGenNames[kNumGens] = {"q", "t", "t0", "tn", "u0", "un", "z"};

Mono mono_one() {
  Mono m{};
  m.fill(0);
  return m;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumGens; ++i) r[i] = a[i] + b[i];
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumGens; ++i) r[i] = a[i] - b[i];
  return r;
}

int grlex_cmp(const Mono& a, const Mono& b) {
  int64_t ta = 0, tb = 0;
  for (int i = 0; i < kNumGens; ++i) {
    ta += a[i];
    tb += b[i];
  }
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int i = 0; i < kNumGens; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

int32_t mono_total(const Mono& m) {
  int32_t s = 0;
  for (int i = 0; i < kNumGens; ++i) s += m[i];
  return s;
}
}  // namespace

// ---------------------------------------------------------------------------
// ParamPoly
// ---------------------------------------------------------------------------

void ParamPoly::normalize_terms() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_cmp(a.first, b.first) > 0; });
  size_t out = 0;
  for (size_t i = 0; i < terms.size();) {
    Mono m = terms[i].first;
    Int c = std::move(terms[i].second);
    size_t j = i + 1;
    while (j < terms.size() && terms[j].first == m) c += terms[j++].second;
    if (c != 0) terms[out++] = {m, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

ParamPoly ParamPoly::from_int(Int c) {
  ParamPoly p;
  if (c != 0) p.terms.emplace_back(mono_one(), std::move(c));
  return p;
}

ParamPoly ParamPoly::from_mono(const Mono& m, Int c) {
  ParamPoly p;
  if (c != 0) p.terms.emplace_back(m, std::move(c));
  return p;
}

ParamPoly ParamPoly::gen_pow_half(Gen g, int32_t doubled, Int c) {
  Mono m = mono_one();
  m[g] = doubled;
  return from_mono(m, std::move(c));
}

bool ParamPoly::is_one() const {
  return terms.size() == 1 && terms[0].second == 1 && terms[0].first == mono_one();
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < o.terms.size()) {
    int c = grlex_cmp(terms[i].first, o.terms[j].first);
    if (c > 0) {
      r.terms.push_back(terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(o.terms[j++]);
    } else {
      Int s = terms[i].second + o.terms[j].second;
      if (s != 0) r.terms.emplace_back(terms[i].first, std::move(s));
      ++i, ++j;
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (terms.size() == 1) return o.mul_mono(terms[0].first, terms[0].second);
  if (o.terms.size() == 1) return mul_mono(o.terms[0].first, o.terms[0].second);
  std::map<Mono, Int, GrlexDesc> acc;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      Mono m = mono_mul(ma, mb);
      auto [it, fresh] = acc.try_emplace(m, Int(0));
      it->second += ca * cb;
      if (it->second == 0) acc.erase(it);
    }
  ParamPoly r;
  r.terms.assign(acc.begin(), acc.end());
  return r;
}

ParamPoly ParamPoly::mul_mono(const Mono& m, const Int& c) const {
  if (c == 0) return zero();
  ParamPoly r;
  r.terms.reserve(terms.size());
  for (const auto& [mm, cc] : terms) r.terms.emplace_back(mono_mul(mm, m), cc * c);
  return r;
}

ParamPoly ParamPoly::mul_int(const Int& c) const {
  if (c == 0) return zero();
  ParamPoly r = *this;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

Int ParamPoly::integer_content() const {
  Int g = 0;
  for (const auto& t : terms) {
    g = boost::multiprecision::gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

Mono ParamPoly::monomial_content() const {
  assert(!terms.empty());
  Mono m = terms[0].first;
  for (const auto& t : terms)
    for (int i = 0; i < kNumGens; ++i) m[i] = std::min(m[i], t.first[i]);
  return m;
}

ParamPoly ParamPoly::div_int_exact(const Int& c) const {
  assert(c != 0);
  ParamPoly r = *this;
  for (auto& t : r.terms) {
    assert(t.second % c == 0);
    t.second /= c;
  }
  return r;
}

int32_t ParamPoly::total_degree_max() const {
  assert(!terms.empty());
  return mono_total(terms.front().first);
}

int32_t ParamPoly::total_degree_min() const {
  assert(!terms.empty());
  return mono_total(terms.back().first);
}

int32_t ParamPoly::min_exp(Gen g) const {
  assert(!terms.empty());
  int32_t m = terms[0].first[g];
  for (const auto& t : terms) m = std::min(m, t.first[g]);
  return m;
}

std::optional<ParamPoly> ParamPoly::try_divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return zero();
  // Make the divisor primitive; restore the scalar at the end.
  Int cb = b.integer_content();
  if (cb < 0) cb = -cb;
  ParamPoly bp = (cb == 1) ? b : b.div_int_exact(cb);

  const Mono& ltm = bp.terms.front().first;
  const Int& ltc = bp.terms.front().second;
  const int32_t floor_total = a.total_degree_min();

  std::map<Mono, Int, GrlexDesc> rem;
  for (const auto& t : a.terms) rem.insert(t);
  ParamPoly q;
  size_t steps = 0;
  const size_t max_steps = 1024 + 16 * std::max(a.terms.size(), b.terms.size());
  while (!rem.empty()) {
    if (++steps > max_steps) return std::nullopt;
    const auto& lead = *rem.begin();
    if (mono_total(lead.first) < floor_total) return std::nullopt;
    if (lead.second % ltc != 0) return std::nullopt;
    Mono qm = mono_div(lead.first, ltm);
    Int qc = lead.second / ltc;
    for (const auto& [mb, cbt] : bp.terms) {
      Mono m = mono_mul(qm, mb);
      auto [it, fresh] = rem.try_emplace(m, Int(0));
      it->second -= qc * cbt;
      if (it->second == 0) rem.erase(it);
    }
    q.terms.emplace_back(qm, std::move(qc));
  }
  if (cb != 1) {
    for (auto& t : q.terms) {
      if (t.second % cb != 0) return std::nullopt;
      t.second /= cb;
    }
  }
  return q;
}

ParamPoly ParamPoly::substitute_q_zero() const {
  ParamPoly r;
  for (const auto& t : terms) {
    assert(t.first[GQ] >= 0);
    if (t.first[GQ] == 0) r.terms.push_back(t);
  }
  return r;
}

namespace {
Rat rat_pow(const Rat& v, int32_t e) {
  using boost::multiprecision::pow;
  if (e == 0) return Rat(1);
  Int n = boost::multiprecision::numerator(v);
  Int d = boost::multiprecision::denominator(v);
  if (e < 0) {
    std::swap(n, d);
    e = -e;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rat(pow(n, static_cast<unsigned>(e)), pow(d, static_cast<unsigned>(e)));
}
}  // namespace

Rat ParamPoly::evaluate(const EvalPoint& pt) const {
  Rat sum = 0;
  for (const auto& [m, c] : terms) {
    Rat v(c);
    for (int g = 0; g < kNumGens; ++g)
      if (m[g] != 0) v *= rat_pow(pt.values[g], m[g]);
    sum += v;
  }
  return sum;
}

namespace {
// Renders gen^{doubled/2}: exponent 1 prints bare, otherwise a reduced
// fraction per the canonical grammar.
std::string factor_string(int g, int32_t doubled) {
  std::string s = kGenNames[g];
  if (doubled == 2) return s;
  s += "^(";
  if (doubled % 2 == 0)
    s += std::to_string(doubled / 2) + "/1)";
  else
    s += std::to_string(doubled) + "/2)";
  return s;
}
}  // namespace

std::string ParamPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::vector<std::string> factors;
    for (int g = 0; g < kNumGens; ++g)
      if (m[g] != 0) factors.push_back(factor_string(g, m[g]));
    if (factors.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

namespace {
using FactorList = std::vector<std::pair<ParamPoly, int>>;

bool factor_less(const std::pair<ParamPoly, int>& a, const std::pair<ParamPoly, int>& b) {
  return a.first.terms < b.first.terms;
}

// Union of two sorted factor lists with exponents added (denominator product).
FactorList mul_merge(const FactorList& a, const FactorList& b) {
  FactorList r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first.terms < b[j].first.terms) {
      r.push_back(a[i++]);
    } else if (b[j].first.terms < a[i].first.terms) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back(b[j]);
  return r;
}

// Merges two sorted factor lists into their lcm and reports the polynomial
// multipliers that raise each side's numerator to the common denominator.
FactorList lcm_merge(const FactorList& a, const FactorList& b, ParamPoly& ma, ParamPoly& mb) {
  FactorList r;
  r.reserve(a.size() + b.size());
  ma = ParamPoly::from_int(1);
  mb = ParamPoly::from_int(1);
  auto mul_pow = [](ParamPoly& acc, const ParamPoly& f, int e) {
    for (int k = 0; k < e; ++k) acc = acc * f;
  };
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first.terms < b[j].first.terms)) {
      mul_pow(mb, a[i].first, a[i].second);
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first.terms < a[i].first.terms) {
      mul_pow(ma, b[j].first, b[j].second);
      r.push_back(b[j++]);
    } else {
      const int e = std::max(a[i].second, b[j].second);
      mul_pow(ma, a[i].first, e - a[i].second);
      mul_pow(mb, a[i].first, e - b[j].second);
      r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Int> exact_kth_root(const Int& v, int k) {
  if (v <= 0) return std::nullopt;
  if (v == 1 || k == 1) return v;
  Int lo = 1, hi = v;
  while (lo <= hi) {
    Int mid = (lo + hi) / 2;
    Int p = boost::multiprecision::pow(mid, static_cast<unsigned>(k));
    if (p == v) return mid;
    if (p < v)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

// Splits d into binomial factors by trial division.  Candidates are read off
// term pairs (leading, other): the coefficient and monomial ratios give a
// binomial whose j-th power could contribute that pair, for each j admitting
// exact roots.  Requires d to be primitive, free of monomial content, and to
// have a positive leading coefficient; every factor pushed satisfies the same
// invariants, as does the shrinking remainder (Gauss's lemma for the integer
// content, additivity of per-generator minimum exponents for the monomial
// part, multiplicativity of the graded-lex leading coefficient for the sign).
// A remainder with no splitting candidate is kept as a single opaque factor.
void split_binomials(ParamPoly d, FactorList& out) {
  constexpr size_t kSplitMaxTerms = 256;
  constexpr int kMaxFactorPow = 12;
  while (!d.is_one()) {
    if (d.terms.size() > kSplitMaxTerms) {
      out.emplace_back(std::move(d), 1);
      return;
    }
    bool progressed = false;
    for (size_t k = 1; k < d.terms.size() && !progressed; ++k) {
      Int cd = d.leading().second;
      Int cn = d.terms[k].second;
      const Int g = boost::multiprecision::gcd(cd, cn);
      if (g > 1) {
        cd /= g;
        cn /= g;
      }
      const Mono mfull = mono_div(d.terms[k].first, d.leading().first);
      for (int j = 1; j <= kMaxFactorPow && !progressed; ++j) {
        Mono m = mfull;
        std::vector<std::pair<Int, Int>> coeffs;  // (constant, x^m) coefficient
        if (j == 1) {
          coeffs.emplace_back(cd, cn);
        } else {
          bool divisible = true;
          for (int gi = 0; gi < kNumGens; ++gi) {
            if (mfull[gi] % j != 0) divisible = false;
            m[gi] = mfull[gi] / j;
          }
          if (!divisible) continue;
          const auto rd = exact_kth_root(cd, j);
          const auto rn = exact_kth_root(cn < 0 ? Int(-cn) : cn, j);
          if (!rd || !rn) continue;
          if (j % 2 == 0) {
            if (cn < 0) continue;  // an even power cannot have a negative trailing coefficient
            coeffs.emplace_back(*rd, -*rn);
            coeffs.emplace_back(*rd, *rn);
          } else {
            coeffs.emplace_back(*rd, cn < 0 ? -*rn : *rn);
          }
        }
        for (const auto& [c0, c1] : coeffs) {
          ParamPoly f;
          f.terms.emplace_back(mono_one(), c0);
          f.terms.emplace_back(m, c1);
          f.normalize_terms();
          const Mono mc = f.monomial_content();
          if (mc != mono_one()) f = f.mul_mono(mono_div(mono_one(), mc));
          int mult = 0;
          ParamPoly rem = d;
          while (true) {
            auto q = ParamPoly::try_divide_exact(rem, f);
            if (!q) break;
            rem = std::move(*q);
            ++mult;
          }
          if (mult > 0) {
            out.emplace_back(std::move(f), mult);
            d = std::move(rem);
            progressed = true;
            break;
          }
        }
      }
    }
    if (!progressed) {
      out.emplace_back(std::move(d), 1);
      return;
    }
  }
}
}  // namespace

FieldElem::FieldElem(ParamPoly n, ParamPoly d) : num(std::move(n)) {
  if (d.is_zero()) throw DivisionByZeroError("zero denominator");
  if (num.is_zero()) return;
  const Mono mc = d.monomial_content();
  if (mc != mono_one()) {
    const Mono inv = mono_div(mono_one(), mc);
    num = num.mul_mono(inv);
    d = d.mul_mono(inv);
  }
  if (d.leading().second < 0) {
    num = -num;
    d = -d;
  }
  const Int c = d.integer_content();
  if (c > 1) d = d.div_int_exact(c);
  den_int_ = c;
  if (!d.is_one()) {
    split_binomials(std::move(d), den_f_);
    std::sort(den_f_.begin(), den_f_.end(), factor_less);
    FactorList merged;
    merged.reserve(den_f_.size());
    for (auto& fe : den_f_) {
      if (!merged.empty() && merged.back().first == fe.first)
        merged.back().second += fe.second;
      else
        merged.push_back(std::move(fe));
    }
    den_f_ = std::move(merged);
  }
  normalize();
}

// Cancels denominator factors and integer content that divide the numerator.
void FieldElem::normalize() {
  if (num.is_zero()) {
    den_int_ = 1;
    den_f_.clear();
    return;
  }
  constexpr size_t kCancelMaxTerms = 1024;
  if (!den_f_.empty() && num.terms.size() <= kCancelMaxTerms) {
    FactorList kept;
    kept.reserve(den_f_.size());
    for (auto& [f, e] : den_f_) {
      int rem = e;
      while (rem > 0) {
        auto q = ParamPoly::try_divide_exact(num, f);
        if (!q) break;
        num = std::move(*q);
        --rem;
      }
      if (rem > 0) kept.emplace_back(std::move(f), rem);
    }
    den_f_ = std::move(kept);
  }
  if (den_int_ > 1) {
    Int cn = num.integer_content();
    if (cn < 0) cn = -cn;
    const Int g = boost::multiprecision::gcd(cn, den_int_);
    if (g > 1) {
      num = num.div_int_exact(g);
      den_int_ /= g;
    }
  }
}

ParamPoly FieldElem::den() const {
  ParamPoly d = ParamPoly::from_int(den_int_);
  for (const auto& [f, e] : den_f_)
    for (int k = 0; k < e; ++k) d = d * f;
  return d;
}

FieldElem FieldElem::from_int(long c) { return from_poly(ParamPoly::from_int(Int(c))); }

FieldElem FieldElem::from_rat(const Rat& r) {
  return FieldElem(ParamPoly::from_int(boost::multiprecision::numerator(r)),
                   ParamPoly::from_int(boost::multiprecision::denominator(r)));
}

FieldElem FieldElem::from_poly(ParamPoly p) {
  FieldElem e;
  e.num = std::move(p);
  return e;
}

FieldElem FieldElem::half_pow(Gen g, int32_t doubled) {
  return from_poly(ParamPoly::gen_pow_half(g, doubled));
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num = -r.num;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  FieldElem r;
  if (den_int_ == o.den_int_ && den_f_ == o.den_f_) {
    r.num = num + o.num;
    if (r.num.is_zero()) return r;
    r.den_int_ = den_int_;
    r.den_f_ = den_f_;
    r.normalize();
    return r;
  }
  // Bring both sides over the lcm of the factored denominators.
  ParamPoly ma, mb;
  r.den_f_ = lcm_merge(den_f_, o.den_f_, ma, mb);
  const Int g = boost::multiprecision::gcd(den_int_, o.den_int_);
  const Int ia = o.den_int_ / g;
  const Int ib = den_int_ / g;
  r.num = (num * ma).mul_int(ia) + (o.num * mb).mul_int(ib);
  if (r.num.is_zero()) return zero();
  r.den_int_ = den_int_ * ia;
  r.normalize();
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (is_zero() || o.is_zero()) return zero();
  FieldElem r;
  r.num = num * o.num;
  r.den_int_ = den_int_ * o.den_int_;
  r.den_f_ = mul_merge(den_f_, o.den_f_);
  r.normalize();
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::inv() const {
  if (num.is_zero()) throw DivisionByZeroError("inverse of zero");
  return FieldElem(den(), num);
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = one();
  FieldElem b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r *= b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (den_int_ == o.den_int_ && den_f_ == o.den_f_) return num == o.num;
  // Cross-multiply after cancelling the common part of the denominators.
  ParamPoly ma, mb;
  lcm_merge(den_f_, o.den_f_, ma, mb);
  const Int g = boost::multiprecision::gcd(den_int_, o.den_int_);
  return ((num * ma).mul_int(o.den_int_ / g) - (o.num * mb).mul_int(den_int_ / g)).is_zero();
}

FieldElem FieldElem::substitute_q_zero() const {
  if (num.is_zero()) return zero();
  const int32_t mn = num.min_exp(GQ);
  int32_t md = 0;
  for (const auto& [f, e] : den_f_) md += e * f.min_exp(GQ);
  if (md > mn) throw PoleError("pole at q = 0");
  Mono shift = mono_one();
  shift[GQ] = -md;
  ParamPoly n0 = num.mul_mono(shift).substitute_q_zero();
  // Shift each factor by its own q-order; the per-factor orders add up to md.
  ParamPoly d0 = ParamPoly::from_int(den_int_);
  for (const auto& [f, e] : den_f_) {
    Mono sh = mono_one();
    sh[GQ] = -f.min_exp(GQ);
    const ParamPoly f0 = f.mul_mono(sh).substitute_q_zero();
    assert(!f0.is_zero());
    for (int k = 0; k < e; ++k) d0 = d0 * f0;
  }
  return FieldElem(std::move(n0), std::move(d0));
}

Rat FieldElem::evaluate(const EvalPoint& pt) const {
  Rat d(den_int_);
  for (const auto& [f, e] : den_f_) {
    const Rat fv = f.evaluate(pt);
    if (fv == 0) throw PoleError("denominator vanishes at evaluation point");
    for (int k = 0; k < e; ++k) d *= fv;
  }
  return num.evaluate(pt) / d;
}

EvalPoint EvalPoint::random(uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(1, bound);
  std::uniform_int_distribution<int> sign(0, 1);
  EvalPoint pt;
  for (int g = 0; g < kNumGens; ++g) {
    Int n = dist(rng);
    Int d = dist(rng);
    if (sign(rng)) n = -n;
    pt.values[g] = Rat(n, d);
  }
  return pt;
}

std::string FieldElem::format() const {
  if (num.is_zero()) return "0";
  if (den_f_.empty() && den_int_ == 1) return num.to_string();
  return "(" + num.to_string() + ")/(" + den().to_string() + ")";
}

std::string FieldElem::format_json() const {
  auto escape = [](const std::string& s) { return s; };  // texts contain no JSON-special chars
  return "{\"num\": \"" + escape(num.to_string()) + "\", \"den\": \"" + escape(den().to_string()) +
         "\"}";
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {
struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  Int number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", pos);
    return Int(s.substr(start, pos - start));
  }
  long signed_number() {
    skip_ws();
    bool neg = accept('-');
    if (!neg) accept('+');
    Int v = number();
    long out = v.convert_to<long>();
    return neg ? -out : out;
  }
  std::optional<int> ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (islower(static_cast<unsigned char>(s[pos])) ||
                              isdigit(static_cast<unsigned char>(s[pos])))) {
      // generators are a letter optionally followed by one digit/letter
      ++pos;
      if (pos - start == 2) break;
    }
    if (pos == start) return std::nullopt;
    std::string name = s.substr(start, pos - start);
    // Prefer the two-character names; fall back to one character.
    for (int g = 0; g < kNumGens; ++g)
      if (name == kGenNames[g]) return g;
    if (name.size() == 2) {
      --pos;
      name = name.substr(0, 1);
      for (int g = 0; g < kNumGens; ++g)
        if (name == kGenNames[g]) return g;
    }
    throw ParseError("unknown generator '" + name + "'", start);
  }
};

// factor := gen ['^' '(' int '/' int ')']
bool parse_factor(Lexer& lx, Mono& m) {
  size_t save = lx.pos;
  auto g = lx.ident();
  if (!g) {
    lx.pos = save;
    return false;
  }
  int32_t doubled = 2;
  if (lx.accept('^')) {
    lx.expect('(');
    long a = lx.signed_number();
    lx.expect('/');
    long b = lx.signed_number();
    lx.expect(')');
    if (b == 0) throw ParseError("zero exponent denominator", lx.pos);
    if (b < 0) {
      a = -a;
      b = -b;
    }
    long twice = 2 * a;
    if (twice % b != 0) throw ParseError("exponent is not a half-integer", lx.pos);
    doubled = static_cast<int32_t>(twice / b);
  }
  m[*g] += doubled;
  return true;
}

// term := [sign] integer ['*' factor*] | [sign] factor ('*' factor)*
void parse_term(Lexer& lx, int sign, ParamPoly& acc) {
  Int coeff = 1;
  Mono m = mono_one();
  bool have_any = false;
  if (isdigit(static_cast<unsigned char>(lx.peek()))) {
    coeff = lx.number();
    have_any = true;
    if (lx.accept('*')) {
      if (!parse_factor(lx, m)) throw ParseError("expected factor after '*'", lx.pos);
      while (lx.accept('*'))
        if (!parse_factor(lx, m)) throw ParseError("expected factor after '*'", lx.pos);
    }
  } else {
    if (!parse_factor(lx, m)) throw ParseError("expected term", lx.pos);
    have_any = true;
    while (lx.accept('*'))
      if (!parse_factor(lx, m)) throw ParseError("expected factor after '*'", lx.pos);
  }
  if (!have_any) throw ParseError("empty term", lx.pos);
  if (sign < 0) coeff = -coeff;
  acc.terms.emplace_back(m, std::move(coeff));
}

// poly := term (('+'|'-') term)*   ; parsing stops at ')' or end.
ParamPoly parse_poly(Lexer& lx) {
  ParamPoly acc;
  int sign = 1;
  if (lx.accept('-'))
    sign = -1;
  else
    lx.accept('+');
  parse_term(lx, sign, acc);
  while (true) {
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.pos++;
      parse_term(lx, c == '-' ? -1 : 1, acc);
    } else {
      break;
    }
  }
  acc.normalize_terms();
  return acc;
}
}  // namespace

FieldElem FieldElem::parse(const std::string& text) {
  Lexer lx(text);
  if (lx.peek() == '(') {
    lx.expect('(');
    ParamPoly n = parse_poly(lx);
    lx.expect(')');
    lx.expect('/');
    lx.expect('(');
    ParamPoly d = parse_poly(lx);
    lx.expect(')');
    if (!lx.eof()) throw ParseError("trailing input", lx.pos);
    return FieldElem(std::move(n), std::move(d));
  }
  ParamPoly n = parse_poly(lx);
  if (!lx.eof()) throw ParseError("trailing input", lx.pos);
  return from_poly(std::move(n));
}

}  // namespace kw
