#include "kw/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kw {

LaurentPoly LaurentPoly::one(int n) {
  LaurentPoly f{n, {}};
  f.terms.emplace(weight_zero(n), FieldElem::one());
  return f;
}

LaurentPoly LaurentPoly::monomial(Weight wt, FieldElem c) {
  LaurentPoly f{static_cast<int>(wt.size()), {}};
  if (!c.is_zero()) f.terms.emplace(std::move(wt), std::move(c));
  return f;
}

LaurentPoly LaurentPoly::xi(int n, int i) {
  return monomial(eps(n, i), FieldElem::one());
}

void LaurentPoly::add_term(const Weight& wt, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms.find(wt);
  if (it == terms.end()) {
    terms.emplace(wt, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

const FieldElem& LaurentPoly::coeff(const Weight& wt) const {
  static const FieldElem kZero = FieldElem::zero();
  auto it = terms.find(wt);
  return it == terms.end() ? kZero : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r{n, {}};
  for (const auto& [wt, c] : terms) r.terms.emplace(wt, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [wt, c] : o.terms) r.add_term(wt, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [wt, c] : o.terms) r.add_term(wt, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r{n, {}};
  for (const auto& [wa, ca] : terms)
    for (const auto& [wb, cb] : o.terms) r.add_term(weight_add(wa, wb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const FieldElem& c) const {
  if (c.is_zero()) return zero(n);
  LaurentPoly r{n, {}};
  for (const auto& [wt, k] : terms) {
    FieldElem v = k * c;
    if (!v.is_zero()) r.terms.emplace(wt, std::move(v));
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return n == o.n && terms == o.terms;
}

Rat LaurentPoly::evaluate(const EvalPoint& pt, const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("evaluate: wrong point dimension");
  Rat total = 0;
  for (const auto& [wt, c] : terms) {
    Rat m = c.evaluate(pt);
    for (int i = 0; i < n; ++i) {
      if (wt[i] == 0) continue;
      if (point[i] == 0) throw PoleError("evaluate: x_i = 0 with negative exponent");
      Rat p = 1;
      Rat base = wt[i] > 0 ? point[i] : Rat(denominator(point[i]), numerator(point[i]));
      for (int32_t e = 0; e < (wt[i] > 0 ? wt[i] : -wt[i]); ++e) p *= base;
      m *= p;
    }
    total += m;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [wt, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.format() << ")*x^" << weight_str(wt);
  }
  return os.str();
}

LaurentPoly weyl_act_poly(const AffineWeylElem& g, const LaurentPoly& f) {
  LaurentPoly r{f.n, {}};
  for (const auto& [wt, c] : f.terms) {
    AffineRoot img = g.act(AffineRoot{wt, 0});
    r.add_term(img.fin, c * FieldElem::half_pow(GQ, img.twok));
  }
  return r;
}

std::pair<FieldElem, Weight> wall_monomial(int n, int i, bool half) {
  if (i < 0 || i > n) throw std::invalid_argument("wall_monomial: bad index");
  if (i == 0) {
    Weight wt = weight_zero(n);
    wt[0] = half ? -1 : -2;
    return {FieldElem::half_pow(GQ, half ? 1 : 2), std::move(wt)};
  }
  if (i == n) {
    Weight wt = weight_zero(n);
    wt[n - 1] = half ? 1 : 2;
    return {FieldElem::one(), std::move(wt)};
  }
  if (half) throw std::invalid_argument("wall_monomial: half-root is non-integral for middle indices");
  Weight wt = weight_zero(n);
  wt[i - 1] = 1;
  wt[i] = -1;
  return {FieldElem::one(), std::move(wt)};
}

LaurentPoly div_exact_reflection(int i, const LaurentPoly& f) {
  const int n = f.n;
  if (i < 0 || i > n) throw std::invalid_argument("div_exact_reflection: bad index");
  const auto [yc, ywt] = wall_monomial(n, i);
  LaurentPoly r{n, {}};
  for (const auto& [wt, c] : f.terms) {
    // s_i x^lam = x^lam * Y^{-m} with Y = x^{alpha_i} and m = <lam, alpha_i^vee>,
    // so the quotient is x^lam * (Y^{-m} - 1)/(1 - Y): a geometric sum.
    int64_t m;
    if (i == 0)
      m = -wt[0];
    else if (i == n)
      m = wt[n - 1];
    else
      m = static_cast<int64_t>(wt[i - 1]) - wt[i];
    if (m == 0) continue;
    if (m > 0) {
      // Y^{-m} + Y^{-m+1} + ... + Y^{-1}
      Weight cur = wt;
      FieldElem cc = c;
      const FieldElem yinv = yc.inv();
      for (int64_t j = 1; j <= m; ++j) {
        for (int k = 0; k < n; ++k) cur[k] -= ywt[k];
        cc *= yinv;
        r.add_term(cur, cc);
      }
    } else {
      // -(1 + Y + ... + Y^{p-1}), p = -m
      Weight cur = wt;
      FieldElem cc = -c;
      r.add_term(cur, cc);
      for (int64_t j = 1; j < -m; ++j) {
        for (int k = 0; k < n; ++k) cur[k] += ywt[k];
        cc *= yc;
        r.add_term(cur, cc);
      }
    }
  }
  return r;
}

}  // namespace kw
