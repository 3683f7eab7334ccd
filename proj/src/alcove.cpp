#include "kw/alcove.hpp"

#include <algorithm>
#include <stdexcept>

namespace kw {

void validate_walk_spec(const WalkSpec& spec) {
  const int n = spec.rank();
  for (int i : spec.word) {
    if (i < 0 || i > n) throw std::invalid_argument("walk letter out of range");
  }
  const AffineWeylElem w = AffineWeylElem::from_word(n, spec.word);
  if (length(w) != spec.word.size())
    throw std::invalid_argument("walk word is not reduced");
}

std::vector<AffineWeylElem> walk_elements(const AlcoveWalk& p) {
  const int n = p.spec.rank();
  std::vector<AffineWeylElem> out;
  out.reserve(p.bits.size() + 1);
  out.push_back(p.spec.start);
  for (size_t k = 0; k < p.bits.size(); ++k) {
    if (p.bits[k])
      out.push_back(out.back() * AffineWeylElem::simple(n, p.spec.word[k]));
    else
      out.push_back(out.back());
  }
  return out;
}

ClassifiedWalk classify_steps(const AlcoveWalk& p) {
  const int n = p.spec.rank();
  ClassifiedWalk out;
  AffineWeylElem g = p.spec.start;               // prefix with z
  AffineWeylElem v = AffineWeylElem::identity(n);  // prefix without z
  for (size_t k = 0; k < p.bits.size(); ++k) {
    const int i = p.spec.word[k];
    const AffineRoot alpha = simple_root(n, i);
    const AffineRoot wall_g = g.act(alpha);
    const AffineRoot wall_v = v.act(alpha);
    StepInfo info;
    info.kind = p.bits[k] ? StepKind::Crossing : StepKind::Folding;
    info.direction =
        root_positive(wall_g) ? StepDirection::Ascent : StepDirection::Descent;
    const bool plus_side = fin_positive(wall_g.fin);
    if (info.kind == StepKind::Crossing) {
      info.sign = plus_side ? StepSign::Negative : StepSign::Positive;
      if (info.direction == StepDirection::Descent)
        out.cross_desc.push_back(static_cast<int>(k));
    } else {
      info.sign = plus_side ? StepSign::Positive : StepSign::Negative;
      if (info.sign == StepSign::Positive)
        out.fold_pos.push_back(static_cast<int>(k));
      else
        out.fold_neg.push_back(static_cast<int>(k));
    }
    info.hyperplane = root_positive(wall_v) ? wall_v : root_neg(wall_v);
    out.steps.push_back(std::move(info));
    if (p.bits[k]) {
      const AffineWeylElem s = AffineWeylElem::simple(n, i);
      g = g * s;
      v = v * s;
    }
  }
  return out;
}

EndData end_data(const AlcoveWalk& p) {
  const int n = p.spec.rank();
  AffineWeylElem e = p.spec.start;
  for (size_t k = 0; k < p.bits.size(); ++k)
    if (p.bits[k]) e = e * AffineWeylElem::simple(n, p.spec.word[k]);
  EndData out;
  out.e = e;
  out.wt = e.trans;
  out.dir = e.fin;
  const AffineWeylElem einv = e.inverse();
  if (is_min_coset_rep(einv)) out.varpi = einv.trans;
  return out;
}

std::vector<Rat> alcove_barycenter(int n) {
  std::vector<Rat> x;
  x.reserve(n);
  for (int i = 0; i < n; ++i) x.emplace_back(n - i, 2 * (n + 1));
  return x;
}

bool point_in_dominant(const std::vector<Rat>& x) {
  if (x.empty()) return true;
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] <= x[i + 1]) return false;
  return x.back() > 0;
}

bool alcove_in_dominant(const AffineWeylElem& g) {
  return point_in_dominant(g.act_point(alcove_barycenter(g.rank())));
}

namespace {

struct Enumerator {
  const WalkSpec& spec;
  WalkFilter filter;
  const std::function<void(const AlcoveWalk&)>& visit;
  std::vector<Rat> x0;
  std::vector<AffineWeylElem> simples;
  std::vector<uint8_t> bits;

  Enumerator(const WalkSpec& s, WalkFilter f,
             const std::function<void(const AlcoveWalk&)>& vis)
      : spec(s), filter(f), visit(vis), x0(alcove_barycenter(s.rank())) {
    const int n = spec.rank();
    simples.reserve(n + 1);
    for (int i = 0; i <= n; ++i) simples.push_back(AffineWeylElem::simple(n, i));
    bits.assign(spec.word.size(), 0);
  }

  bool admissible(const AffineWeylElem& g) const {
    return filter == WalkFilter::All || point_in_dominant(g.act_point(x0));
  }

  void run(size_t k, const AffineWeylElem& g) {
    if (k == bits.size()) {
      visit(AlcoveWalk{spec, bits});
      return;
    }
    bits[k] = 0;  // folding keeps the alcove, so no new membership check
    run(k + 1, g);
    const AffineWeylElem h = g * simples[spec.word[k]];
    if (admissible(h)) {
      bits[k] = 1;
      run(k + 1, h);
      bits[k] = 0;
    }
  }
};

}  // namespace

void enumerate_walks(const WalkSpec& spec, WalkFilter filter,
                     const std::function<void(const AlcoveWalk&)>& visit) {
  enumerate_walks_prefix(spec, filter, {}, visit);
}

void enumerate_walks_prefix(const WalkSpec& spec, WalkFilter filter,
                            const std::vector<uint8_t>& prefix,
                            const std::function<void(const AlcoveWalk&)>& visit) {
  validate_walk_spec(spec);
  if (prefix.size() > spec.word.size())
    throw std::invalid_argument("bit prefix longer than the walk");
  Enumerator en(spec, filter, visit);
  AffineWeylElem g = spec.start;
  if (!en.admissible(g)) return;  // p_0 = zA must lie in the chamber too
  for (size_t k = 0; k < prefix.size(); ++k) {
    if (prefix[k]) {
      g = g * en.simples[spec.word[k]];
      if (!en.admissible(g)) return;
      en.bits[k] = 1;
    }
  }
  en.run(prefix.size(), g);
}

std::vector<AlcoveWalk> enumerate_walks(const WalkSpec& spec, WalkFilter filter) {
  std::vector<AlcoveWalk> out;
  enumerate_walks(spec, filter, [&](const AlcoveWalk& p) { out.push_back(p); });
  return out;
}

std::vector<int> folding_positions(const AlcoveWalk& p) {
  std::vector<int> out;
  for (size_t k = 0; k < p.bits.size(); ++k)
    if (!p.bits[k]) out.push_back(static_cast<int>(k));
  return out;
}

void color_walks(const AlcoveWalk& p,
                 const std::function<void(const ColoredWalk&)>& visit) {
  const std::vector<int> folds = folding_positions(p);
  const size_t f = folds.size();
  std::vector<FoldColor> colors(f, FoldColor::Black);
  const uint64_t total = uint64_t{1} << f;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t j = 0; j < f; ++j)
      colors[j] = (mask >> j) & 1 ? FoldColor::Gray : FoldColor::Black;
    visit(ColoredWalk{p, colors});
  }
}

std::vector<ColoredWalk> color_walks(const AlcoveWalk& p) {
  std::vector<ColoredWalk> out;
  color_walks(p, [&](const ColoredWalk& c) { out.push_back(c); });
  return out;
}

std::vector<uint8_t> straightened_bits(const ColoredWalk& p) {
  std::vector<uint8_t> c = p.walk.bits;
  const std::vector<int> folds = folding_positions(p.walk);
  if (p.colors.size() != folds.size())
    throw std::invalid_argument("one color per folding step required");
  for (size_t j = 0; j < folds.size(); ++j)
    if (p.colors[j] == FoldColor::Gray) c[folds[j]] = 1;
  return c;
}

AlcoveWalk straighten_reverse(const ColoredWalk& p) {
  const int n = p.walk.spec.rank();
  const std::vector<uint8_t> c = straightened_bits(p);
  AffineWeylElem start = AffineWeylElem::identity(n);
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k]) start = start * AffineWeylElem::simple(n, p.walk.spec.word[k]);
  AlcoveWalk out;
  out.spec.word.assign(p.walk.spec.word.rbegin(), p.walk.spec.word.rend());
  out.spec.start = start;
  out.bits.assign(c.rbegin(), c.rend());
  return out;
}

}  // namespace kw
