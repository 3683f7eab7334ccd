#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kw/weyl.hpp"

namespace kw {

// Walk type: a reduced word (i_1,...,i_r) together with the start alcove zA.
struct WalkSpec {
  std::vector<int> word;
  AffineWeylElem start;

  int rank() const { return start.rank(); }
};

// Throws std::invalid_argument if a letter is out of range or the word is not
// reduced.
void validate_walk_spec(const WalkSpec& spec);

// Step k is a crossing when bits[k-1] = 1 and a folding when bits[k-1] = 0;
// the k-th alcove is z s_{i_1}^{b_1} ... s_{i_k}^{b_k} A.
struct AlcoveWalk {
  WalkSpec spec;
  std::vector<uint8_t> bits;
};

// The elements g_0 = z, g_1, ..., g_r with p_k = g_k A.
std::vector<AffineWeylElem> walk_elements(const AlcoveWalk& p);

enum class StepKind { Crossing, Folding };
enum class StepSign { Positive, Negative };
enum class StepDirection { Ascent, Descent };

// Per-step classification.  The hyperplane h_k is the wall met at step k,
// transported from alpha_{i_k} by the bitwise prefix WITHOUT the start z and
// normalized to the positive root.  The direction compares lengths of the
// genuine prefix (with z): ascent iff l(g_{k-1} s_{i_k}) = l(g_{k-1}) + 1.
// The sign is the geometric one: the + side of a wall is where the
// representative of its root with positive finite part takes positive
// values, and the alcove g_{k-1}A sits on the + side iff the finite part of
// g_{k-1}(alpha_{i_k}) is a positive finite root.  A folding is positive iff
// it sits on the + side; a crossing is positive iff it moves from the - side
// to the + side.  Signs and directions genuinely differ: the first step of a
// reduced word away from the fundamental alcove is an ascent but a negative
// crossing.
struct StepInfo {
  StepKind kind;
  StepSign sign;
  StepDirection direction;
  AffineRoot hyperplane;
};

struct ClassifiedWalk {
  std::vector<StepInfo> steps;
  std::vector<int> fold_pos;    // 0-based steps that fold positively
  std::vector<int> fold_neg;    // 0-based steps that fold negatively
  std::vector<int> cross_desc;  // 0-based crossings in the descent direction
};

ClassifiedWalk classify_steps(const AlcoveWalk& p);

// e(p) = z s_{i_1}^{b_1} ... s_{i_r}^{b_r} = t(wt) dir.  varpi is present iff
// e(p)^{-1} is the minimal representative of its translation coset
// (equivalently the final alcove e(p)A lies in the dominant chamber, which
// holds for every walk kept by the dominant-chamber filter); then
// e(p)^{-1} = w(varpi).
struct EndData {
  AffineWeylElem e;
  Weight wt;
  FiniteWeyl dir;
  std::optional<Weight> varpi;
};

EndData end_data(const AlcoveWalk& p);

enum class WalkFilter { All, DominantChamber };

// Barycenter of the fundamental alcove: coordinate i (0-based) is
// (n - i) / (2(n + 1)).  A single interior point decides alcove membership in
// any open chamber, exactly.
std::vector<Rat> alcove_barycenter(int n);

// Strictly dominant: x_1 > x_2 > ... > x_n > 0.
bool point_in_dominant(const std::vector<Rat>& x);

// Whether the alcove gA lies inside the dominant chamber.
bool alcove_in_dominant(const AffineWeylElem& g);

// Depth-first over bit vectors, low bit first, so walks arrive in
// lexicographic bit order.  With the dominant-chamber filter every alcove
// p_0, ..., p_r is required to lie in the chamber; a prefix whose alcove
// leaves the chamber is pruned, which is exact because every extension still
// contains that alcove.
void enumerate_walks(const WalkSpec& spec, WalkFilter filter,
                     const std::function<void(const AlcoveWalk&)>& visit);
std::vector<AlcoveWalk> enumerate_walks(const WalkSpec& spec, WalkFilter filter);

// Same enumeration restricted to bit vectors extending a fixed prefix; used
// to split work across threads.
void enumerate_walks_prefix(const WalkSpec& spec, WalkFilter filter,
                            const std::vector<uint8_t>& prefix,
                            const std::function<void(const AlcoveWalk&)>& visit);

enum class FoldColor : uint8_t { Black = 0, Gray = 1 };

// colors[j] colors the j-th folding step, in step order.
struct ColoredWalk {
  AlcoveWalk walk;
  std::vector<FoldColor> colors;
};

// 0-based indices of the folding steps.
std::vector<int> folding_positions(const AlcoveWalk& p);

void color_walks(const AlcoveWalk& p,
                 const std::function<void(const ColoredWalk&)>& visit);
std::vector<ColoredWalk> color_walks(const AlcoveWalk& p);

// Bits of the walk with every gray folding straightened into a crossing:
// c_k = 1 for crossings and gray foldings, c_k = 0 for black foldings.
std::vector<uint8_t> straightened_bits(const ColoredWalk& p);

// The walk p* obtained by straightening the gray foldings, reversing, and
// re-basing so the result ends at the fundamental alcove: its type word is
// the reverse of p's, its bits are the straightened bits reversed, and it
// starts at s_{i_1}^{c_1} ... s_{i_r}^{c_r} A, so that e(p*) = e.
AlcoveWalk straighten_reverse(const ColoredWalk& p);

}  // namespace kw
