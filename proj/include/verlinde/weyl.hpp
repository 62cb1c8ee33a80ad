#pragma once

#include "verlinde/lie.hpp"

#include <functional>
#include <string>
#include <vector>

namespace verlinde {

/// An affine Weyl group element: a product of simple reflections (letters,
/// applied right to left) followed by a translation.  The translation vector
/// holds coordinates in the alpha-basis and is scaled by the level when the
/// word is applied, realizing W_aff = W x Q-check on the weight lattice.
struct WeylWord {
  std::vector<int> letters;  // 1-based simple-reflection indices
  LabelVec translation;      // alpha-basis coords; empty means none

  static WeylWord identity() { return {}; }
  bool has_translation() const {
    return translation.size() > 0 && !translation.isZero(0);
  }
  /// det of the finite part: (-1)^{number of letters}.
  int sign() const { return letters.size() % 2 == 0 ? 1 : -1; }
};

/// "s1 s2 | 1,0" rendering; the translation part is omitted when zero and the
/// empty word prints as "e".
std::string to_string(const WeylWord& w);
WeylWord parse_weyl_word(const std::string& text, int num_labels);

struct FoldResult {
  Weight rep;        // alcove representative; empty when on_wall
  int sign = 1;      // (-1)^{reflections applied}
  bool on_wall = false;
  int steps = 0;     // reflections applied
};

/// w_{alpha_i} lambda = lambda - a_i alpha_i, in label coordinates.
Weight simple_reflect(const AlgebraCtx& ctx, int i, const Weight& w);

/// Applies the letters right to left, then adds level * (translation in the
/// omega-basis).
Weight apply_word(const AlgebraCtx& ctx, const WeylWord& word, const Weight& w);

/// Folds an arbitrary integral weight to its unique W_aff-orbit
/// representative in the closed alcove P_ell.  At level 0 translations act
/// trivially and the fold reduces to the finite dominant fold.
FoldResult fold_unshifted(const AlgebraCtx& ctx, const Weight& w);

/// rho-shifted signed folding at kappa = ell + r: folds lambda + rho to the
/// strict interior (all shifted labels >= 1, shifted pairing <= kappa - 1)
/// and reports rep = folded - rho with the reflection parity.  Weights whose
/// shifted orbit lies on a wall come back with on_wall set.
FoldResult fold_shifted(const AlgebraCtx& ctx, const Weight& w);

/// Finite-Weyl signed fold of an already-shifted weight x: reflects negative
/// labels to strict dominance; a zero label anywhere marks a wall.  This is
/// the Racah-Speiser step.
FoldResult fold_finite_signed(const AlgebraCtx& ctx, const Weight& x);

/// Dominant representative of the finite W-orbit (no shift, no sign).
Weight dominant_representative(const AlgebraCtx& ctx, const Weight& w);

/// The PRV representative: fold_unshifted(lambda1 + w(lambda2)).
Weight prv_fold(const AlgebraCtx& ctx, const Weight& lambda1,
                const Weight& lambda2, const WeylWord& word);

/// All r! finite Weyl elements as reduced words (empty translations),
/// identity first, in BFS order by length.
std::vector<WeylWord> enumerate_weyl_group(const AlgebraCtx& ctx);

namespace detail {

/// Picks one move among the admissible ones; moves[i] is a 1-based simple
/// reflection index or 0 for the affine reflection.  Used to cross-check the
/// greedy strategy against a randomized one.
using MoveSelector = std::function<std::size_t(const std::vector<int>& moves)>;

FoldResult fold_engine(const AlgebraCtx& ctx, Weight x, Int bound, bool affine,
                       bool strict, const MoveSelector& pick = {});

}  // namespace detail

}  // namespace verlinde
