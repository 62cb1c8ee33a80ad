#include "verlinde/weyl.hpp"

#include <deque>
#include <unordered_set>

namespace verlinde {

Weight simple_reflect(const AlgebraCtx& ctx, int i, const Weight& w) {
  if (i < 1 || i > ctx.n())
    throw std::out_of_range("simple_reflect: index " + std::to_string(i) +
                            " out of range for r = " + std::to_string(ctx.r()));
  if (w.num_labels() != ctx.n())
    throw std::invalid_argument("simple_reflect: rank mismatch");
  return Weight(w.a - w.a[i - 1] * ctx.cartan().col(i - 1));
}

Weight apply_word(const AlgebraCtx& ctx, const WeylWord& word, const Weight& w) {
  Weight x = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    x = simple_reflect(ctx, *it, x);
  if (word.translation.size() > 0) {
    if (word.translation.size() != ctx.n())
      throw std::invalid_argument("apply_word: translation rank mismatch");
    x.a += ctx.level() * (ctx.cartan() * word.translation);
  }
  return x;
}

namespace detail {

// One engine drives every fold.  Moves: a 1-based index i reflects across the
// wall a_i = 0; the marker 0 is the affine reflection
// x -> x + (bound - theta_pairing(x)) * theta across the wall <x, theta> =
// bound.  Greedy order is smallest negative index first, affine last;
// termination: each move reflects across a hyperplane strictly separating x
// from an interior point of the target region, so the distance to that point
// strictly decreases and the discrete orbit admits no infinite descent.
FoldResult fold_engine(const AlgebraCtx& ctx, Weight x, Int bound, bool affine,
                       bool strict, const MoveSelector& pick) {
  FoldResult res;
  std::vector<int> moves;
  while (true) {
    moves.clear();
    for (int i = 1; i <= ctx.n(); ++i)
      if (x.a[i - 1] < 0) moves.push_back(i);
    const Int pairing = theta_pairing(x);
    if (affine && pairing > bound) moves.push_back(0);

    if (moves.empty()) {
      if (strict && ((x.a.array() == 0).any() || pairing == bound)) {
        res.on_wall = true;
        return res;
      }
      res.rep = std::move(x);
      return res;
    }

    const int move = moves[pick ? pick(moves) : 0];
    if (move == 0)
      x.a += (bound - pairing) * ctx.theta().a;
    else
      x.a -= x.a[move - 1] * ctx.cartan().col(move - 1);
    res.sign = -res.sign;
    ++res.steps;
  }
}

}  // namespace detail

FoldResult fold_unshifted(const AlgebraCtx& ctx, const Weight& w) {
  // At level 0 every translation in W_aff acts trivially, leaving the finite
  // fold; the representative is admissible iff it is zero.
  return detail::fold_engine(ctx, w, ctx.level(), ctx.level() > 0, false);
}

FoldResult fold_shifted(const AlgebraCtx& ctx, const Weight& w) {
  FoldResult res =
      detail::fold_engine(ctx, w + ctx.rho(), ctx.kappa(), true, true);
  if (!res.on_wall) res.rep = res.rep - ctx.rho();
  return res;
}

FoldResult fold_finite_signed(const AlgebraCtx& ctx, const Weight& x) {
  return detail::fold_engine(ctx, x, 0, false, true);
}

Weight dominant_representative(const AlgebraCtx& ctx, const Weight& w) {
  return detail::fold_engine(ctx, w, 0, false, false).rep;
}

Weight prv_fold(const AlgebraCtx& ctx, const Weight& lambda1,
                const Weight& lambda2, const WeylWord& word) {
  return fold_unshifted(ctx, lambda1 + apply_word(ctx, word, lambda2)).rep;
}

std::vector<WeylWord> enumerate_weyl_group(const AlgebraCtx& ctx) {
  // BFS over images of rho (regular, so the stabilizer is trivial and images
  // identify elements).  Prepending a letter composes s_i after the word.
  std::vector<WeylWord> words;
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<std::pair<WeylWord, Weight>> queue;
  queue.push_back({WeylWord::identity(), ctx.rho()});
  seen.insert(ctx.rho());
  while (!queue.empty()) {
    auto [word, image] = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= ctx.n(); ++i) {
      Weight next = simple_reflect(ctx, i, image);
      if (seen.insert(next).second) {
        WeylWord longer;
        longer.letters.reserve(word.letters.size() + 1);
        longer.letters.push_back(i);
        longer.letters.insert(longer.letters.end(), word.letters.begin(),
                              word.letters.end());
        queue.push_back({std::move(longer), std::move(next)});
      }
    }
    words.push_back(std::move(word));
  }
  return words;
}

std::string to_string(const WeylWord& w) {
  std::string s;
  if (w.letters.empty()) {
    s = "e";
  } else {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) s += ' ';
      s += 's' + std::to_string(w.letters[i]);
    }
  }
  if (w.has_translation()) {
    s += " | ";
    for (Eigen::Index i = 0; i < w.translation.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(w.translation[i]);
    }
  }
  return s;
}

WeylWord parse_weyl_word(const std::string& text, int num_labels) {
  WeylWord word;
  const std::size_t bar = text.find('|');
  const std::string head = text.substr(0, bar);

  std::size_t pos = 0;
  while (pos < head.size()) {
    while (pos < head.size() && head[pos] == ' ') ++pos;
    if (pos >= head.size()) break;
    std::size_t end = head.find(' ', pos);
    if (end == std::string::npos) end = head.size();
    std::string tok = head.substr(pos, end - pos);
    pos = end;
    if (tok == "e") continue;
    if (!tok.empty() && tok[0] == 's') tok.erase(0, 1);
    try {
      word.letters.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed Weyl word letter '" + tok + "'");
    }
    if (word.letters.back() < 1 || word.letters.back() > num_labels)
      throw std::invalid_argument("Weyl word letter out of range: " + tok);
  }

  if (bar != std::string::npos) {
    const Weight t = parse_weight(text.substr(bar + 1), num_labels);
    word.translation = t.a;
  }
  return word;
}

}  // namespace verlinde
