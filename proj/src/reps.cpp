#include "verlinde/reps.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

namespace verlinde {

BigInt Character::mass() const {
  BigInt total = 0;
  for (const auto& [w, m] : mults) total += m;
  return total;
}

BigInt Character::mult(const Weight& w) const {
  auto it = mults.find(w);
  return it == mults.end() ? BigInt(0) : it->second;
}

BigInt DecompList::coeff(const Weight& nu) const {
  auto it = terms.find(nu);
  return it == terms.end() ? BigInt(0) : it->second;
}

BigInt weyl_dim(const AlgebraCtx& ctx, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("weyl_dim: weight is not dominant");
  // prod over positive roots alpha_{i..j} of (lambda + rho, alpha) / (rho,
  // alpha); the numerator is a_i + ... + a_j + (j - i + 1), the denominator
  // the interval length.
  BigInt num = 1, den = 1;
  for (const auto& [lo, hi] : ctx.positive_roots()) {
    Int s = hi - lo + 1;
    for (int k = lo; k <= hi; ++k) s += lambda.a[k - 1];
    num *= s;
    den *= (hi - lo + 1);
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  assert(r == 0);
  return q;
}

namespace {

// Dominant weights mu <= lambda together with their depth coordinates c
// (lambda - mu = sum c_i alpha_i), enumerated inside the box bounded by
// A^{-1} lambda.
struct DominantLayer {
  Weight mu;
  LabelVec depth;
  Int height;  // sum of depth coords
};

std::vector<DominantLayer> dominant_weights_below(const AlgebraCtx& ctx,
                                                  const Weight& lambda) {
  const int n = ctx.n();
  LabelVec scaled = ctx.cartan_inv_num() * lambda.a;  // r * A^{-1} lambda
  LabelVec bound(n);
  for (int i = 0; i < n; ++i) bound[i] = scaled[i] / ctx.cartan_inv_den();

  std::vector<DominantLayer> out;
  LabelVec c = LabelVec::Zero(n);
  while (true) {
    LabelVec labels = lambda.a - ctx.cartan() * c;
    if ((labels.array() >= 0).all())
      out.push_back({Weight(labels), c, c.sum()});
    int pos = 0;
    while (pos < n) {
      if (c[pos] < bound[pos]) {
        ++c[pos];
        break;
      }
      c[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.height != y.height) return x.height < y.height;
    return WeightLess{}(x.mu, y.mu);
  });
  return out;
}

std::vector<Weight> weyl_orbit(const AlgebraCtx& ctx, const Weight& w) {
  std::vector<Weight> orbit;
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= ctx.n(); ++i) {
      Weight next = simple_reflect(ctx, i, cur);
      if (seen.insert(next).second) queue.push_back(next);
    }
    orbit.push_back(std::move(cur));
  }
  return orbit;
}

}  // namespace

Character weight_multiplicities(const AlgebraCtx& ctx, const Weight& lambda) {
  if (!is_dominant(lambda))
    throw std::invalid_argument("weight_multiplicities: weight not dominant");

  const auto layers = dominant_weights_below(ctx, lambda);
  std::map<Weight, BigInt, WeightLess> dom;  // dominant weight -> mult

  // Freudenthal:
  //   ((lambda+rho,lambda+rho) - (mu+rho,mu+rho)) m(mu)
  //     = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha).
  // With lambda - mu in the positive root span both sides are integers:
  // (x, alpha_{i..j}) = x_i + ... + x_j and the quadratic difference equals
  // (lambda + mu + 2 rho, lambda - mu) = sum_i c_i (a + b + 2)_i.
  for (const auto& layer : layers) {
    if (layer.height == 0) {
      dom[layer.mu] = 1;
      continue;
    }
    BigInt acc = 0;
    for (const auto& [lo, hi] : ctx.positive_roots()) {
      Int kmax = layer.depth[lo - 1];
      for (int t = lo; t <= hi; ++t) kmax = std::min(kmax, layer.depth[t - 1]);
      if (kmax <= 0) continue;
      const Weight alpha = ctx.root_labels(lo, hi);
      Weight nu = layer.mu;
      for (Int k = 1; k <= kmax; ++k) {
        nu = nu + alpha;
        auto it = dom.find(dominant_representative(ctx, nu));
        if (it == dom.end()) continue;
        Int pairing = 0;
        for (int t = lo; t <= hi; ++t) pairing += nu.a[t - 1];
        acc += it->second * pairing;
      }
    }
    Int denom = 0;
    for (int i = 0; i < ctx.n(); ++i)
      denom += layer.depth[i] * (lambda.a[i] + layer.mu.a[i] + 2);
    assert(denom > 0);
    BigInt q, r;
    boost::multiprecision::divide_qr(2 * acc, BigInt(denom), q, r);
    assert(r == 0);
    if (q != 0) dom[layer.mu] = q;
  }

  Character ch;
  for (const auto& [mu, m] : dom)
    for (const Weight& w : weyl_orbit(ctx, mu)) ch.mults.emplace(w, m);
  return ch;
}

CharacterCache::CharacterCache(std::size_t budget) : budget_(budget) {}

std::shared_ptr<const Character> CharacterCache::get(const AlgebraCtx& ctx,
                                                     const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    auto it = map_.find(lambda);
    if (it != map_.end()) {
      age_.splice(age_.begin(), age_, it->second.age);
      return it->second.ch;
    }
  }
  auto ch = std::make_shared<const Character>(weight_multiplicities(ctx, lambda));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = map_.try_emplace(lambda);
  if (inserted) {
    age_.push_front(lambda);
    it->second = {ch, age_.begin()};
    while (map_.size() > budget_) {
      map_.erase(age_.back());
      age_.pop_back();
    }
  }
  return it->second.ch;
}

DecompList tensor_decompose(const AlgebraCtx& ctx, const Weight& lambda,
                            const Weight& mu, CharacterCache* cache) {
  if (!is_dominant(lambda) || !is_dominant(mu))
    throw std::invalid_argument("tensor_decompose: weights must be dominant");

  // Run Racah-Speiser over the smaller weight system; the mass of the
  // character is exactly the dimension.
  const Weight* big = &lambda;
  const Weight* small = &mu;
  if (weyl_dim(ctx, *small) > weyl_dim(ctx, *big)) std::swap(big, small);

  std::shared_ptr<const Character> owned;
  const Character* ch;
  if (cache) {
    owned = cache->get(ctx, *small);
    ch = owned.get();
  } else {
    owned = std::make_shared<const Character>(weight_multiplicities(ctx, *small));
    ch = owned.get();
  }

  DecompList out;
  for (const auto& [delta, m] : ch->mults) {
    const FoldResult fr = fold_finite_signed(ctx, *big + delta + ctx.rho());
    if (fr.on_wall) continue;
    out.terms[fr.rep - ctx.rho()] += fr.sign * m;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    assert(it->second >= 0);
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace verlinde
