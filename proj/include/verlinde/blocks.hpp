#pragma once

#include "verlinde/fusion.hpp"

#include <optional>

namespace verlinde {

/// Memo key for conformal-block dimensions: genus plus the weight multiset in
/// canonical order with vacua removed, so propagation of vacua is structural.
struct BlockKey {
  int genus = 0;
  std::vector<Weight> weights;  // sorted, no zero weights

  friend bool operator==(const BlockKey& x, const BlockKey& y) {
    return x.genus == y.genus && x.weights == y.weights;
  }
};

struct BlockKeyHash {
  std::size_t operator()(const BlockKey& k) const {
    WeightHash wh;
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(k.genus);
    for (const Weight& w : k.weights) h = h * 1099511628211ull ^ wh(w);
    return h;
  }
};

BlockKey canonical_block_key(int genus, std::span<const Weight> weights);

/// Memo table of computed n_g values; linearizable, idempotent fills.
class BlockCache {
 public:
  std::optional<BigInt> lookup(const BlockKey& key) const;
  void store(const BlockKey& key, const BigInt& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<BlockKey, BigInt, BlockKeyHash> memo_;
};

/// Genus-0 multipoint dimension.  s = 0 -> 1, s = 1 -> [lambda = 0],
/// s = 2 -> [mu = lambda*]; s >= 3 fuses the first s-1 weights and reads the
/// coefficient of the dual of the last.
BigInt n0_multipoint(FusionTable& table, std::span<const Weight> weights);

/// n_g by the factorization recursion: strips vacua, reduces genus by
/// summing over a dual pair of insertions, memoizes on the canonical key.
BigInt n_g(BlockCache& cache, FusionTable& table, int genus,
           std::span<const Weight> weights);

/// Genus-g Verlinde sum round(sum_m S_{0m}^{2-2g} prod_i S_{l_i m}/S_{0m});
/// deviations from integrality beyond tol signal a defect and throw.
BigInt verlinde_numeric(const SMatrix& sm, int genus,
                        std::span<const Weight> weights, double tol = 1e-6);

}  // namespace verlinde
