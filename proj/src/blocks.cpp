#include "verlinde/blocks.hpp"

#include <algorithm>
#include <cmath>

namespace verlinde {

BlockKey canonical_block_key(int genus, std::span<const Weight> weights) {
  BlockKey key;
  key.genus = genus;
  key.weights.reserve(weights.size());
  for (const Weight& w : weights)
    if (!w.is_zero()) key.weights.push_back(w);
  std::sort(key.weights.begin(), key.weights.end(), WeightLess{});
  return key;
}

std::optional<BigInt> BlockCache::lookup(const BlockKey& key) const {
  std::lock_guard lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void BlockCache::store(const BlockKey& key, const BigInt& value) {
  std::lock_guard lock(mutex_);
  memo_.emplace(key, value);
}

std::size_t BlockCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

BigInt n0_multipoint(FusionTable& table, std::span<const Weight> weights) {
  const std::size_t s = weights.size();
  if (s == 0) return 1;
  if (s == 1) return weights[0].is_zero() ? 1 : 0;
  if (s == 2) return weights[1] == dual(weights[0]) ? 1 : 0;
  const FusionTable::Row row = table.fuse_multiset(weights.subspan(0, s - 1));
  auto it = row.find(dual(weights[s - 1]));
  return it == row.end() ? BigInt(0) : it->second;
}

BigInt n_g(BlockCache& cache, FusionTable& table, int genus,
           std::span<const Weight> weights) {
  if (genus < 0) throw std::invalid_argument("n_g: genus must be >= 0");
  for (const Weight& w : weights)
    if (!level_admissible(table.ctx(), w))
      throw std::invalid_argument("n_g: weight " + verlinde::to_string(w) +
                                  " is not level-admissible");

  BlockKey key = canonical_block_key(genus, weights);
  if (auto hit = cache.lookup(key)) return *hit;

  BigInt value;
  if (genus == 0) {
    value = n0_multipoint(table, key.weights);
  } else {
    // Factorization: n_g(L) = sum_nu n_{g-1}(L, nu, nu*).
    value = 0;
    std::vector<Weight> extended = key.weights;
    extended.emplace_back();
    extended.emplace_back();
    for (const Weight& nu : table.alcove()) {
      extended[extended.size() - 2] = nu;
      extended[extended.size() - 1] = dual(nu);
      value += n_g(cache, table, genus - 1, extended);
    }
  }
  cache.store(key, value);
  return value;
}

BigInt verlinde_numeric(const SMatrix& sm, int genus,
                        std::span<const Weight> weights, double tol) {
  if (genus < 0)
    throw std::invalid_argument("verlinde_numeric: genus must be >= 0");
  std::vector<int> rows;
  rows.reserve(weights.size());
  for (const Weight& w : weights) rows.push_back(sm.idx(w));

  const int size = static_cast<int>(sm.entries.cols());
  const int euler = 2 - 2 * genus - static_cast<int>(weights.size());
  std::complex<long double> sum = 0;
  for (int s = 0; s < size; ++s) {
    // The vacuum row is real positive, so the power is an ordinary one.
    const long double s0 = sm.entries(0, s).real();
    std::complex<long double> term =
        std::pow(s0, static_cast<long double>(euler));
    for (int row : rows)
      term *= std::complex<long double>(sm.entries(row, s).real(),
                                        sm.entries(row, s).imag());
    sum += term;
  }
  const long double rounded = std::round(static_cast<double>(sum.real()));
  if (std::abs(static_cast<double>(sum.real() - rounded)) > tol ||
      std::abs(static_cast<double>(sum.imag())) > tol || rounded < 0)
    throw std::runtime_error(
        "verlinde_numeric: sum is not a nonnegative integer within tolerance");
  BigInt out;
  // Values can exceed the mantissa of double only far outside the configured
  // caps; convert through a decimal rendering to stay exact for anything
  // representable.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.0Lf", rounded);
  out = BigInt(buf);
  return out;
}

}  // namespace verlinde
