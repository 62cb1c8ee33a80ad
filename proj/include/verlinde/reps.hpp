#pragma once

#include "verlinde/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace verlinde {

/// Multiplicities and dimensions grow quickly with rank and level; every
/// count in the library is arbitrary-precision.
using BigInt = boost::multiprecision::cpp_int;

using WeightMap = std::map<Weight, BigInt, WeightLess>;

/// Full weight system of an irreducible module: weight -> multiplicity.
/// W-invariant; the total mass equals the Weyl dimension.
struct Character {
  WeightMap mults;

  BigInt mass() const;
  BigInt mult(const Weight& w) const;
};

/// Tensor product decomposition: dominant weight -> coefficient c^nu_{lm}.
struct DecompList {
  WeightMap terms;

  BigInt coeff(const Weight& nu) const;
};

/// Weyl dimension formula, evaluated exactly.
BigInt weyl_dim(const AlgebraCtx& ctx, const Weight& lambda);

/// Weight system of V_lambda by Freudenthal's recursion from the highest
/// weight downward.
Character weight_multiplicities(const AlgebraCtx& ctx, const Weight& lambda);

/// LRU cache of characters keyed by highest weight (characters are
/// level-independent).  Linearizable; safe to share across workers.
class CharacterCache {
 public:
  explicit CharacterCache(std::size_t budget = 10'000);

  std::shared_ptr<const Character> get(const AlgebraCtx& ctx,
                                       const Weight& lambda);

 private:
  struct Entry {
    std::shared_ptr<const Character> ch;
    std::list<Weight>::iterator age;
  };

  std::size_t budget_;
  std::mutex mutex_;
  std::list<Weight> age_;  // front = most recent
  std::unordered_map<Weight, Entry, WeightHash> map_;
};

/// Racah-Speiser decomposition of V_lambda (x) V_mu, run over the smaller of
/// the two weight systems.  Coefficients are nonnegative and symmetric in
/// (lambda, mu).
DecompList tensor_decompose(const AlgebraCtx& ctx, const Weight& lambda,
                            const Weight& mu, CharacterCache* cache = nullptr);

}  // namespace verlinde
