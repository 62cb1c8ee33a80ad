#pragma once

#include "verlinde/blocks.hpp"

#include <functional>

namespace verlinde {

/// Grid of contexts and inputs swept by the verification harness.
struct SweepConfig {
  int r_min = 2;
  int r_max = 3;
  Int level_min = 1;
  Int level_max = 3;
  int genus_min = 1;
  int genus_max = 3;
  int max_points = 3;
  int weyl_translation_box = 1;  // box {-b..b}^{r-1} for W_aff sampling
  int max_rank = AlgebraCtx::kDefaultMaxRank;
  bool oracle_checks = true;            // numeric Verlinde cross-validation
  bool explore_non_root_lattice = true; // observe the bound outside its hypothesis
};

struct CaseRecord {
  std::string check;    // family, e.g. "theorem_bound"
  std::string inputs;   // human-readable key: (r, level, genus, weights, ...)
  std::string detail;
  bool ok = true;
  bool applicable = true;
};

struct SweepReport {
  long long cases_checked = 0;
  std::vector<CaseRecord> violations;
  std::vector<CaseRecord> bound_cases;  // theorem-bound records with margins
  std::map<std::string, long long> cases_by_check;
  double elapsed_seconds = 0;
  bool complete = true;

  bool ok() const { return violations.empty() && complete; }
  void count(const std::string& check);
  void record_violation(CaseRecord rec);
  /// Deterministic pretty-printed JSON (timing field excluded from ordering
  /// concerns; records are sorted).
  std::string to_json(const SweepConfig& config) const;
};

/// The weight mu' of the one-marking construction: with lambda = sum n_i
/// alpha_i, mu' = sum (n_i - n_{i-1}) omega_i.  Requires lambda in the root
/// lattice.
Weight prv_seed(const AlgebraCtx& ctx, const Weight& lambda);

/// The Coxeter-type word s_{r-1} s_{r-2} ... s_1 entering equation
/// lambda = mu' - w mu'.
WeylWord prv_seed_word(const AlgebraCtx& ctx);

/// Checks lambda = mu' - w(mu') exactly.
bool verify_eq3(const AlgebraCtx& ctx, const Weight& lambda,
                const Weight& mu_raw, const WeylWord& word);

/// Alcove partner mu = fold(mu') with V_mu contained in V_lambda (x)^F V_mu.
Weight prv_partner(const AlgebraCtx& ctx, const Weight& lambda);

/// Folds the weights into a single alcove representative, left to right:
/// mu_{k+1} = fold(mu_k + lambda_{k+1}).  Preserves the root-lattice class of
/// the total sum; the result occurs in the iterated fusion product.
Weight collapse_chain(FusionTable& table, std::span<const Weight> weights);

/// Asserts the PRV multiplicity for every supplied Weyl word.
SweepReport verify_prv(FusionTable& table, const Weight& lambda1,
                       const Weight& lambda2, std::span<const WeylWord> words);

struct BoundCheck {
  bool applicable = false;  // total weight in the root lattice
  bool holds = false;
  BigInt n;
  BigInt bound;
};

/// n_g(weights) >= |P_ell|^{g-1}; applicable only under the root-lattice
/// hypothesis.
BoundCheck verify_bound(BlockCache& cache, FusionTable& table, int genus,
                        std::span<const Weight> weights);

/// The chain around the collapsed weight: termwise n_0(L, nu, nu*) >=
/// n_0(collapsed, nu, nu*), then n_1(L) >= n_1(collapsed), then the
/// factorization identity sum_nu n_0(collapsed, nu, nu*) = n_1(collapsed).
bool verify_chain_inequalities(BlockCache& cache, FusionTable& table,
                               std::span<const Weight> weights,
                               const Weight& collapsed);

/// Exhaustive verification over the configured grid.  The hook, when set,
/// runs on each freshly built fusion table; sensitivity fixtures use it to
/// corrupt rows and confirm the sweep notices.
SweepReport run_sweep(const SweepConfig& config,
                      const std::function<void(FusionTable&)>& table_hook = {});

/// All finite Weyl words crossed with translations in {-box..box}^{r-1}.
std::vector<WeylWord> affine_word_box(const AlgebraCtx& ctx, int box);

/// Multisets of the given maximal size over the alcove, in canonical order.
std::vector<std::vector<Weight>> weight_multisets(const AlgebraCtx& ctx,
                                                  int max_points);

}  // namespace verlinde
