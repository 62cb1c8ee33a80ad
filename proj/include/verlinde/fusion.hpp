#pragma once

#include "verlinde/reps.hpp"

#include <complex>
#include <span>
#include <unordered_map>

namespace verlinde {

/// Structure constants N_{lm}^nu of the level-ell fusion ring R_ell(sl(r)),
/// computed by Kac-Walton signed folding of classical tensor components and
/// memoized per (lambda, mu) row.  Rows fill idempotently, so the table is
/// safe for concurrent readers and writers.
class FusionTable {
 public:
  using Row = WeightMap;  // dominant alcove weight -> coefficient

  explicit FusionTable(AlgebraCtx ctx);

  const AlgebraCtx& ctx() const { return ctx_; }

  /// P_ell in canonical order, enumerated once.
  const std::vector<Weight>& alcove();

  /// The full product V_lambda (x)^F V_mu as a coefficient row.
  std::shared_ptr<const Row> product(const Weight& lambda, const Weight& mu);

  /// N_{lm}^nu; nonnegative.
  BigInt fusion_coeff(const Weight& lambda, const Weight& mu, const Weight& nu);

  /// n_0(lambda, mu, nu) = N_{lm}^{nu*}; fully symmetric in its arguments.
  BigInt n0_threept(const Weight& lambda, const Weight& mu, const Weight& nu);

  /// Iterated fusion product, left to right; the empty product is the unit.
  Row fuse_multiset(std::span<const Weight> weights);

  /// Replaces a memoized row.  Diagnostic hook for harness sensitivity
  /// fixtures; never used by the engine itself.
  void override_product(const Weight& lambda, const Weight& mu, Row row);

 private:
  std::shared_ptr<const Row> compute_row(const Weight& lambda,
                                         const Weight& mu) const;
  void check_admissible(const Weight& w) const;

  AlgebraCtx ctx_;
  mutable CharacterCache chars_;
  std::mutex mutex_;
  std::vector<Weight> alcove_;  // filled on first use under mutex_
  std::map<std::pair<Weight, Weight>,
           std::shared_ptr<const Row>,
           bool (*)(const std::pair<Weight, Weight>&,
                    const std::pair<Weight, Weight>&)>
      rows_;
};

/// The modular S-matrix of sl(r) at level ell, indexed by the alcove in
/// canonical order.  Double precision; unitary and symmetric within 1e-9 by
/// construction (verified at build time).  Used strictly as a
/// cross-validation oracle for the exact engine.
struct SMatrix {
  Eigen::MatrixXcd entries;
  Int kappa = 0;
  std::vector<Weight> basis;
  std::unordered_map<Weight, int, WeightHash> index;

  int idx(const Weight& w) const;
  std::complex<double> at(const Weight& lambda, const Weight& mu) const {
    return entries(idx(lambda), idx(mu));
  }
};

/// Kac-Peterson sum S_{lm} ~ sum_w det(w) exp(-2 pi i (w(l+rho), m+rho) /
/// kappa), evaluated as an r x r determinant; the overall constant is fixed
/// by unitarity and S_00 > 0.
SMatrix build_smatrix(const AlgebraCtx& ctx, std::size_t alcove_cap = 10'000);

double smatrix_unitarity_defect(const SMatrix& sm);
double smatrix_symmetry_defect(const SMatrix& sm);

/// Second route to the same matrix: S_{lm} / S_{0m} must equal the character
/// of V_lambda at the torus element determined by (mu + rho) / kappa.
/// Returns the maximal deviation over all (or max_pairs sampled) pairs.
double smatrix_character_deviation(const AlgebraCtx& ctx, const SMatrix& sm,
                                   CharacterCache* cache = nullptr,
                                   std::size_t max_pairs = 250'000);

/// Genus-0 three-point Verlinde sum n_0(l, m, n) = sum_s S_{ls} S_{ms} S_{ns}
/// / S_{0s}, rounded; deviations beyond tol signal a defect and throw.
BigInt fusion_coeff_numeric(const SMatrix& sm, const Weight& lambda,
                            const Weight& mu, const Weight& nu,
                            double tol = 1e-6);

}  // namespace verlinde
