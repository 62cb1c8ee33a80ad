#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace verlinde {

using Int = std::int64_t;
using LabelVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Thrown when a configured resource cap (rank, alcove size, ...) is hit.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integral sl(r) weight in Dynkin-label coordinates a_i = lambda(H_{alpha_i}).
/// Labels may be negative for non-dominant weights.
struct Weight {
  LabelVec a;

  Weight() = default;
  explicit Weight(LabelVec labels) : a(std::move(labels)) {}

  /// The zero weight of SL(r).
  static Weight zero(int r) { return Weight(LabelVec::Zero(r - 1)); }

  /// r of the ambient SL(r); the label vector has r-1 entries.
  int r() const { return static_cast<int>(a.size()) + 1; }
  int num_labels() const { return static_cast<int>(a.size()); }

  bool is_zero() const { return a.isZero(0); }

  friend bool operator==(const Weight& x, const Weight& y) {
    return x.a.size() == y.a.size() && x.a == y.a;
  }
  friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }

  friend Weight operator+(const Weight& x, const Weight& y) {
    return Weight(x.a + y.a);
  }
  friend Weight operator-(const Weight& x, const Weight& y) {
    return Weight(x.a - y.a);
  }
  friend Weight operator-(const Weight& x) { return Weight(-x.a); }
};

/// Canonical alcove order: labels compared from the last index down, so the
/// first label varies fastest.  All table layouts, reports and memo keys use
/// this order.
struct WeightLess {
  bool operator()(const Weight& x, const Weight& y) const {
    if (x.a.size() != y.a.size()) return x.a.size() < y.a.size();
    for (Eigen::Index i = x.a.size() - 1; i >= 0; --i) {
      if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
    }
    return false;
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(w.a.size()));
    for (Eigen::Index i = 0; i < w.a.size(); ++i)
      mix(static_cast<std::uint64_t>(w.a[i]));
    return h;
  }
};

/// Exact rational coordinates n_i in lambda = sum_i n_i alpha_i, stored as
/// num/den with den > 0 and the fraction vector reduced by the common gcd.
struct RootCoords {
  LabelVec num;
  Int den = 1;

  bool integral() const { return den == 1; }
};

/// Immutable Cartan data for sl(r) at level ell.  Cheap to copy and safe to
/// share across threads; every operation in the library is a pure function
/// of a context plus weights.
class AlgebraCtx {
 public:
  static constexpr int kDefaultMaxRank = 8;

  AlgebraCtx(int r, Int level, int max_rank = kDefaultMaxRank);

  int r() const { return r_; }
  /// Number of Dynkin labels / simple roots, r - 1.
  int n() const { return r_ - 1; }
  Int level() const { return level_; }
  /// Shifted level kappa = ell + r entering the Kac-Walton fold.
  Int kappa() const { return level_ + r_; }

  const IntMatrix& cartan() const { return cartan_; }
  /// Numerator of the exact inverse Cartan matrix; the denominator is r.
  const IntMatrix& cartan_inv_num() const { return cartan_inv_num_; }
  Int cartan_inv_den() const { return r_; }

  const Weight& rho() const { return rho_; }
  /// Highest root theta in the omega-basis: (1,0,...,0,1), or (2) for r = 2.
  const Weight& theta() const { return theta_; }

  /// Positive roots alpha_lo + ... + alpha_hi as 1-based inclusive intervals,
  /// ordered by (lo, hi).
  const std::vector<std::pair<int, int>>& positive_roots() const {
    return positive_roots_;
  }
  Weight root_labels(int lo, int hi) const;

 private:
  int r_;
  Int level_;
  IntMatrix cartan_;
  IntMatrix cartan_inv_num_;
  Weight rho_;
  Weight theta_;
  std::vector<std::pair<int, int>> positive_roots_;
};

/// lambda(H_theta) = sum of labels; all comarks of sl(r) equal 1.
inline Int theta_pairing(const Weight& w) { return w.a.sum(); }

inline bool is_dominant(const Weight& w) { return (w.a.array() >= 0).all(); }

/// Dominant and theta_pairing <= ell: membership in P_ell(SL(r)).
inline bool level_admissible(const AlgebraCtx& ctx, const Weight& w) {
  return is_dominant(w) && theta_pairing(w) <= ctx.level();
}

/// All of P_ell(SL(r)) in canonical order.  Throws cap_exceeded when the
/// count would exceed `cap` entries.
std::vector<Weight> enumerate_alcove(const AlgebraCtx& ctx,
                                     std::size_t cap = 10'000'000);

/// Cardinality of P_ell(SL(r)) = binomial(ell + r - 1, r - 1), saturated at
/// the largest std::size_t on overflow.
std::size_t alcove_cardinality(int r, Int level);

/// lambda* = -w0 lambda: label reversal for sl(r).
Weight dual(const Weight& w);

/// Exact change of basis to root coordinates: coords = A^{-1} labels.
RootCoords to_root_coords(const AlgebraCtx& ctx, const Weight& w);

/// True iff lambda lies in the root lattice (all root coordinates integral).
bool in_root_lattice(const AlgebraCtx& ctx, const Weight& w);

/// Z_r grading: sum_i i*a_i mod r, in [0, r).  Vanishes exactly on the root
/// lattice; kept as a redundant cross-check of in_root_lattice.
Int zr_charge(const Weight& w);

/// Coordinates p_k = a_k + a_{k+1} + ... + a_{r-1} (p_r = 0), length r.
/// The finite Weyl group acts on weights by permuting these.
LabelVec partition_coords(const Weight& w);

/// "1,0,2" rendering of the label vector.
std::string to_string(const Weight& w);
std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Parses "1,0,2"; enforces the label count when expected_labels >= 0.
Weight parse_weight(const std::string& text, int expected_labels = -1);

/// Parses a ";"-separated list of weights, e.g. "1,0;0,1".
std::vector<Weight> parse_weight_list(const std::string& text,
                                      int expected_labels = -1);

}  // namespace verlinde
