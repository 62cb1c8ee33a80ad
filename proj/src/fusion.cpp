#include "verlinde/fusion.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace verlinde {

namespace {

bool pair_less(const std::pair<Weight, Weight>& x,
               const std::pair<Weight, Weight>& y) {
  WeightLess less;
  if (less(x.first, y.first)) return true;
  if (less(y.first, x.first)) return false;
  return less(x.second, y.second);
}

}  // namespace

FusionTable::FusionTable(AlgebraCtx ctx)
    : ctx_(std::move(ctx)), rows_(&pair_less) {}

const std::vector<Weight>& FusionTable::alcove() {
  std::lock_guard lock(mutex_);
  if (alcove_.empty()) alcove_ = enumerate_alcove(ctx_);
  return alcove_;
}

void FusionTable::check_admissible(const Weight& w) const {
  if (w.num_labels() != ctx_.n())
    throw std::invalid_argument("fusion: rank mismatch for weight " +
                                verlinde::to_string(w));
  if (!level_admissible(ctx_, w))
    throw std::invalid_argument("fusion: weight " + verlinde::to_string(w) +
                                " is not level-admissible");
}

std::shared_ptr<const FusionTable::Row> FusionTable::compute_row(
    const Weight& lambda, const Weight& mu) const {
  // Kac-Walton: fold each classical tensor component across the shifted
  // affine walls, discard wall terms, accumulate signs.
  const DecompList classical = tensor_decompose(ctx_, lambda, mu, &chars_);
  auto row = std::make_shared<Row>();
  for (const auto& [nu, c] : classical.terms) {
    const FoldResult fr = fold_shifted(ctx_, nu);
    if (fr.on_wall) continue;
    (*row)[fr.rep] += fr.sign * c;
  }
  for (auto it = row->begin(); it != row->end();) {
    assert(it->second >= 0);
    it = it->second == 0 ? row->erase(it) : std::next(it);
  }
  return row;
}

std::shared_ptr<const FusionTable::Row> FusionTable::product(
    const Weight& lambda, const Weight& mu) {
  check_admissible(lambda);
  check_admissible(mu);
  std::pair<Weight, Weight> key(lambda, mu);
  if (WeightLess{}(key.second, key.first)) std::swap(key.first, key.second);
  {
    std::lock_guard lock(mutex_);
    auto it = rows_.find(key);
    if (it != rows_.end()) return it->second;
  }
  auto row = compute_row(key.first, key.second);
  std::lock_guard lock(mutex_);
  return rows_.try_emplace(std::move(key), std::move(row)).first->second;
}

BigInt FusionTable::fusion_coeff(const Weight& lambda, const Weight& mu,
                                 const Weight& nu) {
  check_admissible(nu);
  const auto row = product(lambda, mu);
  auto it = row->find(nu);
  return it == row->end() ? BigInt(0) : it->second;
}

BigInt FusionTable::n0_threept(const Weight& lambda, const Weight& mu,
                               const Weight& nu) {
  return fusion_coeff(lambda, mu, dual(nu));
}

FusionTable::Row FusionTable::fuse_multiset(std::span<const Weight> weights) {
  Row acc;
  acc[Weight::zero(ctx_.r())] = 1;
  for (const Weight& w : weights) {
    Row next;
    for (const auto& [sigma, c] : acc) {
      const auto row = product(sigma, w);
      for (const auto& [nu, d] : *row) next[nu] += c * d;
    }
    acc = std::move(next);
  }
  return acc;
}

void FusionTable::override_product(const Weight& lambda, const Weight& mu,
                                   Row row) {
  std::pair<Weight, Weight> key(lambda, mu);
  if (WeightLess{}(key.second, key.first)) std::swap(key.first, key.second);
  std::lock_guard lock(mutex_);
  rows_[key] = std::make_shared<const Row>(std::move(row));
}

int SMatrix::idx(const Weight& w) const {
  auto it = index.find(w);
  if (it == index.end())
    throw std::invalid_argument("smatrix: weight " + verlinde::to_string(w) +
                                " is not in the alcove basis");
  return it->second;
}

namespace {

using LongComplex = std::complex<long double>;
using LongCMatrix =
    Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// exp(2 pi i sum_p sum_q / (r kappa)) * det(exp(-2 pi i p_j q_k / kappa)).
// The Weyl group of sl(r) permutes partition coordinates, so the alternating
// Kac-Peterson sum is this determinant, and the prefactor restores the
// trace-free part of the inner product.
LongComplex smatrix_raw(int r, Int kappa, const LabelVec& p,
                        const LabelVec& q) {
  LongCMatrix m(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      const long double arg = -kTwoPi *
                              static_cast<long double>(p[j] % kappa) *
                              static_cast<long double>(q[k] % kappa) / kappa;
      m(j, k) = LongComplex(std::cos(arg), std::sin(arg));
    }
  const long double phase =
      kTwoPi * static_cast<long double>(p.sum()) *
      static_cast<long double>(q.sum()) / (static_cast<long double>(r) * kappa);
  return LongComplex(std::cos(phase), std::sin(phase)) * m.determinant();
}

}  // namespace

SMatrix build_smatrix(const AlgebraCtx& ctx, std::size_t alcove_cap) {
  SMatrix sm;
  sm.kappa = ctx.kappa();
  sm.basis = enumerate_alcove(ctx, alcove_cap);
  const int size = static_cast<int>(sm.basis.size());
  for (int i = 0; i < size; ++i) sm.index.emplace(sm.basis[i], i);

  std::vector<LabelVec> shifted;
  shifted.reserve(size);
  for (const Weight& w : sm.basis)
    shifted.push_back(partition_coords(w + ctx.rho()));

  LongCMatrix raw(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      raw(i, j) = smatrix_raw(ctx.r(), sm.kappa, shifted[i], shifted[j]);
      raw(j, i) = raw(i, j);
    }

  // The raw matrix is proportional to the S-matrix; unitarity fixes the
  // modulus of the constant (row norm) and S_00 > 0 fixes its phase.
  long double norm0 = 0;
  for (int j = 0; j < size; ++j) norm0 += std::norm(raw(0, j));
  norm0 = std::sqrt(norm0);
  const LongComplex c =
      std::abs(raw(0, 0)) / (raw(0, 0) * norm0);

  sm.entries.resize(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const LongComplex v = c * raw(i, j);
      sm.entries(i, j) = std::complex<double>(static_cast<double>(v.real()),
                                              static_cast<double>(v.imag()));
    }

  if (smatrix_unitarity_defect(sm) > 1e-9)
    throw std::runtime_error("build_smatrix: unitarity defect above 1e-9");
  if (smatrix_symmetry_defect(sm) > 1e-9)
    throw std::runtime_error("build_smatrix: symmetry defect above 1e-9");
  for (int j = 0; j < size; ++j) {
    const std::complex<double> v = sm.entries(0, j);
    if (std::abs(v.imag()) > 1e-9 || v.real() <= 0)
      throw std::runtime_error(
          "build_smatrix: vacuum row is not real positive");
  }
  return sm;
}

double smatrix_unitarity_defect(const SMatrix& sm) {
  const auto& s = sm.entries;
  return (s * s.adjoint() -
          Eigen::MatrixXcd::Identity(s.rows(), s.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double smatrix_symmetry_defect(const SMatrix& sm) {
  return (sm.entries - sm.entries.transpose()).cwiseAbs().maxCoeff();
}

double smatrix_character_deviation(const AlgebraCtx& ctx, const SMatrix& sm,
                                   CharacterCache* cache,
                                   std::size_t max_pairs) {
  CharacterCache local(1000);
  if (!cache) cache = &local;
  const int size = static_cast<int>(sm.basis.size());
  const std::size_t total = static_cast<std::size_t>(size) * size;
  const std::size_t stride = total <= max_pairs ? 1 : total / max_pairs + 1;

  const long double r = ctx.r();
  double worst = 0;
  std::size_t flat = 0;
  for (int i = 0; i < size; ++i) {
    std::shared_ptr<const Character> ch;
    for (int j = 0; j < size; ++j, ++flat) {
      if (flat % stride != 0) continue;
      if (!ch) ch = cache->get(ctx, sm.basis[i]);
      const LabelVec q = partition_coords(sm.basis[j] + ctx.rho());
      const long double qsum = static_cast<long double>(q.sum());
      LongComplex chi(0, 0);
      for (const auto& [delta, m] : ch->mults) {
        const LabelVec p = partition_coords(delta);
        // (delta, mu + rho) = p . q - (sum p)(sum q)/r in partition coords.
        long double inner = -static_cast<long double>(p.sum()) * qsum / r;
        for (int k = 0; k < q.size(); ++k)
          inner += static_cast<long double>(p[k]) *
                   static_cast<long double>(q[k]);
        const long double arg = -kTwoPi * inner / sm.kappa;
        chi += static_cast<long double>(m) *
               LongComplex(std::cos(arg), std::sin(arg));
      }
      const std::complex<double> ratio = sm.entries(i, j) / sm.entries(0, j);
      worst = std::max(worst,
                       std::abs(ratio - std::complex<double>(
                                            static_cast<double>(chi.real()),
                                            static_cast<double>(chi.imag()))));
    }
  }
  return worst;
}

BigInt fusion_coeff_numeric(const SMatrix& sm, const Weight& lambda,
                            const Weight& mu, const Weight& nu, double tol) {
  const int il = sm.idx(lambda), im = sm.idx(mu), in = sm.idx(nu);
  std::complex<double> sum = 0;
  for (int s = 0; s < sm.entries.cols(); ++s)
    sum += sm.entries(il, s) * sm.entries(im, s) * sm.entries(in, s) /
           sm.entries(0, s);
  const double rounded = std::round(sum.real());
  if (std::abs(sum.real() - rounded) > tol || std::abs(sum.imag()) > tol ||
      rounded < 0)
    throw std::runtime_error(
        "fusion_coeff_numeric: sum " + std::to_string(sum.real()) + "+" +
        std::to_string(sum.imag()) + "i is not integral within tolerance");
  return BigInt(static_cast<long long>(rounded));
}

}  // namespace verlinde
