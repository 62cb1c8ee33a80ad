#include "verlinde/lie.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace verlinde {

AlgebraCtx::AlgebraCtx(int r, Int level, int max_rank) : r_(r), level_(level) {
  if (r < 2) throw std::invalid_argument("AlgebraCtx: r must be >= 2");
  if (max_rank < 2) throw std::invalid_argument("AlgebraCtx: max_rank must be >= 2");
  if (r > max_rank)
    throw cap_exceeded("AlgebraCtx: r = " + std::to_string(r) +
                       " exceeds the configured maximum " +
                       std::to_string(max_rank));
  if (level < 0) throw std::invalid_argument("AlgebraCtx: level must be >= 0");

  const int n = r - 1;
  cartan_ = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    cartan_(i, i) = 2;
    if (i > 0) cartan_(i, i - 1) = -1;
    if (i + 1 < n) cartan_(i, i + 1) = -1;
  }

  // (A^{-1})_{ij} = min(i,j) * (r - max(i,j)) / r for the A_{r-1} Cartan
  // matrix, with 1-based indices.
  cartan_inv_num_ = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cartan_inv_num_(i, j) =
          static_cast<Int>(std::min(i, j) + 1) * (r - (std::max(i, j) + 1));
  if (cartan_ * cartan_inv_num_ != IntMatrix::Identity(n, n) * Int(r))
    throw std::logic_error("AlgebraCtx: inverse Cartan self-check failed");

  rho_ = Weight(LabelVec::Ones(n));
  LabelVec th = LabelVec::Zero(n);
  if (n == 1) {
    th[0] = 2;
  } else {
    th[0] = 1;
    th[n - 1] = 1;
  }
  theta_ = Weight(std::move(th));

  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo; hi <= n; ++hi) positive_roots_.emplace_back(lo, hi);
}

Weight AlgebraCtx::root_labels(int lo, int hi) const {
  if (lo < 1 || hi < lo || hi > n())
    throw std::invalid_argument("root_labels: interval out of range");
  LabelVec labels = LabelVec::Zero(n());
  for (int k = lo; k <= hi; ++k) labels += cartan_.col(k - 1);
  return Weight(std::move(labels));
}

std::size_t alcove_cardinality(int r, Int level) {
  // binomial(level + r - 1, r - 1), computed factor by factor; each partial
  // product c * (level + i) is an exact multiple of i.
  const std::size_t sat = std::numeric_limits<std::size_t>::max();
  unsigned long long c = 1;
  for (int i = 1; i <= r - 1; ++i) {
    const unsigned long long num = static_cast<unsigned long long>(level) + i;
    if (c > sat / num) return sat;
    c = c * num / i;
  }
  return static_cast<std::size_t>(c);
}

namespace {

void enumerate_rec(int pos, int n, Int budget, LabelVec& cur,
                   std::vector<Weight>& out) {
  if (pos == n) {
    out.emplace_back(cur);
    return;
  }
  for (Int v = 0; v <= budget; ++v) {
    cur[pos] = v;
    enumerate_rec(pos + 1, n, budget - v, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Weight> enumerate_alcove(const AlgebraCtx& ctx, std::size_t cap) {
  const std::size_t count = alcove_cardinality(ctx.r(), ctx.level());
  if (count > cap)
    throw cap_exceeded("enumerate_alcove: P_ell has " + std::to_string(count) +
                       " elements, exceeding the cap " + std::to_string(cap));
  std::vector<Weight> out;
  out.reserve(count);
  LabelVec cur = LabelVec::Zero(ctx.n());
  enumerate_rec(0, ctx.n(), ctx.level(), cur, out);
  std::sort(out.begin(), out.end(), WeightLess{});
  return out;
}

Weight dual(const Weight& w) { return Weight(w.a.reverse()); }

RootCoords to_root_coords(const AlgebraCtx& ctx, const Weight& w) {
  if (w.num_labels() != ctx.n())
    throw std::invalid_argument("to_root_coords: rank mismatch");
  RootCoords rc;
  rc.num = ctx.cartan_inv_num() * w.a;
  rc.den = ctx.cartan_inv_den();
  Int g = rc.den;
  for (Eigen::Index i = 0; i < rc.num.size(); ++i)
    g = std::gcd(g, rc.num[i]);
  if (g > 1) {
    rc.num /= g;
    rc.den /= g;
  }
  return rc;
}

bool in_root_lattice(const AlgebraCtx& ctx, const Weight& w) {
  return to_root_coords(ctx, w).integral();
}

Int zr_charge(const Weight& w) {
  const Int r = w.r();
  Int c = 0;
  for (Eigen::Index i = 0; i < w.a.size(); ++i)
    c = (c + (i + 1) % r * ((w.a[i] % r + r) % r)) % r;
  return c;
}

LabelVec partition_coords(const Weight& w) {
  const int r = w.r();
  LabelVec p = LabelVec::Zero(r);
  for (int k = r - 2; k >= 0; --k) p[k] = p[k + 1] + w.a[k];
  return p;
}

std::string to_string(const Weight& w) {
  std::string s;
  for (Eigen::Index i = 0; i < w.a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.a[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << to_string(w);
}

namespace {

Int parse_int(std::string_view tok) {
  // trim
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
    tok.remove_prefix(1);
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t'))
    tok.remove_suffix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("malformed integer '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Weight parse_weight(const std::string& text, int expected_labels) {
  std::vector<Int> labels;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    labels.push_back(parse_int(
        std::string_view(text).substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (expected_labels >= 0 &&
      static_cast<int>(labels.size()) != expected_labels)
    throw std::invalid_argument(
        "weight '" + text + "' has " + std::to_string(labels.size()) +
        " labels, expected " + std::to_string(expected_labels));
  LabelVec v(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) v[i] = labels[i];
  return Weight(std::move(v));
}

std::vector<Weight> parse_weight_list(const std::string& text,
                                      int expected_labels) {
  std::vector<Weight> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    out.push_back(parse_weight(
        text.substr(start,
                    semi == std::string::npos ? std::string::npos : semi - start),
        expected_labels));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace verlinde
