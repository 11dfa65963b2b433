#include "dgt/matrix_system.hpp"

namespace dgt {

namespace {

void validate_matrix(const IntMat& a) {
  if (a.empty()) throw std::invalid_argument("MatrixSystem: empty matrix");
  std::size_t cols = a[0].size();
  if (cols == 0) throw std::invalid_argument("MatrixSystem: matrix with no columns");
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("MatrixSystem: ragged matrix");
    for (const auto& v : row)
      if (v < 0) throw std::invalid_argument("MatrixSystem: negative entry");
  }
}

void validate_chain(const std::vector<IntMat>& ms) {
  for (std::size_t i = 0; i + 1 < ms.size(); ++i)
    if (ms[i + 1][0].size() != ms[i].size())
      throw std::invalid_argument("MatrixSystem: dimension mismatch between stages");
}

}  // namespace

MatrixSystem::MatrixSystem(std::vector<IntMat> prefix, std::vector<IntMat> period,
                           bool strict_ordering)
    : prefix_(std::move(prefix)), period_(std::move(period)), strict_(strict_ordering) {
  if (prefix_.empty() && period_.empty())
    throw std::invalid_argument("MatrixSystem: no matrices");
  for (const auto& m : prefix_) validate_matrix(m);
  for (const auto& m : period_) validate_matrix(m);
  std::vector<IntMat> all = prefix_;
  all.insert(all.end(), period_.begin(), period_.end());
  validate_chain(all);
  if (!period_.empty()) {
    // the period must close up on itself
    if (period_.back().size() != period_.front()[0].size())
      throw std::invalid_argument("MatrixSystem: period does not close");
    if (!prefix_.empty() && period_.front()[0].size() != prefix_.back().size())
      throw std::invalid_argument("MatrixSystem: prefix/period dimension mismatch");
  }
}

const IntMat& MatrixSystem::matrix(std::size_t n) const {
  if (n == 0) throw std::out_of_range("MatrixSystem: matrices are 1-indexed");
  if (n <= prefix_.size()) return prefix_[n - 1];
  if (period_.empty()) throw std::out_of_range("MatrixSystem: index beyond finite data");
  return period_[(n - prefix_.size() - 1) % period_.size()];
}

std::optional<std::size_t> MatrixSystem::max_index() const {
  if (!period_.empty()) return std::nullopt;
  return prefix_.size();
}

std::size_t MatrixSystem::dim_at(std::size_t n) const {
  if (n == 0) return matrix(1)[0].size();
  return matrix(n).size();
}

MatrixSystem MatrixSystem::divisible_rescale(const Int& p) const {
  if (p <= 1) throw std::invalid_argument("divisible_rescale: requires p > 1");
  MatrixSystem r = *this;
  r.strict_ = true;
  r.denominator_ *= p;
  return r;
}

void MatrixSystem::require_no_zero_rows() const {
  auto check = [](const IntMat& a) {
    for (const auto& row : a) {
      bool nonzero = false;
      for (const auto& v : row) nonzero |= (v != 0);
      if (!nonzero) throw std::invalid_argument("MatrixSystem: zero row present");
    }
  };
  for (const auto& m : prefix_) check(m);
  for (const auto& m : period_) check(m);
}

IntVec apply_matrix(const IntMat& a, const IntVec& v) {
  if (a[0].size() != v.size())
    throw std::invalid_argument("apply_matrix: dimension mismatch");
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

namespace {

bool all_nonneg(const IntVec& v) {
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

bool all_positive(const IntVec& v) {
  for (const auto& x : v)
    if (x <= 0) return false;
  return true;
}

MatrixVerdict push_until(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                         std::size_t cap, bool strict) {
  if (g.size() != sys.dim_at(n))
    throw std::invalid_argument("matrix verdict: vector dimension mismatch");
  std::size_t hi = std::max(n, cap);
  if (auto mx = sys.max_index()) hi = std::min(hi, *mx);
  IntVec cur = g;
  for (std::size_t k = n;; ++k) {
    if (strict ? all_positive(cur) : all_nonneg(cur)) {
      MatrixVerdict v;
      v.value = Truth::True;
      v.cert = MatrixCertificate{k, cur};
      return v;
    }
    if (k >= hi) break;
    cur = apply_matrix(sys.matrix(k + 1), cur);
  }
  MatrixVerdict v;
  v.value = Truth::Unknown;
  v.cap_reached = hi;
  return v;
}

}  // namespace

MatrixVerdict matrix_positive(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                              std::size_t cap) {
  return push_until(sys, g, n, cap, sys.strict_ordering());
}

MatrixVerdict matrix_order_unit(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                                std::size_t cap) {
  bool zero = true;
  for (const auto& x : g) zero &= (x == 0);
  if (zero) {
    MatrixVerdict v;
    v.value = Truth::False;
    return v;
  }
  sys.require_no_zero_rows();
  return push_until(sys, g, n, cap, /*strict=*/true);
}

MatrixVerdict simplified_positive(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                                  std::size_t cap) {
  bool zero = true;
  for (const auto& x : g) zero &= (x == 0);
  if (zero) {
    MatrixVerdict v;
    v.value = Truth::True;
    v.cert = MatrixCertificate{n, g};
    return v;
  }
  return matrix_order_unit(sys, g, n, cap);
}

}  // namespace dgt
