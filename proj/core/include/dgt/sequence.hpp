#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dgt/laurent.hpp"

namespace dgt {

/// Defining data (p_1, p_2, ...) of a polynomial direct limit, stored as a
/// finite prefix plus either a periodic tail or nothing (truncated data; tail
/// conditions then become prefix-relative). Entries are indexed from 1.
///
/// Every entry must be a nonzero polynomial with nonnegative coefficients and
/// at least two terms.
class PolySequence {
 public:
  struct Periodic {
    std::vector<LaurentPoly> period;
  };

  PolySequence(std::vector<LaurentPoly> prefix, std::optional<Periodic> tail);

  static PolySequence constant(const LaurentPoly& p) {
    return PolySequence({}, Periodic{{p}});
  }

  static PolySequence finite(std::vector<LaurentPoly> entries) {
    return PolySequence(std::move(entries), std::nullopt);
  }

  bool is_periodic() const { return tail_.has_value(); }

  /// Number of materialized prefix entries (for finite data, all of them).
  std::size_t prefix_size() const { return prefix_.size(); }

  const std::vector<LaurentPoly>& prefix() const { return prefix_; }

  const std::vector<LaurentPoly>& period() const {
    if (!tail_) throw std::logic_error("PolySequence: no periodic tail");
    return tail_->period;
  }

  /// Highest index i for which p_i is defined (entries from 1); periodic
  /// sequences have no bound.
  std::optional<std::size_t> max_index() const {
    if (tail_) return std::nullopt;
    return prefix_.size();
  }

  /// p_i, 1-indexed.
  const LaurentPoly& entry(std::size_t i) const;

  /// p_i shifted so min Log = 0.
  const LaurentPoly& entry_normalized(std::size_t i) const;

  bool is_normalized() const;  // every entry has min Log = 0

  PolySequence normalized() const;

  /// Q_n = p_1 * ... * p_n (Q_0 = 1); results are cached. Safe for concurrent
  /// callers: the fill is idempotent and guarded.
  const LaurentPoly& q_product(std::size_t n) const;

  bool operator==(const PolySequence& o) const;

 private:
  const LaurentPoly& entry_storage(std::size_t i) const;

  struct QCache {
    std::mutex mutex;
    std::deque<LaurentPoly> values;  // values[n] = Q_n; deque keeps references
                                     // stable while readers hold them
  };

  std::vector<LaurentPoly> prefix_;
  std::optional<Periodic> tail_;
  std::vector<LaurentPoly> normalized_prefix_;
  std::vector<LaurentPoly> normalized_period_;
  std::shared_ptr<QCache> cache_;  // shared between copies; fill is idempotent
};

using PolySequencePtr = std::shared_ptr<const PolySequence>;

}  // namespace dgt
