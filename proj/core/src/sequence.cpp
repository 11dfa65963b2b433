#include "dgt/sequence.hpp"

namespace dgt {

namespace {

void validate_entry(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("PolySequence: zero entry");
  if (!p.all_nonnegative())
    throw std::invalid_argument("PolySequence: entry with a negative coefficient");
  if (p.term_count() < 2)
    throw std::invalid_argument("PolySequence: entry needs at least two terms");
}

}  // namespace

PolySequence::PolySequence(std::vector<LaurentPoly> prefix, std::optional<Periodic> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_ && tail_->period.empty())
    throw std::invalid_argument("PolySequence: empty period");
  if (!tail_ && prefix_.empty())
    throw std::invalid_argument("PolySequence: no entries");
  for (const auto& p : prefix_) validate_entry(p);
  if (tail_)
    for (const auto& p : tail_->period) validate_entry(p);

  normalized_prefix_.reserve(prefix_.size());
  for (const auto& p : prefix_) normalized_prefix_.push_back(normalize_min_zero(p).first);
  if (tail_) {
    normalized_period_.reserve(tail_->period.size());
    for (const auto& p : tail_->period)
      normalized_period_.push_back(normalize_min_zero(p).first);
  }
  cache_ = std::make_shared<QCache>();
  cache_->values.push_back(LaurentPoly::one());
}

const LaurentPoly& PolySequence::entry_storage(std::size_t i) const {
  if (i == 0) throw std::out_of_range("PolySequence: entries are 1-indexed");
  if (i <= prefix_.size()) return prefix_[i - 1];
  if (!tail_) throw std::out_of_range("PolySequence: index beyond finite data");
  return tail_->period[(i - prefix_.size() - 1) % tail_->period.size()];
}

const LaurentPoly& PolySequence::entry(std::size_t i) const { return entry_storage(i); }

const LaurentPoly& PolySequence::entry_normalized(std::size_t i) const {
  if (i == 0) throw std::out_of_range("PolySequence: entries are 1-indexed");
  if (i <= prefix_.size()) return normalized_prefix_[i - 1];
  if (!tail_) throw std::out_of_range("PolySequence: index beyond finite data");
  return normalized_period_[(i - prefix_.size() - 1) % tail_->period.size()];
}

bool PolySequence::is_normalized() const {
  for (const auto& p : prefix_)
    if (p.min_exp() != 0) return false;
  if (tail_)
    for (const auto& p : tail_->period)
      if (p.min_exp() != 0) return false;
  return true;
}

PolySequence PolySequence::normalized() const {
  std::optional<Periodic> tail;
  if (tail_) tail = Periodic{normalized_period_};
  return PolySequence(normalized_prefix_, std::move(tail));
}

const LaurentPoly& PolySequence::q_product(std::size_t n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  while (cache_->values.size() <= n) {
    std::size_t next = cache_->values.size();
    cache_->values.push_back(cache_->values.back() * entry_storage(next));
  }
  return cache_->values[n];
}

bool PolySequence::operator==(const PolySequence& o) const {
  if (prefix_ != o.prefix_) return false;
  if (tail_.has_value() != o.tail_.has_value()) return false;
  if (tail_ && tail_->period != o.tail_->period) return false;
  return true;
}

}  // namespace dgt
