#pragma once

#include <optional>
#include <vector>

#include "dgt/limit_element.hpp"

namespace dgt {

using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;  // row-major, rows x cols

/// Direct limit of Z^{k(n)} along nonnegative integer matrices A_n of shape
/// k(n+1) x k(n). A finite prefix of matrices may be followed by a periodic
/// block; positivity questions beyond materialized data are capped.
class MatrixSystem {
 public:
  MatrixSystem(std::vector<IntMat> prefix, std::vector<IntMat> period,
               bool strict_ordering = false);

  /// A_n, 1-indexed; maps stage n-1 vectors to stage n vectors.
  const IntMat& matrix(std::size_t n) const;

  std::optional<std::size_t> max_index() const;

  /// Coordinate dimension at stage n (n = 0 is the domain of A_1).
  std::size_t dim_at(std::size_t n) const;

  bool strict_ordering() const { return strict_; }

  /// Cor 1.4 rescaling: coordinates move to Z[1/p]; the ordering becomes the
  /// strict (simplified) one. Purely structural.
  MatrixSystem divisible_rescale(const Int& p) const;

  /// Product of the denominators introduced by divisible_rescale (1 if none).
  const Int& denominator_module() const { return denominator_; }

  /// Requires no zero rows (order-unit transport needs them deleted).
  void require_no_zero_rows() const;

 private:
  std::vector<IntMat> prefix_;
  std::vector<IntMat> period_;
  bool strict_ = false;
  Int denominator_ = 1;
};

/// Pushforward certificate: the stage reached and the exact image vector.
struct MatrixCertificate {
  std::size_t stage = 0;
  IntVec image;
};

struct MatrixVerdict {
  Truth value = Truth::Unknown;
  std::optional<MatrixCertificate> cert;
  std::optional<std::size_t> cap_reached;
};

/// Semi-decides g >= 0 at stage n in the limit order: some pushforward
/// A_m ... A_{n+1} g is entrywise nonnegative.
MatrixVerdict matrix_positive(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                              std::size_t cap);

/// Semi-decides order-unit-ness: some pushforward is entrywise positive.
/// The zero vector is never an order unit.
MatrixVerdict matrix_order_unit(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                                std::size_t cap);

/// Positivity in the simplification: zero, or an order unit.
MatrixVerdict simplified_positive(const MatrixSystem& sys, const IntVec& g, std::size_t n,
                                  std::size_t cap);

IntVec apply_matrix(const IntMat& a, const IntVec& v);

}  // namespace dgt
