#pragma once

#include <string>
#include <vector>

#include "dgt/function_basis.hpp"
#include "dgt/laurent.hpp"

namespace dgt {

/// The three mixed models Z[x] + M*(1-2x) with the strict ordering on
/// I = [1/3, 2/3], where M is Q, sqrt(2)Z, or Q[sqrt(2)].
enum class MixedModelKind { Q, Sqrt2Z, QSqrt2 };

const char* to_string(MixedModelKind k);

/// g + (q_rational + q_sqrt2 * sqrt(2)) * (1 - 2x).
struct MixedElement {
  LaurentPoly integer_part;  // g in Z[x]
  Rat q_rational;
  Rat q_sqrt2;
};

class MixedModel {
 public:
  explicit MixedModel(MixedModelKind kind) : kind_(kind) {}

  MixedModelKind kind() const { return kind_; }
  Interval interval() const { return Interval(Rat(1, 3), Rat(2, 3)); }

  /// Does the scalar q = q_rational + q_sqrt2*sqrt(2) lie in the model's
  /// scalar module?
  bool contains_scalar(const Rat& q_rational, const Rat& q_sqrt2) const;

  bool contains(const MixedElement& e) const;

  /// The element as a polynomial pair (A, B) meaning A + sqrt(2) B.
  std::pair<RatPoly, RatPoly> as_poly_pair(const MixedElement& e) const;

  /// Exact value at a rational point, as a pair (rational, sqrt2-coefficient).
  std::pair<Rat, Rat> value_at(const MixedElement& e, const Rat& t) const;

  /// Exact sign of A + sqrt(2) B for rationals A, B.
  static int sign_with_sqrt2(const Rat& a, const Rat& b);

  /// Exact strict positivity on I for elements with no sqrt(2) component
  /// (rational-coefficient polynomials). Elements with a sqrt(2) component
  /// are rejected: the built-in checks only need exact point values there.
  bool strictly_positive(const MixedElement& e) const;

 private:
  MixedModelKind kind_;
};

/// For sampled nonzero q, verifies that q*(1-2x) misses the strict positive
/// cone (it vanishes at 1/2 exactly), and that the order unit 1 is strictly
/// positive.
struct ConeMissReport {
  std::size_t samples = 0;
  bool all_missed = true;
  bool unit_positive = false;
};

ConeMissReport positive_cone_miss_check(const MixedModel& model, std::size_t samples,
                                        std::uint64_t seed = 2024);

/// Structural profile against the two subgroup conditions:
///   (a) every countable subgroup is free;
///   (b) every finitely generated subgroup is discrete.
struct ConditionProfile {
  bool cond_a = false;
  bool cond_b = false;
  std::string evidence_a;
  std::string evidence_b;
};

ConditionProfile condition_profile(const MixedModel& model);

/// Probe: is (1-2x)/n an element of the model?
bool divisibility_probe(const MixedModel& model, const Int& n);

}  // namespace dgt
