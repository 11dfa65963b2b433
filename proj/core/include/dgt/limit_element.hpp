#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgt/sequence.hpp"

namespace dgt {

enum class Truth { True, False, Unknown };

const char* to_string(Truth t);

/// Stabilization witness: stage k and the exact product f * p_{n+1} ... p_k,
/// which is coefficientwise nonnegative.
struct PositivityCertificate {
  std::size_t stage = 0;
  LaurentPoly product;
};

/// Exact trace with value incompatible with the claimed positivity.
struct TraceWitness {
  enum class Kind { Point, Zero, Infty };
  Kind kind = Kind::Point;
  Rat point;  // meaningful for Kind::Point
  Rat value;
};

/// Three-valued semi-decision result with an exact certificate.
struct Verdict {
  Truth value = Truth::Unknown;
  std::optional<PositivityCertificate> positive_cert;
  std::optional<Int> multiplier;  // order-unit searches: the witnessing m
  std::optional<TraceWitness> trace_witness;
  std::optional<std::size_t> cap_reached;

  static Verdict yes() {
    Verdict v;
    v.value = Truth::True;
    return v;
  }
  static Verdict no() {
    Verdict v;
    v.value = Truth::False;
    return v;
  }
  static Verdict unknown(std::size_t cap) {
    Verdict v;
    v.value = Truth::Unknown;
    v.cap_reached = cap;
    return v;
  }
  bool is_true() const { return value == Truth::True; }
  bool is_false() const { return value == Truth::False; }
};

struct SearchCaps {
  std::size_t stage_cap = 64;
  Int multiplier_cap = 65536;
};

/// Element f/Q_n of the direct limit, with Log f contained in Log Q_n.
/// Instances are kept in canonical form: the stage is minimal among
/// equivalent representatives (trailing p_n factors are divided out).
class LimitElement {
 public:
  LimitElement(PolySequencePtr seq, LaurentPoly f, std::size_t stage);

  const PolySequencePtr& sequence() const { return seq_; }
  const LaurentPoly& numerator() const { return f_; }
  std::size_t stage() const { return stage_; }
  bool is_zero() const { return f_.is_zero(); }

  /// Numerator of this element re-represented at stage m >= stage().
  LaurentPoly numerator_at(std::size_t m) const;

  LimitElement operator+(const LimitElement& o) const;
  LimitElement operator-(const LimitElement& o) const;
  LimitElement operator*(const Int& s) const;
  LimitElement operator-() const;

 private:
  PolySequencePtr seq_;
  LaurentPoly f_;
  std::size_t stage_;
};

/// Validates the support condition Log f subset of Log Q_n and canonicalizes.
LimitElement make_element(PolySequencePtr seq, LaurentPoly f, std::size_t stage);

/// The order unit 1 = [1, 0].
LimitElement unit_element(PolySequencePtr seq);

/// Direct-limit equality (the connecting maps are injective).
bool elem_equal(const LimitElement& a, const LimitElement& b);

/// Semi-decides membership in the positive cone. True certificates carry the
/// stabilization stage and product; False certificates carry an exact
/// negative trace; Unknown reports the cap.
Verdict is_positive(const LimitElement& e, const SearchCaps& caps = {});

/// Semi-decides order-unit-ness: true iff m*e - 1 is positive for some
/// m <= multiplier_cap; false on any exact trace <= 0.
Verdict is_order_unit(const LimitElement& e, const SearchCaps& caps = {});

/// Exact point-evaluation trace f(t)/Q_n(t), t > 0.
Rat trace_point(const LimitElement& e, const Rat& t);

/// Endpoint traces: terminal / leading coefficient ratios.
Rat trace_zero(const LimitElement& e);
Rat trace_infty(const LimitElement& e);

struct TraceRange {
  std::vector<Int> multipliers;       // first N multipliers of the rank-1 limit
  std::optional<bool> dense;          // exact for periodic tails
  bool prefix_relative = false;       // finite data: verdicts relative to prefix
};

TraceRange trace_range_zero(const PolySequence& seq, std::size_t n);
TraceRange trace_range_infty(const PolySequence& seq, std::size_t n);

/// True iff e vanishes under every trace; here that means f = 0, so the
/// limit group has no nonzero infinitesimals.
bool infinitesimal_test(const LimitElement& e);

/// Deterministic positive rational probe points used for trace witnesses.
const std::vector<Rat>& trace_probe_points();

}  // namespace dgt
