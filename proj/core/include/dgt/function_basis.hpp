#pragma once

#include <optional>
#include <vector>

#include "dgt/rational_poly.hpp"

namespace dgt {

/// Polynomial with rational coefficients regarded as an element of C(I, R)
/// with the sup norm, I = [lo, hi] of nonzero length.
struct FunctionGenerator {
  RatPoly poly;
};

struct Interval {
  Rat lo, hi;
  Interval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (!(lo < hi)) throw std::invalid_argument("Interval: need lo < hi");
  }
  bool contains_integer() const;
};

/// Certified upper bound for sup_{t in I} |p(t)| (coefficient-sum bound).
Rat sup_bound(const RatPoly& p, const Interval& iv);

/// Certified Lipschitz constant of p on I (bound on |p'|).
Rat lipschitz_bound(const RatPoly& p, const Interval& iv);

/// A certified positive lower bound K for min over the l1-sphere of
/// || sum lambda_i f_i ||_sup, obtained by grid sampling plus a Lipschitz
/// slack term. Fails (nullopt) when the grid is too coarse to certify
/// positivity; callers refine. Requires the f_i linearly independent.
///
/// Any family {e_i} with ||e_i - f_i|| <= K/2 is then linearly independent.
std::optional<Rat> lemma42_constant(const std::vector<RatPoly>& fs, const Interval& iv,
                                    unsigned sphere_denom, unsigned t_samples);

/// Integer-coefficient combination of the generators within eps of the target
/// in sup norm on I, found by bounded search (rounded least squares plus
/// greedy integer repair). The certified error adds Lipschitz slack to a
/// fine-grid maximum. Requires that I contain no integers.
struct ApproximationResult {
  std::vector<Int> coefficients;  // one per generator
  RatPoly combination;
  Rat certified_error;
};

struct ApproximationFailure {
  Int height_cap;
  std::size_t degree_cap;
  Rat best_error;
};

/// Returns the combination or the caps that were exhausted.
std::optional<ApproximationResult> approximate_in_span(
    const RatPoly& target, const std::vector<RatPoly>& gens, const Interval& iv,
    const Rat& eps, const Int& height_cap, ApproximationFailure* failure = nullptr);

/// The monomial generators {1, x, ..., x^degree} as a generator list.
std::vector<RatPoly> monomial_generators(std::size_t degree);

}  // namespace dgt
