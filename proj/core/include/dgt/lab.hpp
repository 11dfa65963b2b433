#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgt/symbolic.hpp"

namespace dgt {

/// Inexact small-combination search over the numeric shadows: a nonzero
/// integer combination with all |coefficient| <= bound and sup-norm below
/// threshold, found by meet-in-the-middle enumeration (exhaustive within the
/// bound). Results are flagged numeric and never feed exact verdicts.
struct CombinationWitness {
  std::vector<long long> coefficients;
  double norm = 0.0;
};

std::optional<CombinationWitness> min_norm_witness(const std::vector<SymbolicVector>& gens,
                                                   long long bound, double threshold);

/// Numeric box-cover density check: every point of an eps/2 grid on the box
/// must be within eps of some integer combination with coefficients bounded
/// by word_bound.
struct DensityResult {
  bool dense = false;
  bool inexact = true;  // always: shadow-based
  std::vector<double> worst_point;
  double worst_distance = 0.0;
};

DensityResult density_check(const std::vector<SymbolicVector>& gens,
                            const std::vector<std::pair<Rat, Rat>>& box, const Rat& eps,
                            long long word_bound);

/// Verification of a user-proposed split H = K + F per the decomposition of
/// finite-rank subgroups into a dense part and a discrete free part.
struct SplitReport {
  bool generates = false;        // span_Z(K u F) == span_Z(H), exact
  bool f_discrete = false;       // exact
  bool disjoint = false;         // K n F = 0, exact
  bool k_dense_in_span = false;  // numeric, inexact
  bool valid = false;
  std::string detail;
};

SplitReport verify_split(const std::vector<SymbolicVector>& h_gens,
                         const std::vector<SymbolicVector>& k_gens,
                         const std::vector<SymbolicVector>& f_gens);

/// First n generators x_i = (alpha^i, 2^-i) with alpha a declared
/// transcendental (shadow supplied), i = 0..n-1.
std::vector<SymbolicVector> build_example_2_4(std::size_t n, double alpha_shadow);

/// Critical group Z^m + theta*Z with theta = (beta_1, ..., beta_m)
/// transcendental; rank m+1, dense for suitable shadows.
std::vector<SymbolicVector> build_critical(std::size_t m, const std::vector<double>& theta_shadows);

/// Sampled refutation search for the rank-m discreteness property: draws
/// subgroups generated by at most m small integer combinations and tests each
/// exactly. "true" means no counterexample found within the budget.
struct AntiFdSampleReport {
  bool refuted = false;
  std::size_t samples_run = 0;
  std::vector<SymbolicVector> witness;  // non-discrete sample, when refuted
};

AntiFdSampleReport antifd_m_check(const std::vector<SymbolicVector>& gens, std::size_t m,
                                  std::size_t sample_budget, std::uint64_t seed = 12345);

}  // namespace dgt
