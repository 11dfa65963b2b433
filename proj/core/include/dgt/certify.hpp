#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgt/limit_element.hpp"

namespace dgt {

/// Verdict for one tail condition. Exact for periodic tails; finite data is
/// evaluated as if the listed entries formed the period, and flagged.
struct ConditionVerdict {
  bool holds = false;
  bool prefix_relative = false;
  std::vector<std::size_t> evidence;  // 1-based entry indices witnessing the condition
  std::string note;
};

struct DaggerVerdict {
  ConditionVerdict terminal;  // smallest-degree coefficient > 1 infinitely often
  ConditionVerdict leading;   // largest-degree coefficient > 1 infinitely often
};

DaggerVerdict check_dagger(const PolySequence& seq);

/// Content 1 for almost all entries (prefix exceptions allowed).
ConditionVerdict check_content_ae_one(const PolySequence& seq);

/// Infinitely many entries with neither a leading nor a terminal isolani.
ConditionVerdict check_isolani_free(const PolySequence& seq);

/// Some infinite subfamily shares one (normalized) Log set. Trivially true
/// for a periodic tail: each period entry recurs infinitely often.
ConditionVerdict check_equal_logs(const PolySequence& seq);

/// gcd of the pairwise differences of Log p equals 1.
bool check_projectively_faithful(const LaurentPoly& p);

enum class Classification { AntiFD, ProFD, Inconclusive };

const char* to_string(Classification c);

struct CertReport {
  ConditionVerdict terminal_coeff;  // (i)
  ConditionVerdict leading_coeff;   // (ii)
  ConditionVerdict content_one;     // (iii)
  ConditionVerdict isolani_free;    // (iv)(a)
  ConditionVerdict equal_logs;      // (iv)(b)
  Classification classification = Classification::Inconclusive;
  bool prefix_relative = false;
  std::string note;
};

/// The four-part certificate: AntiFD when all conditions hold, ProFD when the
/// content condition fails persistently, otherwise Inconclusive (the
/// conditions are sufficient, never necessary).
CertReport antifd_verdict(const PolySequence& seq);

/// Content bifurcation: either the rank-1 tensor factorization (contents > 1
/// infinitely often) or the discreteness certificate for all finite-rank
/// subgroups.
struct Bifurcation {
  enum class Kind { ProFd, DiscreteFiniteRank };
  Kind kind = Kind::DiscreteFiniteRank;
  bool prefix_relative = false;
  std::vector<Int> contents;                 // d_i for materialized entries
  std::optional<PolySequence> reduced;       // P_i = p_i / d_i (ProFd branch)
  std::vector<Int> rank1_multipliers;        // the limit U = lim x d_i
  std::string certificate;
};

Bifurcation bifurcate(const PolySequence& seq);

/// Exact membership of e in G_n = sum over i in Log Q_n of (x^i/Q_n) Z.
/// Requires the content-1 regime on the tail.
bool in_gn(const LimitElement& e, std::size_t n);

/// Coordinates of e in the monomial basis of G_n (requires membership).
std::vector<Int> gn_coordinates(const LimitElement& e, std::size_t n);

/// Minimal stage n with every generator in G_n.
std::size_t find_gn(const std::vector<LimitElement>& gens);

/// Checks the purity step: m*e in G_n implies e in G_n, on this instance.
bool purity_check(const LimitElement& e, const Int& m, std::size_t n);

struct GnWitness {
  std::size_t stage = 0;
  std::vector<LimitElement> basis;  // x^i / Q_n for i in Log Q_n
  bool independent = false;         // distinct monomials: exact
  std::vector<std::vector<Rat>> coefficient_vectors;
};

/// The independence certificate behind G_n discreteness; the norm-discreteness
/// conclusion is delegated to the lab's Kronecker test on the vectors.
GnWitness gn_discreteness_witness(PolySequencePtr seq, std::size_t n);

}  // namespace dgt
