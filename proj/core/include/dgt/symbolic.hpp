#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "dgt/numeric.hpp"

namespace dgt {

/// Declared symbol family beta_0 = 1, beta_1, ..., beta_s. Either all symbols
/// are exact rationals (mode Rational) or they are declared algebraically
/// independent transcendentals (mode Transcendental), which licenses exact
/// rank computation over the rational function field. Numeric shadows are
/// floating approximations used only by the explicitly inexact checks.
class SymbolBasis {
 public:
  enum class Mode { Rational, Transcendental };

  static std::shared_ptr<const SymbolBasis> rational(std::vector<Rat> values);
  static std::shared_ptr<const SymbolBasis> transcendental(std::vector<double> shadows);

  Mode mode() const { return mode_; }
  std::size_t symbol_count() const { return count_; }  // s, excluding beta_0

  Rat rational_value(std::size_t i) const;  // mode Rational, 1-indexed
  double shadow(std::size_t i) const;       // 1-indexed; beta_0 shadow is 1

 private:
  SymbolBasis(Mode m, std::size_t count) : mode_(m), count_(count) {}
  Mode mode_;
  std::size_t count_;
  std::vector<Rat> values_;
  std::vector<double> shadows_;
};

using SymbolBasisPtr = std::shared_ptr<const SymbolBasis>;

/// Rational linear combination q_0 + sum q_i beta_i.
struct LinForm {
  std::vector<Rat> c;  // length s+1; c[0] is the rational part

  bool is_rational() const {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  }
};

/// Vector in R^k whose entries are exact linear combinations over a common
/// SymbolBasis, with an inexact numeric shadow derived from the symbol
/// shadows.
class SymbolicVector {
 public:
  SymbolicVector(SymbolBasisPtr basis, std::vector<LinForm> entries);

  const SymbolBasisPtr& basis() const { return basis_; }
  std::size_t dimension() const { return entries_.size(); }
  const LinForm& entry(std::size_t axis) const { return entries_.at(axis); }
  const std::vector<LinForm>& entries() const { return entries_; }

  std::vector<double> shadow() const;

  SymbolicVector operator+(const SymbolicVector& o) const;
  SymbolicVector operator*(const Int& s) const;

  /// Convenience: a vector with purely rational entries.
  static SymbolicVector from_rationals(SymbolBasisPtr basis, std::vector<Rat> values);

 private:
  SymbolBasisPtr basis_;
  std::vector<LinForm> entries_;
};

/// Exact rank over Q of the integer span, computed in the coordinate system
/// indexed by (axis, symbol) for transcendental bases and by values for
/// rational bases.
std::size_t z_rank(const std::vector<SymbolicVector>& gens);

/// Exact dimension of the real linear span. Transcendental mode evaluates
/// minors as formal polynomials in the symbols.
std::size_t real_span_dim(const std::vector<SymbolicVector>& gens);

/// Kronecker criterion: discrete iff rank of the lattice equals the dimension
/// of its real span.
bool is_discrete(const std::vector<SymbolicVector>& gens);

struct TraceWitnessResult {
  bool discrete = false;
  Rat generator;  // c with values in c*Z (0 when all values vanish)
  std::vector<Rat> values;
};

/// Applies an exact linear functional (coefficients per axis) to each
/// generator; reports whether the value group is a discrete subgroup c*Z of
/// the rationals.
TraceWitnessResult discrete_trace_witness(const std::vector<SymbolicVector>& gens,
                                          const std::vector<Rat>& functional);

TraceWitnessResult discrete_trace_witness(const std::vector<SymbolicVector>& gens,
                                          std::size_t coordinate);

/// Exact rank over Q of a rational matrix (rows x cols).
std::size_t rational_rank(std::vector<std::vector<Rat>> m);

/// Integer-span membership: does target lie in the Z-span of the columns?
/// Returns the integer combination when it does. All data rational; the
/// common denominator is cleared internally.
std::optional<std::vector<Int>> integer_span_solve(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target);

/// Flattened exact coordinates of a symbolic vector: (axis, symbol) grid for
/// transcendental bases, plain values for rational bases.
std::vector<Rat> flatten_coordinates(const SymbolicVector& v);

}  // namespace dgt
