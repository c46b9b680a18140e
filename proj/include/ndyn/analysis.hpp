#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndyn/conjugate.hpp"

namespace ndyn {

enum class FixedClass { Attracting, Superattracting, Repelling, Indifferent, ParabolicCandidate };
const char* to_string(FixedClass c);

/// Class of a multiplier: superattracting below tol::superattracting,
/// indifferent inside the band |m| = 1 +- tol::indifference_band, and
/// parabolic-candidate when also within that band of a root of unity of order <= 16.
FixedClass classify_multiplier(Complex multiplier);

struct FixedPointRecord {
  ExtComplex point;
  Complex multiplier;
  FixedClass cls;
  bool strange;
  int multiplicity;
};

/// Fixed points with multipliers (chart w = 1/z at infinity). Points within
/// 1e-8 chordal distance of one of `roots` are not strange.
std::vector<FixedPointRecord> fixed_points(const RationalMap& r,
                                           const std::vector<ExtComplex>& roots = {0.0, ExtComplex::infinity()});

struct CriticalPointRecord {
  ExtComplex point;
  int multiplicity;
  bool free;
  std::optional<ExtComplex> partner;  // 1/kappa for free critical points
};

/// Zeros of R' on the sphere with multiplicity; the count at infinity follows
/// from the total 2 deg R - 2.
std::vector<CriticalPointRecord> critical_points(const RationalMap& r);

/// Product of chart derivatives along a cycle. Throws NotACycle.
Complex multiplier_of_cycle(const RationalMap& r, const std::vector<ExtComplex>& cycle);

enum class SumSign { Plus, Minus };

/// Closed forms for sum (1 + r)/(1 - r) (Plus) and sum (1 - r)/(1 + r) (Minus)
/// over the roots of P = a_k + a_{k-1} z + ... + z^k. Throws PoleAtOne / PoleAtMinusOne.
Complex moebius_sum(const Polynomial& P, SumSign sign);

/// The same sums evaluated from the roots directly.
Complex moebius_sum_from_roots(const std::vector<Complex>& roots, SumSign sign);

struct OperatorReport {
  int n = 0;
  int k = 0;
  int sign = 1;
  /// n + k before any cancellation of (z - 1).
  int raw_n_plus_k = 0;
  bool n_plus_k_odd = false;
  bool degenerate = false;
  Complex value_at_one;
  Complex value_at_minus_one;
  /// "fixed", "preimage-of-1", "2-cycle-with-1", "1-is-preimage", or "other".
  std::string minus_one_status;
  /// Whether the evaluated role of -1 agrees with the parity rule.
  bool parity_consistent = true;
  std::optional<Complex> two_cycle_multiplier;
  std::vector<FixedPointRecord> fixed;
};

/// Removes the factors (z - 1) and (z + 1) shared by P and P^. Each (z - 1)
/// flips the sign; (z + 1) leaves it unchanged.
OperatorForm cancel_unit_factors(const OperatorForm& form);

OperatorReport classify_operator(const OperatorForm& form);

}  // namespace ndyn
