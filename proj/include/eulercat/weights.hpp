#pragma once

#include <optional>

#include "eulercat/category.hpp"
#include "eulercat/matrix.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

/// Euler measure 1^T [c]^+ 1. Zero for the empty category.
/// Throws InvalidCategory.
Rational chi(const FinCategory& c);

/// 1^T m^+ 1 for any square matrix.
Rational chi_of_matrix(const RatMatrix& m);

/// m^+ 1 if it solves m w = 1. A square m has some weighting exactly when
/// this one works, so absence means m w = 1 is inconsistent.
std::optional<RatMatrix> weighting(const RatMatrix& m);

/// 1^T m^+ if it solves v m = 1^T; absent otherwise.
std::optional<RatMatrix> coweighting(const RatMatrix& m);

struct ChiReport {
  Rational chi;
  std::optional<RatMatrix> weighting;    // n x 1
  std::optional<RatMatrix> coweighting;  // 1 x n

  bool has_weighting() const { return weighting.has_value(); }
  bool has_coweighting() const { return coweighting.has_value(); }
  /// Leinster's Euler characteristic is defined (and then equals chi).
  bool lein_defined() const { return has_weighting() && has_coweighting(); }
};

ChiReport chi_report(const FinCategory& c);

/// sum(w) == sum(v) == 1^T m^+ 1 for the weighting w and coweighting v of m.
/// Throws MissingWeighting / MissingCoweighting.
bool check_sls(const RatMatrix& m);

/// Harness for the adjunction invariance theorem. Given l: a -> b and
/// r: b -> a whose hom counts match an adjunction, with [a] admitting a
/// coweighting and [b] a weighting, returns whether [b] then has a
/// coweighting, [a] a weighting, and chi(a) == chi(b).
///
/// Throws SourceTargetMismatch if the functors do not connect a and b, and
/// PreconditionFailed naming the first hypothesis that does not hold.
bool chi_adjunction_transport(const FinCategory& a, const FinCategory& b,
                              const FunctorData& l, const FunctorData& r);

}  // namespace eulercat
