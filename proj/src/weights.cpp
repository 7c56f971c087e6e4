#include "eulercat/weights.hpp"

#include "eulercat/errors.hpp"

namespace eulercat {

Rational chi_of_matrix(const RatMatrix& m) {
  const RatMatrix one = ones(m.rows());
  const RatMatrix value = transpose(one) * pinv(m) * one;
  return value(0, 0);
}

Rational chi(const FinCategory& c) { return chi_of_matrix(adjacency(c)); }

std::optional<RatMatrix> weighting(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("weighting expects a square matrix");
  RatMatrix w = pinv(m) * ones(m.rows());
  if (m * w == ones(m.rows())) return w;
  return std::nullopt;
}

std::optional<RatMatrix> coweighting(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("coweighting expects a square matrix");
  RatMatrix v = transpose(ones(m.cols())) * pinv(m);
  if (v * m == transpose(ones(m.cols()))) return v;
  return std::nullopt;
}

ChiReport chi_report(const FinCategory& c) {
  const RatMatrix m = adjacency(c);
  const RatMatrix p = pinv(m);
  const RatMatrix one = ones(m.rows());
  const RatMatrix one_t = transpose(one);

  ChiReport report;
  report.chi = (one_t * p * one)(0, 0);
  RatMatrix w = p * one;
  if (m * w == one) report.weighting = std::move(w);
  RatMatrix v = one_t * p;
  if (v * m == one_t) report.coweighting = std::move(v);
  return report;
}

bool check_sls(const RatMatrix& m) {
  const auto w = weighting(m);
  if (!w) throw MissingWeighting("matrix has no weighting");
  const auto v = coweighting(m);
  if (!v) throw MissingCoweighting("matrix has no coweighting");
  const Rational sw = entry_sum(*w);
  const Rational sv = entry_sum(*v);
  return sw == sv && sw == chi_of_matrix(m);
}

bool chi_adjunction_transport(const FinCategory& a, const FinCategory& b,
                              const FunctorData& l, const FunctorData& r) {
  if (!(*l.source() == a) || !(*l.target() == b) || !(*r.source() == b) ||
      !(*r.target() == a)) {
    throw SourceTargetMismatch("expected L: A -> B and R: B -> A");
  }
  if (!check_adjunction_matrices(l, r)) {
    throw PreconditionFailed(
        "hom counts do not match an adjunction: [A][R] != [L]^T[B]");
  }
  const RatMatrix ma = adjacency(a);
  const RatMatrix mb = adjacency(b);
  if (!coweighting(ma)) throw PreconditionFailed("[A] has no coweighting");
  if (!weighting(mb)) throw PreconditionFailed("[B] has no weighting");

  return coweighting(mb).has_value() && weighting(ma).has_value() &&
         chi(a) == chi(b);
}

}  // namespace eulercat
