#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "eulercat/category.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/matrix.hpp"

namespace eulercat::gen {

using Rng = std::mt19937_64;

struct Bounds {
  std::size_t max_objects = 4;  // objects per generated category
  std::size_t max_hom = 3;      // parallel arrows / monoid size bound
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

/// size x size, integer entries uniform in [lo, hi].
RatMatrix random_square_matrix(Rng& rng, std::size_t size, long lo, long hi);

/// A genuine poset on n objects (at most one arrow between any two objects)
/// from a random DAG, listed in a random order.
FinCategory random_poset(Rng& rng, std::size_t n);

/// Poset skeleton with extra structure and no nontrivial isomorphisms:
/// a < b gets 1..max_hom parallel arrows, each object gets an endomorphism
/// monoid whose only unit is the identity (trivial, a truncated chain, or a
/// left/right zero band). Any composite involving a non-identity and
/// crossing objects is the first arrow of its hom set, which keeps the table
/// associative. Listed in a random order.
FinCategory random_skeletal_category(Rng& rng, std::size_t n, std::size_t max_hom);

/// Category with each object of `base` replaced by `copies[a]` isomorphic
/// copies "(a#i)". Rows and columns of the adjacency repeat, so it is
/// singular whenever some copy count exceeds one.
FinCategory replicate_objects(const FinCategory& base,
                              const std::vector<std::size_t>& copies);

/// Mixture of skeletal categories, replicated ones, cyclic groups, the
/// weighting-only example, its opposite, and small coproducts; at most
/// bounds.max_objects objects (and at least one).
FinCategory random_category(Rng& rng, const Bounds& bounds);

/// random_category restricted to categories whose adjacency has a weighting.
FinCategory random_weighted_category(Rng& rng, const Bounds& bounds);

/// Diagram over a random poset with weighted fibers. Non-identity arrows are
/// either constant functors, or (when all fibers are equal) identities.
Diagram random_poset_diagram(Rng& rng, const Bounds& bounds);

/// Diagram over a random skeletal category (possibly not a poset) with
/// arbitrary random fibers and constant-functor arrows.
Diagram random_diagram(Rng& rng, const Bounds& bounds);

}  // namespace eulercat::gen
