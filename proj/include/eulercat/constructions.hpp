#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulercat/category.hpp"
#include "eulercat/matrix.hpp"
#include "eulercat/rational.hpp"

namespace eulercat {

// Small named categories ----------------------------------------------------

FinCategory empty_category();
/// One object "*" with identity "id".
FinCategory terminal_category();
/// Objects "0".."n-1", identities only.
FinCategory discrete_category(std::size_t n);
/// Objects "0".."n-1" with exactly one morphism between any two.
FinCategory indiscrete_category(std::size_t n);
/// One object, morphisms "g^0".."g^(k-1)" composing by addition mod k.
FinCategory cyclic_group_category(std::size_t k);
/// Two objects x, y with adjacency [[3,2],[3,2]]. Its adjacency has a
/// weighting but no coweighting, and chi = 5/13.
FinCategory weighting_only_category();

// Combinators ---------------------------------------------------------------

/// Objects and morphisms are pairs "(u,v)", composed componentwise. Objects
/// are ordered a-major, so adjacency(product) = kronecker([a], [b]).
/// Throws InvalidCategory.
FinCategory product(const FinCategory& a, const FinCategory& b);

/// Disjoint union with ids prefixed "inl." and "inr.". Objects of a come
/// first, so adjacency(coproduct) = block_diag([a], [b]).
/// Throws InvalidCategory.
FinCategory coproduct(const FinCategory& a, const FinCategory& b);

/// Same objects and morphisms with source and target swapped.
FinCategory opposite(const FinCategory& c);

/// Same category with objects listed in the given order (order[i] is the old
/// index of the new i-th object).
FinCategory permute_objects(const FinCategory& c,
                            const std::vector<std::size_t>& order);

/// If c is a poset (hom sets of size <= 1, no two distinct objects with
/// arrows both ways), a total order of its object indices extending the
/// partial order; ties go to the earlier object. Otherwise nullopt.
std::optional<std::vector<std::size_t>> poset_order(const FinCategory& c);

/// poset_order, as object ids.
std::optional<std::vector<std::string>> is_poset(const FinCategory& c);

// Diagrams ------------------------------------------------------------------

/// A strict functor F: index -> Cat with finite values.
class Diagram {
 public:
  /// fibers[i] is F(a_i); arrows[f] is F(f). Throws InvalidDiagram on size
  /// mismatch; everything else is checked by validate().
  Diagram(CategoryPtr index, std::vector<CategoryPtr> fibers,
          std::vector<FunctorData> arrows);

  const CategoryPtr& index() const { return index_; }
  const FinCategory& fiber(std::size_t a) const { return *fibers_[a]; }
  const std::vector<CategoryPtr>& fibers() const { return fibers_; }
  const FunctorData& arrow(std::size_t f) const { return arrows_[f]; }
  const std::vector<FunctorData>& arrows() const { return arrows_; }

  /// Throws InvalidDiagram with the report summary unless validate() passes.
  void require_valid() const;

 private:
  CategoryPtr index_;
  std::vector<CategoryPtr> fibers_;
  std::vector<FunctorData> arrows_;
};

/// Index and fibers are categories, every F(f) is a functor F(src f) ->
/// F(dst f), F(id_a) = id and F(g o f) = F(g) o F(f).
ValidationReport validate(const Diagram& d);

struct GrothendieckResult {
  FinCategory total;
  /// total object i = (index object, fiber object)
  std::vector<std::pair<std::size_t, std::size_t>> object_index;
};

/// Objects (a,x) with x in F(a), ordered fiber by fiber in index order.
/// Morphisms (a,x) -> (b,y) are pairs (f, z) with f: a -> b and
/// z: F(f)(x) -> y, with id "(f,x,z)" (x disambiguates pairs whose source
/// differs only in the fiber object). Composition is
/// (g, w) o (f, z) = (g o f, w o F(g)(z)). Throws InvalidDiagram.
GrothendieckResult grothendieck(const Diagram& d);

/// ([G(L1 F)], [G(L2 F)]): the first counts f: a -> a' with F(f)(x) = y,
/// the second is block_diag of the fiber adjacencies. Their product is
/// adjacency(grothendieck(d).total). Throws InvalidDiagram.
std::pair<RatMatrix, RatMatrix> decompose_L1_L2(const Diagram& d);

/// 1 x m row [chi(F(a_1)) .. chi(F(a_m))]. Throws InvalidDiagram.
RatMatrix chi_diagram_row(const Diagram& d);

/// C(l_1 v_1, .., l_m v_m) where l = [index]^+ 1 and v_i = [F(a_i)]^+ 1,
/// provided l is a weighting of the index and every v_i a weighting of its
/// fiber. Such a vector is a weighting of [G(F)].
std::optional<RatMatrix> assembled_weighting(const Diagram& d);

struct InclusionExclusion {
  Rational predicted;  // chi(F) [index]^+ 1
  Rational actual;     // chi(G(F))
  /// Hypotheses under which predicted == actual is a theorem: the index is a
  /// poset and every fiber has a weighting; or [G(F)] has a coweighting,
  /// [index] a weighting and every fiber both.
  bool applies = false;
};

/// Throws InvalidDiagram.
InclusionExclusion chi_inclusion_exclusion(const Diagram& d);

}  // namespace eulercat
