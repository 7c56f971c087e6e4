#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eulercat/matrix.hpp"

namespace eulercat {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct MorphismDecl {
  std::string id;
  std::string src;
  std::string dst;
};

/// One entry g o f = gf of a composition table.
struct CompositeDecl {
  std::string g;
  std::string f;
  std::string gf;
};

/// A finite category as written down: string ids and an explicit table.
/// Nothing here is checked; FinCategory does that.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, std::string> identities;  // object -> morphism
  std::vector<CompositeDecl> composition;
};

struct Violation {
  std::string axiom;    // short tag, e.g. "associativity"
  std::string message;  // human readable, names the witnesses
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 10) const;
};

/// Finite category with an explicit composition table.
///
/// Ids are resolved to indices at construction and the axioms (identities,
/// totality and endpoints of composition, unit laws, associativity) are
/// checked once; the result is available from report(). Object order is the
/// order given in the data and every matrix uses it.
class FinCategory {
 public:
  struct Arrow {
    std::size_t src = npos;
    std::size_t dst = npos;
  };

  FinCategory() : FinCategory(CategoryData{}) {}
  explicit FinCategory(CategoryData data);

  const CategoryData& data() const { return data_; }
  const ValidationReport& report() const { return report_; }
  bool valid() const { return report_.ok(); }

  std::size_t object_count() const { return data_.objects.size(); }
  std::size_t morphism_count() const { return data_.morphisms.size(); }
  const std::string& object_id(std::size_t i) const { return data_.objects[i]; }
  const std::string& morphism_id(std::size_t i) const {
    return data_.morphisms[i].id;
  }
  std::optional<std::size_t> object_index(const std::string& id) const;
  std::optional<std::size_t> morphism_index(const std::string& id) const;

  std::size_t src(std::size_t f) const { return arrows_[f].src; }
  std::size_t dst(std::size_t f) const { return arrows_[f].dst; }
  /// npos when the object has no declared identity.
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  bool is_identity(std::size_t f) const;

  /// g o f, if the table has an entry for the pair.
  std::optional<std::size_t> compose(std::size_t g, std::size_t f) const;

  /// Morphisms a -> b, in declaration order.
  const std::vector<std::size_t>& hom(std::size_t a, std::size_t b) const {
    return hom_[a * object_count() + b];
  }

  /// Throws InvalidCategory with a summary of the report unless valid().
  void require_valid(const std::string& what = "category") const;

  /// Structural equality: same ids in the same order, same identities and
  /// the same composition table.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  void resolve();
  void check_axioms();
  std::uint64_t key(std::size_t g, std::size_t f) const {
    return static_cast<std::uint64_t>(g) * morphism_count() + f;
  }

  CategoryData data_;
  std::unordered_map<std::string, std::size_t> object_lookup_;
  std::unordered_map<std::string, std::size_t> morphism_lookup_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> identity_;
  std::vector<std::vector<std::size_t>> hom_;
  std::unordered_map<std::uint64_t, std::size_t> composition_;
  ValidationReport report_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

CategoryPtr make_category(CategoryData data);

/// The category's own report: empty iff every axiom holds.
inline const ValidationReport& validate(const FinCategory& c) {
  return c.report();
}

/// |Ob| x |Ob| matrix of hom-set sizes. Throws InvalidCategory.
RatMatrix adjacency(const FinCategory& c);

/// Strict functor between two finite categories, stored as index maps.
class FunctorData {
 public:
  FunctorData(CategoryPtr source, CategoryPtr target,
              std::vector<std::size_t> object_map,
              std::vector<std::size_t> morphism_map);

  /// Resolves id maps. Throws InvalidFunctor when an id is unknown or a
  /// source object or morphism has no image.
  static FunctorData from_ids(CategoryPtr source, CategoryPtr target,
                              const std::map<std::string, std::string>& objects,
                              const std::map<std::string, std::string>& morphisms);

  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  std::size_t map_object(std::size_t a) const { return object_map_[a]; }
  std::size_t map_morphism(std::size_t f) const { return morphism_map_[f]; }
  const std::vector<std::size_t>& object_map() const { return object_map_; }
  const std::vector<std::size_t>& morphism_map() const { return morphism_map_; }

  std::map<std::string, std::string> object_ids() const;
  std::map<std::string, std::string> morphism_ids() const;

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<std::size_t> object_map_;
  std::vector<std::size_t> morphism_map_;
};

bool same_category(const CategoryPtr& a, const CategoryPtr& b);

/// Checks endpoints, identities and composition are preserved (and that
/// both categories are valid).
ValidationReport validate(const FunctorData& f);

FunctorData identity_functor(const CategoryPtr& c);

/// The functor sending every object to `object` and every morphism to its
/// identity.
FunctorData constant_functor(const CategoryPtr& source,
                             const CategoryPtr& target, std::size_t object);

/// g o f. Throws SourceTargetMismatch unless f.target is g.source.
FunctorData compose(const FunctorData& g, const FunctorData& f);

bool operator==(const FunctorData& a, const FunctorData& b);

/// |target| x |source| 0/1 matrix with (i, j) = 1 iff F(a_j) = b_i.
/// Throws InvalidFunctor.
RatMatrix functor_matrix(const FunctorData& f);

/// [A][R] == [L]^T [B] for L: A -> B and R: B -> A, i.e.
/// |A(a, Rb)| = |B(La, b)| for all a, b. This hom-count identity is necessary
/// for L to be left adjoint to R. Throws SourceTargetMismatch.
bool check_adjunction_matrices(const FunctorData& l, const FunctorData& r);

}  // namespace eulercat
