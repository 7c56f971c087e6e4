#include "eulercat/category.hpp"

#include <sstream>
#include <utility>

#include "eulercat/errors.hpp"

namespace eulercat {

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "valid";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    out << "; " << violations[i].message;
  }
  if (violations.size() > max_items) out << "; ...";
  return out.str();
}

FinCategory::FinCategory(CategoryData data) : data_(std::move(data)) {
  resolve();
  if (report_.ok()) check_axioms();
}

void FinCategory::resolve() {
  auto fail = [this](std::string axiom, std::string message) {
    report_.violations.push_back({std::move(axiom), std::move(message)});
  };

  for (std::size_t i = 0; i < data_.objects.size(); ++i) {
    if (!object_lookup_.emplace(data_.objects[i], i).second) {
      fail("unique-ids", "duplicate object id " + data_.objects[i]);
    }
  }
  const std::size_t n = object_count();
  hom_.assign(n * n, {});
  arrows_.resize(morphism_count());
  for (std::size_t i = 0; i < data_.morphisms.size(); ++i) {
    const auto& m = data_.morphisms[i];
    if (!morphism_lookup_.emplace(m.id, i).second) {
      fail("unique-ids", "duplicate morphism id " + m.id);
    }
    auto s = object_index(m.src);
    auto d = object_index(m.dst);
    if (!s) fail("endpoints", "morphism " + m.id + " has unknown source " + m.src);
    if (!d) fail("endpoints", "morphism " + m.id + " has unknown target " + m.dst);
    if (s && d) {
      arrows_[i] = {*s, *d};
      hom_[*s * n + *d].push_back(i);
    }
  }

  identity_.assign(n, npos);
  for (const auto& [obj, mor] : data_.identities) {
    auto a = object_index(obj);
    auto f = morphism_index(mor);
    if (!a) {
      fail("identities", "identity declared for unknown object " + obj);
    } else if (!f) {
      fail("identities", "identity of " + obj + " is unknown morphism " + mor);
    } else {
      identity_[*a] = *f;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (identity_[a] == npos) {
      fail("identities", "object " + data_.objects[a] + " has no identity");
    }
  }

  for (const auto& c : data_.composition) {
    auto g = morphism_index(c.g);
    auto f = morphism_index(c.f);
    auto gf = morphism_index(c.gf);
    if (!g || !f || !gf) {
      fail("composition", "composition entry (" + c.g + "," + c.f + ") -> " +
                              c.gf + " names an unknown morphism");
      continue;
    }
    if (arrows_[*f].dst != arrows_[*g].src) {
      fail("composition", "composition entry for non-composable pair (" + c.g +
                              "," + c.f + ")");
      continue;
    }
    auto [it, inserted] = composition_.emplace(key(*g, *f), *gf);
    if (!inserted && it->second != *gf) {
      fail("composition", "conflicting composites for (" + c.g + "," + c.f +
                              "): " + morphism_id(it->second) + " and " + c.gf);
    }
  }
}

void FinCategory::check_axioms() {
  auto fail = [this](std::string axiom, std::string message) {
    report_.violations.push_back({std::move(axiom), std::move(message)});
  };
  const std::size_t n = object_count();

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t id = identity_[a];
    if (src(id) != a || dst(id) != a) {
      fail("identities", "identity " + morphism_id(id) + " of " + object_id(a) +
                             " is not an endomorphism of " + object_id(a));
    }
  }
  if (!report_.ok()) return;

  // Totality, endpoints and unit laws.
  for (std::size_t f = 0; f < morphism_count(); ++f) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t g : hom(dst(f), c)) {
        auto gf = compose(g, f);
        if (!gf) {
          fail("composition-total", "composition not total at (" +
                                        morphism_id(g) + "," + morphism_id(f) +
                                        ")");
          continue;
        }
        if (src(*gf) != src(f) || dst(*gf) != dst(g)) {
          fail("composition-endpoints",
               "composite " + morphism_id(*gf) + " of (" + morphism_id(g) +
                   "," + morphism_id(f) + ") has wrong endpoints");
        }
      }
    }
    const std::size_t id_src = identity_[src(f)];
    const std::size_t id_dst = identity_[dst(f)];
    auto right = compose(f, id_src);
    auto left = compose(id_dst, f);
    if (right && *right != f) {
      fail("unit", morphism_id(f) + " o " + morphism_id(id_src) + " = " +
                       morphism_id(*right) + ", expected " + morphism_id(f));
    }
    if (left && *left != f) {
      fail("unit", morphism_id(id_dst) + " o " + morphism_id(f) + " = " +
                       morphism_id(*left) + ", expected " + morphism_id(f));
    }
  }
  if (!report_.ok()) return;

  // Associativity over every composable triple h o g o f.
  for (std::size_t f = 0; f < morphism_count(); ++f) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t g : hom(dst(f), c)) {
        const std::size_t gf = *compose(g, f);
        for (std::size_t d = 0; d < n; ++d) {
          for (std::size_t h : hom(c, d)) {
            const std::size_t lhs = *compose(h, gf);
            const std::size_t rhs = *compose(*compose(h, g), f);
            if (lhs != rhs) {
              fail("associativity",
                   "associativity fails at (" + morphism_id(h) + "," +
                       morphism_id(g) + "," + morphism_id(f) + "): " +
                       morphism_id(lhs) + " != " + morphism_id(rhs));
            }
          }
        }
      }
    }
  }
}

std::optional<std::size_t> FinCategory::object_index(const std::string& id) const {
  auto it = object_lookup_.find(id);
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FinCategory::morphism_index(
    const std::string& id) const {
  auto it = morphism_lookup_.find(id);
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

bool FinCategory::is_identity(std::size_t f) const {
  return src(f) != npos && identity_[src(f)] == f;
}

std::optional<std::size_t> FinCategory::compose(std::size_t g,
                                                 std::size_t f) const {
  auto it = composition_.find(key(g, f));
  if (it == composition_.end()) return std::nullopt;
  return it->second;
}

void FinCategory::require_valid(const std::string& what) const {
  if (!valid()) throw InvalidCategory(what + " is not a category: " + report_.summary());
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.data_.objects != b.data_.objects) return false;
  if (a.morphism_count() != b.morphism_count()) return false;
  for (std::size_t i = 0; i < a.morphism_count(); ++i) {
    const auto& x = a.data_.morphisms[i];
    const auto& y = b.data_.morphisms[i];
    if (x.id != y.id || x.src != y.src || x.dst != y.dst) return false;
  }
  return a.identity_ == b.identity_ && a.composition_ == b.composition_;
}

CategoryPtr make_category(CategoryData data) {
  return std::make_shared<const FinCategory>(std::move(data));
}

RatMatrix adjacency(const FinCategory& c) {
  c.require_valid();
  const std::size_t n = c.object_count();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = static_cast<unsigned long>(c.hom(i, j).size());
  return m;
}

// ---------------------------------------------------------------------------

FunctorData::FunctorData(CategoryPtr source, CategoryPtr target,
                         std::vector<std::size_t> object_map,
                         std::vector<std::size_t> morphism_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (!source_ || !target_) throw InvalidFunctor("functor without source or target");
  if (object_map_.size() != source_->object_count() ||
      morphism_map_.size() != source_->morphism_count()) {
    throw InvalidFunctor("functor maps do not cover the source category");
  }
  for (auto o : object_map_) {
    if (o >= target_->object_count()) throw InvalidFunctor("object image out of range");
  }
  for (auto m : morphism_map_) {
    if (m >= target_->morphism_count()) {
      throw InvalidFunctor("morphism image out of range");
    }
  }
}

FunctorData FunctorData::from_ids(
    CategoryPtr source, CategoryPtr target,
    const std::map<std::string, std::string>& objects,
    const std::map<std::string, std::string>& morphisms) {
  if (!source || !target) throw InvalidFunctor("functor without source or target");
  std::vector<std::size_t> object_map(source->object_count(), npos);
  std::vector<std::size_t> morphism_map(source->morphism_count(), npos);
  for (const auto& [from, to] : objects) {
    auto a = source->object_index(from);
    auto b = target->object_index(to);
    if (!a) throw InvalidFunctor("object map: unknown source object " + from);
    if (!b) throw InvalidFunctor("object map: unknown target object " + to);
    object_map[*a] = *b;
  }
  for (const auto& [from, to] : morphisms) {
    auto f = source->morphism_index(from);
    auto g = target->morphism_index(to);
    if (!f) throw InvalidFunctor("morphism map: unknown source morphism " + from);
    if (!g) throw InvalidFunctor("morphism map: unknown target morphism " + to);
    morphism_map[*f] = *g;
  }
  for (std::size_t a = 0; a < object_map.size(); ++a) {
    if (object_map[a] == npos) {
      throw InvalidFunctor("object " + source->object_id(a) + " has no image");
    }
  }
  for (std::size_t f = 0; f < morphism_map.size(); ++f) {
    if (morphism_map[f] == npos) {
      throw InvalidFunctor("morphism " + source->morphism_id(f) + " has no image");
    }
  }
  return FunctorData(std::move(source), std::move(target), std::move(object_map),
                     std::move(morphism_map));
}

std::map<std::string, std::string> FunctorData::object_ids() const {
  std::map<std::string, std::string> out;
  for (std::size_t a = 0; a < object_map_.size(); ++a) {
    out[source_->object_id(a)] = target_->object_id(object_map_[a]);
  }
  return out;
}

std::map<std::string, std::string> FunctorData::morphism_ids() const {
  std::map<std::string, std::string> out;
  for (std::size_t f = 0; f < morphism_map_.size(); ++f) {
    out[source_->morphism_id(f)] = target_->morphism_id(morphism_map_[f]);
  }
  return out;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && *a == *b);
}

ValidationReport validate(const FunctorData& fun) {
  ValidationReport report;
  auto fail = [&report](std::string axiom, std::string message) {
    report.violations.push_back({std::move(axiom), std::move(message)});
  };
  const FinCategory& s = *fun.source();
  const FinCategory& t = *fun.target();
  if (!s.valid()) fail("source", "source is not a category: " + s.report().summary());
  if (!t.valid()) fail("target", "target is not a category: " + t.report().summary());
  if (!report.ok()) return report;

  for (std::size_t f = 0; f < s.morphism_count(); ++f) {
    const std::size_t img = fun.map_morphism(f);
    if (t.src(img) != fun.map_object(s.src(f)) ||
        t.dst(img) != fun.map_object(s.dst(f))) {
      fail("endpoints", "image " + t.morphism_id(img) + " of " +
                            s.morphism_id(f) + " has the wrong endpoints");
    }
  }
  for (std::size_t a = 0; a < s.object_count(); ++a) {
    if (fun.map_morphism(s.identity(a)) != t.identity(fun.map_object(a))) {
      fail("identities", "identity of " + s.object_id(a) +
                             " is not sent to an identity");
    }
  }
  if (!report.ok()) return report;

  for (std::size_t f = 0; f < s.morphism_count(); ++f) {
    for (std::size_t c = 0; c < s.object_count(); ++c) {
      for (std::size_t g : s.hom(s.dst(f), c)) {
        const std::size_t gf = *s.compose(g, f);
        const auto image = t.compose(fun.map_morphism(g), fun.map_morphism(f));
        if (!image || *image != fun.map_morphism(gf)) {
          fail("composition", "F(" + s.morphism_id(g) + " o " +
                                  s.morphism_id(f) + ") != F(" +
                                  s.morphism_id(g) + ") o F(" +
                                  s.morphism_id(f) + ")");
        }
      }
    }
  }
  return report;
}

FunctorData identity_functor(const CategoryPtr& c) {
  std::vector<std::size_t> objects(c->object_count());
  std::vector<std::size_t> morphisms(c->morphism_count());
  for (std::size_t i = 0; i < objects.size(); ++i) objects[i] = i;
  for (std::size_t i = 0; i < morphisms.size(); ++i) morphisms[i] = i;
  return FunctorData(c, c, std::move(objects), std::move(morphisms));
}

FunctorData constant_functor(const CategoryPtr& source,
                             const CategoryPtr& target, std::size_t object) {
  if (object >= target->object_count()) {
    throw InvalidFunctor("constant functor at a missing object");
  }
  return FunctorData(source, target,
                     std::vector<std::size_t>(source->object_count(), object),
                     std::vector<std::size_t>(source->morphism_count(),
                                              target->identity(object)));
}

FunctorData compose(const FunctorData& g, const FunctorData& f) {
  if (!same_category(f.target(), g.source())) {
    throw SourceTargetMismatch("cannot compose functors: target of the first "
                               "is not the source of the second");
  }
  std::vector<std::size_t> objects(f.object_map().size());
  std::vector<std::size_t> morphisms(f.morphism_map().size());
  for (std::size_t a = 0; a < objects.size(); ++a) {
    objects[a] = g.map_object(f.map_object(a));
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    morphisms[m] = g.map_morphism(f.map_morphism(m));
  }
  return FunctorData(f.source(), g.target(), std::move(objects),
                     std::move(morphisms));
}

bool operator==(const FunctorData& a, const FunctorData& b) {
  return same_category(a.source(), b.source()) &&
         same_category(a.target(), b.target()) &&
         a.object_map() == b.object_map() && a.morphism_map() == b.morphism_map();
}

RatMatrix functor_matrix(const FunctorData& f) {
  const auto report = validate(f);
  if (!report.ok()) throw InvalidFunctor("not a functor: " + report.summary());
  RatMatrix m(f.target()->object_count(), f.source()->object_count());
  for (std::size_t j = 0; j < f.source()->object_count(); ++j) {
    m(f.map_object(j), j) = 1;
  }
  return m;
}

bool check_adjunction_matrices(const FunctorData& l, const FunctorData& r) {
  if (!same_category(l.source(), r.target()) ||
      !same_category(l.target(), r.source())) {
    throw SourceTargetMismatch(
        "expected L: A -> B and R: B -> A with matching categories");
  }
  const RatMatrix a = adjacency(*l.source());
  const RatMatrix b = adjacency(*l.target());
  return a * functor_matrix(r) == transpose(functor_matrix(l)) * b;
}

}  // namespace eulercat
