#include "eulercat/constructions.hpp"

#include <algorithm>
#include <utility>

#include "eulercat/errors.hpp"
#include "eulercat/weights.hpp"

namespace eulercat {

namespace {

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// Appends every composite g o f of c, with ids mapped through `name`.
template <typename Name>
void append_composition(const FinCategory& c, Name name,
                        std::vector<CompositeDecl>& out) {
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    for (std::size_t z = 0; z < c.object_count(); ++z) {
      for (std::size_t g : c.hom(c.dst(f), z)) {
        out.push_back({name(g), name(f), name(*c.compose(g, f))});
      }
    }
  }
}

}  // namespace

FinCategory empty_category() { return FinCategory(CategoryData{}); }

FinCategory terminal_category() {
  CategoryData d;
  d.objects = {"*"};
  d.morphisms = {{"id", "*", "*"}};
  d.identities = {{"*", "id"}};
  d.composition = {{"id", "id", "id"}};
  return FinCategory(std::move(d));
}

FinCategory discrete_category(std::size_t n) {
  CategoryData d;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string o = std::to_string(i);
    d.objects.push_back(o);
    d.morphisms.push_back({"1_" + o, o, o});
    d.identities[o] = "1_" + o;
    d.composition.push_back({"1_" + o, "1_" + o, "1_" + o});
  }
  return FinCategory(std::move(d));
}

FinCategory indiscrete_category(std::size_t n) {
  CategoryData d;
  auto arrow = [](std::size_t i, std::size_t j) {
    return std::to_string(i) + "->" + std::to_string(j);
  };
  for (std::size_t i = 0; i < n; ++i) d.objects.push_back(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    d.identities[d.objects[i]] = arrow(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      d.morphisms.push_back({arrow(i, j), d.objects[i], d.objects[j]});
      for (std::size_t k = 0; k < n; ++k) {
        d.composition.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
      }
    }
  }
  return FinCategory(std::move(d));
}

FinCategory cyclic_group_category(std::size_t k) {
  if (k == 0) throw InvalidCategory("cyclic group of order 0");
  CategoryData d;
  auto element = [](std::size_t i) { return "g^" + std::to_string(i); };
  d.objects = {"*"};
  d.identities = {{"*", element(0)}};
  for (std::size_t i = 0; i < k; ++i) {
    d.morphisms.push_back({element(i), "*", "*"});
    for (std::size_t j = 0; j < k; ++j) {
      d.composition.push_back({element(i), element(j), element((i + j) % k)});
    }
  }
  return FinCategory(std::move(d));
}

FinCategory weighting_only_category() {
  CategoryData d;
  d.objects = {"x", "y"};
  d.morphisms = {{"1x", "x", "x"}, {"a", "x", "x"}, {"b", "x", "x"},
                 {"p", "x", "y"},  {"q", "x", "y"}, {"r", "y", "x"},
                 {"s", "y", "x"},  {"t", "y", "x"}, {"1y", "y", "y"},
                 {"e", "y", "y"}};
  d.identities = {{"x", "1x"}, {"y", "1y"}};
  for (const auto& m : d.morphisms) {
    const std::string& src_id = d.identities[m.src];
    const std::string& dst_id = d.identities[m.dst];
    d.composition.push_back({m.id, src_id, m.id});
    if (m.id != dst_id) d.composition.push_back({dst_id, m.id, m.id});
  }
  // a is an involution, b absorbs, e is idempotent; everything through the
  // other object collapses onto b (at x) or e (at y).
  const std::vector<CompositeDecl> rest = {
      {"a", "a", "1x"}, {"a", "b", "b"}, {"b", "a", "b"}, {"b", "b", "b"},
      {"p", "a", "p"},  {"p", "b", "p"}, {"q", "a", "q"}, {"q", "b", "p"},
      {"r", "p", "b"},  {"r", "q", "b"}, {"s", "p", "b"}, {"s", "q", "b"},
      {"t", "p", "b"},  {"t", "q", "b"}, {"e", "p", "p"}, {"e", "q", "p"},
      {"a", "r", "r"},  {"a", "s", "s"}, {"a", "t", "t"}, {"b", "r", "r"},
      {"b", "s", "r"},  {"b", "t", "r"}, {"p", "r", "e"}, {"p", "s", "e"},
      {"p", "t", "e"},  {"q", "r", "e"}, {"q", "s", "e"}, {"q", "t", "e"},
      {"r", "e", "r"},  {"s", "e", "r"}, {"t", "e", "r"}, {"e", "e", "e"}};
  d.composition.insert(d.composition.end(), rest.begin(), rest.end());
  return FinCategory(std::move(d));
}

FinCategory opposite(const FinCategory& c) {
  CategoryData d = c.data();
  for (auto& m : d.morphisms) std::swap(m.src, m.dst);
  for (auto& e : d.composition) std::swap(e.g, e.f);
  return FinCategory(std::move(d));
}

FinCategory product(const FinCategory& a, const FinCategory& b) {
  a.require_valid("left factor");
  b.require_valid("right factor");
  CategoryData d;
  for (const auto& x : a.data().objects)
    for (const auto& y : b.data().objects) d.objects.push_back(pair_id(x, y));
  for (const auto& f : a.data().morphisms) {
    for (const auto& g : b.data().morphisms) {
      d.morphisms.push_back(
          {pair_id(f.id, g.id), pair_id(f.src, g.src), pair_id(f.dst, g.dst)});
    }
  }
  for (std::size_t x = 0; x < a.object_count(); ++x) {
    for (std::size_t y = 0; y < b.object_count(); ++y) {
      d.identities[pair_id(a.object_id(x), b.object_id(y))] =
          pair_id(a.morphism_id(a.identity(x)), b.morphism_id(b.identity(y)));
    }
  }
  std::vector<CompositeDecl> ca;
  std::vector<CompositeDecl> cb;
  append_composition(a, [&a](std::size_t i) { return a.morphism_id(i); }, ca);
  append_composition(b, [&b](std::size_t i) { return b.morphism_id(i); }, cb);
  d.composition.reserve(ca.size() * cb.size());
  for (const auto& p : ca) {
    for (const auto& q : cb) {
      d.composition.push_back(
          {pair_id(p.g, q.g), pair_id(p.f, q.f), pair_id(p.gf, q.gf)});
    }
  }
  return FinCategory(std::move(d));
}

FinCategory coproduct(const FinCategory& a, const FinCategory& b) {
  a.require_valid("left summand");
  b.require_valid("right summand");
  CategoryData d;
  auto add = [&d](const FinCategory& c, const std::string& prefix) {
    auto name = [&prefix](const std::string& s) { return prefix + s; };
    for (const auto& o : c.data().objects) d.objects.push_back(name(o));
    for (const auto& m : c.data().morphisms) {
      d.morphisms.push_back({name(m.id), name(m.src), name(m.dst)});
    }
    for (const auto& [o, m] : c.data().identities) d.identities[name(o)] = name(m);
    for (const auto& e : c.data().composition) {
      d.composition.push_back({name(e.g), name(e.f), name(e.gf)});
    }
  };
  add(a, "inl.");
  add(b, "inr.");
  return FinCategory(std::move(d));
}

FinCategory permute_objects(const FinCategory& c,
                            const std::vector<std::size_t>& order) {
  if (order.size() != c.object_count()) {
    throw DimensionMismatch("object permutation has the wrong length");
  }
  CategoryData d = c.data();
  std::vector<bool> seen(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || seen[order[i]]) {
      throw DimensionMismatch("not a permutation of the objects");
    }
    seen[order[i]] = true;
    d.objects[i] = c.data().objects[order[i]];
  }
  return FinCategory(std::move(d));
}

std::optional<std::vector<std::size_t>> poset_order(const FinCategory& c) {
  c.require_valid();
  const std::size_t n = c.object_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.hom(i, j).size() > 1) return std::nullopt;
      if (i < j && !c.hom(i, j).empty() && !c.hom(j, i).empty()) {
        return std::nullopt;
      }
    }
  }
  // Kahn's algorithm, always taking the earliest available object.
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !c.hom(i, j).empty()) ++indegree[j];
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (order.size() < n) {
    std::size_t next = npos;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        next = i;
        break;
      }
    }
    if (next == npos) return std::nullopt;  // unreachable for valid posets
    placed[next] = true;
    order.push_back(next);
    for (std::size_t j = 0; j < n; ++j)
      if (j != next && !c.hom(next, j).empty()) --indegree[j];
  }
  return order;
}

std::optional<std::vector<std::string>> is_poset(const FinCategory& c) {
  auto order = poset_order(c);
  if (!order) return std::nullopt;
  std::vector<std::string> ids;
  for (auto i : *order) ids.push_back(c.object_id(i));
  return ids;
}

// ---------------------------------------------------------------------------

Diagram::Diagram(CategoryPtr index, std::vector<CategoryPtr> fibers,
                 std::vector<FunctorData> arrows)
    : index_(std::move(index)),
      fibers_(std::move(fibers)),
      arrows_(std::move(arrows)) {
  if (!index_) throw InvalidDiagram("diagram without index category");
  if (fibers_.size() != index_->object_count()) {
    throw InvalidDiagram("expected one fiber per index object");
  }
  for (const auto& f : fibers_) {
    if (!f) throw InvalidDiagram("missing fiber category");
  }
  if (arrows_.size() != index_->morphism_count()) {
    throw InvalidDiagram("expected one functor per index morphism");
  }
}

void Diagram::require_valid() const {
  const auto report = validate(*this);
  if (!report.ok()) throw InvalidDiagram("invalid diagram: " + report.summary());
}

ValidationReport validate(const Diagram& d) {
  ValidationReport report;
  auto fail = [&report](std::string axiom, std::string message) {
    report.violations.push_back({std::move(axiom), std::move(message)});
  };
  const FinCategory& index = *d.index();
  if (!index.valid()) {
    fail("index", "index is not a category: " + index.report().summary());
    return report;
  }
  for (std::size_t a = 0; a < index.object_count(); ++a) {
    if (!d.fiber(a).valid()) {
      fail("fiber", "fiber over " + index.object_id(a) +
                        " is not a category: " + d.fiber(a).report().summary());
    }
  }
  if (!report.ok()) return report;

  for (std::size_t f = 0; f < index.morphism_count(); ++f) {
    const FunctorData& arrow = d.arrow(f);
    const std::string name = "F(" + index.morphism_id(f) + ")";
    if (!same_category(arrow.source(), d.fibers()[index.src(f)]) ||
        !same_category(arrow.target(), d.fibers()[index.dst(f)])) {
      fail("arrow-endpoints", name + " does not go between the fibers over " +
                                  index.object_id(index.src(f)) + " and " +
                                  index.object_id(index.dst(f)));
      continue;
    }
    const auto functor_report = validate(arrow);
    if (!functor_report.ok()) {
      fail("arrow-functor", name + " is not a functor: " + functor_report.summary());
    }
  }
  if (!report.ok()) return report;

  for (std::size_t a = 0; a < index.object_count(); ++a) {
    const std::size_t id = index.identity(a);
    if (!(d.arrow(id) == identity_functor(d.fibers()[a]))) {
      fail("strict-identity", "F(" + index.morphism_id(id) +
                                  ") is not the identity functor");
    }
  }
  for (std::size_t f = 0; f < index.morphism_count(); ++f) {
    for (std::size_t c = 0; c < index.object_count(); ++c) {
      for (std::size_t g : index.hom(index.dst(f), c)) {
        const std::size_t gf = *index.compose(g, f);
        const FunctorData composite = compose(d.arrow(g), d.arrow(f));
        if (!(composite.object_map() == d.arrow(gf).object_map() &&
              composite.morphism_map() == d.arrow(gf).morphism_map())) {
          fail("strict-composition",
               "F(" + index.morphism_id(g) + " o " + index.morphism_id(f) +
                   ") != F(" + index.morphism_id(g) + ") o F(" +
                   index.morphism_id(f) + ")");
        }
      }
    }
  }
  return report;
}

GrothendieckResult grothendieck(const Diagram& d) {
  d.require_valid();
  const FinCategory& index = *d.index();

  GrothendieckResult result;
  CategoryData data;
  std::vector<std::size_t> fiber_offset(index.object_count() + 1, 0);
  for (std::size_t a = 0; a < index.object_count(); ++a) {
    const FinCategory& fib = d.fiber(a);
    fiber_offset[a + 1] = fiber_offset[a] + fib.object_count();
    for (std::size_t x = 0; x < fib.object_count(); ++x) {
      data.objects.push_back(pair_id(index.object_id(a), fib.object_id(x)));
      result.object_index.emplace_back(a, x);
    }
  }

  struct TotalMorphism {
    std::size_t f, x, z;
  };
  std::vector<TotalMorphism> morphisms;
  auto morphism_name = [&](const TotalMorphism& m) {
    const FinCategory& src_fiber = d.fiber(index.src(m.f));
    const FinCategory& dst_fiber = d.fiber(index.dst(m.f));
    return "(" + index.morphism_id(m.f) + "," + src_fiber.object_id(m.x) + "," +
           dst_fiber.morphism_id(m.z) + ")";
  };
  // slot[f][x][z] is the total index of (f, x, z), npos if z does not start
  // at F(f)(x).
  std::vector<std::vector<std::vector<std::size_t>>> slot(index.morphism_count());
  for (std::size_t f = 0; f < index.morphism_count(); ++f) {
    const std::size_t a = index.src(f);
    const std::size_t b = index.dst(f);
    const FinCategory& src_fiber = d.fiber(a);
    const FinCategory& dst_fiber = d.fiber(b);
    const FunctorData& ff = d.arrow(f);
    slot[f].assign(src_fiber.object_count(),
                   std::vector<std::size_t>(dst_fiber.morphism_count(), npos));
    for (std::size_t x = 0; x < src_fiber.object_count(); ++x) {
      const std::size_t fx = ff.map_object(x);
      for (std::size_t y = 0; y < dst_fiber.object_count(); ++y) {
        for (std::size_t z : dst_fiber.hom(fx, y)) {
          slot[f][x][z] = morphisms.size();
          morphisms.push_back({f, x, z});
          data.morphisms.push_back({morphism_name(morphisms.back()),
                                    data.objects[fiber_offset[a] + x],
                                    data.objects[fiber_offset[b] + y]});
        }
      }
    }
  }
  for (std::size_t a = 0; a < index.object_count(); ++a) {
    const std::size_t ida = index.identity(a);
    const FinCategory& fib = d.fiber(a);
    for (std::size_t x = 0; x < fib.object_count(); ++x) {
      data.identities[data.objects[fiber_offset[a] + x]] =
          data.morphisms[slot[ida][x][fib.identity(x)]].id;
    }
  }
  // (g, w) o (f, z) = (g o f, w o F(g)(z)) whenever dst(f, z) = src(g, w).
  for (const auto& first : morphisms) {
    const std::size_t b = index.dst(first.f);
    const FinCategory& mid_fiber = d.fiber(b);
    const std::size_t y = mid_fiber.dst(first.z);
    for (std::size_t c = 0; c < index.object_count(); ++c) {
      for (std::size_t g : index.hom(b, c)) {
        const FinCategory& end_fiber = d.fiber(c);
        const FunctorData& fg = d.arrow(g);
        const std::size_t gz = fg.map_morphism(first.z);
        const std::size_t gf = *index.compose(g, first.f);
        const std::size_t gy = fg.map_object(y);
        for (std::size_t y2 = 0; y2 < end_fiber.object_count(); ++y2) {
          for (std::size_t w : end_fiber.hom(gy, y2)) {
            const std::size_t wz = *end_fiber.compose(w, gz);
            const std::size_t lhs = slot[g][y][w];
            const std::size_t rhs = slot[first.f][first.x][first.z];
            const std::size_t out = slot[gf][first.x][wz];
            data.composition.push_back({data.morphisms[lhs].id,
                                        data.morphisms[rhs].id,
                                        data.morphisms[out].id});
          }
        }
      }
    }
  }
  result.total = FinCategory(std::move(data));
  if (!result.total.valid()) {
    throw InvalidDiagram("Grothendieck construction is not a category: " +
                         result.total.report().summary());
  }
  return result;
}

std::pair<RatMatrix, RatMatrix> decompose_L1_L2(const Diagram& d) {
  d.require_valid();
  const FinCategory& index = *d.index();
  std::vector<std::size_t> offset(index.object_count() + 1, 0);
  std::vector<RatMatrix> blocks;
  for (std::size_t a = 0; a < index.object_count(); ++a) {
    offset[a + 1] = offset[a] + d.fiber(a).object_count();
    blocks.push_back(adjacency(d.fiber(a)));
  }
  const std::size_t n = offset.back();
  RatMatrix l1(n, n);
  for (std::size_t f = 0; f < index.morphism_count(); ++f) {
    const std::size_t a = index.src(f);
    const std::size_t b = index.dst(f);
    for (std::size_t x = 0; x < d.fiber(a).object_count(); ++x) {
      l1(offset[a] + x, offset[b] + d.arrow(f).map_object(x)) += 1;
    }
  }
  return {std::move(l1), block_diag(blocks)};
}

RatMatrix chi_diagram_row(const Diagram& d) {
  d.require_valid();
  const std::size_t m = d.index()->object_count();
  RatMatrix row(1, m);
  for (std::size_t a = 0; a < m; ++a) row(0, a) = chi(d.fiber(a));
  return row;
}

std::optional<RatMatrix> assembled_weighting(const Diagram& d) {
  d.require_valid();
  const auto lambda = weighting(adjacency(*d.index()));
  if (!lambda) return std::nullopt;
  std::vector<RatMatrix> parts;
  for (std::size_t a = 0; a < d.index()->object_count(); ++a) {
    const auto v = weighting(adjacency(d.fiber(a)));
    if (!v) return std::nullopt;
    parts.push_back(scale((*lambda)(a, 0), *v));
  }
  return stack_columns(parts);
}

InclusionExclusion chi_inclusion_exclusion(const Diagram& d) {
  d.require_valid();
  const RatMatrix index_adj = adjacency(*d.index());
  const RatMatrix row = chi_diagram_row(d);
  const RatMatrix total_adj = adjacency(grothendieck(d).total);

  InclusionExclusion out;
  out.predicted = (row * pinv(index_adj) * ones(index_adj.rows()))(0, 0);
  out.actual = chi_of_matrix(total_adj);

  bool fibers_weighted = true;
  bool fibers_lein = true;
  for (const auto& fib : d.fibers()) {
    const RatMatrix m = adjacency(*fib);
    const bool w = weighting(m).has_value();
    fibers_weighted = fibers_weighted && w;
    fibers_lein = fibers_lein && w && coweighting(m).has_value();
  }
  const bool poset_case = poset_order(*d.index()).has_value() && fibers_weighted;
  const bool coweighting_case = fibers_lein &&
                                weighting(index_adj).has_value() &&
                                coweighting(total_adj).has_value();
  out.applies = poset_case || coweighting_case;
  return out;
}

}  // namespace eulercat
