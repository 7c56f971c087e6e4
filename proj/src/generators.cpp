#include "eulercat/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "eulercat/weights.hpp"

namespace eulercat::gen {

namespace {

// Random strict order on 0..n-1 compatible with the natural order: below[i][j]
// for i < j, transitively closed.
std::vector<std::vector<bool>> random_dag_closure(Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) below[i][j] = uniform(rng, 0, 1) == 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (below[i][k] && below[k][j]) below[i][j] = true;
  return below;
}

void shuffle_objects(Rng& rng, CategoryData& d) {
  const auto perm = random_permutation(rng, d.objects.size());
  std::vector<std::string> objects(d.objects.size());
  for (std::size_t i = 0; i < perm.size(); ++i) objects[i] = d.objects[perm[i]];
  d.objects = std::move(objects);
}

}  // namespace

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates with our own draws so the result does not depend on the
  // standard library's shuffle.
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform(rng, 0, i - 1)]);
  return perm;
}

RatMatrix random_square_matrix(Rng& rng, std::size_t size, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  RatMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = entry(rng);
  return m;
}

FinCategory random_poset(Rng& rng, std::size_t n) {
  const auto below = random_dag_closure(rng, n);
  CategoryData d;
  auto obj = [](std::size_t i) { return "p" + std::to_string(i); };
  auto arrow = [&](std::size_t i, std::size_t j) {
    return i == j ? "1_" + obj(i) : obj(i) + "<" + obj(j);
  };
  auto related = [&](std::size_t i, std::size_t j) { return i == j || below[i][j]; };
  for (std::size_t i = 0; i < n; ++i) {
    d.objects.push_back(obj(i));
    d.identities[obj(i)] = arrow(i, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (related(i, j)) d.morphisms.push_back({arrow(i, j), obj(i), obj(j)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (related(i, j) && related(j, k))
          d.composition.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
  shuffle_objects(rng, d);
  return FinCategory(std::move(d));
}

FinCategory random_skeletal_category(Rng& rng, std::size_t n,
                                     std::size_t max_hom) {
  enum class Monoid { Trivial, Chain, LeftZero, RightZero };
  struct Arrow {
    std::size_t src, dst;
    std::size_t k;  // 0 is the identity (endo) or the canonical arrow (strict)
    std::string id;
  };

  const auto below = random_dag_closure(rng, n);
  auto obj = [](std::size_t i) { return "o" + std::to_string(i); };

  std::vector<Monoid> monoid(n);
  std::vector<std::size_t> monoid_size(n);
  std::vector<Arrow> arrows;
  // first[i][j]: index of the first arrow i -> j, npos if none.
  std::vector<std::vector<std::size_t>> first(n, std::vector<std::size_t>(n, npos));
  for (std::size_t i = 0; i < n; ++i) {
    monoid_size[i] = max_hom <= 1 ? 1 : uniform(rng, 1, max_hom);
    monoid[i] = monoid_size[i] == 1 ? Monoid::Trivial
                                    : static_cast<Monoid>(uniform(rng, 1, 3));
    first[i][i] = arrows.size();
    arrows.push_back({i, i, 0, "1_" + obj(i)});
    for (std::size_t k = 1; k < monoid_size[i]; ++k) {
      arrows.push_back({i, i, k, obj(i) + ".m" + std::to_string(k)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      first[i][j] = arrows.size();
      const std::size_t count = uniform(rng, 1, std::max<std::size_t>(1, max_hom));
      for (std::size_t k = 0; k < count; ++k) {
        arrows.push_back({i, j, k, obj(i) + ">" + obj(j) + "#" + std::to_string(k)});
      }
    }
  }

  auto endo_product = [&](std::size_t a, std::size_t g, std::size_t f) {
    const std::size_t top = monoid_size[a] - 1;
    switch (monoid[a]) {
      case Monoid::Chain: return std::min(g + f, top);
      case Monoid::LeftZero: return g;
      case Monoid::RightZero: return f;
      case Monoid::Trivial: break;
    }
    return std::size_t{0};
  };

  CategoryData d;
  for (std::size_t i = 0; i < n; ++i) {
    d.objects.push_back(obj(i));
    d.identities[obj(i)] = "1_" + obj(i);
  }
  for (const auto& a : arrows) d.morphisms.push_back({a.id, obj(a.src), obj(a.dst)});
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (g.src != f.dst) continue;
      const bool f_id = f.src == f.dst && f.k == 0;
      const bool g_id = g.src == g.dst && g.k == 0;
      std::string gf;
      if (f_id) {
        gf = g.id;
      } else if (g_id) {
        gf = f.id;
      } else if (f.src == f.dst && g.src == g.dst) {
        gf = arrows[first[f.src][f.src] + endo_product(f.src, g.k, f.k)].id;
      } else {
        gf = arrows[first[f.src][g.dst]].id;
      }
      d.composition.push_back({g.id, f.id, gf});
    }
  }
  shuffle_objects(rng, d);
  return FinCategory(std::move(d));
}

FinCategory replicate_objects(const FinCategory& base,
                              const std::vector<std::size_t>& copies) {
  base.require_valid("base category");
  CategoryData d;
  auto obj = [&](std::size_t a, std::size_t i) {
    return "(" + base.object_id(a) + "#" + std::to_string(i) + ")";
  };
  auto mor = [&](std::size_t f, std::size_t i, std::size_t j) {
    return "(" + base.morphism_id(f) + "@" + std::to_string(i) + ">" +
           std::to_string(j) + ")";
  };
  for (std::size_t a = 0; a < base.object_count(); ++a) {
    for (std::size_t i = 0; i < copies[a]; ++i) {
      d.objects.push_back(obj(a, i));
      d.identities[obj(a, i)] = mor(base.identity(a), i, i);
    }
  }
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    for (std::size_t i = 0; i < copies[base.src(f)]; ++i)
      for (std::size_t j = 0; j < copies[base.dst(f)]; ++j)
        d.morphisms.push_back({mor(f, i, j), obj(base.src(f), i), obj(base.dst(f), j)});
  }
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    for (std::size_t c = 0; c < base.object_count(); ++c) {
      for (std::size_t g : base.hom(base.dst(f), c)) {
        const std::size_t gf = *base.compose(g, f);
        for (std::size_t i = 0; i < copies[base.src(f)]; ++i)
          for (std::size_t j = 0; j < copies[base.dst(f)]; ++j)
            for (std::size_t k = 0; k < copies[c]; ++k)
              d.composition.push_back({mor(g, j, k), mor(f, i, j), mor(gf, i, k)});
      }
    }
  }
  return FinCategory(std::move(d));
}

FinCategory random_category(Rng& rng, const Bounds& bounds) {
  const std::size_t n_max = std::max<std::size_t>(1, bounds.max_objects);
  const std::size_t h_max = std::max<std::size_t>(1, bounds.max_hom);
  const std::size_t kind = uniform(rng, 0, 9);
  switch (kind) {
    case 4:
    case 5: {
      if (n_max < 2) break;
      const std::size_t base_n = uniform(rng, 1, n_max / 2 + n_max % 2);
      const FinCategory base = random_skeletal_category(rng, base_n, h_max);
      std::vector<std::size_t> copies(base_n, 1);
      std::size_t total = base_n;
      for (std::size_t a = 0; a < base_n && total < n_max; ++a) {
        if (uniform(rng, 0, 1) == 1) {
          ++copies[a];
          ++total;
        }
      }
      return replicate_objects(base, copies);
    }
    case 6:
      return cyclic_group_category(uniform(rng, 1, std::max<std::size_t>(2, h_max)));
    case 7:
      if (n_max >= 2 && h_max >= 3) return weighting_only_category();
      break;
    case 8:
      if (n_max >= 2 && h_max >= 3) return opposite(weighting_only_category());
      break;
    case 9: {
      if (n_max < 2) break;
      const std::size_t left = uniform(rng, 1, n_max - 1);
      const FinCategory a = random_category(rng, {left, h_max});
      const FinCategory b = random_category(rng, {n_max - left, h_max});
      return coproduct(a, b);
    }
    default:
      break;
  }
  return random_skeletal_category(rng, uniform(rng, 1, n_max), h_max);
}

FinCategory random_weighted_category(Rng& rng, const Bounds& bounds) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    FinCategory c = random_category(rng, bounds);
    if (weighting(adjacency(c))) return c;
  }
  return terminal_category();
}

Diagram random_poset_diagram(Rng& rng, const Bounds& bounds) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, bounds.max_objects));
  auto index = std::make_shared<const FinCategory>(random_poset(rng, n));

  std::vector<CategoryPtr> fibers;
  const bool shared_fiber = uniform(rng, 0, 2) == 0;
  if (shared_fiber) {
    auto fiber = std::make_shared<const FinCategory>(random_weighted_category(rng, bounds));
    fibers.assign(n, fiber);
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      fibers.push_back(
          std::make_shared<const FinCategory>(random_weighted_category(rng, bounds)));
    }
  }
  std::vector<std::size_t> target_object(n);
  for (std::size_t a = 0; a < n; ++a) {
    target_object[a] = uniform(rng, 0, fibers[a]->object_count() - 1);
  }

  std::vector<FunctorData> arrows;
  for (std::size_t f = 0; f < index->morphism_count(); ++f) {
    const std::size_t a = index->src(f);
    const std::size_t b = index->dst(f);
    if (index->is_identity(f) || shared_fiber) {
      arrows.push_back(identity_functor(fibers[a]));
    } else {
      arrows.push_back(constant_functor(fibers[a], fibers[b], target_object[b]));
    }
  }
  return Diagram(index, std::move(fibers), std::move(arrows));
}

Diagram random_diagram(Rng& rng, const Bounds& bounds) {
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, bounds.max_objects));
  auto index = std::make_shared<const FinCategory>(
      random_skeletal_category(rng, n, std::max<std::size_t>(1, bounds.max_hom)));
  std::vector<CategoryPtr> fibers;
  std::vector<std::size_t> target_object;
  for (std::size_t a = 0; a < n; ++a) {
    fibers.push_back(std::make_shared<const FinCategory>(random_category(rng, bounds)));
    target_object.push_back(uniform(rng, 0, fibers.back()->object_count() - 1));
  }
  std::vector<FunctorData> arrows;
  for (std::size_t f = 0; f < index->morphism_count(); ++f) {
    const std::size_t a = index->src(f);
    const std::size_t b = index->dst(f);
    if (index->is_identity(f)) {
      arrows.push_back(identity_functor(fibers[a]));
    } else {
      arrows.push_back(constant_functor(fibers[a], fibers[b], target_object[b]));
    }
  }
  return Diagram(index, std::move(fibers), std::move(arrows));
}

}  // namespace eulercat::gen
