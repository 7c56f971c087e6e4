#include <doctest.h>

#include <array>
#include <set>
#include <string>
#include <tuple>

#include "eulercat/constructions.hpp"
#include "eulercat/errors.hpp"
#include "eulercat/generators.hpp"
#include "eulercat/io.hpp"
#include "eulercat/weights.hpp"
#include "oracle.hpp"

using namespace eulercat;

namespace {

const std::string kCorpus = EULERCAT_CORPUS_DIR;

Rational q(long n, long d = 1) { return make_rational(n, d); }

CategoryPtr ptr(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

Diagram load_diagram(const std::string& name) {
  io::Loader loader;
  return loader.diagram(kCorpus + "/" + name);
}

// [G(F)] by direct counting: ((a,x),(b,y)) gets one arrow per f: a -> b and
// per arrow F(f)(x) -> y in F(b).
RatMatrix counted_adjacency(const Diagram& d) {
  const FinCategory& idx = *d.index();
  std::vector<std::size_t> offset(idx.object_count() + 1, 0);
  for (std::size_t a = 0; a < idx.object_count(); ++a)
    offset[a + 1] = offset[a] + d.fiber(a).object_count();
  RatMatrix out(offset.back(), offset.back());
  for (std::size_t f = 0; f < idx.morphism_count(); ++f) {
    const std::size_t a = idx.src(f);
    const std::size_t b = idx.dst(f);
    for (std::size_t x = 0; x < d.fiber(a).object_count(); ++x)
      for (std::size_t y = 0; y < d.fiber(b).object_count(); ++y)
        out(offset[a] + x, offset[b] + y) += d.fiber(b).hom(d.arrow(f).map_object(x), y).size();
  }
  return out;
}

// Same objects, morphisms, identities and composites, listed in any order.
bool same_up_to_morphism_order(const FinCategory& a, const FinCategory& b) {
  auto key = [](const FinCategory& c) {
    std::set<std::array<std::string, 3>> morphisms;
    std::set<std::array<std::string, 3>> composites;
    for (const auto& m : c.data().morphisms) morphisms.insert({m.id, m.src, m.dst});
    for (const auto& e : c.data().composition) composites.insert({e.g, e.f, e.gf});
    return std::tuple(c.data().objects, c.data().identities, morphisms, composites);
  };
  return key(a) == key(b);
}

// Diagram over `index` with every fiber terminal.
Diagram terminal_fibers(const CategoryPtr& index) {
  auto point = ptr(terminal_category());
  std::vector<CategoryPtr> fibers(index->object_count(), point);
  std::vector<FunctorData> arrows(index->morphism_count(), identity_functor(point));
  return Diagram(index, fibers, arrows);
}

// Diagram over b <- a -> c with the given fibers and constant arrows.
Diagram over_pbc(CategoryPtr fa, CategoryPtr fb, CategoryPtr fc) {
  io::Loader loader;
  auto pbc = loader.category(kCorpus + "/poset_pbc.json");
  std::vector<FunctorData> arrows = {identity_functor(fa), identity_functor(fb),
                                     identity_functor(fc), constant_functor(fa, fb, 0),
                                     constant_functor(fa, fc, 0)};
  return Diagram(pbc, {fa, fb, fc}, arrows);
}

}  // namespace

TEST_CASE("named categories") {
  CHECK(adjacency(weighting_only_category()) == RatMatrix::from_rows({{3, 2}, {3, 2}}));
  CHECK(adjacency(indiscrete_category(3)) == RatMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  CHECK(adjacency(cyclic_group_category(4)) == RatMatrix::from_rows({{4}}));
  CHECK(discrete_category(0).object_count() == 0);
  const FinCategory op = opposite(weighting_only_category());
  REQUIRE(op.valid());
  CHECK(adjacency(op) == RatMatrix::from_rows({{3, 3}, {2, 2}}));
}

TEST_CASE("product") {
  const FinCategory c1 = weighting_only_category();
  const FinCategory tc = product(terminal_category(), c1);
  CHECK(adjacency(tc) == adjacency(c1));
  CHECK(chi(tc) == chi(c1));

  const FinCategory d6 = product(discrete_category(2), discrete_category(3));
  CHECK(adjacency(d6) == RatMatrix::identity(6));
  CHECK(chi(d6) == 6);

  const FinCategory c1c1 = product(c1, c1);
  REQUIRE(c1c1.valid());
  CHECK(chi(c1c1) == q(25, 169));
  CHECK(oracle::chi(kronecker(adjacency(c1), adjacency(c1))) == q(25, 169));

  CHECK_THROWS_AS(product(FinCategory(CategoryData{{"x"}, {}, {}, {}}), c1), InvalidCategory);
}

TEST_CASE("coproduct") {
  CHECK(chi(coproduct(terminal_category(), terminal_category())) == 2);

  io::Loader loader;
  const FinCategory c1 = *loader.category(kCorpus + "/c1.json");
  const FinCategory c2 = *loader.category(kCorpus + "/c2.json");
  const FinCategory s = coproduct(c1, c2);
  REQUIRE(s.valid());
  CHECK(chi(s) == q(176, 221));
  const RatMatrix blocks[] = {adjacency(c1), adjacency(c2)};
  CHECK(oracle::chi(block_diag(blocks)) == q(176, 221));

  const FinCategory e = coproduct(empty_category(), c1);
  CHECK(adjacency(e) == adjacency(c1));
  CHECK(chi(e) == chi(c1));
}

TEST_CASE("products and coproducts of random categories") {
  gen::Rng rng(51);
  for (int i = 0; i < 40; ++i) {
    const FinCategory a = gen::random_category(rng, {3, 3});
    const FinCategory b = gen::random_category(rng, {3, 3});
    const FinCategory p = product(a, b);
    const FinCategory s = coproduct(a, b);
    REQUIRE(p.valid());
    REQUIRE(s.valid());
    CHECK(adjacency(p) == kronecker(adjacency(a), adjacency(b)));
    const RatMatrix blocks[] = {adjacency(a), adjacency(b)};
    CHECK(adjacency(s) == block_diag(blocks));
    CHECK(chi(p) == oracle::chi(adjacency(a)) * oracle::chi(adjacency(b)));
    CHECK(chi(s) == oracle::chi(adjacency(a)) + oracle::chi(adjacency(b)));
  }
}

TEST_CASE("is_poset") {
  io::Loader loader;
  auto pbc = loader.category(kCorpus + "/poset_pbc.json");
  CHECK(is_poset(*pbc) == std::vector<std::string>{"a", "b", "c"});
  CHECK_FALSE(is_poset(cyclic_group_category(2)));
  CHECK_FALSE(is_poset(indiscrete_category(2)));
  CHECK(is_poset(discrete_category(3)) == std::vector<std::string>{"0", "1", "2"});

  // Listed as c, b, a: a must come first, then the rest in input order.
  const FinCategory cba = permute_objects(*pbc, {2, 1, 0});
  CHECK(is_poset(cba) == std::vector<std::string>{"a", "c", "b"});

  gen::Rng rng(52);
  for (int i = 0; i < 30; ++i) {
    const FinCategory p = gen::random_poset(rng, gen::uniform(rng, 1, 6));
    const auto order = poset_order(p);
    REQUIRE(order);
    const RatMatrix a = adjacency(permute_objects(p, *order));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      CHECK(a(r, r) == 1);
      for (std::size_t s = 0; s < r; ++s) CHECK(a(r, s) == 0);
    }
  }
}

TEST_CASE("grothendieck of the non-poset counterexample diagram") {
  const Diagram d = load_diagram("ex3_diagram.json");
  REQUIRE(validate(d).ok());
  const GrothendieckResult g = grothendieck(d);
  const RatMatrix expected = RatMatrix::from_rows({{3, 2, 2}, {3, 2, 2}, {3, 2, 2}});
  CHECK(adjacency(g.total) == expected);
  CHECK(g.total.data().objects == std::vector<std::string>{"(x,*)", "(y,b0)", "(y,b1)"});
  CHECK(g.object_index[2] == std::pair<std::size_t, std::size_t>{1, 1});

  io::Loader loader;
  CHECK(same_up_to_morphism_order(g.total, *loader.category(kCorpus + "/c2.json")));

  const auto [l1, l2] = decompose_L1_L2(d);
  CHECK(l1 * l2 == expected);
  CHECK(chi_diagram_row(d) == RatMatrix::from_rows({{1, 1}}));
}

TEST_CASE("the counterexample total adjacency does not depend on where p and q land") {
  io::Loader loader;
  auto c1 = loader.category(kCorpus + "/c1.json");
  auto point = loader.category(kCorpus + "/terminal.json");
  auto b = loader.category(kCorpus + "/indiscrete2.json");
  for (std::size_t target : {0, 1}) {
    std::vector<CategoryPtr> fibers = {point, b};
    std::vector<FunctorData> arrows;
    for (std::size_t f = 0; f < c1->morphism_count(); ++f) {
      const std::size_t s = c1->src(f);
      const std::size_t t = c1->dst(f);
      if (c1->is_identity(f) || (s == 0 && t == 0)) {
        arrows.push_back(identity_functor(fibers[s]));
      } else {
        arrows.push_back(constant_functor(fibers[s], fibers[t], t == 1 ? target : 0));
      }
    }
    const Diagram d(c1, fibers, arrows);
    REQUIRE(validate(d).ok());
    CHECK(adjacency(grothendieck(d).total) ==
          RatMatrix::from_rows({{3, 2, 2}, {3, 2, 2}, {3, 2, 2}}));
  }
}

TEST_CASE("grothendieck with terminal fibers recovers the index") {
  gen::Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    auto index = ptr(gen::random_category(rng, {4, 3}));
    const Diagram d = terminal_fibers(index);
    const FinCategory total = grothendieck(d).total;
    CHECK(adjacency(total) == adjacency(*index));
    CHECK(chi(total) == chi(*index));
    const auto [l1, l2] = decompose_L1_L2(d);
    CHECK(l2 == RatMatrix::identity(index->object_count()));
    CHECK(l1 == adjacency(*index));
    CHECK(chi_diagram_row(d) == transpose(ones(index->object_count())));
  }
}

TEST_CASE("grothendieck adjacency and separation on random diagrams") {
  gen::Rng rng(54);
  for (int i = 0; i < 40; ++i) {
    const Diagram d = i % 2 ? gen::random_diagram(rng, {4, 3}) : gen::random_poset_diagram(rng, {4, 3});
    REQUIRE(validate(d).ok());
    const FinCategory total = grothendieck(d).total;
    REQUIRE(total.valid());
    const RatMatrix counted = counted_adjacency(d);
    CHECK(adjacency(total) == counted);
    const auto [l1, l2] = decompose_L1_L2(d);
    CHECK(l1 * l2 == counted);
    std::vector<RatMatrix> blocks;
    for (const auto& f : d.fibers()) blocks.push_back(adjacency(*f));
    CHECK(l2 == block_diag(blocks));
  }
}

TEST_CASE("single-object index: L1 counts endomorphisms fixing fiber objects") {
  // Z/2 acting on discrete(2) by swapping the two objects.
  auto z2 = ptr(cyclic_group_category(2));
  auto two = ptr(discrete_category(2));
  const FunctorData swap(two, two, {1, 0}, {1, 0});
  const Diagram d(z2, {two}, {identity_functor(two), swap});
  REQUIRE(validate(d).ok());
  const auto [l1, l2] = decompose_L1_L2(d);
  CHECK(l1 == RatMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(l2 == RatMatrix::identity(2));
  CHECK(adjacency(grothendieck(d).total) == counted_adjacency(d));
  CHECK(chi(grothendieck(d).total) == 1);
}

TEST_CASE("weighting assembly and the row space on poset diagrams") {
  gen::Rng rng(55);
  for (int i = 0; i < 40; ++i) {
    const Diagram d = gen::random_poset_diagram(rng, {4, 3});
    const RatMatrix total = adjacency(grothendieck(d).total);
    const auto w = assembled_weighting(d);
    REQUIRE(w);
    CHECK(total * *w == ones(total.rows()));

    const auto [l1, l2] = decompose_L1_L2(d);
    const std::size_t r = oracle::rank(oracle::from(total), total.cols());
    CHECK(r == oracle::rank(oracle::from(l2), l2.cols()));
    const RatMatrix both[] = {transpose(total), transpose(l2)};
    const RatMatrix joined = hconcat(both, total.cols());
    CHECK(oracle::rank(oracle::from(joined), joined.cols()) == r);
  }
  CHECK_FALSE(assembled_weighting(load_diagram("ex3_diagram.json")) == std::nullopt);
}

TEST_CASE("inclusion-exclusion") {
  SUBCASE("the counterexample is outside the hypotheses and the formula fails") {
    const InclusionExclusion ie = chi_inclusion_exclusion(load_diagram("ex3_diagram.json"));
    CHECK(ie.predicted == q(5, 13));
    CHECK(ie.actual == q(7, 17));
    CHECK_FALSE(ie.applies);
  }
  SUBCASE("b <- a -> c with weighted fibers") {
    io::Loader loader;
    auto point = loader.category(kCorpus + "/terminal.json");
    auto d2 = loader.category(kCorpus + "/discrete2.json");
    auto d3 = loader.category(kCorpus + "/discrete3.json");
    auto z2 = loader.category(kCorpus + "/z2.json");
    auto c1 = loader.category(kCorpus + "/c1.json");
    const std::vector<std::array<CategoryPtr, 3>> assignments = {
        {point, point, point}, {point, d2, z2}, {z2, point, d3}, {c1, d2, c1}, {d3, z2, c1}};
    for (const auto& [fa, fb, fc] : assignments) {
      const Diagram d = over_pbc(fa, fb, fc);
      REQUIRE(validate(d).ok());
      const InclusionExclusion ie = chi_inclusion_exclusion(d);
      CHECK(ie.applies);
      CHECK(ie.predicted == chi(*fb) + chi(*fc) - chi(*fa));
      CHECK(ie.actual == ie.predicted);
      CHECK(ie.actual == oracle::chi(counted_adjacency(d)));
    }
  }
  SUBCASE("terminal fibers over random posets") {
    gen::Rng rng(56);
    for (int i = 0; i < 20; ++i) {
      auto p = ptr(gen::random_poset(rng, gen::uniform(rng, 1, 5)));
      const InclusionExclusion ie = chi_inclusion_exclusion(terminal_fibers(p));
      CHECK(ie.applies);
      CHECK(ie.predicted == chi(*p));
      CHECK(ie.actual == chi(*p));
    }
  }
  SUBCASE("whenever the hypotheses hold the two sides agree") {
    gen::Rng rng(57);
    int applied = 0;
    for (int i = 0; i < 60; ++i) {
      const Diagram d = gen::random_diagram(rng, {4, 3});
      const InclusionExclusion ie = chi_inclusion_exclusion(d);
      if (!ie.applies) continue;
      ++applied;
      CHECK(ie.predicted == ie.actual);
    }
    CHECK(applied > 5);
  }
}

TEST_CASE("invalid diagrams") {
  auto two = ptr(discrete_category(2));
  auto z2 = ptr(cyclic_group_category(2));
  CHECK_THROWS_AS(Diagram(z2, {}, {}), InvalidDiagram);

  SUBCASE("identity sent to a non-identity functor") {
    const FunctorData swap(two, two, {1, 0}, {1, 0});
    const Diagram d(z2, {two}, {swap, swap});
    CHECK_FALSE(validate(d).ok());
    CHECK_THROWS_AS(grothendieck(d), InvalidDiagram);
    CHECK_THROWS_AS(chi_inclusion_exclusion(d), InvalidDiagram);
  }
  SUBCASE("composition not preserved") {
    // g o g = 1 in Z/2, but the constant functor squares to itself.
    const Diagram d(z2, {two}, {identity_functor(two), constant_functor(two, two, 0)});
    CHECK_FALSE(validate(d).ok());
    CHECK_THROWS_AS(decompose_L1_L2(d), InvalidDiagram);
  }
  SUBCASE("arrow between the wrong fibers") {
    io::Loader loader;
    auto pbc = loader.category(kCorpus + "/poset_pbc.json");
    auto point = ptr(terminal_category());
    const Diagram d(pbc, {point, two, point},
                    {identity_functor(point), identity_functor(two), identity_functor(point),
                     identity_functor(point), identity_functor(point)});
    CHECK_FALSE(validate(d).ok());
  }
}
