#include "eulercat/laws.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

#include "eulercat/constructions.hpp"
#include "eulercat/generators.hpp"
#include "eulercat/io.hpp"
#include "eulercat/weights.hpp"

namespace eulercat {

using nlohmann::json;

namespace {

enum Law : std::size_t {
  kPenrose,
  kPermutation,
  kAdditivity,
  kMultiplicativity,
  kSls,
  kSeparation,
  kAssembly,
  kRowSpace,
  kIncExc,
  kIncExcGeneral,
  kLawCount
};

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Skip;
  json witness;
};

using InstanceResult = std::array<Outcome, kLawCount>;

Outcome pass() { return {Status::Pass, nullptr}; }
Outcome skip() { return {Status::Skip, nullptr}; }
Outcome fail(json witness) { return {Status::Fail, std::move(witness)}; }

json category_summary(const FinCategory& c) {
  return json{{"objects", c.data().objects}, {"adjacency", io::to_json(adjacency(c))}};
}

json diagram_summary(const Diagram& d) {
  json fibers = json::array();
  for (const auto& f : d.fibers()) fibers.push_back(io::to_json(adjacency(*f)));
  return json{{"index", category_summary(*d.index())}, {"fiber_adjacency", fibers}};
}

Outcome penrose(gen::Rng& rng, const PinvFn& pinv_fn) {
  const RatMatrix m = gen::random_square_matrix(rng, gen::uniform(rng, 1, 8), -3, 5);
  const RatMatrix p = pinv_fn(m);
  const RatMatrix pm = p * m;
  const RatMatrix mp = m * p;
  std::vector<std::string> broken;
  if (p.rows() != m.cols() || p.cols() != m.rows()) {
    broken.push_back("shape");
  } else {
    if (mp * m != m) broken.push_back("M P M = M");
    if (pm * p != p) broken.push_back("P M P = P");
    if (transpose(pm) != pm) broken.push_back("(P M)^T = P M");
    if (transpose(mp) != mp) broken.push_back("(M P)^T = M P");
  }
  if (broken.empty()) return pass();
  return fail({{"matrix", io::to_json(m)}, {"pinv", io::to_json(p)}, {"violated", broken}});
}

Outcome permutation(gen::Rng& rng, const gen::Bounds& bounds) {
  const FinCategory c = gen::random_category(rng, bounds);
  const auto order = gen::random_permutation(rng, c.object_count());
  const FinCategory p = permute_objects(c, order);
  const RatMatrix a = adjacency(c);
  const RatMatrix b = adjacency(p);
  bool conjugate = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      conjugate = conjugate && b(i, j) == a(order[i], order[j]);
  const Rational before = chi(c);
  const Rational after = chi(p);
  if (conjugate && before == after) return pass();
  return fail({{"category", category_summary(c)},
               {"order", order},
               {"chi", to_string(before)},
               {"chi_permuted", to_string(after)}});
}

Outcome additivity(const FinCategory& a, const FinCategory& b) {
  const FinCategory s = coproduct(a, b);
  const RatMatrix blocks[] = {adjacency(a), adjacency(b)};
  const Rational lhs = chi(s);
  const Rational rhs = chi(a) + chi(b);
  if (adjacency(s) == block_diag(blocks) && lhs == rhs) return pass();
  return fail({{"a", category_summary(a)},
               {"b", category_summary(b)},
               {"chi_coproduct", to_string(lhs)},
               {"chi_sum", to_string(rhs)}});
}

Outcome multiplicativity(const FinCategory& a, const FinCategory& b) {
  const FinCategory p = product(a, b);
  const Rational lhs = chi(p);
  const Rational rhs = chi(a) * chi(b);
  if (adjacency(p) == kronecker(adjacency(a), adjacency(b)) && lhs == rhs) return pass();
  return fail({{"a", category_summary(a)},
               {"b", category_summary(b)},
               {"chi_product", to_string(lhs)},
               {"chi_times", to_string(rhs)}});
}

Outcome sls(const FinCategory& c) {
  const RatMatrix m = adjacency(c);
  if (!weighting(m) || !coweighting(m)) return skip();
  if (check_sls(m)) return pass();
  return fail({{"category", category_summary(c)}});
}

Outcome separation(const Diagram& d) {
  const auto [l1, l2] = decompose_L1_L2(d);
  const RatMatrix total = adjacency(grothendieck(d).total);
  if (l1 * l2 == total) return pass();
  return fail({{"diagram", diagram_summary(d)},
               {"total", io::to_json(total)},
               {"L1", io::to_json(l1)},
               {"L2", io::to_json(l2)}});
}

Outcome assembly(const Diagram& d) {
  const auto w = assembled_weighting(d);
  const RatMatrix total = adjacency(grothendieck(d).total);
  if (w && total * *w == ones(total.rows())) return pass();
  return fail({{"diagram", diagram_summary(d)},
               {"total", io::to_json(total)},
               {"assembled", w ? io::entries_json(*w) : json(nullptr)}});
}

Outcome row_space(const Diagram& d) {
  const auto [l1, l2] = decompose_L1_L2(d);
  const RatMatrix total = l1 * l2;
  const std::size_t r = rank(total);
  // Row(total) + Row(L2) has the same rank as Row(total) iff L2's rows lie in it.
  const RatMatrix both[] = {transpose(total), transpose(l2)};
  const bool ok = r == rank(l2) && rank(hconcat(both, total.cols())) == r;
  if (ok) return pass();
  return fail({{"diagram", diagram_summary(d)}, {"total", io::to_json(total)}});
}

Outcome inclusion_exclusion(const Diagram& d, bool require_hypotheses) {
  const InclusionExclusion ie = chi_inclusion_exclusion(d);
  if (!ie.applies) {
    if (!require_hypotheses) return skip();
    return fail({{"diagram", diagram_summary(d)}, {"reason", "hypotheses not met"}});
  }
  if (ie.predicted == ie.actual) return pass();
  return fail({{"diagram", diagram_summary(d)},
               {"predicted", to_string(ie.predicted)},
               {"actual", to_string(ie.actual)}});
}

template <typename F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return fail({{"exception", e.what()}});
  }
}

InstanceResult run_instance(const LawRunConfig& config, std::size_t i,
                            const PinvFn& pinv_fn) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
  gen::Rng rng(seq);
  const gen::Bounds bounds{config.max_objects, config.max_hom};

  InstanceResult r;
  r[kPenrose] = guarded([&] { return penrose(rng, pinv_fn); });
  r[kPermutation] = guarded([&] { return permutation(rng, bounds); });

  const FinCategory a = gen::random_category(rng, bounds);
  const FinCategory b = gen::random_category(rng, bounds);
  r[kAdditivity] = guarded([&] { return additivity(a, b); });
  r[kMultiplicativity] = guarded([&] { return multiplicativity(a, b); });
  r[kSls] = guarded([&] { return sls(a); });

  const Diagram poset_diagram = gen::random_poset_diagram(rng, bounds);
  const Diagram general_diagram = gen::random_diagram(rng, bounds);
  r[kSeparation] = guarded([&] {
    Outcome o = separation(poset_diagram);
    return o.status == Status::Pass ? separation(general_diagram) : o;
  });
  r[kAssembly] = guarded([&] { return assembly(poset_diagram); });
  r[kRowSpace] = guarded([&] { return row_space(poset_diagram); });
  r[kIncExc] = guarded([&] { return inclusion_exclusion(poset_diagram, true); });
  r[kIncExcGeneral] = guarded([&] { return inclusion_exclusion(general_diagram, false); });
  return r;
}

}  // namespace

void validate(const LawRunConfig& config) {
  if (config.count < 1) throw std::invalid_argument("count must be at least 1");
  if (config.max_objects < 1) throw std::invalid_argument("max_objects must be at least 1");
  if (config.max_hom < 1) throw std::invalid_argument("max_hom must be at least 1");
}

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = {
      "penrose",           "permutation_invariance", "additivity",
      "multiplicativity",  "sls",                    "separation",
      "weighting_assembly", "row_space",             "inclusion_exclusion",
      "inclusion_exclusion_general"};
  return names;
}

bool LawSummary::ok() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& l) { return l.failed == 0; });
}

const LawResult* LawSummary::find(const std::string& name) const {
  for (const auto& l : laws)
    if (l.name == name) return &l;
  return nullptr;
}

LawSummary run_laws(const LawRunConfig& config, const PinvFn& pinv_fn) {
  validate(config);
  std::vector<InstanceResult> results(config.count);

  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, config.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.count; i = next++) {
      try {
        results[i] = run_instance(config, i, pinv_fn);
      } catch (const std::exception& e) {
        // Generator failure: charge it to every law.
        results[i].fill(fail({{"exception", e.what()}}));
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  LawSummary summary{config, {}};
  for (std::size_t law = 0; law < kLawCount; ++law) {
    LawResult lr;
    lr.name = law_names()[law];
    for (std::size_t i = 0; i < config.count; ++i) {
      const Outcome& o = results[i][law];
      switch (o.status) {
        case Status::Pass: ++lr.passed; break;
        case Status::Skip: ++lr.skipped; break;
        case Status::Fail:
          if (lr.failed++ == 0) {
            json w = o.witness;
            w["instance"] = i;
            lr.first_failure = std::move(w);
          }
          break;
      }
    }
    summary.laws.push_back(std::move(lr));
  }
  return summary;
}

json to_json(const LawSummary& s) {
  json laws = json::array();
  for (const auto& l : s.laws) {
    laws.push_back({{"law", l.name},
                    {"passed", l.passed},
                    {"failed", l.failed},
                    {"skipped", l.skipped},
                    {"first_failure", l.first_failure ? *l.first_failure : json(nullptr)}});
  }
  return json{{"seed", s.config.seed},
              {"count", s.config.count},
              {"max_objects", s.config.max_objects},
              {"max_hom", s.config.max_hom},
              {"ok", s.ok()},
              {"laws", laws}};
}

}  // namespace eulercat
