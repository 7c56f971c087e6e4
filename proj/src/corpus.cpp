#include "eulercat/corpus.hpp"

#include "eulercat/constructions.hpp"
#include "eulercat/errors.hpp"
#include "eulercat/io.hpp"
#include "eulercat/weights.hpp"

namespace eulercat {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json rat(const Rational& q) { return to_string(q); }

json nested(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json flat(const std::optional<RatMatrix>& m) {
  if (!m) return nullptr;
  json out = json::array();
  for (const auto& e : m->entries()) out.push_back(rat(e));
  return out;
}

// Integers and parseable rational strings become canonical strings so that
// 1, "1" and "2/2" all compare equal.
json normalize(const json& j) {
  if (j.is_number_integer()) return rat(io::rational_from_json(j));
  if (j.is_string()) {
    try {
      return rat(parse_rational(j.get<std::string>()));
    } catch (const std::exception&) {
      return j;
    }
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(normalize(e));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = normalize(v);
    return out;
  }
  return j;
}

json matrix_facts(const RatMatrix& m) {
  json f{{"pinv", nested(pinv(m))},
         {"chi", rat(chi_of_matrix(m))},
         {"rank", rank(m)},
         {"weighting", flat(weighting(m))},
         {"coweighting", flat(coweighting(m))}};
  try {
    f["sls"] = check_sls(m);
  } catch (const Error&) {
    f["sls"] = nullptr;
  }
  return f;
}

json category_facts(const FinCategory& c) {
  json f{{"valid", c.valid()}, {"violations", c.report().violations.size()}};
  if (!c.valid()) return f;
  const ChiReport r = chi_report(c);
  const RatMatrix a = adjacency(c);
  f["adjacency"] = nested(a);
  f["chi"] = rat(r.chi);
  f["has_weighting"] = r.has_weighting();
  f["has_coweighting"] = r.has_coweighting();
  f["lein_defined"] = r.lein_defined();
  f["weighting"] = flat(r.weighting);
  f["coweighting"] = flat(r.coweighting);
  const auto order = is_poset(c);
  f["poset_order"] = order ? json(*order) : json(nullptr);
  return f;
}

json functor_pair_facts(const FunctorData& l, const FunctorData& r) {
  json f{{"left_matrix", nested(functor_matrix(l))},
         {"right_matrix", nested(functor_matrix(r))},
         {"adjunction_matrices", check_adjunction_matrices(l, r)}};
  try {
    f["transport"] = chi_adjunction_transport(*l.source(), *l.target(), l, r);
    f["transport_error"] = nullptr;
  } catch (const PreconditionFailed& e) {
    f["transport"] = "PreconditionFailed";
    f["transport_error"] = e.what();
  }
  return f;
}

json diagram_facts(const Diagram& d) {
  const ValidationReport report = validate(d);
  json f{{"valid", report.ok()}};
  if (!report.ok()) return f;
  const auto [l1, l2] = decompose_L1_L2(d);
  const RatMatrix total = adjacency(grothendieck(d).total);
  const InclusionExclusion ie = chi_inclusion_exclusion(d);
  f["adjacency"] = nested(total);
  f["chi_row"] = flat(chi_diagram_row(d));
  f["predicted"] = rat(ie.predicted);
  f["actual"] = rat(ie.actual);
  f["applies"] = ie.applies;
  f["separation"] = l1 * l2 == total;
  f["assembled_weighting"] = flat(assembled_weighting(d));
  return f;
}

}  // namespace

std::vector<CorpusEntry> load_manifest(const fs::path& manifest) {
  const json j = io::read_json_file(manifest);
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError(manifest.string() + ": expected {\"entries\": [...]}");
  }
  const fs::path dir = manifest.parent_path();
  std::vector<CorpusEntry> out;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("name") || !e.contains("kind") || !e.contains("path")) {
      throw ParseError(manifest.string() + ": entries need name, kind and path");
    }
    CorpusEntry entry;
    entry.name = e["name"].get<std::string>();
    entry.kind = e["kind"].get<std::string>();
    entry.path = dir / e["path"].get<std::string>();
    if (e.contains("right")) entry.right = dir / e["right"].get<std::string>();
    if (e.contains("expected")) entry.expected = e["expected"];
    if (entry.kind != "matrix" && entry.kind != "category" &&
        entry.kind != "functor-pair" && entry.kind != "diagram") {
      throw ParseError(manifest.string() + ": entry " + entry.name +
                       " has unknown kind " + entry.kind);
    }
    if (entry.kind == "functor-pair" && !entry.right) {
      throw ParseError(manifest.string() + ": functor-pair " + entry.name +
                       " needs \"right\"");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

json corpus_facts(const CorpusEntry& entry) {
  io::Loader loader;
  if (entry.kind == "matrix") return matrix_facts(loader.matrix(entry.path));
  if (entry.kind == "category") return category_facts(*loader.category(entry.path));
  if (entry.kind == "functor-pair") {
    return functor_pair_facts(loader.functor(entry.path), loader.functor(*entry.right));
  }
  return diagram_facts(loader.diagram(entry.path));
}

std::vector<CorpusCheck> run_corpus(const fs::path& manifest) {
  std::vector<CorpusCheck> checks;
  for (const auto& entry : load_manifest(manifest)) {
    const json facts = corpus_facts(entry);
    for (const auto& [name, expected] : entry.expected.items()) {
      CorpusCheck c{entry.name, name, false, expected, nullptr};
      if (facts.contains(name)) {
        c.actual = facts[name];
        c.ok = normalize(expected) == normalize(c.actual);
      }
      checks.push_back(std::move(c));
    }
  }
  return checks;
}

}  // namespace eulercat
