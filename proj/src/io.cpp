#include "eulercat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eulercat/errors.hpp"

namespace eulercat::io {

namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> string_map(const json& j,
                                              const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be a JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ParseError(what + "[" + k + "] must be a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(where + ": missing field \"" + name + "\"");
  }
  return j.at(name);
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

json to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(j.dump(), 10));
    return Rational(mpz_class(std::to_string(j.get<long long>()), 10));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("matrix entry must be an integer or a \"p/q\" string, got " +
                   j.dump());
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RatMatrix matrix_from_json(const json& j) {
  const std::string where = "matrix";
  const json& rj = field(j, "rows", where);
  const json& cj = field(j, "cols", where);
  const json& ej = field(j, "entries", where);
  if (!rj.is_number_unsigned() || !cj.is_number_unsigned()) {
    throw ParseError("matrix rows/cols must be non-negative integers");
  }
  const auto rows = rj.get<std::size_t>();
  const auto cols = cj.get<std::size_t>();
  if (!ej.is_array() || ej.size() != rows) {
    throw ParseError("matrix entries must be an array of " +
                     std::to_string(rows) + " rows");
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (const auto& row : ej) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("every matrix row must have " + std::to_string(cols) +
                       " entries");
    }
    for (const auto& e : row) entries.push_back(rational_from_json(e));
  }
  return RatMatrix(rows, cols, std::move(entries));
}

json entries_json(const RatMatrix& m) {
  json out = json::array();
  for (const auto& e : m.entries()) out.push_back(to_json(e));
  return out;
}

json to_json(const CategoryData& c) {
  json morphisms = json::array();
  for (const auto& m : c.morphisms) {
    morphisms.push_back({{"id", m.id}, {"src", m.src}, {"dst", m.dst}});
  }
  json composition = json::array();
  for (const auto& e : c.composition) composition.push_back({e.g, e.f, e.gf});
  return json{{"objects", c.objects},
              {"morphisms", morphisms},
              {"identities", c.identities},
              {"composition", composition}};
}

CategoryData category_from_json(const json& j) {
  const std::string where = "category";
  CategoryData c;
  const json& objects = field(j, "objects", where);
  if (!objects.is_array()) throw ParseError("\"objects\" must be an array");
  for (const auto& o : objects) c.objects.push_back(as_string(o, "object id"));

  const json& morphisms = field(j, "morphisms", where);
  if (!morphisms.is_array()) throw ParseError("\"morphisms\" must be an array");
  for (const auto& m : morphisms) {
    c.morphisms.push_back({as_string(field(m, "id", "morphism"), "morphism id"),
                           as_string(field(m, "src", "morphism"), "morphism src"),
                           as_string(field(m, "dst", "morphism"), "morphism dst")});
  }
  c.identities = string_map(field(j, "identities", where), "identities");

  const json& composition = field(j, "composition", where);
  if (!composition.is_array()) throw ParseError("\"composition\" must be an array");
  for (const auto& e : composition) {
    if (!e.is_array() || e.size() != 3) {
      throw ParseError("composition entries must be [g, f, gf] triples");
    }
    c.composition.push_back({as_string(e[0], "composition entry"),
                             as_string(e[1], "composition entry"),
                             as_string(e[2], "composition entry")});
  }
  return c;
}

json to_json(const ChiReport& r) {
  return json{{"chi", to_string(r.chi)},
              {"has_weighting", r.has_weighting()},
              {"has_coweighting", r.has_coweighting()},
              {"lein_defined", r.lein_defined()},
              {"weighting", r.weighting ? entries_json(*r.weighting) : json(nullptr)},
              {"coweighting",
               r.coweighting ? entries_json(*r.coweighting) : json(nullptr)}};
}

json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"axiom", v.axiom}, {"message", v.message}});
  }
  return json{{"valid", r.ok()}, {"violations", violations}};
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

CategoryPtr Loader::category(const fs::path& path) {
  std::error_code ec;
  fs::path key = fs::weakly_canonical(path, ec);
  if (ec) key = path;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  try {
    auto c = make_category(category_from_json(read_json_file(path)));
    cache_.emplace(key, c);
    return c;
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

RatMatrix Loader::matrix(const fs::path& path) {
  try {
    return matrix_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

FunctorData Loader::functor(const fs::path& path) {
  const json j = read_json_file(path);
  const std::string where = path.string();
  const fs::path dir = path.parent_path();
  auto source = category(dir / as_string(field(j, "source", where), "source"));
  auto target = category(dir / as_string(field(j, "target", where), "target"));
  return FunctorData::from_ids(source, target,
                               string_map(field(j, "objects", where), "objects"),
                               string_map(field(j, "morphisms", where), "morphisms"));
}

Diagram Loader::diagram(const fs::path& path) {
  const json j = read_json_file(path);
  const std::string where = path.string();
  const fs::path dir = path.parent_path();
  auto index = category(dir / as_string(field(j, "index", where), "index"));
  index->require_valid("index");

  const auto fiber_paths = string_map(field(j, "fibers", where), "fibers");
  std::vector<CategoryPtr> fibers(index->object_count());
  for (const auto& [obj, p] : fiber_paths) {
    auto a = index->object_index(obj);
    if (!a) throw ParseError(where + ": fiber for unknown index object " + obj);
    fibers[*a] = category(dir / p);
  }
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    if (!fibers[a]) {
      throw ParseError(where + ": no fiber for index object " + index->object_id(a));
    }
  }

  const json& arrows_json = field(j, "arrows", where);
  if (!arrows_json.is_object()) throw ParseError(where + ": \"arrows\" must be an object");
  std::vector<std::optional<FunctorData>> arrows(index->morphism_count());
  for (const auto& [mor, spec] : arrows_json.items()) {
    auto f = index->morphism_index(mor);
    if (!f) throw ParseError(where + ": arrow for unknown index morphism " + mor);
    arrows[*f] = FunctorData::from_ids(
        fibers[index->src(*f)], fibers[index->dst(*f)],
        string_map(field(spec, "objects", "arrow " + mor), "objects"),
        string_map(field(spec, "morphisms", "arrow " + mor), "morphisms"));
  }
  std::vector<FunctorData> resolved;
  resolved.reserve(arrows.size());
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    if (arrows[f]) {
      resolved.push_back(std::move(*arrows[f]));
    } else if (index->is_identity(f)) {
      resolved.push_back(identity_functor(fibers[index->src(f)]));
    } else {
      throw ParseError(where + ": no functor for index morphism " +
                       index->morphism_id(f));
    }
  }
  return Diagram(index, std::move(fibers), std::move(resolved));
}

std::string pretty(const RatMatrix& m) {
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(to_string(m(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i * m.cols() + j];
      out << (j ? "  " : " ") << std::string(width[j] - cell.size(), ' ') << cell;
    }
    out << " ]\n";
  }
  if (m.rows() == 0) out << "[ ] (" << m.rows() << "x" << m.cols() << ")\n";
  return out.str();
}

}  // namespace eulercat::io
