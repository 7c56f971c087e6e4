#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "eulercat/category.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/matrix.hpp"
#include "eulercat/rational.hpp"
#include "eulercat/weights.hpp"

namespace eulercat::io {

using json = nlohmann::json;

// Rationals are JSON integers when they are integers (and fit in 64 bits)
// and "p/q" strings otherwise. Integer strings are accepted on input.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"rows": m, "cols": n, "entries": [[...], ...]}
json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

/// Flat list of entries, for vectors.
json entries_json(const RatMatrix& m);

/// {"objects": [...], "morphisms": [{"id","src","dst"}], "identities": {...},
///  "composition": [[g, f, gf], ...]}
json to_json(const CategoryData& c);
CategoryData category_from_json(const json& j);

/// {"chi": "p/q", "has_weighting": ..., "has_coweighting": ...,
///  "lein_defined": ..., "weighting": [...] | null, "coweighting": [...] | null}
json to_json(const ChiReport& r);

json to_json(const ValidationReport& r);

json read_json_file(const std::filesystem::path& path);

/// Loads category, functor and diagram files. Paths inside functor and
/// diagram files are relative to the referring file. Categories are cached by
/// canonical path so functors between the same files share their endpoints.
class Loader {
 public:
  CategoryPtr category(const std::filesystem::path& path);
  RatMatrix matrix(const std::filesystem::path& path);
  /// {"source": path, "target": path, "objects": {...}, "morphisms": {...}}
  FunctorData functor(const std::filesystem::path& path);
  /// {"index": path, "fibers": {obj: path}, "arrows": {morph: {"objects",
  /// "morphisms"}}}. Arrows of identity morphisms may be omitted and default
  /// to identity functors.
  Diagram diagram(const std::filesystem::path& path);

 private:
  std::map<std::filesystem::path, CategoryPtr> cache_;
};

/// Column-aligned text rendering of a matrix, one row per line.
std::string pretty(const RatMatrix& m);

}  // namespace eulercat::io
