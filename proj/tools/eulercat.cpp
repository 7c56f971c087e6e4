// eulercat: command-line front end for the Euler measure library.
//
// Exit codes: 0 ok, 1 input error, 2 semantic validation failure,
// 3 law or expectation failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulercat/category.hpp"
#include "eulercat/constructions.hpp"
#include "eulercat/corpus.hpp"
#include "eulercat/errors.hpp"
#include "eulercat/io.hpp"
#include "eulercat/laws.hpp"
#include "eulercat/matrix.hpp"
#include "eulercat/weights.hpp"

namespace fs = std::filesystem;
using namespace eulercat;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kSemantic = 2, kLaw = 3 };

// Raised once a validation report has been printed, to exit with kSemantic.
struct Reported {};

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

enum class Kind { Matrix, Category, Functor, Diagram };

Kind detect(const fs::path& path) {
  const json j = io::read_json_file(path);
  if (j.is_object()) {
    if (j.contains("entries") && j.contains("rows")) return Kind::Matrix;
    if (j.contains("source") && j.contains("target")) return Kind::Functor;
    if (j.contains("objects") && j.contains("morphisms")) return Kind::Category;
    if (j.contains("index") && j.contains("fibers")) return Kind::Diagram;
  }
  throw ParseError(path.string() + ": not a matrix, category, functor or diagram file");
}

CategoryPtr load_valid_category(io::Loader& loader, const fs::path& path) {
  CategoryPtr c = loader.category(path);
  if (!c->valid()) {
    emit(io::to_json(c->report()));
    throw Reported{};
  }
  return c;
}

RatMatrix load_square_matrix(io::Loader& loader, const fs::path& path) {
  RatMatrix m = loader.matrix(path);
  if (!m.is_square()) {
    throw ParseError(path.string() + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
  }
  return m;
}

// Adjacency of a category file, or the matrix itself.
RatMatrix load_matrix_or_adjacency(const fs::path& path) {
  io::Loader loader;
  if (detect(path) == Kind::Category) return adjacency(*load_valid_category(loader, path));
  return load_square_matrix(loader, path);
}

std::string vector_text(const std::optional<RatMatrix>& v) {
  if (!v) return "none";
  std::string s = "[";
  for (std::size_t i = 0; i < v->entries().size(); ++i) {
    s += (i ? ", " : "") + to_string(v->entries()[i]);
  }
  return s + "]";
}

void print_report(const ChiReport& r) {
  if (!g_pretty) {
    emit(io::to_json(r));
    return;
  }
  std::cout << "chi           " << to_string(r.chi) << "\n"
            << "weighting     " << vector_text(r.weighting) << "\n"
            << "coweighting   " << vector_text(r.coweighting) << "\n"
            << "lein_defined  " << (r.lein_defined() ? "true" : "false") << "\n";
}

int cmd_chi(const fs::path& path) {
  ChiReport r;
  if (detect(path) == Kind::Category) {
    io::Loader loader;
    r = chi_report(*load_valid_category(loader, path));
  } else {
    io::Loader loader;
    const RatMatrix m = load_square_matrix(loader, path);
    r = {chi_of_matrix(m), weighting(m), coweighting(m)};
  }
  print_report(r);
  return kOk;
}

int cmd_pinv(const fs::path& path) {
  const RatMatrix p = pinv(load_matrix_or_adjacency(path));
  if (g_pretty) {
    std::cout << io::pretty(p);
  } else {
    emit(io::to_json(p));
  }
  return kOk;
}

int cmd_weighting(const fs::path& path, bool co) {
  const RatMatrix m = load_matrix_or_adjacency(path);
  const auto v = co ? coweighting(m) : weighting(m);
  if (g_pretty) {
    std::cout << (co ? "coweighting " : "weighting ") << vector_text(v) << "\n";
  } else {
    emit(json{{co ? "coweighting" : "weighting", v ? io::entries_json(*v) : json(nullptr)}});
  }
  return kOk;
}

int cmd_combine(const fs::path& a_path, const fs::path& b_path, bool is_product) {
  io::Loader loader;
  const CategoryPtr a = load_valid_category(loader, a_path);
  const CategoryPtr b = load_valid_category(loader, b_path);
  const FinCategory c = is_product ? product(*a, *b) : coproduct(*a, *b);
  if (g_pretty) {
    std::cout << c.object_count() << " objects, " << c.morphism_count()
              << " morphisms, chi " << to_string(chi(c)) << "\n"
              << io::pretty(adjacency(c));
  } else {
    emit(io::to_json(c.data()));
  }
  return kOk;
}

Diagram load_valid_diagram(const fs::path& path) {
  io::Loader loader;
  Diagram d = loader.diagram(path);
  const ValidationReport report = validate(d);
  if (!report.ok()) {
    emit(io::to_json(report));
    throw Reported{};
  }
  return d;
}

int cmd_groth(const fs::path& path) {
  const Diagram d = load_valid_diagram(path);
  const RatMatrix total = adjacency(grothendieck(d).total);
  const InclusionExclusion ie = chi_inclusion_exclusion(d);
  if (g_pretty) {
    std::cout << io::pretty(total) << "actual     " << to_string(ie.actual) << "\n"
              << "predicted  " << to_string(ie.predicted) << "\n"
              << "applies    " << (ie.applies ? "true" : "false") << "\n";
  } else {
    emit(json{{"adjacency", io::to_json(total)},
              {"chi_row", io::entries_json(chi_diagram_row(d))},
              {"actual", to_string(ie.actual)},
              {"predicted", to_string(ie.predicted)},
              {"applies", ie.applies}});
  }
  return kOk;
}

int cmd_check(const fs::path& path) {
  ValidationReport report;
  io::Loader loader;
  switch (detect(path)) {
    case Kind::Category: report = loader.category(path)->report(); break;
    case Kind::Functor: report = validate(loader.functor(path)); break;
    case Kind::Diagram: report = validate(loader.diagram(path)); break;
    case Kind::Matrix:
      throw ParseError(path.string() + ": check expects a category, functor or diagram");
  }
  if (g_pretty) {
    std::cout << (report.ok() ? "valid\n" : report.summary(20) + "\n");
  } else {
    emit(io::to_json(report));
  }
  return report.ok() ? kOk : kSemantic;
}

int cmd_adjoint(const fs::path& l_path, const fs::path& r_path) {
  io::Loader loader;
  const FunctorData l = loader.functor(l_path);
  const FunctorData r = loader.functor(r_path);
  for (const FunctorData* f : {&l, &r}) {
    const ValidationReport report = validate(*f);
    if (!report.ok()) {
      emit(io::to_json(report));
      return kSemantic;
    }
  }
  const bool homs = check_adjunction_matrices(l, r);
  json transport;
  json transport_error = nullptr;
  try {
    transport = chi_adjunction_transport(*l.source(), *l.target(), l, r);
  } catch (const PreconditionFailed& e) {
    transport = nullptr;
    transport_error = e.what();
  }
  if (g_pretty) {
    std::cout << "hom counts match  " << (homs ? "true" : "false") << "\n"
              << "chi transport     "
              << (transport.is_null() ? "not applicable: " + transport_error.get<std::string>()
                                      : transport.dump())
              << "\n";
  } else {
    emit(json{{"adjunction_matrices", homs},
              {"transport", transport},
              {"transport_error", transport_error}});
  }
  return kOk;
}

int cmd_verify_laws(const LawRunConfig& config, bool mutate) {
  validate(config);
  PinvFn fn = pinv;
  if (mutate) {
    fn = [](const RatMatrix& m) {
      RatMatrix p = pinv(m);
      if (!p.empty()) p(0, 0) += 1;
      return p;
    };
  }
  const LawSummary summary = run_laws(config, fn);
  if (g_pretty) {
    for (const auto& l : summary.laws) {
      std::cout << (l.failed ? "FAIL " : "ok   ") << l.name << "  passed " << l.passed
                << "  failed " << l.failed << "  skipped " << l.skipped << "\n";
      if (l.first_failure) std::cout << "     witness " << l.first_failure->dump() << "\n";
    }
  } else {
    emit(to_json(summary));
  }
  return summary.ok() ? kOk : kLaw;
}

int cmd_corpus(const fs::path& manifest) {
  const auto checks = run_corpus(manifest);
  bool ok = true;
  json out = json::array();
  for (const auto& c : checks) {
    ok = ok && c.ok;
    if (g_pretty) {
      std::cout << (c.ok ? "ok   " : "FAIL ") << c.entry << " " << c.check;
      if (!c.ok) std::cout << "  expected " << c.expected.dump() << " got " << c.actual.dump();
      std::cout << "\n";
    } else {
      out.push_back({{"entry", c.entry},
                     {"check", c.check},
                     {"ok", c.ok},
                     {"expected", c.expected},
                     {"actual", c.actual}});
    }
  }
  if (!g_pretty) emit(json{{"ok", ok}, {"checks", out}});
  return ok ? kOk : kLaw;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler measures of finite categories"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Compact JSON output (default)");
  app.add_flag("--pretty", g_pretty, "Human-readable output");

  std::string a_path;
  std::string b_path;
  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", a_path, "Input file")->required();
    return sub;
  };
  auto pair_cmd = [&](const char* name, const char* help, const char* a, const char* b) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(a, a_path)->required();
    sub->add_option(b, b_path)->required();
    return sub;
  };

  auto* chi_cmd = file_cmd("chi", "Euler measure report of a category or matrix");
  auto* pinv_cmd = file_cmd("pinv", "Moore-Penrose pseudoinverse of a square matrix");
  auto* w_cmd = file_cmd("weighting", "Weighting of a matrix or category, or null");
  auto* cw_cmd = file_cmd("coweighting", "Coweighting of a matrix or category, or null");
  auto* groth_cmd = file_cmd("groth", "Grothendieck construction and inclusion-exclusion");
  auto* check_cmd = file_cmd("check", "Validate a category, functor or diagram file");
  auto* prod_cmd = pair_cmd("product", "Product category", "a", "b");
  auto* coprod_cmd = pair_cmd("coproduct", "Disjoint union", "a", "b");
  auto* adj_cmd = pair_cmd("adjoint", "Adjunction hom-count and chi transport check", "L", "R");

  LawRunConfig config;
  bool mutate = false;
  auto* laws_cmd = app.add_subcommand("verify-laws", "Check the laws on random instances");
  laws_cmd->add_option("--seed", config.seed)->required();
  laws_cmd->add_option("--count", config.count)->required();
  laws_cmd->add_option("--max-objects", config.max_objects)->required();
  laws_cmd->add_option("--max-hom", config.max_hom)->capture_default_str();
  laws_cmd->add_option("--threads", config.threads, "0 uses every core");
  // Replaces pinv with a corrupted one, to see the harness catch it.
  laws_cmd->add_flag("--mutate-pinv", mutate)->group("");

  std::string manifest = "corpus/manifest.json";
  auto* corpus_cmd = app.add_subcommand("corpus", "Check every expected value in a corpus manifest");
  corpus_cmd->add_option("manifest", manifest)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (json_flag) g_pretty = false;

  try {
    if (chi_cmd->parsed()) return cmd_chi(a_path);
    if (pinv_cmd->parsed()) return cmd_pinv(a_path);
    if (w_cmd->parsed()) return cmd_weighting(a_path, false);
    if (cw_cmd->parsed()) return cmd_weighting(a_path, true);
    if (groth_cmd->parsed()) return cmd_groth(a_path);
    if (check_cmd->parsed()) return cmd_check(a_path);
    if (prod_cmd->parsed()) return cmd_combine(a_path, b_path, true);
    if (coprod_cmd->parsed()) return cmd_combine(a_path, b_path, false);
    if (adj_cmd->parsed()) return cmd_adjoint(a_path, b_path);
    if (laws_cmd->parsed()) return cmd_verify_laws(config, mutate);
    if (corpus_cmd->parsed()) return cmd_corpus(manifest);
  } catch (const Reported&) {
    return kSemantic;
  } catch (const InvalidCategory& e) {
    std::cerr << "eulercat: " << e.what() << "\n";
    return kSemantic;
  } catch (const InvalidFunctor& e) {
    std::cerr << "eulercat: " << e.what() << "\n";
    return kSemantic;
  } catch (const InvalidDiagram& e) {
    std::cerr << "eulercat: " << e.what() << "\n";
    return kSemantic;
  } catch (const SourceTargetMismatch& e) {
    std::cerr << "eulercat: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::exception& e) {
    std::cerr << "eulercat: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
