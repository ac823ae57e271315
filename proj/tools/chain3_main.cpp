// Command line front end: pattern checks, certified decompositions, ordering
// search, exact dimension, orthant models, canonical cross-validation, and the
// pattern catalog. Exit codes: 0 success/affirmative, 1 negative result,
// 2 usage, 3 budget, 4 input/output, 5 internal invariant failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chain3/catalog.hpp"
#include "chain3/chain.hpp"
#include "chain3/decompose.hpp"
#include "chain3/generate.hpp"
#include "chain3/geometry.hpp"
#include "chain3/matrix.hpp"
#include "chain3/oracle.hpp"
#include "chain3/serialize.hpp"

namespace {

using namespace chain3;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 5;

struct RunConfig {
  std::string input;
  std::string patterns = "chain3";
  std::size_t budget_perm = 7;
  std::size_t budget_zeros = 20;
  int jobs = 1;
  std::uint64_t seed = 20250817;  // reserved for sampled modes
  std::string format = "json";
  std::string output;
  std::string csv;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BinaryMatrix load_matrix(const std::string& path) {
  if (path == "-") return parse_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return parse_matrix(in);
}

Pattern load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return parse_pattern(in);
}

// Selector tokens name catalog sets; anything else is read as a pattern file.
struct SelectedPatterns {
  std::vector<Pattern> patterns;
  std::vector<std::string> names;
};

SelectedPatterns resolve_patterns(const std::string& selectors) {
  SelectedPatterns out;
  std::istringstream in(selectors);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::vector<Pattern> named = pattern_set(token);
    if (!named.empty()) {
      for (std::size_t k = 0; k < named.size(); ++k) {
        out.patterns.push_back(named[k]);
        if (token == "chain3")
          out.names.push_back(k == 0 ? "gamma" : "delta");
        else
          out.names.push_back(token);
      }
      continue;
    }
    out.patterns.push_back(load_pattern_file(token));
    out.names.push_back(token);
  }
  if (out.patterns.empty()) throw CLI::ValidationError("--patterns selected nothing");
  return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw io_error("cannot write " + cfg.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void emit_json(const RunConfig& cfg, const json& value) { emit(cfg, value.dump(2)); }

std::string join_one_based(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << (v[k] + 1);
  return out.str();
}

int run_check(const RunConfig& cfg) {
  BinaryMatrix m = load_matrix(cfg.input);
  SelectedPatterns sel = resolve_patterns(cfg.patterns);
  for (std::size_t k = 0; k < sel.patterns.size(); ++k) {
    if (!contains_pattern(m, sel.patterns[k])) continue;
    Occurrence occ = *find_pattern(m, sel.patterns[k]);
    if (cfg.format == "json") {
      json out = occurrence_json(sel.names[k], occ);
      out["free"] = false;
      emit_json(cfg, out);
    } else {
      emit(cfg, "contains " + sel.names[k] + " at rows " +
                    join_one_based(occ.row_indices) + " cols " +
                    join_one_based(occ.col_indices));
    }
    return kExitNegative;
  }
  if (cfg.format == "json")
    emit_json(cfg, json{{"free", true}});
  else
    emit(cfg, "free");
  return kExitOk;
}

int run_decompose(const RunConfig& cfg) {
  BinaryMatrix m = load_matrix(cfg.input);
  try {
    TripleDecomposition dec = decompose(m);
    if (cfg.format == "json") {
      emit_json(cfg, decomposition_json(dec));
    } else {
      std::ostringstream out;
      out << "certified: " << (dec.certified ? "yes" : "no") << '\n';
      out << "L3: " << join_one_based(dec.l3.order()) << '\n';
      const BinaryMatrix* fs[] = {&dec.a1, &dec.a2, &dec.a3};
      const char* names[] = {"A1", "A2", "A3"};
      for (int k = 0; k < 3; ++k) {
        out << names[k] << ":\n";
        for (const std::string& row : fs[k]->to_row_strings()) out << "  " << row << '\n';
      }
      emit(cfg, out.str());
    }
    return kExitOk;
  } catch (const not_free_error& e) {
    if (cfg.format == "json") {
      json out = occurrence_json(e.pattern_name(), e.witness());
      out["free"] = false;
      emit_json(cfg, out);
    } else {
      emit(cfg, std::string("not decomposable: ") + e.what());
    }
    return kExitNegative;
  }
}

int run_search(const RunConfig& cfg) {
  BinaryMatrix m = load_matrix(cfg.input);
  SelectedPatterns sel = resolve_patterns(cfg.patterns);
  auto found = search_free_ordering(m, sel.patterns,
                                    {.budget = cfg.budget_perm, .jobs = cfg.jobs});
  if (!found) {
    if (cfg.format == "json")
      emit_json(cfg, json{{"found", false}});
    else
      emit(cfg, "no pattern-free ordering");
    return kExitNegative;
  }
  if (cfg.format == "json") {
    json out = ordering_json(found->first, found->second);
    out["found"] = true;
    emit_json(cfg, out);
  } else {
    emit(cfg, "row order: " + join_one_based(found->first.order()) +
                  "\ncol order: " + join_one_based(found->second.order()));
  }
  return kExitOk;
}

int run_dim(const RunConfig& cfg) {
  BinaryMatrix m = load_matrix(cfg.input);
  DimensionCertificate cert = ferrers_dimension(m, 4, cfg.budget_zeros);
  if (cfg.format == "json") {
    emit_json(cfg, certificate_json(cert));
  } else {
    std::ostringstream out;
    if (cert.dimension)
      out << "dimension: " << *cert.dimension << '\n';
    else
      out << "dimension: exceeds " << cert.d_max << '\n';
    for (const ZeroSet& zs : cert.cover) {
      out << "cover set:";
      for (auto [r, c] : zs.cells) out << " (" << (r + 1) << "," << (c + 1) << ")";
      out << '\n';
    }
    emit(cfg, out.str());
  }
  return cert.exceeded() ? kExitNegative : kExitOk;
}

int run_represent(const RunConfig& cfg) {
  BinaryMatrix m = load_matrix(cfg.input);
  const Pattern patterns[] = {gamma_pattern(), delta_pattern()};
  Permutation rows = Permutation::identity(m.rows());
  Permutation cols = Permutation::identity(m.cols());
  if (!is_free(m, patterns)) {
    auto found = search_free_ordering(m, patterns,
                                      {.budget = cfg.budget_perm, .jobs = cfg.jobs});
    if (!found) {
      if (cfg.format == "json")
        emit_json(cfg, json{{"representable", false}});
      else
        emit(cfg, "no pattern-free ordering; not representable in three chains");
      return kExitNegative;
    }
    rows = found->first;
    cols = found->second;
  }
  BinaryMatrix arranged = permute(m, rows, cols);
  TripleDecomposition dec = decompose(arranged);
  OrthantModel model = orthant_model(dec);
  if (!verify_model(model, arranged))
    throw error(errc::invariant_violation, "model verification failed");
  if (!cfg.csv.empty()) {
    std::ofstream out(cfg.csv);
    if (!out) throw io_error("cannot write " + cfg.csv);
    out << model_csv(model);
  }
  if (cfg.format == "json") {
    emit_json(cfg, model_json(model));
  } else {
    std::ostringstream out;
    for (std::size_t u = 0; u < model.points.size(); ++u)
      out << "point " << model.point_labels[u] << ": " << model.points[u][0] << ' '
          << model.points[u][1] << ' ' << model.points[u][2] << '\n';
    for (std::size_t v = 0; v < model.corners.size(); ++v)
      out << "corner " << model.corner_labels[v] << ": " << model.corners[v][0] << ' '
          << model.corners[v][1] << ' ' << model.corners[v][2] << '\n';
    emit(cfg, out.str());
  }
  return kExitOk;
}

int run_cross_validate(const RunConfig& cfg) {
  CrossValidationReport report = cross_validate(cfg.rows, cfg.cols, cfg.jobs);
  if (cfg.format == "json") {
    emit_json(cfg, report_json(report));
  } else {
    std::ostringstream out;
    out << "classes: " << report.classes << "\nfreeable: " << report.freeable
        << "\ndim<=3: " << report.dim_le_3
        << "\ndiscrepancies: " << report.discrepancies.size() << '\n';
    for (const std::string& d : report.discrepancies) out << "  " << d << '\n';
    emit(cfg, out.str());
  }
  return report.discrepancies.empty() ? kExitOk : kExitNegative;
}

int run_catalog(const RunConfig& cfg) {
  if (cfg.format == "json") {
    json entries = json::array();
    for (const NamedPattern& entry : pattern_catalog()) {
      json record;
      record["name"] = entry.name;
      record["rows"] = entry.pattern.to_row_strings();
      if (!entry.note.empty()) record["note"] = entry.note;
      entries.push_back(record);
    }
    emit_json(cfg, json{{"patterns", entries}});
  } else {
    std::ostringstream out;
    for (const NamedPattern& entry : pattern_catalog()) {
      out << entry.name << ":\n";
      for (const std::string& row : entry.pattern.to_row_strings())
        out << "  " << row << '\n';
      if (!entry.note.empty()) out << "  note: " << entry.note << '\n';
    }
    emit(cfg, out.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain-graph triple decomposition toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("input", cfg.input, "matrix file, or - for stdin")->required();
    sub->add_option("--format", cfg.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", cfg.output, "write the report to this file");
    sub->add_option("--seed", cfg.seed, "seed for sampled modes");
  };

  CLI::App* check = app.add_subcommand("check", "test a matrix against patterns");
  add_common(check, true);
  check->add_option("--patterns", cfg.patterns,
                    "comma list of catalog names or pattern files");

  CLI::App* dec = app.add_subcommand("decompose", "certified three-chain factorization");
  add_common(dec, true);

  CLI::App* search = app.add_subcommand("search", "find a pattern-free ordering");
  add_common(search, true);
  search->add_option("--patterns", cfg.patterns,
                     "comma list of catalog names or pattern files");
  search->add_option("--budget-perm", cfg.budget_perm, "dimension cap for the search");
  search->add_option("--jobs", cfg.jobs, "threads: 1 serial, 0 hardware default");

  CLI::App* dim = app.add_subcommand("dim", "exact Ferrers dimension with certificate");
  add_common(dim, true);
  dim->add_option("--budget-zeros", cfg.budget_zeros, "cap on the number of zeros");

  CLI::App* rep = app.add_subcommand("represent", "3d point/orthant model");
  add_common(rep, true);
  rep->add_option("--budget-perm", cfg.budget_perm, "dimension cap for the search");
  rep->add_option("--jobs", cfg.jobs, "threads: 1 serial, 0 hardware default");
  rep->add_option("--csv", cfg.csv, "also write plot data CSV to this file");

  CLI::App* cross = app.add_subcommand("cross-validate",
                                       "compare search, dimension and decomposition");
  add_common(cross, false);
  cross->add_option("m", cfg.rows, "row count, at most 4")
      ->required()
      ->check(CLI::PositiveNumber);
  cross->add_option("n", cfg.cols, "column count, at most 4")
      ->required()
      ->check(CLI::PositiveNumber);
  cross->add_option("--jobs", cfg.jobs, "threads: 1 serial, 0 hardware default");

  CLI::App* cat = app.add_subcommand("catalog", "list the built-in patterns");
  add_common(cat, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return run_check(cfg);
    if (app.got_subcommand(dec)) return run_decompose(cfg);
    if (app.got_subcommand(search)) return run_search(cfg);
    if (app.got_subcommand(dim)) return run_dim(cfg);
    if (app.got_subcommand(rep)) return run_represent(cfg);
    if (app.got_subcommand(cross)) return run_cross_validate(cfg);
    if (app.got_subcommand(cat)) return run_catalog(cfg);
    return kExitUsage;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case errc::budget_exceeded:
        return kExitBudget;
      case errc::ragged_rows:
      case errc::illegal_character:
      case errc::empty_input:
      case errc::label_mismatch:
        return kExitIo;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
