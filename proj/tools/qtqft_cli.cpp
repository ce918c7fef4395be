// Command-line front end for the qtqft shared library. All computation goes
// through the C API in qtqft/qtqft.h; this translation unit only parses
// arguments, renders results, and maps status codes to exit codes:
//   0 success, 1 argument/resource/io error, 2 integrity-check failure.

#include <qtqft/qtqft.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace {

using Json = nlohmann::json;

struct EngineDeleter {
  void operator()(qtqft_engine_t* engine) const { qtqft_engine_destroy(engine); }
};
using EnginePtr = std::unique_ptr<qtqft_engine_t, EngineDeleter>;

struct StringDeleter {
  void operator()(char* text) const { qtqft_string_free(text); }
};
using ResultPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(int status) {
  switch (status) {
    case QTQFT_OK: return 0;
    case QTQFT_ERROR_INTEGRITY: return 2;
    default: return 1;
  }
}

std::string render_laurent(const Json& value) {
  if (value.contains("value")) return value["value"].get<std::string>();
  if (value.empty()) return "0";
  std::vector<std::pair<int, std::string>> terms;
  for (const auto& [exp_text, coeff] : value.items()) {
    terms.emplace_back(std::stoi(exp_text), coeff.get<std::string>());
  }
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [exp, c] : terms) {
    if (!out.empty()) out += " + ";
    if (exp == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += "q";
      if (exp != 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

std::string render_partition(const Json& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i].get<int>());
  }
  return out + "]";
}

std::string render_qclass(const Json& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& term : terms) {
    if (!out.empty()) out += " + ";
    const std::string c = render_laurent(term["laurent"]);
    const std::string label = "s" + render_partition(term["partition"]);
    if (c == "1") {
      out += label;
    } else if (c.find(' ') == std::string::npos) {
      out += c + "*" + label;
    } else {
      out += "(" + c + ")*" + label;
    }
  }
  return out;
}

void render_tensor(const Json& tensor, std::ostream& out) {
  const Json& sig = tensor["signature"];
  out << "F(g=" << sig["g"] << "|d=" << sig["d"] << ")_m=" << sig["m"]
      << "^n=" << sig["n"] << ":\n";
  if (tensor["entries"].empty()) {
    out << "  (zero tensor)\n";
    return;
  }
  for (const auto& entry : tensor["entries"]) {
    out << "  ";
    if (!entry["in"].empty()) {
      for (std::size_t i = 0; i < entry["in"].size(); ++i) {
        if (i) out << " x ";
        out << "s" << render_partition(entry["in"][i]);
      }
      out << " -> ";
    }
    if (entry["out"].empty()) {
      out << "()";
    } else {
      for (std::size_t i = 0; i < entry["out"].size(); ++i) {
        if (i) out << " x ";
        out << "s" << render_partition(entry["out"][i]);
      }
    }
    out << " : " << render_laurent(entry["laurent"]) << "\n";
  }
}

// Prints the human-readable form of one command result.
void render_text(const Json& doc, std::ostream& out) {
  const std::string command = doc["command"].get<std::string>();
  if (command == "product") {
    out << render_qclass(doc["product"]) << "\n";
  } else if (command == "pair") {
    out << render_laurent(doc["pairing"]) << "\n";
  } else if (command == "gw") {
    out << render_laurent(doc["integral"]) << "\n";
  } else if (command == "tensor" || command == "eta") {
    render_tensor(doc["tensor"], out);
  } else if (command == "verlinde") {
    out << doc["verlinde"].get<std::string>() << "\n";
  } else if (command == "holla") {
    out << doc["count"].get<std::string>() << "\n";
  } else if (command == "closed") {
    out << doc["exact_q1"].get<std::string>()
        << "  (spectral re=" << doc["spectral"]["re"].get<std::string>()
        << ", im=" << doc["spectral"]["im"].get<std::string>() << ")\n";
  } else if (command == "spectrum") {
    for (const auto& point : doc["points"]) {
      out << "I={";
      for (std::size_t i = 0; i < point["subset"].size(); ++i) {
        if (i) out << ",";
        out << point["subset"][i].get<int>();
      }
      out << "}  vand=" << point["vand"].get<std::string>()
          << "  a=" << point["a"].get<std::string>() << "\n";
    }
  } else if (command == "check") {
    for (const auto& check : doc["checks"]) {
      out << (check["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
          << check["name"].get<std::string>()
          << "  deviation=" << check["deviation"].get<std::string>()
          << " tolerance=" << check["tolerance"].get<std::string>() << "\n";
    }
    out << doc["total"].get<int>() - doc["failed"].get<int>() << "/"
        << doc["total"].get<int>() << " checks passed\n";
  } else {
    out << doc.dump(2) << "\n";
  }
}

int emit(qtqft_engine_t* engine, int status, const ResultPtr& result,
         bool as_json) {
  if (status != QTQFT_OK && !result) {
    std::cerr << "error: " << qtqft_engine_last_error(engine) << "\n";
    return exit_code_for(status);
  }
  if (!result) {
    std::cerr << "error: empty result\n";
    return 1;
  }
  if (as_json) {
    std::cout << result.get() << "\n";
  } else {
    render_text(Json::parse(result.get()), std::cout);
  }
  if (status != QTQFT_OK) {
    std::cerr << "error: " << qtqft_engine_last_error(engine) << "\n";
  }
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum Schubert calculus and weighted TQFT invariants "
               "on Gr(r, r+s)"};
  app.require_subcommand(1);

  int r = 0;
  int s = 0;
  bool as_json = false;
  bool q_at_one = false;
  std::string cache_dir;
  std::uint64_t max_entries = 0;
  app.add_option("--r", r, "Rank of subbundles (rows of the box)")->required();
  app.add_option("--s", s, "Corank (maximal part)")->required();
  app.add_flag("--json", as_json, "Emit canonical JSON instead of text");
  app.add_flag("--q-at-one", q_at_one, "Specialize Laurent values at q = 1");
  app.add_option("--cache-dir", cache_dir,
                 "Structure-constant cache directory (default: QTQFT_CACHE_DIR)");
  app.add_option("--max-entries", max_entries,
                 "Cap on materialized table/tensor entries");

  std::string part_a, part_b;
  auto* product = app.add_subcommand("product", "Quantum product sigma_a * sigma_b");
  product->add_option("A", part_a, "First partition, e.g. \"2,1\"")->required();
  product->add_option("B", part_b, "Second partition")->required();

  auto* pair = app.add_subcommand("pair", "Poincare pairing <sigma_a, sigma_b>");
  pair->add_option("A", part_a, "First partition")->required();
  pair->add_option("B", part_b, "Second partition")->required();

  int genus = 0, degree = 0, arity_m = 0, arity_n = 0, gamma = 0, slots = 0;
  std::vector<std::string> insertions;
  auto* gw = app.add_subcommand("gw", "Integral over the compiled Quot scheme");
  gw->add_option("G", genus, "Genus")->required();
  gw->add_option("D", degree, "Bundle degree")->required();
  gw->add_option("INSERTIONS", insertions, "Schubert insertions");

  auto* tensor = app.add_subcommand("tensor", "Weighted TQFT tensor F(g|d)_m^n");
  tensor->add_option("G", genus, "Genus")->required();
  tensor->add_option("D", degree, "Bundle degree")->required();
  tensor->add_option("M", arity_m, "Inputs")->required();
  tensor->add_option("N", arity_n, "Outputs")->required();

  auto* verlinde = app.add_subcommand("verlinde", "Verlinde number V_g");
  verlinde->add_option("G", genus, "Genus")->required();

  auto* holla = app.add_subcommand("holla", "Finite Quot scheme point count");
  holla->add_option("G", genus, "Genus")->required();
  holla->add_option("GAMMA", gamma, "Class index in [0, gcd(r,s))")->required();

  auto* closed = app.add_subcommand("closed", "Closed weighted invariant");
  closed->add_option("G", genus, "Genus")->required();
  closed->add_option("D", degree, "Bundle degree")->required();

  auto* eta = app.add_subcommand("eta", "Quot image class in G^N");
  eta->add_option("G", genus, "Genus")->required();
  eta->add_option("D", degree, "Bundle degree")->required();
  eta->add_option("N", slots, "Number of factors")->required();

  app.add_subcommand("spectrum", "Spectral points, Vandermonde norms, couplings");

  std::string suite = "fast";
  auto* check = app.add_subcommand("check", "Run the invariant self-check suite");
  check->add_option("--suite", suite, "all|fast")->check(CLI::IsMember({"all", "fast"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  qtqft_engine_t* raw = nullptr;
  const int create_status = qtqft_engine_create(r, s, &raw);
  if (create_status != QTQFT_OK) {
    std::cerr << "error: invalid box context r=" << r << " s=" << s << "\n";
    return 1;
  }
  EnginePtr engine(raw);

  if (!cache_dir.empty()) qtqft_engine_set_cache_dir(engine.get(), cache_dir.c_str());
  if (max_entries > 0) {
    if (qtqft_engine_set_max_entries(engine.get(), max_entries) != QTQFT_OK) {
      std::cerr << "error: " << qtqft_engine_last_error(engine.get()) << "\n";
      return 1;
    }
  }
  if (q_at_one) qtqft_engine_set_q_at_one(engine.get(), 1);

  char* json = nullptr;
  int status = QTQFT_ERROR_INTERNAL;
  if (product->parsed()) {
    status = qtqft_product(engine.get(), part_a.c_str(), part_b.c_str(), &json);
  } else if (pair->parsed()) {
    status = qtqft_pair(engine.get(), part_a.c_str(), part_b.c_str(), &json);
  } else if (gw->parsed()) {
    std::vector<const char*> raw_insertions;
    raw_insertions.reserve(insertions.size());
    for (const std::string& text : insertions) raw_insertions.push_back(text.c_str());
    status = qtqft_gw(engine.get(), genus, degree, raw_insertions.data(),
                      raw_insertions.size(), &json);
  } else if (tensor->parsed()) {
    status = qtqft_tensor(engine.get(), genus, degree, arity_m, arity_n, &json);
  } else if (verlinde->parsed()) {
    status = qtqft_verlinde(engine.get(), genus, &json);
  } else if (holla->parsed()) {
    status = qtqft_holla(engine.get(), genus, gamma, &json);
  } else if (closed->parsed()) {
    status = qtqft_closed(engine.get(), genus, degree, &json);
  } else if (eta->parsed()) {
    status = qtqft_eta(engine.get(), genus, degree, slots, &json);
  } else if (app.get_subcommand("spectrum")->parsed()) {
    status = qtqft_spectrum(engine.get(), &json);
  } else if (check->parsed()) {
    status = qtqft_check(engine.get(), suite.c_str(), &json);
  }
  ResultPtr result(json);
  return emit(engine.get(), status, result, as_json);
}
