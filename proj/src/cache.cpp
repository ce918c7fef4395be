#include "cache.hpp"

#include <fstream>

#include "errors.hpp"
#include "json_io.hpp"

namespace qtqft {

namespace {

// Flat record order: row-major over (a, b), then ascending basis index c,
// then ascending q exponent. Matches map iteration, so write/read round-trips
// byte-identically.
Json table_to_json(const FusionRing& ring) {
  const StructureTable& table = ring.table();
  const int count = ring.basis_size();
  Json constants = Json::array();
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      const BasisExpansion& row = table.rows[static_cast<std::size_t>(a) * count + b];
      for (const auto& [c, coeff] : row) {
        for (const auto& [exp, value] : coeff.terms()) {
          constants.push_back(Json{{"a", json_partition(ring.basis()[a])},
                                   {"b", json_partition(ring.basis()[b])},
                                   {"c", json_partition(ring.basis()[c])},
                                   {"q_exp", exp},
                                   {"coeff", value.get_str()}});
        }
      }
    }
  }
  return Json{{"version", kCacheFormatVersion},
              {"r", ring.box().r},
              {"s", ring.box().s},
              {"constants", std::move(constants)}};
}

Partition parse_padded(const FusionRing& ring, const Json& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return normalize_partition(ring.box(), std::move(parts));
}

StructureTable table_from_json(const FusionRing& ring, const Json& doc) {
  if (doc.at("version").get<int>() != kCacheFormatVersion) {
    throw IoError("cache format version mismatch");
  }
  if (doc.at("r").get<int>() != ring.box().r ||
      doc.at("s").get<int>() != ring.box().s) {
    throw IoError("cache context mismatch");
  }
  const int count = ring.basis_size();
  std::vector<std::map<int, LaurentInt>> accum(
      static_cast<std::size_t>(count) * count);
  for (const auto& record : doc.at("constants")) {
    const int a = ring.index_of(parse_padded(ring, record.at("a")));
    const int b = ring.index_of(parse_padded(ring, record.at("b")));
    const int c = ring.index_of(parse_padded(ring, record.at("c")));
    const int exp = record.at("q_exp").get<int>();
    const BigInt coeff(record.at("coeff").get<std::string>());
    accum[static_cast<std::size_t>(a) * count + b][c].add_term(exp, coeff);
  }
  StructureTable table;
  table.basis_count = static_cast<std::uint64_t>(count);
  table.rows.resize(accum.size());
  for (std::size_t i = 0; i < accum.size(); ++i) {
    for (auto& [c, value] : accum[i]) {
      if (!value.is_zero()) table.rows[i].emplace_back(c, std::move(value));
    }
  }
  // Light sanity: unit rows must be deltas.
  for (int b = 0; b < count; ++b) {
    const BasisExpansion& row = table.rows[static_cast<std::size_t>(b)];
    if (row.size() != 1 || row[0].first != b ||
        row[0].second != LaurentInt::one()) {
      throw IoError("cache failed unit-row sanity check");
    }
  }
  return table;
}

}  // namespace

std::string cache_file_name(const BoxContext& ctx) {
  return "qtqft-table-v" + std::to_string(kCacheFormatVersion) + "-r" +
         std::to_string(ctx.r) + "-s" + std::to_string(ctx.s) + ".json";
}

void store_structure_table(const FusionRing& ring,
                           const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path path = dir / cache_file_name(ring.box());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write cache file " + path.string());
  out << table_to_json(ring).dump() << '\n';
  if (!out) throw IoError("failed writing cache file " + path.string());
}

bool load_structure_table(FusionRing& ring, const std::filesystem::path& dir,
                          std::ostream* warn) {
  const std::filesystem::path path = dir / cache_file_name(ring.box());
  std::ifstream in(path);
  if (!in) return false;  // no cache yet
  try {
    const Json doc = Json::parse(in);
    ring.adopt_table(table_from_json(ring, doc));
    return true;
  } catch (const std::exception& e) {
    if (warn) {
      *warn << "warning: ignoring unusable cache file " << path.string() << ": "
            << e.what() << "; rebuilding\n";
    }
    return false;
  }
}

}  // namespace qtqft
