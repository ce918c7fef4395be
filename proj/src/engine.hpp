#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusion.hpp"

namespace qtqft {

// One configured computation session: a box context, its fusion ring (built
// lazily, optionally persisted via the structure-constant cache), and output
// options. All command results are canonical JSON strings.
class Engine {
 public:
  Engine(int r, int s);

  const BoxContext& box() const { return ctx_; }
  void set_cache_dir(std::optional<std::string> dir) { cache_dir_ = std::move(dir); }
  void set_max_entries(std::uint64_t cap);
  void set_q_at_one(bool enabled) { q_at_one_ = enabled; }

  // Lazily constructs the ring; consults the cache directory (explicit
  // setting first, then QTQFT_CACHE_DIR) and persists a fresh build there.
  FusionRing& ring();

  std::string product_json(const std::string& a, const std::string& b);
  std::string pair_json(const std::string& a, const std::string& b);
  std::string gw_json(int g, int d, const std::vector<std::string>& insertions);
  std::string tensor_json(int g, int d, int m, int n);
  std::string verlinde_json(int g);   // throws IntegrityError on exact/sine mismatch
  std::string holla_json(int g, int gamma);
  std::string closed_json(int g, int d);
  std::string eta_json(int g, int d, int n);
  std::string spectrum_json();
  // Runs the named suite ("fast" or "all"). failures_out reports how many
  // checks failed; the JSON always carries the full per-check report.
  std::string check_json(const std::string& suite, int* failures_out);

 private:
  std::optional<std::string> effective_cache_dir() const;

  BoxContext ctx_;
  std::uint64_t max_entries_ = 1000000;
  bool q_at_one_ = false;
  std::optional<std::string> cache_dir_;
  std::unique_ptr<FusionRing> ring_;
};

}  // namespace qtqft
