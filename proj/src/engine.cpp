#include "engine.hpp"

#include <cstdlib>
#include <iostream>

#include "cache.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "spectrum.hpp"
#include "tqft.hpp"

namespace qtqft {

Engine::Engine(int r, int s) : ctx_(r, s) {}

void Engine::set_max_entries(std::uint64_t cap) {
  if (cap == 0) throw ArgumentError("entry cap must be positive");
  max_entries_ = cap;
  ring_.reset();  // cap participates in ring construction
}

std::optional<std::string> Engine::effective_cache_dir() const {
  if (cache_dir_) return cache_dir_;
  if (const char* env = std::getenv("QTQFT_CACHE_DIR"); env && *env) {
    return std::string(env);
  }
  return std::nullopt;
}

FusionRing& Engine::ring() {
  if (!ring_) {
    ring_ = std::make_unique<FusionRing>(ctx_, max_entries_);
    if (const auto dir = effective_cache_dir()) {
      const bool loaded = load_structure_table(*ring_, *dir, &std::cerr);
      if (!loaded) {
        ring_->table();  // build now so the store below persists real work
        store_structure_table(*ring_, *dir);
      }
    }
  }
  return *ring_;
}

std::string Engine::product_json(const std::string& a, const std::string& b) {
  FusionRing& r = ring();
  const Partition pa = parse_partition(ctx_, a);
  const Partition pb = parse_partition(ctx_, b);
  const QClass prod = r.basis_product(r.index_of(pa), r.index_of(pb));
  Json out{{"command", "product"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"a", json_partition(pa)},
           {"b", json_partition(pb)},
           {"product", json_qclass(prod, {q_at_one_})}};
  return out.dump();
}

std::string Engine::pair_json(const std::string& a, const std::string& b) {
  FusionRing& r = ring();
  const Partition pa = parse_partition(ctx_, a);
  const Partition pb = parse_partition(ctx_, b);
  const LaurentInt value =
      r.poincare_pair(QClass::basis(ctx_, pa), QClass::basis(ctx_, pb));
  Json out{{"command", "pair"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"a", json_partition(pa)},
           {"b", json_partition(pb)},
           {"pairing", json_laurent(value, {q_at_one_})}};
  return out.dump();
}

std::string Engine::gw_json(int g, int d,
                            const std::vector<std::string>& insertions) {
  FusionRing& r = ring();
  std::vector<Partition> parts;
  Json parts_json = Json::array();
  parts.reserve(insertions.size());
  for (const std::string& text : insertions) {
    parts.push_back(parse_partition(ctx_, text));
    parts_json.push_back(json_partition(parts.back()));
  }
  const LaurentInt value = integrate(r, g, d, parts);
  Json out{{"command", "gw"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"g", g},
           {"d", d},
           {"insertions", std::move(parts_json)},
           {"integral", json_laurent(value, {q_at_one_})}};
  return out.dump();
}

std::string Engine::tensor_json(int g, int d, int m, int n) {
  FusionRing& r = ring();
  const TqftTensor t = weighted_map(r, g, d, m, n, max_entries_);
  Json out{{"command", "tensor"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"tensor", json_tensor(t, r.basis(), {q_at_one_})}};
  return out.dump();
}

std::string Engine::verlinde_json(int g) {
  FusionRing& r = ring();
  const BigInt exact = verlinde_exact(r, g);
  const double sine = verlinde_sine(ctx_, g);
  const double scale = std::max(1.0, std::abs(exact.get_d()));
  Json out{{"command", "verlinde"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"g", g},
           {"verlinde", exact.get_str()},
           {"sine", format_double(sine)}};
  if (std::abs(exact.get_d() - sine) > 1e-4 * scale) {
    throw IntegrityError("verlinde mismatch: exact " + exact.get_str() +
                         " vs sine formula " + format_double(sine));
  }
  return out.dump();
}

std::string Engine::holla_json(int g, int gamma) {
  FusionRing& r = ring();
  const BigInt exact = holla_exact(r, g, gamma);
  const double spectral = holla_spectral(ctx_, g, gamma);
  const double scale = std::max(1.0, std::abs(exact.get_d()));
  Json out{{"command", "holla"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"g", g},
           {"gamma", gamma},
           {"count", exact.get_str()},
           {"spectral", format_double(spectral)}};
  if (std::abs(exact.get_d() - spectral) > 1e-4 * scale) {
    throw IntegrityError("holla mismatch: exact " + exact.get_str() +
                         " vs spectral formula " + format_double(spectral));
  }
  return out.dump();
}

std::string Engine::closed_json(int g, int d) {
  FusionRing& r = ring();
  const BigInt exact = integrate(r, g, d, {}).at_one();
  const Complex spectral = closed_invariant_spectral(ctx_, g, d);
  const double scale = std::max(1.0, std::abs(exact.get_d()));
  Json out{{"command", "closed"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"g", g},
           {"d", d},
           {"exact_q1", exact.get_str()},
           {"spectral", json_complex(spectral)}};
  if (std::abs(spectral - Complex(exact.get_d())) > 1e-4 * scale) {
    throw IntegrityError("closed invariant mismatch: exact " + exact.get_str() +
                         " vs spectral " + format_double(spectral.real()));
  }
  return out.dump();
}

std::string Engine::eta_json(int g, int d, int n) {
  FusionRing& r = ring();
  const TqftTensor t = eta_class(r, g, d, n, max_entries_);
  Json out{{"command", "eta"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"tensor", json_tensor(t, r.basis(), {q_at_one_})}};
  return out.dump();
}

std::string Engine::spectrum_json() {
  Json points = Json::array();
  for (const SpectralPoint& p : spectral_points(ctx_)) {
    Json roots = Json::array();
    for (const Complex& root : p.roots) roots.push_back(json_complex(root));
    points.push_back(Json{{"subset", p.subset},
                          {"roots", std::move(roots)},
                          {"vand", format_double(vand(p))},
                          {"a", format_double(coupling_a(ctx_, p))}});
  }
  Json out{{"command", "spectrum"},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"points", std::move(points)}};
  return out.dump();
}

std::string Engine::check_json(const std::string& suite, int* failures_out) {
  CheckSuite which;
  if (suite == "fast") {
    which = CheckSuite::Fast;
  } else if (suite == "all") {
    which = CheckSuite::All;
  } else {
    throw ArgumentError("unknown check suite '" + suite + "' (use all|fast)");
  }
  const std::vector<CheckResult> results =
      run_check_suite(which, ctx_, max_entries_);
  int failures = 0;
  Json checks = Json::array();
  for (const CheckResult& result : results) {
    if (!result.pass) ++failures;
    Json entry{{"name", result.name},
               {"pass", result.pass},
               {"deviation", format_double(result.deviation)},
               {"tolerance", format_double(result.tolerance)}};
    if (!result.detail.empty()) entry["detail"] = result.detail;
    checks.push_back(std::move(entry));
  }
  if (failures_out) *failures_out = failures;
  Json out{{"command", "check"},
           {"suite", suite},
           {"r", ctx_.r},
           {"s", ctx_.s},
           {"total", static_cast<int>(results.size())},
           {"failed", failures},
           {"checks", std::move(checks)}};
  return out.dump();
}

}  // namespace qtqft
