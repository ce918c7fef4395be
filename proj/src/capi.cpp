#include "qtqft/qtqft.h"

#include <cstring>
#include <new>
#include <string>

#include "engine.hpp"
#include "errors.hpp"

struct qtqft_engine_t {
  qtqft::Engine engine;
  std::string last_error;

  qtqft_engine_t(int r, int s) : engine(r, s) {}
};

namespace {

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(::operator new(text.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs fn, translating exceptions into status codes and the engine's
// last-error slot. fn returns the JSON payload (empty = none).
template <typename Fn>
int wrap(qtqft_engine_t* engine, char** json_out, Fn&& fn) {
  if (!engine) return QTQFT_ERROR_ARGUMENT;
  if (json_out) *json_out = nullptr;
  engine->last_error.clear();
  std::string payload;
  try {
    payload = fn();
  } catch (const qtqft::ArgumentError& e) {
    engine->last_error = e.what();
    return QTQFT_ERROR_ARGUMENT;
  } catch (const qtqft::IntegrityError& e) {
    engine->last_error = e.what();
    return QTQFT_ERROR_INTEGRITY;
  } catch (const qtqft::ResourceError& e) {
    engine->last_error = e.what();
    return QTQFT_ERROR_RESOURCE;
  } catch (const qtqft::IoError& e) {
    engine->last_error = e.what();
    return QTQFT_ERROR_IO;
  } catch (const std::exception& e) {
    engine->last_error = e.what();
    return QTQFT_ERROR_INTERNAL;
  } catch (...) {
    engine->last_error = "unknown error";
    return QTQFT_ERROR_INTERNAL;
  }
  if (json_out && !payload.empty()) {
    *json_out = copy_string(payload);
    if (!*json_out) {
      engine->last_error = "out of memory";
      return QTQFT_ERROR_INTERNAL;
    }
  }
  return QTQFT_OK;
}

}  // namespace

extern "C" {

int qtqft_api_version(void) { return QTQFT_API_VERSION; }

const char* qtqft_strerror(int code) {
  switch (code) {
    case QTQFT_OK: return "ok";
    case QTQFT_ERROR_ARGUMENT: return "argument error";
    case QTQFT_ERROR_INTEGRITY: return "integrity-check failure";
    case QTQFT_ERROR_RESOURCE: return "entry cap exceeded";
    case QTQFT_ERROR_IO: return "i/o error";
    case QTQFT_ERROR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

int qtqft_engine_create(int r, int s, qtqft_engine_t** engine_out) {
  if (!engine_out) return QTQFT_ERROR_ARGUMENT;
  *engine_out = nullptr;
  try {
    *engine_out = new qtqft_engine_t(r, s);
    return QTQFT_OK;
  } catch (const qtqft::ArgumentError&) {
    return QTQFT_ERROR_ARGUMENT;
  } catch (...) {
    return QTQFT_ERROR_INTERNAL;
  }
}

void qtqft_engine_destroy(qtqft_engine_t* engine) { delete engine; }

int qtqft_engine_set_cache_dir(qtqft_engine_t* engine, const char* dir) {
  return wrap(engine, nullptr, [&]() -> std::string {
    if (dir) {
      engine->engine.set_cache_dir(std::string(dir));
    } else {
      engine->engine.set_cache_dir(std::nullopt);
    }
    return {};
  });
}

int qtqft_engine_set_max_entries(qtqft_engine_t* engine, uint64_t cap) {
  return wrap(engine, nullptr, [&]() -> std::string {
    engine->engine.set_max_entries(cap);
    return {};
  });
}

int qtqft_engine_set_q_at_one(qtqft_engine_t* engine, int enabled) {
  return wrap(engine, nullptr, [&]() -> std::string {
    engine->engine.set_q_at_one(enabled != 0);
    return {};
  });
}

const char* qtqft_engine_last_error(const qtqft_engine_t* engine) {
  return engine ? engine->last_error.c_str() : "null engine";
}

int qtqft_product(qtqft_engine_t* engine, const char* a, const char* b,
                  char** json_out) {
  return wrap(engine, json_out, [&] {
    if (!a || !b) throw qtqft::ArgumentError("null partition argument");
    return engine->engine.product_json(a, b);
  });
}

int qtqft_pair(qtqft_engine_t* engine, const char* a, const char* b,
               char** json_out) {
  return wrap(engine, json_out, [&] {
    if (!a || !b) throw qtqft::ArgumentError("null partition argument");
    return engine->engine.pair_json(a, b);
  });
}

int qtqft_gw(qtqft_engine_t* engine, int genus, int degree,
             const char* const* insertions, size_t n_insertions,
             char** json_out) {
  return wrap(engine, json_out, [&] {
    std::vector<std::string> parts;
    parts.reserve(n_insertions);
    for (size_t i = 0; i < n_insertions; ++i) {
      if (!insertions || !insertions[i]) {
        throw qtqft::ArgumentError("null insertion argument");
      }
      parts.emplace_back(insertions[i]);
    }
    return engine->engine.gw_json(genus, degree, parts);
  });
}

int qtqft_tensor(qtqft_engine_t* engine, int genus, int degree, int m, int n,
                 char** json_out) {
  return wrap(engine, json_out,
              [&] { return engine->engine.tensor_json(genus, degree, m, n); });
}

int qtqft_verlinde(qtqft_engine_t* engine, int genus, char** json_out) {
  return wrap(engine, json_out,
              [&] { return engine->engine.verlinde_json(genus); });
}

int qtqft_holla(qtqft_engine_t* engine, int genus, int gamma, char** json_out) {
  return wrap(engine, json_out,
              [&] { return engine->engine.holla_json(genus, gamma); });
}

int qtqft_closed(qtqft_engine_t* engine, int genus, int degree,
                 char** json_out) {
  return wrap(engine, json_out,
              [&] { return engine->engine.closed_json(genus, degree); });
}

int qtqft_eta(qtqft_engine_t* engine, int genus, int degree, int n_slots,
              char** json_out) {
  return wrap(engine, json_out,
              [&] { return engine->engine.eta_json(genus, degree, n_slots); });
}

int qtqft_spectrum(qtqft_engine_t* engine, char** json_out) {
  return wrap(engine, json_out, [&] { return engine->engine.spectrum_json(); });
}

int qtqft_check(qtqft_engine_t* engine, const char* suite, char** json_out) {
  if (!engine) return QTQFT_ERROR_ARGUMENT;
  int failures = 0;
  const int status = wrap(engine, json_out, [&] {
    return engine->engine.check_json(suite ? suite : "fast", &failures);
  });
  if (status != QTQFT_OK) return status;
  if (failures > 0) {
    engine->last_error = std::to_string(failures) + " invariant check(s) failed";
    return QTQFT_ERROR_INTEGRITY;
  }
  return QTQFT_OK;
}

void qtqft_string_free(char* text) { ::operator delete(text); }

}  // extern "C"
