// Copyright (C) 2026 The adiabat authors
// SPDX-License-Identifier: Apache-2.0

#include "adiabat/adiabat.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "adiabat/commands.hpp"
#include "adiabat/error.hpp"
#include "adiabat/io.hpp"
#include "adiabat/spectral.hpp"

struct adb_instance {
  adiabat::InstanceDocument doc;
};

struct adb_config {
  adiabat::RunConfig config;
};

namespace {

thread_local std::string last_error;
thread_local adb_status last_status = ADB_OK;

adb_status status_of(adiabat::ErrorCode code) {
  switch (code) {
    case adiabat::ErrorCode::invalid_argument:
      return ADB_ERR_INVALID_ARGUMENT;
    case adiabat::ErrorCode::capacity:
      return ADB_ERR_CAPACITY;
    case adiabat::ErrorCode::degenerate:
      return ADB_ERR_DEGENERATE;
    case adiabat::ErrorCode::numerical:
      return ADB_ERR_NUMERICAL;
    case adiabat::ErrorCode::parse:
      return ADB_ERR_PARSE;
    case adiabat::ErrorCode::io:
      return ADB_ERR_IO;
    case adiabat::ErrorCode::not_applicable:
      return ADB_ERR_NOT_APPLICABLE;
  }
  return ADB_ERR_INTERNAL;
}

adb_status fail(adb_status status, const std::string& message) {
  last_status = status;
  last_error = message;
  return status;
}

template <typename F>
adb_status guarded(F&& body) {
  try {
    body();
    last_status = ADB_OK;
    last_error.clear();
    return ADB_OK;
  } catch (const adiabat::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ADB_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(ADB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ADB_ERR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw adiabat::Error(adiabat::ErrorCode::invalid_argument, what);
}

std::vector<std::string> split_list(const char* list) {
  std::vector<std::string> out;
  std::string item;
  for (const char* p = list; ; ++p) {
    if (*p == ',' || *p == '\0') {
      while (!item.empty() && item.back() == ' ') item.pop_back();
      if (!item.empty()) out.push_back(item);
      item.clear();
      if (*p == '\0') break;
    } else if (!(item.empty() && *p == ' ')) {
      item += *p;
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* adb_version(void) { return ADIABAT_VERSION_STRING; }

const char* adb_last_error(void) { return last_error.c_str(); }

const char* adb_status_name(adb_status status) {
  switch (status) {
    case ADB_OK:
      return "ok";
    case ADB_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case ADB_ERR_CAPACITY:
      return "capacity";
    case ADB_ERR_DEGENERATE:
      return "degenerate";
    case ADB_ERR_NUMERICAL:
      return "numerical";
    case ADB_ERR_PARSE:
      return "parse";
    case ADB_ERR_IO:
      return "io";
    case ADB_ERR_NOT_APPLICABLE:
      return "not_applicable";
    case ADB_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

char* adb_last_error_json(void) {
  try {
    nlohmann::ordered_json j;
    j["error"]["code"] = adb_status_name(last_status);
    j["error"]["message"] = last_error;
    return duplicate(j.dump());
  } catch (...) {
    return nullptr;
  }
}

void adb_string_free(char* text) { std::free(text); }

adb_status adb_instance_from_fixture(const char* name, adb_instance** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new adb_instance{adiabat::fixture_document(name)};
  });
}

adb_status adb_instance_from_file(const char* path, adb_instance** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new adb_instance{adiabat::load_instance(path)};
  });
}

adb_status adb_instance_from_json(const char* text, adb_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new adb_instance{adiabat::parse_instance(text)};
  });
}

adb_status adb_instance_to_json(const adb_instance* instance, char** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    *out = duplicate(adiabat::instance_to_json(instance->doc));
  });
}

adb_status adb_instance_set_alpha(adb_instance* instance, const char* alpha) {
  return guarded([&] {
    require(instance && alpha, "null argument");
    const auto a = adiabat::parse_alpha(alpha);
    adiabat::ProblemGraph g = instance->doc.graph;
    if (a.exact)
      g.set_alpha(*a.exact);
    else
      g.set_alpha(a.value);
    g.validate();
    instance->doc.graph = std::move(g);
  });
}

adb_status adb_instance_dimension(const adb_instance* instance, size_t* out) {
  return guarded([&] {
    require(instance && out, "null argument");
    const auto& g = instance->doc.graph;
    *out = instance->doc.mixer == adiabat::MixerKind::transverse_field
               ? (std::size_t{1} << g.n)
               : static_cast<std::size_t>(adiabat::binomial(g.n, g.k));
  });
}

void adb_instance_free(adb_instance* instance) { delete instance; }

adb_status adb_instance_min_gap(const adb_instance* instance, double* s_star, double* delta_min) {
  return guarded([&] {
    require(instance && s_star && delta_min, "null argument");
    const auto pair = adiabat::make_clique_pair(instance->doc.graph, instance->doc.mixer);
    const auto gap = adiabat::min_gap(pair);
    *s_star = gap.s_star;
    *delta_min = gap.delta_min;
  });
}

adb_status adb_config_new(adb_config** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new adb_config{};
  });
}

void adb_config_free(adb_config* config) { delete config; }

adb_status adb_config_set_source(adb_config* config, const char* source) {
  return guarded([&] {
    require(config && source, "null argument");
    config->config.source = source;
  });
}

adb_status adb_config_set_alpha_list(adb_config* config, const char* list) {
  return guarded([&] {
    require(config && list, "null argument");
    config->config.alphas = adiabat::parse_alpha_list(list);
  });
}

adb_status adb_config_set_grid(adb_config* config, int points) {
  return guarded([&] {
    require(config != nullptr, "null argument");
    require(points >= 51, "grid needs at least 51 points");
    config->config.grid_points = points;
  });
}

adb_status adb_config_set_refine(adb_config* config, double tol) {
  return guarded([&] {
    require(config != nullptr, "null argument");
    require(tol > 0.0, "refinement tolerance must be positive");
    config->config.refine_tol = tol;
  });
}

adb_status adb_config_set_levels(adb_config* config, int levels) {
  return guarded([&] {
    require(config != nullptr, "null argument");
    require(levels >= 1, "levels must be at least 1");
    config->config.levels = levels;
  });
}

adb_status adb_config_set_output_dir(adb_config* config, const char* path) {
  return guarded([&] {
    require(config && path && *path, "null or empty argument");
    config->config.out_dir = path;
  });
}

adb_status adb_config_set_checks(adb_config* config, const char* list) {
  return guarded([&] {
    require(config && list, "null argument");
    adiabat::RunConfig next = config->config;
    next.checks = split_list(list);
    next.validate();
    config->config = std::move(next);
  });
}

adb_status adb_config_set_window(adb_config* config, int half_points) {
  return guarded([&] {
    require(config != nullptr, "null argument");
    require(half_points >= 1, "window needs at least one point per side");
    config->config.window_half_points = static_cast<std::size_t>(half_points);
  });
}

adb_status adb_cmd_scan(const adb_instance* instance, const adb_config* config, char** summary) {
  return guarded([&] {
    require(instance && config && summary, "null argument");
    *summary = duplicate(adiabat::run_scan(instance->doc, config->config));
  });
}

adb_status adb_cmd_verify(const adb_instance* instance, const adb_config* config, char** summary, int* passed) {
  return guarded([&] {
    require(instance && config && summary && passed, "null argument");
    const auto outcome = adiabat::run_verify(instance->doc, config->config);
    *summary = duplicate(outcome.summary_json);
    *passed = outcome.passed ? 1 : 0;
  });
}

adb_status adb_cmd_fixture(const char* name, char** document) {
  return guarded([&] {
    require(name && document, "null argument");
    *document = duplicate(adiabat::instance_to_json(adiabat::fixture_document(name)));
  });
}

}  // extern "C"
