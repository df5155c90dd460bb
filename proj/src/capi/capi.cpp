#include "semiab/semiab.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <string>

#include <json.hpp>

#include "internal.hpp"
#include "semiab/families.hpp"
#include "semiab/io.hpp"

struct semiab_group {
  semiab::FiniteGroup g;
};

namespace semiab::capi {

namespace {
thread_local std::string last_error;
}

void set_last_error(std::string msg) { last_error = std::move(msg); }
const char* last_error_cstr() { return last_error.c_str(); }

semiab_status status_of(ErrorKind kind) {
  static_assert(static_cast<int>(ErrorKind::ParseError) + 1 == SEMIAB_ERR_PARSE);
  return static_cast<semiab_status>(static_cast<int>(kind) + 1);
}

char* dup_string(std::string const& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FiniteGroup const& group_of(semiab_group const* g) {
  if (!g) throw std::invalid_argument("group handle is NULL");
  return g->g;
}

Options resolve(semiab_options const* opts) {
  semiab_options o;
  semiab_options_init(&o);
  if (opts) o = *opts;
  if (o.jobs == 0) o.jobs = 1;
  if (o.max_order == 0) throw std::invalid_argument("max_order must be positive");
  return Options{o.max_order, o.max_syllables, o.jobs, o.seed, o.samples};
}

std::optional<std::string> identify(FiniteGroup const& g) {
  static std::mutex mu;
  static std::vector<FiniteGroup> known;
  static std::size_t known_to = 0;
  constexpr std::size_t limit = kDefaultSearchBound;
  if (g.order() > limit) return std::nullopt;
  std::vector<FiniteGroup> candidates;
  {
    std::lock_guard lock(mu);
    if (known_to < limit) {
      known = family_list(limit);
      known_to = limit;
    }
    for (auto const& k : known)
      if (k.order() == g.order()) candidates.push_back(k);
  }
  for (auto const& k : candidates)
    if (is_isomorphic(g, k)) return k.name();
  return std::nullopt;
}

}  // namespace semiab::capi

using namespace semiab;
using namespace semiab::capi;

extern "C" {

void semiab_options_init(semiab_options* opts) {
  if (!opts) return;
  opts->max_order = 24;
  opts->max_syllables = 0;
  opts->jobs = 1;
  opts->seed = 1;
  opts->samples = 200;
}

const char* semiab_version(void) { return "0.1.0"; }

const char* semiab_status_name(semiab_status status) {
  switch (status) {
    case SEMIAB_OK: return "ok";
    case SEMIAB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SEMIAB_ERR_INTERNAL: return "Internal";
    default: break;
  }
  int const k = static_cast<int>(status) - 1;
  if (k >= 0 && k <= static_cast<int>(ErrorKind::ParseError)) {
    static thread_local std::string name;
    name = std::string(to_string(static_cast<ErrorKind>(k)));
    return name.c_str();
  }
  return "Unknown";
}

const char* semiab_last_error(void) { return last_error_cstr(); }

void semiab_string_free(char* s) { std::free(s); }

semiab_status semiab_group_named(const char* name, semiab_group** out) {
  return guard([&] {
    if (!name || !out) throw std::invalid_argument("name and out must be non-NULL");
    *out = new semiab_group{named_group(name)};
  });
}

semiab_status semiab_group_from_json(const char* json, semiab_group** out) {
  return guard([&] {
    if (!json || !out) throw std::invalid_argument("json and out must be non-NULL");
    *out = new semiab_group{group_from_json(json)};
  });
}

semiab_status semiab_group_order(const semiab_group* g, size_t* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is NULL");
    *out = group_of(g).order();
  });
}

semiab_status semiab_group_to_json(const semiab_group* g, char** out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is NULL");
    *out = dup_string(group_to_json(group_of(g)));
  });
}

semiab_status semiab_group_is_isomorphic(const semiab_group* a, const semiab_group* b,
                                         int* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is NULL");
    *out = is_isomorphic(group_of(a), group_of(b)) ? 1 : 0;
  });
}

void semiab_group_free(semiab_group* g) { delete g; }

semiab_status semiab_report_group(const semiab_group* g, char** out) {
  return emit(out, [&] { return report_group(group_of(g)); });
}

semiab_status semiab_actions_enumerate(const semiab_group* g, const semiab_group* a,
                                       const semiab_options* opts, char** out) {
  return emit(out, [&] {
    return report_actions_enumerate(group_of(g), group_of(a), resolve(opts));
  });
}

semiab_status semiab_actions_roundtrip(const semiab_group* g, const semiab_group* a,
                                       const semiab_options* opts, char** out) {
  return emit(out, [&] {
    return report_actions_roundtrip(group_of(g), group_of(a), resolve(opts));
  });
}

semiab_status semiab_semidirect_build(const semiab_group* g, const semiab_group* a,
                                      const char* phi_json, const semiab_options* opts,
                                      char** out) {
  return emit(out, [&] {
    return report_semidirect(group_of(g), group_of(a),
                             phi_json ? std::optional<std::string>(phi_json) : std::nullopt,
                             resolve(opts));
  });
}

semiab_status semiab_semidirect_maps(const semiab_options* opts, char** out) {
  return emit(out, [&] { return report_semidirect_maps(resolve(opts)); });
}

semiab_status semiab_commutator(const semiab_group* ambient, const char* parts_json,
                                const semiab_options* opts, char** out) {
  return emit(out, [&] {
    if (!parts_json) throw std::invalid_argument("parts_json is NULL");
    return report_commutator(group_of(ambient), parts_json, resolve(opts));
  });
}

semiab_status semiab_talgebra_check(const semiab_group* g, const semiab_group* a,
                                    const char* phi_json, const semiab_options* opts,
                                    char** out) {
  return emit(out, [&] {
    return report_talgebra(group_of(g), group_of(a),
                           phi_json ? std::optional<std::string>(phi_json) : std::nullopt,
                           resolve(opts));
  });
}

semiab_status semiab_propercrit_sweep(const semiab_options* opts, char** out) {
  return emit(out, [&] { return report_propercrit_sweep(resolve(opts)); });
}

semiab_status semiab_property_p(const semiab_group* g, const semiab_options* opts,
                                char** out) {
  return emit(out, [&] {
    return report_property_p(g ? std::optional<FiniteGroup>(group_of(g)) : std::nullopt,
                             resolve(opts));
  });
}

semiab_status semiab_pairs_demo(char** out) {
  return emit(out, [&] { return report_pairs_demo(); });
}

semiab_status semiab_pairs_sweep(const semiab_options* opts, char** out) {
  return emit(out, [&] { return report_pairs_sweep(resolve(opts)); });
}

semiab_status semiab_word_normalize(const semiab_group* a, const semiab_group* g,
                                    const char* text, char** out) {
  return emit(out, [&] {
    if (!text) throw std::invalid_argument("text is NULL");
    return report_word(group_of(a), group_of(g), text);
  });
}

semiab_status semiab_report_render(const char* report_json, const char* format,
                                   char** out) {
  return guard([&] {
    if (!report_json || !format || !out)
      throw std::invalid_argument("report, format and out must be non-NULL");
    *out = dup_string(render(report_json, format));
  });
}

}  // extern "C"
