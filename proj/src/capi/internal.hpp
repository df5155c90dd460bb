#pragma once

#include <cstdint>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semiab/group.hpp"
#include "semiab/semiab.h"

namespace semiab::capi {

using nlohmann::json;

struct Options {
  std::size_t max_order;
  std::size_t max_syllables;  // 0: per-command default
  std::size_t jobs;
  std::uint64_t seed;
  std::size_t samples;

  std::size_t syllables_or(std::size_t fallback) const {
    return max_syllables ? max_syllables : fallback;
  }
};

void set_last_error(std::string msg);
const char* last_error_cstr();
semiab_status status_of(ErrorKind kind);
char* dup_string(std::string const& s);
Options resolve(semiab_options const* opts);
/// Name of the first isomorphic group in the family list, if any.
std::optional<std::string> identify(FiniteGroup const& g);

template <typename Fn>
semiab_status guard(Fn&& fn) noexcept {
  try {
    fn();
    return SEMIAB_OK;
  } catch (Error const& e) {
    set_last_error(e.what());
    return status_of(e.kind());
  } catch (json::exception const& e) {
    set_last_error(std::string("ParseError: ") + e.what());
    return SEMIAB_ERR_PARSE;
  } catch (std::invalid_argument const& e) {
    set_last_error(std::string("InvalidArgument: ") + e.what());
    return SEMIAB_ERR_INVALID_ARGUMENT;
  } catch (std::bad_alloc const&) {
    set_last_error("Internal: out of memory");
    return SEMIAB_ERR_INTERNAL;
  } catch (std::exception const& e) {
    set_last_error(std::string("Internal: ") + e.what());
    return SEMIAB_ERR_INTERNAL;
  } catch (...) {
    set_last_error("Internal: unknown exception");
    return SEMIAB_ERR_INTERNAL;
  }
}

template <typename Fn>
semiab_status emit(char** out, Fn&& fn) noexcept {
  return guard([&] {
    if (!out) throw std::invalid_argument("out is NULL");
    json report = fn();
    *out = dup_string(report.dump(2));
  });
}

json report_group(FiniteGroup const& g);
json report_actions_enumerate(FiniteGroup const& g, FiniteGroup const& a, Options const& o);
json report_actions_roundtrip(FiniteGroup const& g, FiniteGroup const& a, Options const& o);
json report_semidirect(FiniteGroup const& g, FiniteGroup const& a,
                       std::optional<std::string> const& phi, Options const& o);
json report_semidirect_maps(Options const& o);
json report_commutator(FiniteGroup const& ambient, std::string const& parts,
                       Options const& o);
json report_talgebra(FiniteGroup const& g, FiniteGroup const& a,
                     std::optional<std::string> const& phi, Options const& o);
json report_propercrit_sweep(Options const& o);
json report_property_p(std::optional<FiniteGroup> const& g, Options const& o);
json report_pairs_demo();
json report_pairs_sweep(Options const& o);
json report_word(FiniteGroup const& a, FiniteGroup const& g, std::string const& text);

std::string render(std::string const& report, std::string const& format);

}  // namespace semiab::capi
