#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semiab/semiab.h"

namespace {

using nlohmann::json;

enum Exit : int { kOk = 0, kViolations = 1, kRejected = 2, kBound = 3, kFailed = 4 };

struct Failure {
  semiab_status status;
  std::string message;
};

int exit_for(semiab_status s) {
  switch (s) {
    case SEMIAB_OK: return kOk;
    case SEMIAB_ERR_MALFORMED_TABLE:
    case SEMIAB_ERR_NOT_ASSOCIATIVE:
    case SEMIAB_ERR_NO_IDENTITY:
    case SEMIAB_ERR_NO_INVERSE:
    case SEMIAB_ERR_NOT_LATIN_SQUARE:
    case SEMIAB_ERR_UNSUPPORTED_PARAMETER:
    case SEMIAB_ERR_PARSE:
    case SEMIAB_ERR_INVALID_ARGUMENT: return kRejected;
    case SEMIAB_ERR_BOUND_EXCEEDED: return kBound;
    default: return kFailed;
  }
}

void check(semiab_status s) {
  if (s != SEMIAB_OK) throw Failure{s, semiab_last_error()};
}

struct GroupDeleter {
  void operator()(semiab_group* g) const { semiab_group_free(g); }
};
using GroupPtr = std::unique_ptr<semiab_group, GroupDeleter>;

std::string take(char* s) {
  std::string out(s ? s : "");
  semiab_string_free(s);
  return out;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{SEMIAB_ERR_PARSE, "ParseError: cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(std::string const& ref) {
  std::ifstream in(ref);
  return in.good();
}

// Inline JSON, a file path, or a group name.
std::string text_or_file(std::string const& ref) {
  auto const first = ref.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (ref[first] == '{' || ref[first] == '['))
    return ref;
  if (is_file(ref)) return read_file(ref);
  return {};
}

GroupPtr load_group(std::string const& ref) {
  semiab_group* g = nullptr;
  std::string const text = text_or_file(ref);
  semiab_status const s =
      text.empty() ? semiab_group_named(ref.c_str(), &g) : semiab_group_from_json(text.c_str(), &g);
  if (s != SEMIAB_OK) throw Failure{s, ref + ": " + semiab_last_error()};
  return GroupPtr(g);
}

std::string load_phi(std::string const& ref) {
  std::string text = text_or_file(ref);
  if (text.empty()) throw Failure{SEMIAB_ERR_PARSE, "ParseError: phi '" + ref + "' is neither JSON nor a file"};
  return text;
}

struct Config {
  std::size_t max_order = 24;
  std::size_t max_syllables = 0;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::string format = "json";
  std::string out;

  semiab_options options() const {
    semiab_options o;
    semiab_options_init(&o);
    o.max_order = max_order;
    o.max_syllables = max_syllables;
    o.jobs = jobs;
    o.seed = seed;
    o.samples = samples;
    return o;
  }
};

int emit(Config const& cfg, std::string const& report) {
  char* rendered = nullptr;
  check(semiab_report_render(report.c_str(), cfg.format.c_str(), &rendered));
  std::string const text = take(rendered);
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Failure{SEMIAB_ERR_INVALID_ARGUMENT, "InvalidArgument: cannot write " + cfg.out};
    f << text;
  }
  auto const doc = json::parse(report);
  return doc.value("violations", 0) > 0 ? kViolations : kOk;
}

std::string call(std::function<semiab_status(char**)> const& fn) {
  char* out = nullptr;
  check(fn(&out));
  return take(out);
}

std::vector<std::string> stdin_lines() {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group experiments for actions, semidirect products and commutators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(semiab_version()));

  Config cfg;
  app.add_option("--max-order", cfg.max_order, "Largest group order in sweeps")
      ->envname("SEMIAB_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-syllables", cfg.max_syllables,
                 "Word-length bound (0 picks the command default)")
      ->envname("SEMIAB_MAX_SYLLABLES");
  app.add_option("--format", cfg.format, "Report format")
      ->envname("SEMIAB_FORMAT")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")
      ->envname("SEMIAB_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->envname("SEMIAB_SEED");
  app.add_option("--samples", cfg.samples, "Sample count for sampled checks")
      ->envname("SEMIAB_SAMPLES")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Report file (default stdout)")->envname("SEMIAB_OUT");

  std::function<std::string()> run;

  auto* groups = app.add_subcommand("groups", "Group input")->require_subcommand(1);
  std::string ingest_ref;
  groups->add_subcommand("ingest", "Validate a group and summarize it")
      ->callback([&] {
        run = [&] {
          auto g = load_group(ingest_ref);
          return call([&](char** o) { return semiab_report_group(g.get(), o); });
        };
      })
      ->add_option("group", ingest_ref, "Name, JSON file or inline JSON")
      ->required();

  std::string g_ref, a_ref, phi_ref;
  auto add_ga = [&](CLI::App* sub) {
    sub->add_option("--g", g_ref, "Acting group")->required();
    sub->add_option("--a", a_ref, "Acted-on group")->required();
  };

  auto* actions = app.add_subcommand("actions", "Group actions")->require_subcommand(1);
  auto* enumerate = actions->add_subcommand("enumerate", "List every action of G on A");
  add_ga(enumerate);
  enumerate->callback([&] {
    run = [&] {
      auto g = load_group(g_ref), a = load_group(a_ref);
      auto o = cfg.options();
      return call([&](char** out) { return semiab_actions_enumerate(g.get(), a.get(), &o, out); });
    };
  });
  auto* roundtrip = actions->add_subcommand("roundtrip", "Action to point and back");
  add_ga(roundtrip);
  roundtrip->callback([&] {
    run = [&] {
      auto g = load_group(g_ref), a = load_group(a_ref);
      auto o = cfg.options();
      return call([&](char** out) { return semiab_actions_roundtrip(g.get(), a.get(), &o, out); });
    };
  });

  auto* semidirect = app.add_subcommand("semidirect", "Semidirect products")->require_subcommand(1);
  auto* build = semidirect->add_subcommand("build", "Build A x| G for one or every action");
  add_ga(build);
  build->add_option("--phi", phi_ref, "Action table [g][a]: JSON or file");
  build->callback([&] {
    run = [&] {
      auto g = load_group(g_ref), a = load_group(a_ref);
      auto o = cfg.options();
      std::string const phi = phi_ref.empty() ? std::string() : load_phi(phi_ref);
      return call([&](char** out) {
        return semiab_semidirect_build(g.get(), a.get(), phi.empty() ? nullptr : phi.c_str(), &o,
                                       out);
      });
    };
  });
  semidirect->add_subcommand("maps", "Kernel and image of sampled f x| g")->callback([&] {
    run = [&] {
      auto o = cfg.options();
      return call([&](char** out) { return semiab_semidirect_maps(&o, out); });
    };
  });

  std::string ambient_ref;
  std::vector<std::string> parts;
  auto* commutator = app.add_subcommand("commutator", "n-fold commutator of subgroups");
  commutator->add_option("--group", ambient_ref, "Ambient group")->required();
  commutator->add_option("--part", parts, "\"all\" or a JSON list of elements, once per part")
      ->required();
  commutator->callback([&] {
    run = [&] {
      auto g = load_group(ambient_ref);
      json arr = json::array();
      for (auto const& p : parts) {
        if (p == "all") {
          arr.push_back("all");
          continue;
        }
        try {
          arr.push_back(json::parse(p));
        } catch (json::exception const&) {
          throw Failure{SEMIAB_ERR_PARSE, "ParseError: part '" + p + "' is not \"all\" or a JSON list"};
        }
      }
      auto o = cfg.options();
      std::string const text = arr.dump();
      return call([&](char** out) { return semiab_commutator(g.get(), text.c_str(), &o, out); });
    };
  });

  auto* talgebra = app.add_subcommand("talgebra", "Algebra-level checks")->require_subcommand(1);
  auto* tcheck = talgebra->add_subcommand("check", "Diagram checks for actions or raw tables");
  add_ga(tcheck);
  bool all_tables = false;
  tcheck->add_option("--phi", phi_ref, "Table [g][a]: JSON or file");
  tcheck->add_flag("--all-tables", all_tables, "Every table with unit row and column");
  tcheck->callback([&] {
    run = [&] {
      auto g = load_group(g_ref), a = load_group(a_ref);
      auto o = cfg.options();
      std::string phi;
      if (all_tables) phi = "all-tables";
      else if (!phi_ref.empty()) phi = load_phi(phi_ref);
      return call([&](char** out) {
        return semiab_talgebra_check(g.get(), a.get(), phi.empty() ? nullptr : phi.c_str(), &o,
                                     out);
      });
    };
  });

  auto* propercrit = app.add_subcommand("propercrit", "Normalizing criterion")->require_subcommand(1);
  propercrit->add_subcommand("sweep", "All subgroup pairs of the family list")->callback([&] {
    run = [&] {
      auto o = cfg.options();
      return call([&](char** out) { return semiab_propercrit_sweep(&o, out); });
    };
  });

  std::string p_group;
  auto* property_p = app.add_subcommand("property-p", "Normal iff [X,G] inside X");
  property_p->add_option("--group", p_group, "One group (default: the family list)");
  property_p->callback([&] {
    run = [&] {
      auto o = cfg.options();
      GroupPtr g;
      if (!p_group.empty()) g = load_group(p_group);
      return call([&](char** out) { return semiab_property_p(g.get(), &o, out); });
    };
  });

  auto* pairs = app.add_subcommand("pairs", "The category of pairs")->require_subcommand(1);
  pairs->add_subcommand("demo", "A normal subobject that is not proper")->callback([&] {
    run = [&] { return call([&](char** out) { return semiab_pairs_demo(out); }); };
  });
  pairs->add_subcommand("sweep", "Every subobject of small pairs")->callback([&] {
    run = [&] {
      auto o = cfg.options();
      return call([&](char** out) { return semiab_pairs_sweep(&o, out); });
    };
  });

  std::vector<std::string> words;
  std::string wa = "Z3", wg = "Z2";
  auto* wsub = app.add_subcommand("words", "Normalize words of A+G (stdin when none given)");
  wsub->add_option("--a", wa, "First factor")->capture_default_str();
  wsub->add_option("--g", wg, "Second factor")->capture_default_str();
  wsub->add_option("word", words, "Words such as \"[G:1,A:2] A:1\"");
  wsub->callback([&] {
    run = [&] {
      auto a = load_group(wa), g = load_group(wg);
      if (words.empty()) words = stdin_lines();
      if (words.size() == 1)
        return call([&](char** out) {
          return semiab_word_normalize(a.get(), g.get(), words[0].c_str(), out);
        });
      json results = json::array();
      std::size_t bad = 0;
      for (auto const& w : words) {
        auto r = json::parse(call([&](char** out) {
          return semiab_word_normalize(a.get(), g.get(), w.c_str(), out);
        }));
        bad += r.value("violations", 0);
        results.push_back(std::move(r));
      }
      json doc{{"tool", "semiab"},
               {"version", semiab_version()},
               {"command", "words"},
               {"parameters", json{{"A", wa}, {"G", wg}, {"count", words.size()}}},
               {"results", std::move(results)},
               {"violations", bad}};
      return doc.dump(2);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kRejected;
  }

  try {
    return emit(cfg, run());
  } catch (Failure const& f) {
    std::cerr << "semiab: " << f.message << '\n';
    return exit_for(f.status);
  } catch (std::exception const& e) {
    std::cerr << "semiab: " << e.what() << '\n';
    return kFailed;
  }
}
