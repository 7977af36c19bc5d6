#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gri/gri.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

void check(gri_status s, const std::string& context) {
  if (s != GRI_OK) throw Failure{context + ": " + gri_status_name(s) + ": " + gri_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gri_string_free(s);
  return out;
}

struct GroupDeleter {
  void operator()(gri_group* g) const { gri_group_free(g); }
};
struct RingDeleter {
  void operator()(gri_ring* r) const { gri_ring_free(r); }
};
struct ConfigDeleter {
  void operator()(gri_config* c) const { gri_config_free(c); }
};
using GroupHandle = std::unique_ptr<gri_group, GroupDeleter>;
using RingHandle = std::unique_ptr<gri_ring, RingDeleter>;
using ConfigHandle = std::unique_ptr<gri_config, ConfigDeleter>;

GroupHandle open_group(const std::string& selector, std::size_t max_cosets) {
  gri_group* g = nullptr;
  check(gri_group_open(selector.c_str(), max_cosets, &g), "--group '" + selector + "'");
  return GroupHandle(g);
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Failure{"cannot write " + path};
  out << text;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("GRI_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw Failure{std::string("GRI_JOBS must be a positive integer, got '") + env + "'"};
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutativity of symmetric and skew elements in group rings with oriented involutions"};
  app.require_subcommand(1);

  std::string group_sel, presentation, out_path, csv_path;
  std::string involution_sel, orientation_sel, ring_sel, question;
  std::string rings = "Z3,Z4,Z5,Z8,Z12,Z4xZ2";
  std::size_t max_cosets = 10000;
  bool count = false, json = false, compatible_only = false;
  std::uint64_t oracle_budget = 0;
  int max_order = 16;
  std::optional<unsigned> jobs;

  auto* catalog = app.add_subcommand("catalog", "Built-in groups");
  auto* catalog_list = catalog->add_subcommand("list", "List catalog group names");
  catalog_list->add_flag("--json", json, "Print a JSON array");
  catalog->require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Structural invariants of a group");
  analyze->add_option("--group", group_sel, "Catalog name, JSON table file or presentation")->required();
  analyze->add_option("--max-cosets", max_cosets, "Coset limit for presentations");

  auto* group = app.add_subcommand("group", "Enumerate a presentation into a Cayley table");
  group->add_option("--presentation", presentation, "Presentation such as \"<a,b | a^4, b^2, b a = a^-1 b>\"")->required();
  group->add_option("--max-cosets", max_cosets, "Coset limit");
  group->add_option("--out", out_path, "Write the table JSON here");

  auto* invs = app.add_subcommand("involutions", "Involutive anti-automorphisms of a group");
  invs->add_option("--group", group_sel, "Catalog name, JSON table file or presentation")->required();
  invs->add_option("--max-cosets", max_cosets, "Coset limit for presentations");
  invs->add_flag("--count", count, "Print only the number of involutions");

  auto* pairs = app.add_subcommand("pairs", "Oriented involution pairs and their compatibility");
  pairs->add_option("--group", group_sel, "Catalog name, JSON table file or presentation")->required();
  pairs->add_option("--max-cosets", max_cosets, "Coset limit for presentations");
  pairs->add_flag("--compatible-only", compatible_only, "Restrict to compatible pairs");
  pairs->add_flag("--count", count, "Print only the count");
  pairs->add_flag("--json", json, "Print the full enumeration as JSON");

  auto* verify = app.add_subcommand("verify", "Decide and classify one configuration");
  verify->add_option("--group", group_sel, "Catalog name, JSON table file or presentation")->required();
  verify->add_option("--max-cosets", max_cosets, "Coset limit for presentations");
  verify->add_option("--involution", involution_sel, "Index, canonical, inversion, or images like a->a^-1,b->ab")
      ->required();
  verify->add_option("--orientation", orientation_sel, "Index or kernel=<generators>")->required();
  verify->add_option("--ring", ring_sel, "Coefficient ring such as Z4 or Z4xZ2")->required();
  verify->add_option("--question", question, "symmetric or skew (default: both)")
      ->check(CLI::IsMember({"symmetric", "skew"}));
  verify->add_option("--oracle", oracle_budget, "Also run full enumeration when |R|^|G| is within this budget");
  verify->add_flag("--json", json, "Print the report as JSON");

  auto* surv = app.add_subcommand("survey", "Cross-check classifier and deciders over the catalog");
  surv->add_option("--max-order", max_order, "Largest group order to include");
  surv->add_option("--rings", rings, "Comma-separated ring list");
  surv->add_option("--out", out_path, "Write the report JSON array here (default: stdout)");
  surv->add_option("--csv", csv_path, "Also write a CSV report");
  surv->add_option("--oracle-budget", oracle_budget, "Full-enumeration budget (0 disables)");
  surv->add_option("--jobs", jobs, "Worker threads (default: GRI_JOBS or hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (catalog_list->parsed()) {
      const Json names = Json::parse(take([] {
        char* s = nullptr;
        check(gri_catalog_names_json(&s), "catalog");
        return s;
      }()));
      if (json) {
        std::cout << names.dump(2) << "\n";
      } else {
        for (const auto& n : names) std::cout << n.get<std::string>() << "\n";
      }
      return kExitOk;
    }

    if (analyze->parsed()) {
      auto g = open_group(group_sel, max_cosets);
      char* s = nullptr;
      check(gri_group_analyze_json(g.get(), &s), "analyze");
      std::cout << Json::parse(take(s)).dump(2) << "\n";
      return kExitOk;
    }

    if (group->parsed()) {
      if (presentation.empty() || presentation.front() != '<') {
        throw Failure{"--presentation must start with '<'"};
      }
      auto g = open_group(presentation, max_cosets);
      char* s = nullptr;
      check(gri_group_to_json(g.get(), &s), "group");
      write_output(Json::parse(take(s)).dump(2) + "\n", out_path);
      return kExitOk;
    }

    if (invs->parsed()) {
      auto g = open_group(group_sel, max_cosets);
      if (count) {
        std::size_t n = 0;
        check(gri_group_involution_count(g.get(), &n), "involutions");
        std::cout << n << "\n";
      } else {
        char* s = nullptr;
        check(gri_group_involutions_json(g.get(), &s), "involutions");
        std::cout << Json::parse(take(s)).dump(2) << "\n";
      }
      return kExitOk;
    }

    if (pairs->parsed()) {
      auto g = open_group(group_sel, max_cosets);
      char* s = nullptr;
      check(gri_group_pairs_json(g.get(), &s), "pairs");
      const Json e = Json::parse(take(s));
      if (count) {
        if (compatible_only) {
          std::cout << e["selected_count"].get<long>() << "\n";
        } else {
          for (const auto& i : e["interpretations"]) {
            if (i["include_trivial_orientation"] && !i["include_inversion"] && !i["compatible_only"]) {
              std::cout << i["count"].get<long>() << "\n";
            }
          }
        }
        return kExitOk;
      }
      if (json) {
        std::cout << e.dump(2) << "\n";
        return kExitOk;
      }
      std::cout << "involutions: " << e["involutions"] << ", nontrivial orientations: " << e["nontrivial_orientations"]
                << ", compatible count: " << e["selected_count"] << "\n";
      for (const auto& p : e["pairs"]) {
        if (compatible_only && !p["compatible"].get<bool>()) continue;
        std::cout << "involution " << p["involution"] << " orientation " << p["orientation"] << " kernel {";
        bool first = true;
        for (const auto& k : p["kernel"]) {
          std::cout << (first ? "" : ",") << k.get<std::string>();
          first = false;
        }
        std::cout << "}: " << (p["compatible"].get<bool>() ? "compatible" : "incompatible");
        if (p.contains("witness")) std::cout << " (witness " << p["witness"].get<std::string>() << ")";
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      auto g = open_group(group_sel, max_cosets);
      gri_ring* r = nullptr;
      check(gri_ring_parse(ring_sel.c_str(), &r), "--ring '" + ring_sel + "'");
      RingHandle ring(r);
      gri_config* c = nullptr;
      check(gri_config_new(g.get(), involution_sel.c_str(), orientation_sel.c_str(), &c),
            "--involution '" + involution_sel + "' / --orientation '" + orientation_sel + "'");
      ConfigHandle cfg(c);
      int compatible = 0;
      char* witness = nullptr;
      check(gri_config_compatible(cfg.get(), &compatible, &witness), "compatibility");
      if (!compatible) {
        const std::string w = take(witness);
        std::cerr << "error: involution and orientation are incompatible, witness " << w << ": sigma(" << w
                  << ") = -1 but sigma((" << w << ")*) = 1\n";
        return kExitUsage;
      }
      char* s = nullptr;
      check(gri_verify_json(cfg.get(), ring.get(), oracle_budget, &s), "verify");
      const Json rep = Json::parse(take(s));
      if (json) {
        std::cout << rep.dump(2) << "\n";
      } else {
        auto line = [&](const char* key, const char* verb) {
          const Json& q = rep[key];
          const bool agree = q["bruteforce"] == q["predicted"] && (q["oracle"].is_null() || q["oracle"] == q["bruteforce"]);
          std::cout << verb << ": " << flag(q["bruteforce"].get<bool>()) << ", case: " << q["case"].get<std::string>()
                    << ", agreement: " << flag(agree) << "\n";
          if (!q["witness"].is_null()) std::cout << "  witness: " << q["witness"].get<std::string>() << "\n";
        };
        if (question.empty() || question == "symmetric") line("symmetric", "commutes");
        if (question.empty() || question == "skew") line("skew", "anticommutes");
      }
      return rep["agreement"].get<bool>() ? kExitOk : kExitDisagreement;
    }

    if (surv->parsed()) {
      struct Sink {
        std::ostream* json;
        std::ostream* csv;
        bool first = true;
      };
      const unsigned j = jobs.value_or(default_jobs());
      std::ofstream json_file, csv_file;
      if (!out_path.empty()) {
        json_file.open(out_path);
        if (!json_file) throw Failure{"cannot write " + out_path};
      }
      if (!csv_path.empty()) {
        csv_file.open(csv_path);
        if (!csv_file) throw Failure{"cannot write " + csv_path};
        char* h = nullptr;
        check(gri_csv_header(&h), "csv");
        csv_file << take(h);
      }
      Sink sink{out_path.empty() ? &std::cout : &json_file, csv_path.empty() ? nullptr : &csv_file};
      *sink.json << "[";
      auto on_report = [](const char* report, const char* csv_rows, void* user) {
        auto* k = static_cast<Sink*>(user);
        *k->json << (k->first ? "\n  " : ",\n  ") << report;
        k->first = false;
        if (k->csv) *k->csv << csv_rows;
      };
      char* summary = nullptr;
      check(gri_survey(max_order, rings.c_str(), oracle_budget, j, on_report, &sink, &summary), "--rings '" + rings + "'");
      *sink.json << (sink.first ? "]\n" : "\n]\n");
      const Json sum = Json::parse(take(summary));
      std::ostream& info = out_path.empty() ? std::cerr : std::cout;
      info << "instances: " << sum["instances"] << ", agreements: " << sum["agreements"]
           << ", disagreements: " << sum["disagreements"] << ", errors: " << sum["errors"] << "\n";
      for (const auto& bad : sum["failing_instances"]) std::cerr << "disagreement: " << bad.get<std::string>() << "\n";
      return sum["disagreements"].get<long>() == 0 && sum["errors"].get<long>() == 0 ? kExitOk : kExitDisagreement;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
