#include "gri/gri.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "gri/catalog.hpp"
#include "gri/classifier.hpp"
#include "gri/error.hpp"
#include "gri/json_io.hpp"
#include "gri/presentation.hpp"

struct gri_group {
  gri::GroupPtr group;
};

struct gri_ring {
  gri::RingPtr ring;
};

struct gri_config {
  gri::OrientedInvolutionConfig config;
};

namespace {

thread_local std::string last_error;

gri_status from_code(gri::ErrorCode code) {
  using gri::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GRI_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidTable: return GRI_ERR_INVALID_TABLE;
    case ErrorCode::Syntax: return GRI_ERR_SYNTAX;
    case ErrorCode::UnknownGenerator: return GRI_ERR_UNKNOWN_GENERATOR;
    case ErrorCode::CosetLimitExceeded: return GRI_ERR_COSET_LIMIT;
    case ErrorCode::NotSLC: return GRI_ERR_NOT_SLC;
    case ErrorCode::InvalidInvolution: return GRI_ERR_INVALID_INVOLUTION;
    case ErrorCode::InvalidOrientation: return GRI_ERR_INVALID_ORIENTATION;
    case ErrorCode::IncompatibleConfig: return GRI_ERR_INCOMPATIBLE;
    case ErrorCode::CharTwoRing: return GRI_ERR_CHAR_TWO;
    case ErrorCode::BudgetExceeded: return GRI_ERR_BUDGET;
    case ErrorCode::MismatchedCarrier: return GRI_ERR_MISMATCHED_CARRIER;
    case ErrorCode::NotFound: return GRI_ERR_NOT_FOUND;
    case ErrorCode::Io: return GRI_ERR_IO;
  }
  return GRI_ERR_INTERNAL;
}

template <class F>
gri_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return GRI_OK;
  } catch (const gri::Error& e) {
    last_error = e.what();
    if (e.position()) last_error += " (at offset " + std::to_string(*e.position()) + ")";
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GRI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GRI_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw gri::Error(gri::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* gri_last_error(void) { return last_error.c_str(); }

const char* gri_status_name(gri_status status) {
  switch (status) {
    case GRI_OK: return "ok";
    case GRI_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case GRI_ERR_INVALID_TABLE: return "invalid-table";
    case GRI_ERR_SYNTAX: return "syntax";
    case GRI_ERR_UNKNOWN_GENERATOR: return "unknown-generator";
    case GRI_ERR_COSET_LIMIT: return "coset-limit-exceeded";
    case GRI_ERR_NOT_SLC: return "not-slc";
    case GRI_ERR_INVALID_INVOLUTION: return "invalid-involution";
    case GRI_ERR_INVALID_ORIENTATION: return "invalid-orientation";
    case GRI_ERR_INCOMPATIBLE: return "incompatible-config";
    case GRI_ERR_CHAR_TWO: return "char-two-ring";
    case GRI_ERR_BUDGET: return "budget-exceeded";
    case GRI_ERR_MISMATCHED_CARRIER: return "mismatched-carrier";
    case GRI_ERR_NOT_FOUND: return "not-found";
    case GRI_ERR_IO: return "io";
    case GRI_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void gri_string_free(char* s) { std::free(s); }

gri_status gri_catalog_names_json(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(gri::Json(gri::catalog_names()).dump());
  });
}

gri_status gri_group_open(const char* selector, size_t max_cosets, gri_group** out) {
  return guarded([&] {
    require(selector, "selector");
    require(out, "out");
    *out = new gri_group{gri::resolve_group(selector, max_cosets ? max_cosets : gri::kDefaultMaxCosets)};
  });
}

gri_status gri_group_from_json(const char* json, gri_group** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    gri::Json j;
    try {
      j = gri::Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      throw gri::Error(gri::ErrorCode::InvalidTable, e.what());
    }
    *out = new gri_group{gri::share(gri::group_from_json(j))};
  });
}

void gri_group_free(gri_group* g) { delete g; }

int gri_group_order(const gri_group* g) { return g ? g->group->order() : 0; }

gri_status gri_group_to_json(const gri_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(gri::group_to_json(*g->group).dump());
  });
}

gri_status gri_group_analyze_json(const gri_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(gri::analysis_to_json(*g->group).dump());
  });
}

gri_status gri_group_involutions_json(const gri_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    gri::Json arr = gri::Json::array();
    const auto all = gri::involutions(g->group);
    for (std::size_t i = 0; i < all.size(); ++i) arr.push_back(gri::involution_to_json(all[i], static_cast<int>(i)));
    *out = dup(arr.dump());
  });
}

gri_status gri_group_involution_count(const gri_group* g, size_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = gri::involutions(g->group).size();
  });
}

gri_status gri_group_pairs_json(const gri_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup(gri::pairs_to_json(gri::enumerate_compatible_pairs(g->group)).dump());
  });
}

gri_status gri_group_pair_count(const gri_group* g, long* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = gri::enumerate_compatible_pairs(g->group).selected_count();
  });
}

gri_status gri_ring_parse(const char* spec, gri_ring** out) {
  return guarded([&] {
    require(spec, "ring spec");
    require(out, "out");
    *out = new gri_ring{gri::share(gri::CoefficientRing::parse(spec))};
  });
}

void gri_ring_free(gri_ring* r) { delete r; }

gri_status gri_config_new(const gri_group* g, const char* involution, const char* orientation, gri_config** out) {
  return guarded([&] {
    require(g, "group");
    require(involution, "involution selector");
    require(orientation, "orientation selector");
    require(out, "out");
    gri::GroupInvolution inv = gri::resolve_involution(g->group, involution);
    gri::Orientation ori = gri::orientation_from_selector(g->group, orientation);
    *out = new gri_config{gri::OrientedInvolutionConfig(std::move(inv), std::move(ori))};
  });
}

void gri_config_free(gri_config* c) { delete c; }

gri_status gri_config_compatible(const gri_config* c, int* compatible, char** witness_label) {
  return guarded([&] {
    require(c, "config");
    require(compatible, "compatible");
    const auto r = gri::is_compatible(c->config.involution, c->config.orientation);
    *compatible = r.compatible ? 1 : 0;
    if (witness_label) *witness_label = r.witness ? dup(c->config.group().label(*r.witness)) : nullptr;
  });
}

gri_status gri_verify_json(const gri_config* c, const gri_ring* r, uint64_t oracle_budget, char** out) {
  return guarded([&] {
    require(c, "config");
    require(r, "ring");
    require(out, "out");
    *out = dup(gri::report_to_json(gri::verify_instance(c->config, r->ring, oracle_budget)).dump());
  });
}

gri_status gri_survey(int max_order, const char* rings_csv, uint64_t oracle_budget, unsigned jobs,
                      gri_report_fn on_report, void* user, char** summary_json) {
  return guarded([&] {
    require(rings_csv, "rings");
    std::vector<gri::RingPtr> rings;
    std::stringstream ss(rings_csv);
    for (std::string item; std::getline(ss, item, ',');) {
      if (!item.empty()) rings.push_back(gri::share(gri::CoefficientRing::parse(item)));
    }
    std::vector<gri::GroupPtr> groups;
    for (const auto& name : gri::catalog_names()) {
      auto g = gri::catalog_group(name);
      if (g->order() <= max_order) groups.push_back(g);
    }
    gri::SurveyOptions options;
    options.oracle_budget = oracle_budget;
    options.jobs = jobs ? jobs : 1;
    if (on_report) {
      options.on_report = [&](const gri::ClassificationReport& rep) {
        const std::string json = gri::report_to_json(rep).dump();
        const std::string csv = gri::csv_rows(rep);
        on_report(json.c_str(), csv.c_str(), user);
      };
    }
    const gri::SurveyResult result = gri::survey(groups, rings, options);
    if (summary_json) *summary_json = dup(gri::summary_to_json(result).dump());
  });
}

gri_status gri_csv_header(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(gri::csv_header());
  });
}

}  // extern "C"
