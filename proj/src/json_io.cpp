#include "gri/json_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gri/catalog.hpp"
#include "gri/error.hpp"
#include "gri/presentation.hpp"

namespace gri {

namespace {

Json label_list(const FiniteGroup& g, const std::vector<int>& elements) {
  Json out = Json::array();
  for (int x : elements) out.push_back(g.label(x));
  return out;
}

std::optional<int> parse_index(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Json question_to_json(const QuestionResult& q) {
  Json j;
  j["bruteforce"] = q.bruteforce;
  j["predicted"] = q.predicted;
  j["case"] = q.matched_case;
  j["generators"] = q.generator_count;
  j["witness"] = q.witness ? Json(*q.witness) : Json(nullptr);
  j["oracle"] = q.oracle ? Json(*q.oracle) : Json(nullptr);
  if (q.oracle_set_size) j["oracle_set_size"] = *q.oracle_set_size;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["identity"] = g.identity();
  Json table = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    table.push_back(std::vector<int>(row.begin(), row.end()));
  }
  j["table"] = std::move(table);
  j["labels"] = g.labels();
  Json gens = Json::array();
  for (const auto& gen : g.generators()) gens.push_back({{"name", gen.name}, {"element", gen.element}});
  j["generators"] = std::move(gens);
  return j;
}

FiniteGroup group_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::InvalidTable, "group JSON must be an object");
    const auto table = j.at("table").get<std::vector<std::vector<int>>>();
    const int order = j.at("order").get<int>();
    if (order != static_cast<int>(table.size())) {
      throw Error(ErrorCode::InvalidTable, "\"order\" does not match the number of table rows");
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) labels = j["labels"].get<std::vector<std::string>>();
    std::vector<NamedGenerator> gens;
    if (j.contains("generators") && !j["generators"].is_null()) {
      for (const auto& gj : j["generators"]) gens.push_back({gj.at("name").get<std::string>(), gj.at("element").get<int>()});
    }
    FiniteGroup g = FiniteGroup::from_table(j.value("name", std::string("group")), table, labels, gens);
    if (j.contains("identity") && j["identity"].get<int>() != g.identity()) {
      throw Error(ErrorCode::InvalidTable, "\"identity\" is not the identity of the table");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidTable, std::string("malformed group JSON: ") + e.what());
  }
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidTable, path + ": " + e.what());
  }
  return group_from_json(j);
}

GroupPtr resolve_group(std::string_view selector, std::size_t max_cosets) {
  if (!selector.empty() && selector.front() == '<') return share(todd_coxeter(parse_presentation(selector), max_cosets));
  if (auto g = find_catalog_group(selector)) return *g;
  const std::string path(selector);
  if (std::filesystem::is_regular_file(path)) return share(load_group_file(path));
  throw Error(ErrorCode::NotFound, "group '" + path + "' is not a catalog name, file or presentation");
}

GroupInvolution resolve_involution(const GroupPtr& g, std::string_view selector) {
  if (selector == "canonical") return canonical_involution(g);
  if (selector == "inversion") return inversion(g);
  if (auto index = parse_index(selector)) {
    auto all = involutions(g);
    if (*index < 0 || *index >= static_cast<int>(all.size())) {
      throw Error(ErrorCode::NotFound, "involution index " + std::string(selector) + " out of range (" +
                                           std::to_string(all.size()) + " involutions)");
    }
    return all[*index];
  }
  return involution_from_assignment(g, selector, false);
}

Json analysis_to_json(const FiniteGroup& g) {
  const StructureAnalysis a = analyze(g);
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["is_abelian"] = a.is_abelian;
  j["center"] = label_list(g, a.center.members());
  j["commutator_set"] = label_list(g, a.commutator_set);
  j["derived_subgroup"] = label_list(g, a.derived_subgroup.members());
  j["unique_commutator"] = a.unique_commutator ? Json(g.label(*a.unique_commutator)) : Json(nullptr);
  j["slc"] = a.slc.has_value();
  j["lc"] = a.slc ? a.slc->is_lc : false;
  Json subs = Json::array();
  for (const auto& s : index2_subgroups(g)) subs.push_back(label_list(g, s.members()));
  j["index2_subgroups"] = std::move(subs);
  Json orders = Json::array();
  for (int x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  j["element_orders"] = std::move(orders);
  return j;
}

Json involution_to_json(const GroupInvolution& inv, int index) {
  const FiniteGroup& g = inv.group();
  Json j;
  j["index"] = index;
  Json map = Json::object();
  for (int x = 0; x < g.order(); ++x) map[g.label(x)] = g.label(inv(x));
  j["map"] = std::move(map);
  j["is_inversion"] = inv.is_inversion();
  j["is_identity"] = inv.is_identity();
  return j;
}

Json pairs_to_json(const PairEnumeration& e) {
  Json j;
  j["involutions"] = e.involution_count;
  j["nontrivial_orientations"] = e.orientation_count;
  j["selected_count"] = e.selected_count();
  j["compatible_nontrivial"] = e.compatible_count();
  Json interp = Json::array();
  for (const auto& i : e.interpretations) {
    interp.push_back({{"name", i.name()},
                      {"include_trivial_orientation", i.include_trivial_orientation},
                      {"include_inversion", i.include_inversion},
                      {"compatible_only", i.compatible_only},
                      {"count", i.count}});
  }
  j["interpretations"] = std::move(interp);
  Json pairs = Json::array();
  for (const auto& p : e.pairs) {
    const FiniteGroup& g = p.group();
    Json pj;
    pj["involution"] = p.involution_index;
    pj["orientation"] = p.orientation_index;
    pj["kernel"] = label_list(g, p.orientation.kernel().members());
    pj["compatible"] = p.compatible;
    if (!p.compatible) pj["witness"] = g.label(*is_compatible(p.involution, p.orientation).witness);
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["instance"] = r.key.to_string();
  j["group"] = r.key.group;
  j["involution"] = r.key.involution;
  j["involution_map"] = r.key.involution_map;
  j["kernel"] = r.key.kernel;
  j["ring"] = r.key.ring;
  j["compatible"] = r.compatible;
  if (r.error) {
    j["error"] = *r.error;
  } else {
    j["symmetric"] = question_to_json(r.symmetric);
    j["skew"] = question_to_json(r.skew);
  }
  j["agreement"] = r.agreement;
  return j;
}

Json summary_to_json(const SurveyResult& s) {
  Json j;
  j["instances"] = s.summary.instances;
  j["agreements"] = s.summary.agreements;
  j["disagreements"] = s.summary.disagreements;
  j["errors"] = s.summary.errors;
  Json bad = Json::array();
  for (const auto& r : s.reports)
    if (!r.agreement) bad.push_back(r.key.to_string());
  j["failing_instances"] = std::move(bad);
  return j;
}

std::string csv_header() {
  return "instance,group,involution,kernel,ring,question,bruteforce,predicted,case,oracle,agreement,witness,error\n";
}

std::string csv_rows(const ClassificationReport& r) {
  std::ostringstream out;
  auto row = [&](const char* question, const QuestionResult& q) {
    const bool agree = !r.error && q.bruteforce == q.predicted && (!q.oracle || *q.oracle == q.bruteforce);
    out << csv_field(r.key.to_string()) << ',' << csv_field(r.key.group) << ',' << r.key.involution << ','
        << csv_field(r.key.kernel) << ',' << csv_field(r.key.ring) << ',' << question << ',';
    if (r.error) {
      out << ",,,,false,," << csv_field(*r.error) << '\n';
      return;
    }
    out << (q.bruteforce ? "true" : "false") << ',' << (q.predicted ? "true" : "false") << ','
        << csv_field(q.matched_case) << ',' << (q.oracle ? (*q.oracle ? "true" : "false") : "") << ','
        << (agree ? "true" : "false") << ',' << csv_field(q.witness.value_or("")) << ",\n";
  };
  row("symmetric", r.symmetric);
  row("skew", r.skew);
  return out.str();
}

}  // namespace gri
