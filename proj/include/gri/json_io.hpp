#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gri/classifier.hpp"
#include "gri/finite_group.hpp"
#include "gri/involutions.hpp"

namespace gri {

using Json = nlohmann::ordered_json;

// {"name", "order", "identity", "table", "labels", "generators"}; labels and
// generators are optional on input. Loading applies full table validation.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);
FiniteGroup load_group_file(const std::string& path);

// Catalog name, path to a JSON table, or a presentation "<...>".
GroupPtr resolve_group(std::string_view selector, std::size_t max_cosets);

// Index into involutions(g), "canonical", "inversion", or generator images.
GroupInvolution resolve_involution(const GroupPtr& g, std::string_view selector);

Json analysis_to_json(const FiniteGroup& g);
Json involution_to_json(const GroupInvolution& inv, int index);
Json pairs_to_json(const PairEnumeration& e);
Json report_to_json(const ClassificationReport& r);
Json summary_to_json(const SurveyResult& s);

// One row per (instance, question).
std::string csv_header();
std::string csv_rows(const ClassificationReport& r);

}  // namespace gri
