#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gri/finite_group.hpp"

namespace gri {

// Names of the built-in groups, ordered by group order then by name as listed.
const std::vector<std::string>& catalog_names();

// Looks up a catalog group by name ("D4", "Q8xC2", ...). Aliases C2^2 and
// C2^3 are accepted. Throws Error(NotFound) for unknown names.
GroupPtr catalog_group(std::string_view name);
std::optional<GroupPtr> find_catalog_group(std::string_view name);

// A presentation string for every catalog group, in generator order.
std::string catalog_presentation(std::string_view name);

}  // namespace gri
