#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dorroh/document.hpp"

namespace dorroh {

std::vector<std::string> gallery_names();
/// Annotated source text of a fixture; throws std::invalid_argument for unknown names.
const std::string& gallery_text(const std::string& name);
/// The parsed fixture, optionally read over another field. kc2 and sweedler
/// refuse characteristic 2.
StructureDocument gallery(const std::string& name, std::optional<FieldSpec> field = std::nullopt);

}  // namespace dorroh
