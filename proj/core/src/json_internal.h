#ifndef JONESRT_SRC_JSON_INTERNAL_H_
#define JONESRT_SRC_JSON_INTERNAL_H_

#include <json.hpp>

#include "jonesrt/diagram.h"

namespace jonesrt::internal {

using Json = nlohmann::ordered_json;

LinkDiagram DiagramFromJson(const Json& j, const std::string& where);
Json DiagramToJson(const LinkDiagram& d);
Json ParseJsonText(std::string_view text);

}  // namespace jonesrt::internal

#endif  // JONESRT_SRC_JSON_INTERNAL_H_
