#ifndef JONESRT_DIAGRAM_IO_H_
#define JONESRT_DIAGRAM_IO_H_

#include <string>
#include <string_view>

#include "jonesrt/diagram.h"

namespace jonesrt {

// JSON document:
//   {"crossings": [[e1, e2, e3, e4, "+"|"-"], ...],
//    "components": [[edge, ...], ...],
//    "orientations": [1|-1, ...], "framings": [int, ...],
//    "twist_sites": [{"edges": [a, b], "sign": "+"|"-"}, ...],
//    "twist_regions": [{"levels": [[...]], "blocks": [[...]], "upward": [...]}]}
// orientations, framings, twist_sites and twist_regions are optional.
// Throws InputError with the offending location.
LinkDiagram ParseDiagram(std::string_view text);
std::string SerializeDiagram(const LinkDiagram& d);

std::string ReadTextFile(const std::string& path);

}  // namespace jonesrt

#endif  // JONESRT_DIAGRAM_IO_H_
