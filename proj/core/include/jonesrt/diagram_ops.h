#ifndef JONESRT_DIAGRAM_OPS_H_
#define JONESRT_DIAGRAM_OPS_H_

#include <cstddef>
#include <vector>

#include "jonesrt/diagram.h"

namespace jonesrt {

// Inserts r full twists (2|r| crossings) at twist site `site_index`.
// Positive r * site.sign gives right-handed twists. Original edge ids are
// kept on the lower halves of the two site edges, so the site stays marked.
// When the two strands belong to different components each of their
// framings shifts by r * site.sign. The new crossings are recorded as a
// TwistRegion. Throws InputError if the site does not exist.
LinkDiagram InsertFullTwists(const LinkDiagram& d, std::size_t site_index, int r);
LinkDiagram InsertFullTwists(const LinkDiagram& d, const TwistSite& site, int r);

// Replaces component i by strands[i] blackboard-parallel copies (0 deletes
// it), then inserts full twists on each cable so its copies are parallel
// with respect to the stored framing. Every copy inherits the stored
// framing. Twist sites survive only when both of their strands are kept
// with multiplicity 1. The result is renumbered.
LinkDiagram Cable(const LinkDiagram& d, const std::vector<int>& strands);

// Cable with multiplicities 0/1.
LinkDiagram DeleteComponents(const LinkDiagram& d, const std::vector<bool>& keep);

}  // namespace jonesrt

#endif  // JONESRT_DIAGRAM_OPS_H_
