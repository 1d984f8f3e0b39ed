#pragma once

#include <vector>

#include "vcvis/polygon.hpp"

namespace vcvis {

// Sorted, de-duplicated parameters t > 0 at which origin + t * direction
// touches the polygon boundary. Collinear edge overlaps contribute both ends.
std::vector<Rational> ray_contacts(const SimplePolygon& polygon,
                                   const ExactPoint& origin,
                                   const ExactPoint& direction);

// First boundary contact strictly beyond origin. If the ray leaves the
// interior immediately (origin on the boundary, ray pointing out or along an
// edge), returns origin.
ExactPoint first_contact(const SimplePolygon& polygon, const ExactPoint& origin,
                         const ExactPoint& direction);

// Like first_contact, but keeps going through isolated boundary contacts
// (grazed reflex vertices) as long as the ray re-enters the interior. The
// result is the far end of the maximal chord starting at origin.
ExactPoint extend_inside(const SimplePolygon& polygon, const ExactPoint& origin,
                         const ExactPoint& direction);

}  // namespace vcvis
