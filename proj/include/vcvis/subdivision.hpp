#pragma once

#include <span>
#include <vector>

#include "vcvis/polygon.hpp"

namespace vcvis {

// A segment inside the polygon whose endpoints lie on the boundary (cut
// chords, visibility windows). The tag is carried through to shared edges.
struct Chord {
  Segment segment;
  int tag = 0;
};

// A positive-length piece of chord separating two faces.
struct SharedEdge {
  std::size_t left_face = 0;   // face to the left of segment.a -> segment.b
  std::size_t right_face = 0;
  std::vector<int> tags;       // sorted; several when chords overlap
  Segment segment;
};

struct Subdivision {
  // Counterclockwise vertex cycles, each rotated to start at its
  // lexicographically smallest vertex; faces sorted by that cycle.
  std::vector<std::vector<ExactPoint>> faces;
  std::vector<SharedEdge> shared;
};

// Planar arrangement of the polygon boundary and the chords. Every chord must
// lie in the closed polygon with both endpoints on the boundary, which keeps
// the arrangement connected and every bounded face a simple polygon.
Subdivision subdivide(const SimplePolygon& polygon, std::span<const Chord> chords);

}  // namespace vcvis
