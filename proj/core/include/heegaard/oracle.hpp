#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <boost/rational.hpp>

#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

struct Analysis;

namespace oracle {

using Rational = boost::rational<long long>;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rectilinear planar pants: slot 0 is the outer square, slots 1 and 2 are
/// the left and right holes. Boundary polygons list their corners in the
/// induced orientation starting at the slot's basepoint.
struct PlanarPantsModel {
  std::array<std::vector<Point>, 3> boundary;
  std::array<std::vector<Point>, 3> endpoints;  // by walking position
  std::vector<std::vector<Point>> arcs;         // polyline per pattern arc, from -> to
};

/// Throws OracleError when the layout cannot be drawn embedded.
PlanarPantsModel realize_pants(const PantsArcPattern& pattern);

// Labelling shared by the two census paths. Everything below is named by
// (pants, slot, walking position) data only, never by internal indices.

/// Boundary word item: an interval of a slot starting at a walking position,
/// or a normal arc traversed forward (from -> to) or backward.
struct WordItem {
  bool is_arc = false;
  ArcEnd start;  // A: interval [pos, pos+1] of slot; B: arc.from
  ArcEnd end;    // B only: arc.to
  bool forward = true;

  friend auto operator<=>(const WordItem&, const WordItem&) = default;
};

using FaceWord = std::vector<WordItem>;

/// A side of a normal arc: side 0 is the left of from -> to.
struct ArcSide {
  int pants = 0;
  ArcEnd from;
  ArcEnd to;
  int side = 0;

  friend auto operator<=>(const ArcSide&, const ArcSide&) = default;
};

/// A circle of the surface cut along B is labelled by its smallest ArcSide.
using CircleLabel = ArcSide;

using RectangleKey = std::tuple<int, int, int, CircleLabel, CircleLabel>;
using CirclePair = std::pair<CircleLabel, CircleLabel>;
/// Double rectangle across a B-edge: A-pants, A-slots, sorted (middle, flank) circle pairs.
using BEdgeDoubleKey = std::tuple<int, int, int, CirclePair, CirclePair>;
/// Double rectangle across an A-edge: circle pair, sorted (middle, flank) slot pairs.
using SlotPair = std::pair<SlotRef, SlotRef>;
using AEdgeDoubleKey = std::tuple<CircleLabel, CircleLabel, SlotPair, SlotPair>;

struct CanonicalCensus {
  /// Per A-pants: sorted list of faces, each rotated to its minimal rotation.
  std::map<int, std::vector<FaceWord>> faces;
  /// Components of the surface cut along B, each a sorted list of circle labels.
  std::set<std::vector<CircleLabel>> b_pants;
  int b_curves = 0;
  std::map<RectangleKey, int> rectangles;
  std::map<BEdgeDoubleKey, int> b_edge_doubles;
  std::map<AEdgeDoubleKey, int> a_edge_doubles;

  friend bool operator==(const CanonicalCensus&, const CanonicalCensus&) = default;
};

/// Face census by exact planar subdivision of each pants, glued across curves.
/// Guarded to total intersection count <= 200.
CanonicalCensus oracle_census(const PantsComplex& p, const DTCoordinates& c);

/// Per-pants region counts by class, from the geometric path.
struct OracleFaceCensus {
  std::map<int, std::array<int, 3>> class_counts;  // bigon, rectangle, polygon
  std::map<int, std::vector<FaceWord>> words;
};

OracleFaceCensus oracle_face_census(const PantsComplex& p, const DTCoordinates& c);

struct OracleRectangleCounts {
  std::map<RectangleKey, int> rectangles;
  std::map<BEdgeDoubleKey, int> b_edge_doubles;
  std::map<AEdgeDoubleKey, int> a_edge_doubles;
};

OracleRectangleCounts oracle_rectangle_counts(const PantsComplex& p, const DTCoordinates& c);

/// The same census read off the dart-tracing pipeline.
CanonicalCensus primary_census(const Analysis& a);

/// Empty when equal; otherwise a description of the first difference.
std::optional<std::string> compare(const CanonicalCensus& primary, const CanonicalCensus& oracle);

constexpr int kMaxOraclePoints = 200;

}  // namespace oracle
}  // namespace heegaard
