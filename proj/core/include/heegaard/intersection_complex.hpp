#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

enum class System { A = 0, B = 1 };

/// Rotation slot of a dart at its source vertex, counterclockwise.
enum class DartRole { APlus = 0, BSideA = 1, AMinus = 2, BSideB = 3 };

struct EdgeInfo {
  System system = System::A;
  /// Canonical dart: A+ at the start point for A-edges, the dart at the
  /// smaller arc endpoint for B-edges.
  int dart = 0;
  // A-edges: subarc of `curve` from point `point` to point+1.
  int curve = -1;
  int point = -1;
  // B-edges: arc `arc` of the pattern in `pants`.
  int pants = -1;
  int arc = -1;
};

/// Combinatorial map of A (the reference pants curves) union B.
///
/// Vertex id = offset(curve) + point, darts 4*v + role. `next` is the
/// counterclockwise successor around the source vertex; faces are the
/// orbits of face_step(d) = prev(twin(d)) and lie to the left of their darts.
class IntersectionComplex {
 public:
  int genus() const { return pants_.genus(); }
  const PantsComplex& pants() const { return pants_; }
  const DTCoordinates& coords() const { return coords_; }
  const PantsArcPattern& pattern(int pants) const { return patterns_.at(pants); }

  int vertex_count() const { return static_cast<int>(vertex_curve_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 4 * vertex_count(); }

  int vertex(int curve, int point) const { return offset_.at(curve) + point; }
  int vertex_curve(int v) const { return vertex_curve_[v]; }
  int vertex_point(int v) const { return v - offset_[vertex_curve_[v]]; }

  static int dart_vertex(int d) { return d / 4; }
  static DartRole role(int d) { return static_cast<DartRole>(d % 4); }
  static bool is_a_dart(int d) { return d % 2 == 0; }
  static int next(int d) { return (d & ~3) | ((d + 1) & 3); }
  static int prev(int d) { return (d & ~3) | ((d + 3) & 3); }
  static int opposite(int d) { return (d & ~3) | ((d + 2) & 3); }

  int twin(int d) const { return twin_[d]; }
  int face_step(int d) const { return prev(twin_[d]); }
  int dart_edge(int d) const { return dart_edge_[d]; }
  System dart_system(int d) const { return is_a_dart(d) ? System::A : System::B; }
  const EdgeInfo& edge(int e) const { return edges_[e]; }
  const std::vector<EdgeInfo>& edges() const { return edges_; }

  /// (pants, slot) on the left of an A-dart.
  SlotRef a_dart_side(int d) const;
  /// Pants containing a B-dart's edge.
  int b_dart_pants(int d) const { return edges_[dart_edge_[d]].pants; }

  friend IntersectionComplex build_complex(const PantsComplex& p, const DTCoordinates& c);

 private:
  PantsComplex pants_;
  DTCoordinates coords_;
  std::vector<PantsArcPattern> patterns_;
  std::vector<int> offset_;
  std::vector<int> vertex_curve_;
  std::vector<int> twin_;
  std::vector<int> dart_edge_;
  std::vector<EdgeInfo> edges_;
};

/// Throws InputError("curve unmet") when some m_i = 0 and InputError on
/// invalid pants complex or coordinates.
IntersectionComplex build_complex(const PantsComplex& p, const DTCoordinates& c);

enum class FaceClass { Bigon, Rectangle, Polygon };

const char* to_string(FaceClass c);

struct Face {
  int id = 0;
  /// Boundary darts in traversal order, starting at the smallest dart.
  std::vector<int> darts;
  FaceClass cls = FaceClass::Polygon;
  int a_pants = -1;

  int length() const { return static_cast<int>(darts.size()); }
};

struct FaceCensus {
  std::vector<Face> faces;
  std::vector<int> dart_face;

  int count(FaceClass c) const;
  int total_length() const;
};

FaceCensus trace_faces(const IntersectionComplex& x);

/// A closed component of B.
struct BCurve {
  /// B-darts in traversal order; the first is the canonical dart of the
  /// smallest edge.
  std::vector<int> darts;
  std::vector<int> edges;
};

struct BCurveSystem {
  std::vector<BCurve> curves;
  std::vector<int> edge_curve;  // -1 for A-edges
};

BCurveSystem trace_b_components(const IntersectionComplex& x);

/// Boundary circle of a component of the surface cut along one system: the
/// darts of that system whose left faces touch the circle, in order.
struct BoundaryCircle {
  std::vector<int> darts;
  int curve = -1;  // component of the cut system the circle lies on
};

struct SubsurfaceComponent {
  std::vector<int> faces;
  int euler = 0;
  std::vector<int> circles;  // indices into Decomposition::circles
};

struct Decomposition {
  System cut = System::B;
  std::vector<SubsurfaceComponent> components;
  std::vector<BoundaryCircle> circles;
  std::vector<int> face_component;
  std::vector<int> dart_circle;  // -1 for darts outside the cut system
  std::vector<int> circle_component;
};

struct PantsCertificate {
  bool accept = false;
  std::string reason;
  /// Present iff accepted: the pants decomposition cut out by B. Pants are
  /// components in order, slots are their circles in order, curve i is
  /// B-curve i with side A on the circle of its traversal darts.
  std::optional<PantsComplex> b_pants;
  /// circle index -> (B-pants, slot) when accepted.
  std::vector<SlotRef> circle_slot;
};

struct BDecomposition {
  Decomposition decomposition;
  PantsCertificate certificate;
};

BDecomposition decompose_minus_b(const IntersectionComplex& x, const FaceCensus& faces,
                                 const BCurveSystem& bcurves);

/// Throws InternalInconsistency unless the components correspond one-to-one
/// to the input pants, each with three circles matching its three slots.
Decomposition decompose_minus_a(const IntersectionComplex& x, const FaceCensus& faces);

}  // namespace heegaard
