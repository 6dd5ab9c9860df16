#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heegaard/intersection_complex.hpp"
#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

/// Everything derived from one diagram by the dart-tracing pipeline.
struct Analysis {
  IntersectionComplex complex;
  FaceCensus faces;
  BCurveSystem bcurves;
  BDecomposition bdec;
  Decomposition adec;
  /// circle index of bdec -> (component, position among its circles).
  std::vector<SlotRef> b_circle_slot;

  int genus() const { return complex.genus(); }
  bool complete_b() const { return bdec.certificate.accept; }
  /// B-side slot of a B-dart: (component, position of its circle).
  SlotRef b_slot(int dart) const;
};

/// Throws InputError for invalid input or any m_i = 0.
Analysis analyze(const PantsComplex& p, const DTCoordinates& c);

/// A same-boundary arc of one system inside a pants of the other.
/// system B: pants/slot are the A-pants and slot. system A: pants/slot are
/// the B-component and circle position.
struct WaveWitness {
  System system = System::B;
  int pants = 0;
  int slot = 0;
  int multiplicity = 0;

  friend auto operator<=>(const WaveWitness&, const WaveWitness&) = default;
};

std::vector<WaveWitness> detect_waves(const Analysis& a);

struct RectangleWitness {
  int face = 0;
  int a_pants = 0;
  std::array<int, 2> a_slots{};  // sorted
  int b_pants = 0;
  std::array<int, 2> b_slots{};  // sorted circle positions
  bool a_qualified() const { return a_slots[0] != a_slots[1]; }
  bool b_qualified() const { return b_slots[0] != b_slots[1]; }
  bool qualified() const { return a_qualified() && b_qualified(); }
};

std::vector<RectangleWitness> enumerate_rectangles(const Analysis& a);

/// Two rectangles sharing an edge of `middle_system`, with a common pair of
/// the other system. middle B: the pair is an A-pair and the flanks form a
/// B-triple around `middle_curve`; middle A: the converse.
struct DoubleRectangleWitness {
  System middle_system = System::B;
  int shared_edge = 0;
  int middle_curve = 0;
  int face_side_a = 0;  // rectangle on the middle curve's side A
  int face_side_b = 0;
  int pair_pants = 0;
  std::array<int, 2> pair_slots{};
  SlotRef flank_a;
  SlotRef flank_b;
};

std::vector<DoubleRectangleWitness> enumerate_double_rectangles(
    const Analysis& a, const std::vector<RectangleWitness>& rectangles);

enum class Verdict { Accept, Reject };
enum class RejectReason { NotCompleteSystem = 0, UnmetCurve = 1, UncoveredCombination = 2 };

const char* to_string(Verdict v);
const char* to_string(RejectReason r);

struct Violation {
  RejectReason reason = RejectReason::UncoveredCombination;
  std::string text;
};

using CountMatrix = std::vector<std::vector<int>>;

struct RcReport {
  Verdict verdict = Verdict::Reject;
  std::vector<Violation> violations;
  std::vector<WaveWitness> waves;
  std::vector<AdjacentPair> a_pairs;
  std::vector<AdjacentPair> b_pairs;
  /// a_pairs x b_pairs rectangle counts.
  CountMatrix matrix;
  int rectangles = 0;
};

struct DrcReport {
  Verdict verdict = Verdict::Reject;
  std::vector<Violation> violations;
  RcReport rc;
  std::vector<AdjacentTriple> a_triples;
  std::vector<AdjacentTriple> b_triples;
  CountMatrix a_pair_b_triple;
  CountMatrix b_pair_a_triple;
  int double_rectangles = 0;
};

RcReport check_rectangle_condition(const Analysis& a);
DrcReport check_double_rectangle_condition(const Analysis& a);

/// Pipeline entry points; handle unmet curves without building a complex.
RcReport check_rectangle_condition(const PantsComplex& p, const DTCoordinates& c);
DrcReport check_double_rectangle_condition(const PantsComplex& p, const DTCoordinates& c);

/// The rectangle condition is only a sufficient test for strong
/// irreducibility; a missing certificate proves nothing.
struct IrreducibilityCertificate {
  bool certified = false;
  bool inconclusive = true;
  std::optional<RcReport> report;
  std::string note;
};

IrreducibilityCertificate certify_strongly_irreducible(const RcReport& rc);

}  // namespace heegaard
