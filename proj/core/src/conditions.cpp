#include "heegaard/conditions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace heegaard {

const char* to_string(Verdict v) { return v == Verdict::Accept ? "ACCEPT" : "REJECT"; }

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::NotCompleteSystem: return "not a complete system";
    case RejectReason::UnmetCurve: return "unmet curve";
    case RejectReason::UncoveredCombination: return "uncovered combination";
  }
  return "?";
}

SlotRef Analysis::b_slot(int dart) const {
  return b_circle_slot[bdec.decomposition.dart_circle[dart]];
}

Analysis analyze(const PantsComplex& p, const DTCoordinates& c) {
  Analysis a{build_complex(p, c), {}, {}, {}, {}, {}};
  a.faces = trace_faces(a.complex);
  a.bcurves = trace_b_components(a.complex);
  a.bdec = decompose_minus_b(a.complex, a.faces, a.bcurves);
  a.adec = decompose_minus_a(a.complex, a.faces);
  const auto& dec = a.bdec.decomposition;
  a.b_circle_slot.resize(dec.circles.size());
  for (std::size_t k = 0; k < dec.components.size(); ++k) {
    const auto& circles = dec.components[k].circles;
    for (std::size_t s = 0; s < circles.size(); ++s)
      a.b_circle_slot[circles[s]] = {static_cast<int>(k), static_cast<int>(s)};
  }
  return a;
}

std::vector<WaveWitness> detect_waves(const Analysis& a) {
  const auto& x = a.complex;
  std::map<std::tuple<int, int, int>, int> counts;  // (system, pants, slot)
  for (const auto& e : x.edges()) {
    if (e.system == System::B) {
      const auto& arc = x.pattern(e.pants).arcs[e.arc];
      if (arc.same_boundary()) ++counts[{1, e.pants, arc.from.slot}];
    } else {
      const int v0 = IntersectionComplex::dart_vertex(e.dart);
      const int v1 = IntersectionComplex::dart_vertex(x.twin(e.dart));
      // Start lies east of the B strand at v0, end lies west of it at v1.
      const SlotRef s0 = a.b_slot(4 * v0 + static_cast<int>(DartRole::BSideB));
      const SlotRef s1 = a.b_slot(4 * v1 + static_cast<int>(DartRole::BSideA));
      if (s0 == s1) ++counts[{0, s0.pants, s0.slot}];
    }
  }
  std::vector<WaveWitness> out;
  for (const auto& [key, n] : counts) {
    const auto [sys, pants, slot] = key;
    out.push_back({sys == 0 ? System::A : System::B, pants, slot, n});
  }
  std::sort(out.begin(), out.end(), [](const WaveWitness& l, const WaveWitness& r) {
    return std::tie(l.system, l.pants, l.slot) < std::tie(r.system, r.pants, r.slot);
  });
  return out;
}

std::vector<RectangleWitness> enumerate_rectangles(const Analysis& a) {
  std::vector<RectangleWitness> out;
  for (const auto& f : a.faces.faces) {
    if (f.cls != FaceClass::Rectangle) continue;
    RectangleWitness w;
    w.face = f.id;
    std::vector<SlotRef> aside, bside;
    for (int d : f.darts) {
      if (IntersectionComplex::is_a_dart(d))
        aside.push_back(a.complex.a_dart_side(d));
      else
        bside.push_back(a.b_slot(d));
    }
    if (aside.size() != 2 || bside.size() != 2 || aside[0].pants != aside[1].pants ||
        bside[0].pants != bside[1].pants)
      throw InternalInconsistency("rectangle face " + std::to_string(f.id) + " malformed");
    w.a_pants = aside[0].pants;
    w.a_slots = {std::min(aside[0].slot, aside[1].slot), std::max(aside[0].slot, aside[1].slot)};
    w.b_pants = bside[0].pants;
    w.b_slots = {std::min(bside[0].slot, bside[1].slot), std::max(bside[0].slot, bside[1].slot)};
    out.push_back(w);
  }
  return out;
}

namespace {

// The dart of `face` other than `shared` that belongs to the same system.
int other_same_system_dart(const Face& face, int shared) {
  const bool a = IntersectionComplex::is_a_dart(shared);
  for (int d : face.darts)
    if (d != shared && IntersectionComplex::is_a_dart(d) == a) return d;
  throw InternalInconsistency("rectangle without a second side");
}

}  // namespace

std::vector<DoubleRectangleWitness> enumerate_double_rectangles(
    const Analysis& a, const std::vector<RectangleWitness>& rectangles) {
  const auto& x = a.complex;
  std::vector<int> rect_of_face(a.faces.faces.size(), -1);
  for (std::size_t r = 0; r < rectangles.size(); ++r) rect_of_face[rectangles[r].face] = r;

  std::vector<DoubleRectangleWitness> out;
  for (int e = 0; e < x.edge_count(); ++e) {
    const auto& info = x.edge(e);
    const int d = info.dart;
    const int t = x.twin(d);
    const int fd = a.faces.dart_face[d];
    const int ft = a.faces.dart_face[t];
    if (fd == ft || rect_of_face[fd] < 0 || rect_of_face[ft] < 0) continue;
    const auto& rd = rectangles[rect_of_face[fd]];
    const auto& rt = rectangles[rect_of_face[ft]];

    DoubleRectangleWitness w;
    w.shared_edge = e;
    if (info.system == System::B) {
      if (!rd.a_qualified() || rd.a_slots != rt.a_slots || rd.a_pants != rt.a_pants) continue;
      w.middle_system = System::B;
      w.middle_curve = a.bcurves.edge_curve[e];
      const int side_a_circle =
          a.bdec.decomposition.dart_circle[a.bcurves.curves[w.middle_curve].darts.front()];
      const bool d_on_a = a.bdec.decomposition.dart_circle[d] == side_a_circle;
      const int da = d_on_a ? d : t;
      const int db = d_on_a ? t : d;
      w.face_side_a = a.faces.dart_face[da];
      w.face_side_b = a.faces.dart_face[db];
      w.flank_a = a.b_slot(other_same_system_dart(a.faces.faces[w.face_side_a], da));
      w.flank_b = a.b_slot(other_same_system_dart(a.faces.faces[w.face_side_b], db));
      if (w.flank_a == a.b_slot(da) || w.flank_b == a.b_slot(db)) continue;
      w.pair_pants = rd.a_pants;
      w.pair_slots = rd.a_slots;
    } else {
      if (!rd.b_qualified() || rd.b_slots != rt.b_slots || rd.b_pants != rt.b_pants) continue;
      w.middle_system = System::A;
      w.middle_curve = info.curve;
      // The canonical A-dart is A+, whose left face is on side A.
      w.face_side_a = fd;
      w.face_side_b = ft;
      w.flank_a = x.a_dart_side(other_same_system_dart(a.faces.faces[fd], d));
      w.flank_b = x.a_dart_side(other_same_system_dart(a.faces.faces[ft], t));
      if (w.flank_a == x.a_dart_side(d) || w.flank_b == x.a_dart_side(t)) continue;
      w.pair_pants = rd.b_pants;
      w.pair_slots = rd.b_slots;
    }
    if (a.faces.faces[w.face_side_a].a_pants != a.faces.faces[w.face_side_b].a_pants &&
        w.middle_system == System::B)
      throw InternalInconsistency("double rectangle across a B-edge spans two A-pants");
    out.push_back(w);
  }
  return out;
}

namespace {

int pair_index(int pants, const std::array<int, 2>& slots) {
  return 3 * pants + slots[0] + slots[1] - 1;
}

int triple_index(const PantsComplex& p, int middle, const SlotRef& left, const SlotRef& right) {
  const auto& g = p.curve(middle);
  const auto lo = other_slots(g.side_a.slot);
  const auto ro = other_slots(g.side_b.slot);
  const int il = left.slot == lo[0] ? 0 : 1;
  const int ir = right.slot == ro[0] ? 0 : 1;
  if (left.pants != g.side_a.pants || right.pants != g.side_b.pants ||
      left.slot != lo[il] || right.slot != ro[ir])
    throw InternalInconsistency("double rectangle flank is not a triple of its middle curve");
  return 4 * middle + 2 * il + ir;
}

std::string pair_text(const char* sys, const AdjacentPair& pr) {
  std::ostringstream os;
  os << sys << "-pair (pants " << pr.pants << ", slots {" << pr.slot_lo << "," << pr.slot_hi
     << "}, curves {" << pr.curve_lo << "," << pr.curve_hi << "})";
  return os.str();
}

std::string triple_text(const char* sys, const AdjacentTriple& t) {
  std::ostringstream os;
  os << sys << "-triple (middle " << t.middle << ", left (pants " << t.left.pants << ", slot "
     << t.left.slot << "), right (pants " << t.right.pants << ", slot " << t.right.slot << "))";
  return os.str();
}

CountMatrix zeros(std::size_t rows, std::size_t cols) {
  return CountMatrix(rows, std::vector<int>(cols, 0));
}

RcReport unmet_rc(const PantsComplex& p, const DTCoordinates& c) {
  RcReport r;
  r.verdict = Verdict::Reject;
  r.a_pairs = enumerate_adjacent_pairs(p);
  for (int i = 0; i < c.size(); ++i) {
    if (c[i].m != 0) continue;
    for (const auto& pr : r.a_pairs) {
      if (pr.curve_lo == i || pr.curve_hi == i)
        r.violations.push_back({RejectReason::UnmetCurve,
                                pair_text("A", pr) + " involves unmet curve " + std::to_string(i)});
    }
  }
  return r;
}

bool has_unmet(const DTCoordinates& c) {
  return std::any_of(c.curves.begin(), c.curves.end(), [](const CurveCoord& cc) { return cc.m == 0; });
}

void require_valid(const PantsComplex& p, const DTCoordinates& c) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  if (auto r = validate_coords(p, c); !r) throw InputError(r.message);
}

}  // namespace

RcReport check_rectangle_condition(const Analysis& a) {
  RcReport r;
  r.waves = detect_waves(a);
  r.a_pairs = enumerate_adjacent_pairs(a.complex.pants());
  const auto rects = enumerate_rectangles(a);
  r.rectangles = static_cast<int>(rects.size());
  if (!a.complete_b()) {
    r.verdict = Verdict::Reject;
    r.violations.push_back({RejectReason::NotCompleteSystem,
                            "B is not a complete system: " + a.bdec.certificate.reason});
    return r;
  }
  const PantsComplex& bp = *a.bdec.certificate.b_pants;
  r.b_pairs = enumerate_adjacent_pairs(bp);
  r.matrix = zeros(r.a_pairs.size(), r.b_pairs.size());
  for (const auto& w : rects)
    if (w.qualified()) ++r.matrix[pair_index(w.a_pants, w.a_slots)][pair_index(w.b_pants, w.b_slots)];
  for (std::size_t i = 0; i < r.a_pairs.size(); ++i)
    for (std::size_t j = 0; j < r.b_pairs.size(); ++j)
      if (r.matrix[i][j] == 0)
        r.violations.push_back({RejectReason::UncoveredCombination,
                                pair_text("A", r.a_pairs[i]) + " x " + pair_text("B", r.b_pairs[j]) +
                                    ": no rectangle"});
  r.verdict = r.violations.empty() ? Verdict::Accept : Verdict::Reject;
  return r;
}

DrcReport check_double_rectangle_condition(const Analysis& a) {
  DrcReport r;
  r.rc = check_rectangle_condition(a);
  const PantsComplex& ap = a.complex.pants();
  r.a_triples = enumerate_adjacent_triples(ap);
  if (!a.complete_b()) {
    r.verdict = Verdict::Reject;
    r.violations = r.rc.violations;
    return r;
  }
  const PantsComplex& bp = *a.bdec.certificate.b_pants;
  r.b_triples = enumerate_adjacent_triples(bp);
  r.a_pair_b_triple = zeros(r.rc.a_pairs.size(), r.b_triples.size());
  r.b_pair_a_triple = zeros(r.rc.b_pairs.size(), r.a_triples.size());

  const auto rects = enumerate_rectangles(a);
  const auto doubles = enumerate_double_rectangles(a, rects);
  r.double_rectangles = static_cast<int>(doubles.size());
  for (const auto& w : doubles) {
    const int pi = pair_index(w.pair_pants, w.pair_slots);
    if (w.middle_system == System::B)
      ++r.a_pair_b_triple[pi][triple_index(bp, w.middle_curve, w.flank_a, w.flank_b)];
    else
      ++r.b_pair_a_triple[pi][triple_index(ap, w.middle_curve, w.flank_a, w.flank_b)];
  }
  for (std::size_t i = 0; i < r.rc.a_pairs.size(); ++i)
    for (std::size_t j = 0; j < r.b_triples.size(); ++j)
      if (r.a_pair_b_triple[i][j] == 0)
        r.violations.push_back({RejectReason::UncoveredCombination,
                                pair_text("A", r.rc.a_pairs[i]) + " x " +
                                    triple_text("B", r.b_triples[j]) + ": no double rectangle"});
  for (std::size_t i = 0; i < r.rc.b_pairs.size(); ++i)
    for (std::size_t j = 0; j < r.a_triples.size(); ++j)
      if (r.b_pair_a_triple[i][j] == 0)
        r.violations.push_back({RejectReason::UncoveredCombination,
                                pair_text("B", r.rc.b_pairs[i]) + " x " +
                                    triple_text("A", r.a_triples[j]) + ": no double rectangle"});
  r.verdict = r.violations.empty() ? Verdict::Accept : Verdict::Reject;
  if (r.verdict == Verdict::Accept && r.rc.verdict != Verdict::Accept)
    throw InternalInconsistency("double rectangle condition accepted without rectangle condition");
  return r;
}

RcReport check_rectangle_condition(const PantsComplex& p, const DTCoordinates& c) {
  require_valid(p, c);
  if (has_unmet(c)) return unmet_rc(p, c);
  return check_rectangle_condition(analyze(p, c));
}

DrcReport check_double_rectangle_condition(const PantsComplex& p, const DTCoordinates& c) {
  require_valid(p, c);
  if (has_unmet(c)) {
    DrcReport r;
    r.rc = unmet_rc(p, c);
    r.a_triples = enumerate_adjacent_triples(p);
    r.violations = r.rc.violations;
    return r;
  }
  return check_double_rectangle_condition(analyze(p, c));
}

IrreducibilityCertificate certify_strongly_irreducible(const RcReport& rc) {
  IrreducibilityCertificate cert;
  if (rc.verdict == Verdict::Accept) {
    cert.certified = true;
    cert.inconclusive = false;
    cert.report = rc;
    cert.note = "rectangle condition holds: the splitting is strongly irreducible";
  } else {
    cert.note =
        "inconclusive: the rectangle condition fails, which does not show the splitting is weakly "
        "reducible";
  }
  return cert;
}

}  // namespace heegaard
