#include <algorithm>
#include <sstream>

#include "heegaard/conditions.hpp"
#include "heegaard/oracle.hpp"

namespace heegaard::oracle {

namespace {

FaceWord rotate_min(FaceWord w) {
  FaceWord best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    if (w < best) best = w;
  }
  return best;
}

struct Labels {
  const Analysis& a;
  std::vector<CircleLabel> circle;  // by bdec circle index

  ArcSide dart_side(int d) const {
    const auto& x = a.complex;
    const EdgeInfo& e = x.edge(x.dart_edge(d));
    const NormalArc& arc = x.pattern(e.pants).arcs[e.arc];
    return {e.pants, arc.from, arc.to, d == e.dart ? 0 : 1};
  }

  WordItem item(int d) const {
    const auto& x = a.complex;
    WordItem it;
    if (IntersectionComplex::is_a_dart(d)) {
      const int v = IntersectionComplex::dart_vertex(d);
      const int curve = x.vertex_curve(v);
      const int k = x.vertex_point(v);
      const SlotRef side = x.a_dart_side(d);
      const int pos = IntersectionComplex::role(d) == DartRole::APlus
                          ? k
                          : side_b_position(x.pants().curve(curve), x.coords()[curve], k);
      it.start = {side.slot, pos};
      return it;
    }
    const ArcSide s = dart_side(d);
    it.is_arc = true;
    it.start = s.from;
    it.end = s.to;
    it.forward = s.side == 0;
    return it;
  }

  const CircleLabel& of_dart(int d) const { return circle[a.bdec.decomposition.dart_circle[d]]; }
};

}  // namespace

CanonicalCensus primary_census(const Analysis& a) {
  const auto& x = a.complex;
  const auto& dec = a.bdec.decomposition;
  Labels lab{a, {}};
  for (const auto& c : dec.circles) {
    CircleLabel best = lab.dart_side(c.darts.front());
    for (int d : c.darts) best = std::min(best, lab.dart_side(d));
    lab.circle.push_back(best);
  }

  CanonicalCensus cen;
  cen.b_curves = static_cast<int>(a.bcurves.curves.size());
  for (const auto& comp : dec.components) {
    std::vector<CircleLabel> labels;
    for (int c : comp.circles) labels.push_back(lab.circle[c]);
    std::sort(labels.begin(), labels.end());
    cen.b_pants.insert(labels);
  }
  for (const auto& f : a.faces.faces) {
    FaceWord w;
    for (int d : f.darts) w.push_back(lab.item(d));
    cen.faces[f.a_pants].push_back(rotate_min(std::move(w)));
  }
  for (auto& [q, words] : cen.faces) std::sort(words.begin(), words.end());

  const auto rects = enumerate_rectangles(a);
  for (const auto& r : rects) {
    if (!r.qualified()) continue;
    std::vector<CircleLabel> cs;
    for (int d : a.faces.faces[r.face].darts)
      if (!IntersectionComplex::is_a_dart(d)) cs.push_back(lab.of_dart(d));
    const auto [lo, hi] = std::minmax(cs[0], cs[1]);
    ++cen.rectangles[{r.a_pants, r.a_slots[0], r.a_slots[1], lo, hi}];
  }

  const auto circle_at = [&](const SlotRef& b) {
    return lab.circle[dec.components[b.pants].circles[b.slot]];
  };
  for (const auto& w : enumerate_double_rectangles(a, rects)) {
    const auto& e = x.edge(w.shared_edge);
    const int d = e.dart, t = x.twin(d);
    if (w.middle_system == System::B) {
      const int da = a.faces.dart_face[d] == w.face_side_a ? d : t;
      const int db = da == d ? t : d;
      const CirclePair pa{lab.of_dart(da), circle_at(w.flank_a)};
      const CirclePair pb{lab.of_dart(db), circle_at(w.flank_b)};
      const auto [lo, hi] = std::minmax(pa, pb);
      ++cen.b_edge_doubles[{w.pair_pants, w.pair_slots[0], w.pair_slots[1], lo, hi}];
    } else {
      const auto& g = x.pants().curve(w.middle_curve);
      const CircleLabel c0 = circle_at({w.pair_pants, w.pair_slots[0]});
      const CircleLabel c1 = circle_at({w.pair_pants, w.pair_slots[1]});
      const auto [clo, chi] = std::minmax(c0, c1);
      const SlotPair pa{g.side_a, w.flank_a}, pb{g.side_b, w.flank_b};
      const auto [lo, hi] = std::minmax(pa, pb);
      ++cen.a_edge_doubles[{clo, chi, lo, hi}];
    }
  }
  return cen;
}

namespace {

std::string describe(const WordItem& it) {
  std::ostringstream os;
  if (it.is_arc)
    os << "B(" << it.start.slot << ":" << it.start.pos << "-" << it.end.slot << ":" << it.end.pos
       << (it.forward ? ",+)" : ",-)");
  else
    os << "A(" << it.start.slot << ":" << it.start.pos << ")";
  return os.str();
}

std::string describe(const FaceWord& w) {
  std::string s;
  for (const auto& it : w) s += describe(it);
  return s;
}

template <typename Map>
std::optional<std::string> compare_counts(const char* what, const Map& p, const Map& o) {
  if (p == o) return std::nullopt;
  std::ostringstream os;
  os << what << ": primary has " << p.size() << " keys (total ";
  int tp = 0, to = 0;
  for (const auto& kv : p) tp += kv.second;
  for (const auto& kv : o) to += kv.second;
  os << tp << "), oracle has " << o.size() << " keys (total " << to << ")";
  return os.str();
}

}  // namespace

std::optional<std::string> compare(const CanonicalCensus& primary, const CanonicalCensus& oracle) {
  if (primary.faces != oracle.faces) {
    for (const auto& [q, words] : primary.faces) {
      auto it = oracle.faces.find(q);
      if (it == oracle.faces.end()) return "faces: oracle has no regions in pants " + std::to_string(q);
      if (words != it->second) {
        std::ostringstream os;
        os << "faces of pants " << q << ": primary " << words.size() << ", oracle "
           << it->second.size();
        for (std::size_t k = 0; k < std::min(words.size(), it->second.size()); ++k)
          if (words[k] != it->second[k]) {
            os << "; first difference " << describe(words[k]) << " vs " << describe(it->second[k]);
            break;
          }
        return os.str();
      }
    }
    return std::string("faces: pants sets differ");
  }
  if (primary.b_curves != oracle.b_curves)
    return "B-curve count: primary " + std::to_string(primary.b_curves) + ", oracle " +
           std::to_string(oracle.b_curves);
  if (primary.b_pants != oracle.b_pants)
    return "B-components: primary " + std::to_string(primary.b_pants.size()) + ", oracle " +
           std::to_string(oracle.b_pants.size());
  if (auto d = compare_counts("rectangles", primary.rectangles, oracle.rectangles)) return d;
  if (auto d = compare_counts("double rectangles across B", primary.b_edge_doubles,
                              oracle.b_edge_doubles))
    return d;
  if (auto d = compare_counts("double rectangles across A", primary.a_edge_doubles,
                              oracle.a_edge_doubles))
    return d;
  return std::nullopt;
}

}  // namespace heegaard::oracle
