#include "heegaard/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "heegaard/validation.hpp"

namespace heegaard::oracle {

namespace {

using Q = Rational;

Q frac(int num, int den) { return Q(num, den); }

int sign(const Q& v) { return v > Q(0) ? 1 : (v < Q(0) ? -1 : 0); }

Q cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != Q(0)) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sign(cross(a, b, c)), o2 = sign(cross(a, b, d));
  const int o3 = sign(cross(c, d, a)), o4 = sign(cross(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool collinear(const Point& a, const Point& b, const Point& c, const Point& d) {
  return cross(a, b, c) == Q(0) && cross(a, b, d) == Q(0);
}

struct Block {
  int begin;
  int size;
};

// Walking-order blocks of one slot: to j+1, wave starts, to j+2, wave ends.
std::array<Block, 4> blocks(const PantsArcPattern& pat, int j) {
  const int a = pat.between(j, (j + 1) % 3), s = pat.s[j], b = pat.between(j, (j + 2) % 3);
  return {Block{0, a}, Block{a, s}, Block{a + s, b}, Block{a + s + b, s}};
}

// Rational location of the endpoint at walking position `pos` of slot j.
Point endpoint_location(const PantsArcPattern& pat, int j, int pos) {
  const auto bl = blocks(pat, j);
  int which = 0;
  while (!(pos >= bl[which].begin && pos < bl[which].begin + bl[which].size)) ++which;
  const int p = pos - bl[which].begin;
  const int n = bl[which].size;
  const Q down = Q(5) - frac(2 * (p + 1), n + 1);
  const Q up = Q(3) + frac(2 * (p + 1), n + 1);
  if (j == 0) {
    switch (which) {
      case 0: return {Q(0), down};
      case 1: return {Q(4) + frac(4 * (p + 1), n + 1), Q(0)};
      case 2: return {Q(12), up};
      default: return {Q(8) - frac(4 * (p + 1), n + 1), Q(8)};
    }
  }
  const Q right = j == 1 ? Q(4) : Q(10);
  const Q left = right - 2;
  switch (which) {
    case 0: return {right, down};
    case 1: return {right - frac(2 * (p + 1), n + 1), Q(3)};
    case 2: return {left, up};
    default: return {left + frac(2 * (p + 1), n + 1), Q(5)};
  }
}

std::vector<Point> boundary_polygon(int j) {
  if (j == 0) return {{Q(0), Q(8)}, {Q(0), Q(0)}, {Q(12), Q(0)}, {Q(12), Q(8)}};
  const Q r = j == 1 ? Q(4) : Q(10);
  return {{r, Q(5)}, {r, Q(3)}, {r - 2, Q(3)}, {r - 2, Q(5)}};
}

// Position of a point along a closed axis-parallel polygon, as (edge, offset).
std::pair<int, Q> polygon_parameter(const std::vector<Point>& poly, const Point& q) {
  for (std::size_t e = 0; e < poly.size(); ++e) {
    const Point& a = poly[e];
    const Point& b = poly[(e + 1) % poly.size()];
    if (on_segment(q, a, b) && !(q == b)) {
      const Q off = (q.x - a.x) * (q.x >= a.x ? 1 : -1) + (q.y - a.y) * (q.y >= a.y ? 1 : -1);
      return {static_cast<int>(e), off};
    }
  }
  throw OracleError("endpoint off its boundary circle");
}

std::vector<Point> arc_polyline(const NormalArc& arc, const std::array<std::vector<Point>, 3>& ends) {
  const Point a = ends[arc.from.slot][arc.from.pos];
  const Point b = ends[arc.to.slot][arc.to.pos];
  if (!arc.same_boundary() || arc.from.slot == 0) return {a, b};
  // Waves on a hole loop around the other hole.
  if (arc.from.slot == 1) {
    const Q d = (Q(4) - a.x) / 2;
    return {a, {a.x, Q(3) - d}, {Q(10) + d, Q(3) - d}, {Q(10) + d, Q(5) + d}, {b.x, Q(5) + d}, b};
  }
  const Q d = (a.x - Q(8)) / 2;
  return {a, {a.x, Q(3) - d}, {Q(2) - d, Q(3) - d}, {Q(2) - d, Q(5) + d}, {b.x, Q(5) + d}, b};
}

void verify_embedding(const PlanarPantsModel& model, const std::vector<NormalArc>& arcs) {
  for (int j = 0; j < 3; ++j) {
    const auto& pts = model.endpoints[j];
    for (std::size_t k = 0; k + 1 < pts.size(); ++k)
      if (!(polygon_parameter(model.boundary[j], pts[k]) <
            polygon_parameter(model.boundary[j], pts[k + 1])))
        throw OracleError("endpoints of slot " + std::to_string(j) + " out of cyclic order");
  }
  struct Seg {
    Point a, b;
    int arc, index;
  };
  std::vector<Seg> segs;
  for (std::size_t i = 0; i < model.arcs.size(); ++i)
    for (std::size_t k = 0; k + 1 < model.arcs[i].size(); ++k)
      segs.push_back({model.arcs[i][k], model.arcs[i][k + 1], static_cast<int>(i),
                      static_cast<int>(k)});

  for (std::size_t u = 0; u < segs.size(); ++u) {
    for (std::size_t v = u + 1; v < segs.size(); ++v) {
      const Seg& s = segs[u];
      const Seg& t = segs[v];
      if (!segments_touch(s.a, s.b, t.a, t.b)) continue;
      if (s.arc == t.arc && t.index == s.index + 1 && !collinear(s.a, s.b, t.a, t.b)) continue;
      std::ostringstream os;
      os << "arcs " << s.arc << " and " << t.arc << " intersect";
      throw OracleError(os.str());
    }
  }
  for (const Seg& s : segs) {
    const auto& poly = model.arcs[s.arc];
    const bool first = s.index == 0;
    const bool last = s.index + 2 == static_cast<int>(poly.size());
    for (int j = 0; j < 3; ++j) {
      const auto& bd = model.boundary[j];
      for (std::size_t e = 0; e < bd.size(); ++e) {
        const Point& c = bd[e];
        const Point& d = bd[(e + 1) % bd.size()];
        if (!segments_touch(s.a, s.b, c, d)) continue;
        const bool ok = !collinear(s.a, s.b, c, d) &&
                        ((first && on_segment(s.a, c, d)) || (last && on_segment(s.b, c, d)));
        if (!ok) throw OracleError("arc " + std::to_string(s.arc) + " meets boundary " +
                                   std::to_string(j) + " away from its endpoints");
      }
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!(model.arcs[i].front() == model.endpoints[arcs[i].from.slot][arcs[i].from.pos]) ||
        !(model.arcs[i].back() == model.endpoints[arcs[i].to.slot][arcs[i].to.pos]))
      throw OracleError("arc " + std::to_string(i) + " detached from its endpoints");
  }
}

// ---- planar subdivision ----

struct HalfEdge {
  int from, to;
  int owner_slot;  // >= 0: boundary of that slot; -1: arc
  int arc;
  bool forward;
};

struct Subdivision {
  std::vector<Point> vertices;
  std::vector<HalfEdge> half;  // half[2e], half[2e+1] are twins
  std::vector<int> next;
};

int half_plane(const Q& dx, const Q& dy) { return (dy > Q(0) || (dy == Q(0) && dx > Q(0))) ? 0 : 1; }

Subdivision subdivide(const PlanarPantsModel& model) {
  Subdivision sd;
  std::map<Point, int> id;
  auto vid = [&](const Point& p) {
    auto [it, inserted] = id.try_emplace(p, static_cast<int>(sd.vertices.size()));
    if (inserted) sd.vertices.push_back(p);
    return it->second;
  };
  auto add_edge = [&](const Point& a, const Point& b, int slot, int arc) {
    const int u = vid(a), v = vid(b);
    sd.half.push_back({u, v, slot, arc, true});
    sd.half.push_back({v, u, slot, arc, false});
  };
  for (int j = 0; j < 3; ++j) {
    const auto& bd = model.boundary[j];
    for (std::size_t e = 0; e < bd.size(); ++e) {
      const Point& a = bd[e];
      const Point& b = bd[(e + 1) % bd.size()];
      std::vector<std::pair<Q, Point>> stops;
      for (const Point& q : model.endpoints[j]) {
        auto [edge, off] = polygon_parameter(bd, q);
        if (edge == static_cast<int>(e) && !(q == a)) stops.push_back({off, q});
      }
      std::sort(stops.begin(), stops.end(),
                [](const auto& l, const auto& r) { return l.first < r.first; });
      Point cur = a;
      for (const auto& [off, q] : stops) {
        add_edge(cur, q, j, -1);
        cur = q;
      }
      add_edge(cur, b, j, -1);
    }
  }
  for (std::size_t i = 0; i < model.arcs.size(); ++i)
    for (std::size_t k = 0; k + 1 < model.arcs[i].size(); ++k)
      add_edge(model.arcs[i][k], model.arcs[i][k + 1], -1, static_cast<int>(i));

  std::vector<std::vector<int>> out(sd.vertices.size());
  for (std::size_t h = 0; h < sd.half.size(); ++h) out[sd.half[h].from].push_back(h);
  std::vector<int> rank(sd.half.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    const Point o = sd.vertices[v];
    auto dir = [&](int h) {
      const Point& t = sd.vertices[sd.half[h].to];
      return std::pair<Q, Q>{t.x - o.x, t.y - o.y};
    };
    std::sort(out[v].begin(), out[v].end(), [&](int l, int r) {
      const auto [lx, ly] = dir(l);
      const auto [rx, ry] = dir(r);
      const int hl = half_plane(lx, ly), hr = half_plane(rx, ry);
      if (hl != hr) return hl < hr;
      return lx * ry - ly * rx > Q(0);
    });
    for (std::size_t k = 0; k < out[v].size(); ++k) rank[out[v][k]] = k;
  }
  sd.next.resize(sd.half.size());
  for (std::size_t h = 0; h < sd.half.size(); ++h) {
    const int tw = h ^ 1;
    const auto& around = out[sd.half[h].to];
    const int deg = static_cast<int>(around.size());
    sd.next[h] = around[(rank[tw] + deg - 1) % deg];
  }
  return sd;
}

std::vector<FaceWord> pants_regions(const PantsArcPattern& pat, const PlanarPantsModel& model) {
  const Subdivision sd = subdivide(model);
  std::map<Point, ArcEnd> endpoint_at;
  for (int j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < model.endpoints[j].size(); ++k)
      endpoint_at[model.endpoints[j][k]] = {j, static_cast<int>(k)};

  std::vector<FaceWord> regions;
  std::vector<char> seen(sd.half.size(), 0);
  for (std::size_t h0 = 0; h0 < sd.half.size(); ++h0) {
    if (seen[h0]) continue;
    std::vector<int> cycle;
    for (int h = h0; !seen[h]; h = sd.next[h]) {
      seen[h] = 1;
      cycle.push_back(h);
    }
    bool exterior = false;
    for (int h : cycle)
      if (sd.half[h].owner_slot >= 0 && !sd.half[h].forward) exterior = true;
    if (exterior) continue;

    // Rotate to start at an arc -> boundary transition.
    const int n = static_cast<int>(cycle.size());
    int start = -1;
    for (int k = 0; k < n; ++k)
      if (sd.half[cycle[k]].owner_slot >= 0 && sd.half[cycle[(k + n - 1) % n]].owner_slot < 0)
        start = k;
    if (start < 0) throw OracleError("region without boundary and arc sides");
    std::rotate(cycle.begin(), cycle.begin() + start, cycle.end());

    FaceWord word;
    for (int k = 0; k < n; ++k) {
      const HalfEdge& he = sd.half[cycle[k]];
      const bool arc = he.owner_slot < 0;
      const bool continues = k > 0 && arc == word.back().is_arc &&
                             (arc ? sd.half[cycle[k - 1]].arc == he.arc
                                  : sd.half[cycle[k - 1]].owner_slot == he.owner_slot);
      if (continues) continue;
      WordItem item;
      item.is_arc = arc;
      if (arc) {
        item.start = pat.arcs[he.arc].from;
        item.end = pat.arcs[he.arc].to;
        item.forward = he.forward;
      } else {
        auto it = endpoint_at.find(sd.vertices[he.from]);
        if (it == endpoint_at.end()) throw OracleError("boundary run not starting at an endpoint");
        item.start = it->second;
      }
      word.push_back(item);
    }
    for (std::size_t k = 0; k < word.size(); ++k)
      if (word[k].is_arc == word[(k + 1) % word.size()].is_arc)
        throw OracleError("region word does not alternate");
    regions.push_back(word);
  }
  return regions;
}

FaceWord minimal_rotation(FaceWord w) {
  FaceWord best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    best = std::min(best, w);
  }
  return best;
}

class Dsu {
 public:
  explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) { return parent_[v] == v ? v : parent_[v] = find(parent_[v]); }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

struct GlueEnd {
  int curve;
  bool side_a;
};

struct Run {
  std::vector<PantsArcPattern> patterns;
  std::vector<std::vector<FaceWord>> regions;  // per pants, in subdivision order
  CanonicalCensus census;
};

Run run(const PantsComplex& p, const DTCoordinates& c) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  if (auto r = validate_coords(p, c); !r) throw InputError(r.message);
  for (int i = 0; i < c.size(); ++i)
    if (c[i].m == 0) throw InputError("curve unmet: curve " + std::to_string(i) + " has m = 0");
  if (c.total_points() > kMaxOraclePoints)
    throw BudgetExceeded("oracle limited to " + std::to_string(kMaxOraclePoints) +
                         " intersection points, diagram has " +
                         std::to_string(c.total_points()));

  const int np = p.pants_count();
  std::map<SlotRef, GlueEnd> glue;
  for (int i = 0; i < p.curve_count(); ++i) {
    glue[p.curves()[i].side_a] = {i, true};
    glue[p.curves()[i].side_b] = {i, false};
  }
  auto mult = [&](int pants, int slot) { return c[glue.at({pants, slot}).curve].m; };
  // The point at walking position w on one side sits at this position on the other.
  auto across = [&](int pants, int slot, int w) {
    const GlueEnd ge = glue.at({pants, slot});
    const auto& g = p.curves()[ge.curve];
    const int m = c[ge.curve].m;
    const std::int64_t shift = g.reversed ? c[ge.curve].t : -c[ge.curve].t;
    std::int64_t r = (m - 1 - w + shift) % m;
    if (r < 0) r += m;
    const SlotRef other = ge.side_a ? g.side_b : g.side_a;
    return std::pair<SlotRef, int>{other, static_cast<int>(r)};
  };

  Run out;
  for (int q = 0; q < np; ++q) {
    out.patterns.push_back(expand_pants_arcs({mult(q, 0), mult(q, 1), mult(q, 2)}));
    const auto model = realize_pants(out.patterns.back());
    out.regions.push_back(pants_regions(out.patterns.back(), model));
  }

  // Global region ids and lookups.
  std::vector<int> region_base(np + 1, 0);
  for (int q = 0; q < np; ++q) region_base[q + 1] = region_base[q] + out.regions[q].size();
  std::map<std::tuple<int, int, int>, int> interval_region;  // (pants, slot, start)
  std::map<std::tuple<int, int, bool>, int> arc_region;      // (pants, arc, forward)
  std::vector<std::map<ArcEnd, int>> arc_at(np);
  for (int q = 0; q < np; ++q) {
    const auto& pat = out.patterns[q];
    for (std::size_t a = 0; a < pat.arcs.size(); ++a) {
      arc_at[q][pat.arcs[a].from] = a;
      arc_at[q][pat.arcs[a].to] = a;
    }
    std::map<std::pair<ArcEnd, ArcEnd>, int> arc_index;
    for (std::size_t a = 0; a < pat.arcs.size(); ++a) arc_index[{pat.arcs[a].from, pat.arcs[a].to}] = a;
    for (std::size_t r = 0; r < out.regions[q].size(); ++r) {
      const int g = region_base[q] + r;
      for (const auto& it : out.regions[q][r]) {
        if (it.is_arc)
          arc_region[{q, arc_index.at({it.start, it.end}), it.forward}] = g;
        else
          interval_region[{q, it.start.slot, it.start.pos}] = g;
      }
    }
  }

  Dsu dsu(region_base[np]);
  for (const auto& [key, g] : interval_region) {
    const auto [q, slot, w] = key;
    const int m = mult(q, slot);
    const auto [other, start] = across(q, slot, (w + 1) % m);
    dsu.unite(g, interval_region.at({other.pants, other.slot, start}));
  }

  // Circles: follow B keeping track of the left side.
  auto side_of = [&](int q, int a, bool forward) {
    const auto& arc = out.patterns[q].arcs[a];
    return ArcSide{q, arc.from, arc.to, forward ? 0 : 1};
  };
  std::map<std::tuple<int, int, bool>, CircleLabel> circle_of;
  std::set<std::tuple<int, ArcEnd, ArcEnd>> curve_labels;
  for (int q0 = 0; q0 < np; ++q0) {
    for (int a0 = 0; a0 < out.patterns[q0].arc_count(); ++a0) {
      for (bool f0 : {true, false}) {
        if (circle_of.count({q0, a0, f0})) continue;
        std::vector<std::tuple<int, int, bool>> orbit;
        int q = q0, a = a0;
        bool f = f0;
        do {
          orbit.push_back({q, a, f});
          const auto& arc = out.patterns[q].arcs[a];
          const ArcEnd end = f ? arc.to : arc.from;
          const auto [other, pos] = across(q, end.slot, end.pos);
          q = other.pants;
          a = arc_at[q].at({other.slot, pos});
          f = out.patterns[q].arcs[a].from == ArcEnd{other.slot, pos};
        } while (!(q == q0 && a == a0 && f == f0));
        CircleLabel label = side_of(q0, a0, f0);
        std::tuple<int, ArcEnd, ArcEnd> curve_label{q0, out.patterns[q0].arcs[a0].from,
                                                    out.patterns[q0].arcs[a0].to};
        for (const auto& [qq, aa, ff] : orbit) {
          label = std::min(label, side_of(qq, aa, ff));
          const auto& arc = out.patterns[qq].arcs[aa];
          curve_label = std::min(curve_label, {qq, arc.from, arc.to});
        }
        for (const auto& st : orbit) circle_of[st] = label;
        curve_labels.insert(curve_label);
      }
    }
  }

  CanonicalCensus& cen = out.census;
  cen.b_curves = static_cast<int>(curve_labels.size());
  std::map<int, std::set<CircleLabel>> component_circles;
  for (const auto& [st, label] : circle_of) component_circles[dsu.find(arc_region.at(st))].insert(label);
  for (const auto& [comp, labels] : component_circles)
    cen.b_pants.insert(std::vector<CircleLabel>(labels.begin(), labels.end()));
  // Regions with no B side cannot occur once every m >= 1.

  auto arc_id = [&](int q, const WordItem& it) {
    const auto& arcs = out.patterns[q].arcs;
    for (std::size_t a = 0; a < arcs.size(); ++a)
      if (arcs[a].from == it.start && arcs[a].to == it.end) return static_cast<int>(a);
    throw OracleError("unknown arc in region word");
  };

  struct RectInfo {
    std::array<int, 2> slots;          // A-item slots in word order
    std::array<int, 2> starts;         // A-item start positions
    std::array<CircleLabel, 2> circles;  // B-item circles in word order
    std::array<int, 2> arcs;
    std::array<bool, 2> forward;
  };
  std::map<int, RectInfo> rects;  // by global region id
  for (int q = 0; q < np; ++q) {
    for (std::size_t r = 0; r < out.regions[q].size(); ++r) {
      const FaceWord& w = out.regions[q][r];
      cen.faces[q].push_back(minimal_rotation(w));
      if (w.size() != 4) continue;
      RectInfo info{};
      int na = 0, nb = 0;
      for (const auto& it : w) {
        if (it.is_arc) {
          info.arcs[nb] = arc_id(q, it);
          info.forward[nb] = it.forward;
          info.circles[nb] = circle_of.at({q, info.arcs[nb], it.forward});
          ++nb;
        } else {
          info.slots[na] = it.start.slot;
          info.starts[na] = it.start.pos;
          ++na;
        }
      }
      rects[region_base[q] + r] = info;
      if (info.slots[0] != info.slots[1] && !(info.circles[0] == info.circles[1])) {
        const auto [s0, s1] = std::minmax(info.slots[0], info.slots[1]);
        const auto [c0, c1] = std::minmax(info.circles[0], info.circles[1]);
        ++cen.rectangles[{q, s0, s1, c0, c1}];
      }
    }
    std::sort(cen.faces[q].begin(), cen.faces[q].end());
  }

  // Doubles across a B-arc.
  for (int q = 0; q < np; ++q) {
    for (int a = 0; a < out.patterns[q].arc_count(); ++a) {
      const int r0 = arc_region.at({q, a, true});
      const int r1 = arc_region.at({q, a, false});
      if (r0 == r1 || !rects.count(r0) || !rects.count(r1)) continue;
      const RectInfo& x0 = rects.at(r0);
      const RectInfo& x1 = rects.at(r1);
      auto sorted = [](std::array<int, 2> s) {
        std::sort(s.begin(), s.end());
        return s;
      };
      if (x0.slots[0] == x0.slots[1] || sorted(x0.slots) != sorted(x1.slots)) continue;
      const CircleLabel m0 = circle_of.at({q, a, true});
      const CircleLabel m1 = circle_of.at({q, a, false});
      auto flank = [&](const RectInfo& x, bool fwd) {
        return x.arcs[0] == a && x.forward[0] == fwd ? x.circles[1] : x.circles[0];
      };
      const CircleLabel g0 = flank(x0, true);
      const CircleLabel g1 = flank(x1, false);
      if (g0 == m0 || g1 == m1) continue;
      const auto s = sorted(x0.slots);
      const CirclePair p0{m0, g0}, p1{m1, g1};
      const auto [lo, hi] = std::minmax(p0, p1);
      ++cen.b_edge_doubles[{q, s[0], s[1], lo, hi}];
    }
  }

  // Doubles across an A-interval, visited from side A.
  for (int i = 0; i < p.curve_count(); ++i) {
    const auto& g = p.curves()[i];
    for (int w = 0; w < c[i].m; ++w) {
      const int ra = interval_region.at({g.side_a.pants, g.side_a.slot, w});
      const auto [other, start] = across(g.side_a.pants, g.side_a.slot, (w + 1) % c[i].m);
      const int rb = interval_region.at({other.pants, other.slot, start});
      if (ra == rb || !rects.count(ra) || !rects.count(rb)) continue;
      const RectInfo& xa = rects.at(ra);
      const RectInfo& xb = rects.at(rb);
      const auto ca = std::minmax(xa.circles[0], xa.circles[1]);
      const auto cb = std::minmax(xb.circles[0], xb.circles[1]);
      if (ca.first == ca.second || ca != cb) continue;
      auto flank = [](const RectInfo& x, int slot, int pos) {
        return x.slots[0] == slot && x.starts[0] == pos ? x.slots[1] : x.slots[0];
      };
      const SlotRef ma = g.side_a, mb = other;
      const SlotRef fa{ma.pants, flank(xa, ma.slot, w)};
      const SlotRef fb{mb.pants, flank(xb, mb.slot, start)};
      if (fa == ma || fb == mb) continue;
      const SlotPair pa{ma, fa}, pb{mb, fb};
      const auto [lo, hi] = std::minmax(pa, pb);
      ++cen.a_edge_doubles[{ca.first, ca.second, lo, hi}];
    }
  }
  return out;
}

}  // namespace

PlanarPantsModel realize_pants(const PantsArcPattern& pattern) {
  PlanarPantsModel model;
  for (int j = 0; j < 3; ++j) {
    model.boundary[j] = boundary_polygon(j);
    for (int pos = 0; pos < pattern.m[j]; ++pos)
      model.endpoints[j].push_back(endpoint_location(pattern, j, pos));
  }
  for (const auto& arc : pattern.arcs) model.arcs.push_back(arc_polyline(arc, model.endpoints));
  verify_embedding(model, pattern.arcs);
  return model;
}

CanonicalCensus oracle_census(const PantsComplex& p, const DTCoordinates& c) {
  return run(p, c).census;
}

OracleFaceCensus oracle_face_census(const PantsComplex& p, const DTCoordinates& c) {
  OracleFaceCensus out;
  out.words = run(p, c).census.faces;
  for (const auto& [q, words] : out.words) {
    auto& counts = out.class_counts[q];
    counts = {0, 0, 0};
    for (const auto& w : words) ++counts[w.size() == 2 ? 0 : (w.size() == 4 ? 1 : 2)];
  }
  return out;
}

OracleRectangleCounts oracle_rectangle_counts(const PantsComplex& p, const DTCoordinates& c) {
  auto cen = run(p, c).census;
  return {std::move(cen.rectangles), std::move(cen.b_edge_doubles), std::move(cen.a_edge_doubles)};
}

}  // namespace heegaard::oracle
