#include "heegaard/intersection_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace heegaard {

const char* to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Bigon: return "bigon";
    case FaceClass::Rectangle: return "rectangle";
    case FaceClass::Polygon: return "polygon";
  }
  return "?";
}

SlotRef IntersectionComplex::a_dart_side(int d) const {
  const auto& g = pants_.curve(vertex_curve_[dart_vertex(d)]);
  return role(d) == DartRole::APlus ? g.side_a : g.side_b;
}

IntersectionComplex build_complex(const PantsComplex& p, const DTCoordinates& c) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  if (auto r = validate_coords(p, c); !r) throw InputError(r.message);
  for (int i = 0; i < c.size(); ++i)
    if (c[i].m == 0) throw InputError("curve unmet: curve " + std::to_string(i) + " has m = 0");

  IntersectionComplex x;
  x.pants_ = p;
  x.coords_ = c;
  x.offset_.resize(p.curve_count());
  int v = 0;
  for (int i = 0; i < p.curve_count(); ++i) {
    x.offset_[i] = v;
    for (int k = 0; k < c[i].m; ++k) x.vertex_curve_.push_back(i);
    v += c[i].m;
  }
  const int nv = v;
  x.twin_.assign(4 * nv, -1);
  x.dart_edge_.assign(4 * nv, -1);
  x.edges_.reserve(2 * nv);

  for (int i = 0; i < p.curve_count(); ++i) {
    const int m = c[i].m;
    for (int k = 0; k < m; ++k) {
      const int from = 4 * x.vertex(i, k) + static_cast<int>(DartRole::APlus);
      const int to = 4 * x.vertex(i, (k + 1) % m) + static_cast<int>(DartRole::AMinus);
      const int e = static_cast<int>(x.edges_.size());
      EdgeInfo info;
      info.system = System::A;
      info.dart = from;
      info.curve = i;
      info.point = k;
      x.edges_.push_back(info);
      x.twin_[from] = to;
      x.twin_[to] = from;
      x.dart_edge_[from] = x.dart_edge_[to] = e;
    }
  }

  // Dart into `pants` at the point sitting at walking position `pos` of `slot`.
  auto end_dart = [&](int pants, const ArcEnd& end) {
    const SlotOwner o = *p.owner(pants, end.slot);
    const auto& g = p.curve(o.curve);
    const auto& cc = c[o.curve];
    if (o.side == Side::A) return 4 * x.vertex(o.curve, end.pos) + static_cast<int>(DartRole::BSideA);
    return 4 * x.vertex(o.curve, side_a_position(g, cc, end.pos)) +
           static_cast<int>(DartRole::BSideB);
  };

  x.patterns_.reserve(p.pants_count());
  for (int q = 0; q < p.pants_count(); ++q) {
    x.patterns_.push_back(expand_pants_arcs(pants_multiplicities(p, c, q)));
    const auto& pat = x.patterns_.back();
    for (int a = 0; a < pat.arc_count(); ++a) {
      const int d0 = end_dart(q, pat.arcs[a].from);
      const int d1 = end_dart(q, pat.arcs[a].to);
      const int e = static_cast<int>(x.edges_.size());
      EdgeInfo info;
      info.system = System::B;
      info.dart = d0;
      info.pants = q;
      info.arc = a;
      x.edges_.push_back(info);
      if (x.twin_[d0] != -1 || x.twin_[d1] != -1 || d0 == d1)
        throw InternalInconsistency("B-dart assigned twice while gluing pants " + std::to_string(q));
      x.twin_[d0] = d1;
      x.twin_[d1] = d0;
      x.dart_edge_[d0] = x.dart_edge_[d1] = e;
    }
  }
  for (int d = 0; d < 4 * nv; ++d)
    if (x.twin_[d] < 0) throw InternalInconsistency("unpaired dart " + std::to_string(d));
  return x;
}

int FaceCensus::count(FaceClass c) const {
  return static_cast<int>(
      std::count_if(faces.begin(), faces.end(), [c](const Face& f) { return f.cls == c; }));
}

int FaceCensus::total_length() const {
  int n = 0;
  for (const auto& f : faces) n += f.length();
  return n;
}

FaceCensus trace_faces(const IntersectionComplex& x) {
  FaceCensus census;
  census.dart_face.assign(x.dart_count(), -1);
  for (int d0 = 0; d0 < x.dart_count(); ++d0) {
    if (census.dart_face[d0] >= 0) continue;
    Face f;
    f.id = static_cast<int>(census.faces.size());
    int d = d0;
    do {
      census.dart_face[d] = f.id;
      f.darts.push_back(d);
      d = x.face_step(d);
    } while (d != d0);
    const int k = f.length() / 2;
    f.cls = k == 1 ? FaceClass::Bigon : k == 2 ? FaceClass::Rectangle : FaceClass::Polygon;
    for (int dd : f.darts) {
      if (!IntersectionComplex::is_a_dart(dd)) {
        f.a_pants = x.b_dart_pants(dd);
        break;
      }
    }
    census.faces.push_back(std::move(f));
  }
  return census;
}

BCurveSystem trace_b_components(const IntersectionComplex& x) {
  BCurveSystem sys;
  sys.edge_curve.assign(x.edge_count(), -1);
  for (int e0 = 0; e0 < x.edge_count(); ++e0) {
    if (x.edge(e0).system != System::B || sys.edge_curve[e0] >= 0) continue;
    BCurve curve;
    const int id = static_cast<int>(sys.curves.size());
    const int start = x.edge(e0).dart;
    int d = start;
    do {
      curve.darts.push_back(d);
      curve.edges.push_back(x.dart_edge(d));
      sys.edge_curve[x.dart_edge(d)] = id;
      d = IntersectionComplex::opposite(x.twin(d));
    } while (d != start);
    sys.curves.push_back(std::move(curve));
  }
  return sys;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Cut the surface along system `cut`; `curve_of_dart` names the cut-system
// component each cut dart lies on.
template <typename CurveOf>
Decomposition decompose(const IntersectionComplex& x, const FaceCensus& faces, System cut,
                        CurveOf curve_of_dart) {
  Decomposition dec;
  dec.cut = cut;
  const int nf = static_cast<int>(faces.faces.size());
  UnionFind uf(nf);
  for (const auto& e : x.edges()) {
    if (e.system == cut) continue;
    uf.unite(faces.dart_face[e.dart], faces.dart_face[x.twin(e.dart)]);
  }
  // Components numbered by their smallest face.
  std::vector<int> root_comp(nf, -1);
  dec.face_component.assign(nf, -1);
  for (int f = 0; f < nf; ++f) {
    const int r = uf.find(f);
    if (root_comp[r] < 0) {
      root_comp[r] = static_cast<int>(dec.components.size());
      dec.components.emplace_back();
    }
    dec.face_component[f] = root_comp[r];
    dec.components[root_comp[r]].faces.push_back(f);
  }

  dec.dart_circle.assign(x.dart_count(), -1);
  for (int d0 = 0; d0 < x.dart_count(); ++d0) {
    if (x.dart_system(d0) != cut || dec.dart_circle[d0] >= 0) continue;
    BoundaryCircle circle;
    circle.curve = curve_of_dart(d0);
    const int id = static_cast<int>(dec.circles.size());
    int d = d0;
    do {
      dec.dart_circle[d] = id;
      circle.darts.push_back(d);
      d = IntersectionComplex::opposite(x.twin(d));
    } while (d != d0);
    dec.circles.push_back(std::move(circle));
  }

  std::vector<int> other_edges(dec.components.size(), 0);
  std::vector<int> cut_darts(dec.components.size(), 0);
  for (const auto& e : x.edges())
    if (e.system != cut) ++other_edges[dec.face_component[faces.dart_face[e.dart]]];
  for (int d = 0; d < x.dart_count(); ++d)
    if (x.dart_system(d) == cut) ++cut_darts[dec.face_component[faces.dart_face[d]]];

  dec.circle_component.assign(dec.circles.size(), -1);
  for (int ci = 0; ci < static_cast<int>(dec.circles.size()); ++ci) {
    const auto& circle = dec.circles[ci];
    const int comp = dec.face_component[faces.dart_face[circle.darts.front()]];
    for (int d : circle.darts)
      if (dec.face_component[faces.dart_face[d]] != comp)
        throw InternalInconsistency("boundary circle spans two components");
    dec.circle_component[ci] = comp;
    dec.components[comp].circles.push_back(ci);
  }
  // Each vertex contributes one vertex-side per non-cut dart, which gives
  // V_c = 2 * (non-cut edges) and chi = E_other - cut darts + F.
  for (std::size_t k = 0; k < dec.components.size(); ++k) {
    auto& comp = dec.components[k];
    comp.euler = other_edges[k] - cut_darts[k] + static_cast<int>(comp.faces.size());
  }
  return dec;
}

}  // namespace

BDecomposition decompose_minus_b(const IntersectionComplex& x, const FaceCensus& faces,
                                 const BCurveSystem& bcurves) {
  BDecomposition out;
  out.decomposition = decompose(x, faces, System::B, [&](int d) {
    return bcurves.edge_curve[x.dart_edge(d)];
  });
  const auto& dec = out.decomposition;
  auto& cert = out.certificate;
  const int g = x.genus();

  auto reject = [&](std::string why) {
    cert.accept = false;
    cert.reason = std::move(why);
    return out;
  };

  for (std::size_t k = 0; k < dec.components.size(); ++k) {
    const auto& comp = dec.components[k];
    const int b = static_cast<int>(comp.circles.size());
    const std::string where = " (component " + std::to_string(k) + ")";
    if (comp.euler == 1) return reject("disk complement (null-homotopic B-component)" + where);
    if (comp.euler == 0) return reject("annulus complement (parallel B-components)" + where);
    if (comp.euler == -1 && b == 1) return reject("genus-1 complement" + where);
    if (comp.euler != -1 || b != 3) {
      std::ostringstream os;
      os << "complement with chi = " << comp.euler << " and " << b << " boundary circles" << where;
      return reject(os.str());
    }
  }
  if (static_cast<int>(dec.components.size()) != 2 * g - 2)
    return reject("expected " + std::to_string(2 * g - 2) + " complementary pants, found " +
                  std::to_string(dec.components.size()));
  if (static_cast<int>(bcurves.curves.size()) != 3 * g - 3)
    return reject("expected " + std::to_string(3 * g - 3) + " B-components, found " +
                  std::to_string(bcurves.curves.size()));

  cert.circle_slot.assign(dec.circles.size(), {});
  for (std::size_t k = 0; k < dec.components.size(); ++k) {
    const auto& circles = dec.components[k].circles;
    for (int s = 0; s < 3; ++s) cert.circle_slot[circles[s]] = {static_cast<int>(k), s};
  }
  std::vector<CurveGluing> gluings;
  for (const auto& curve : bcurves.curves) {
    const int d = curve.darts.front();
    CurveGluing gl;
    gl.side_a = cert.circle_slot[dec.dart_circle[d]];
    gl.side_b = cert.circle_slot[dec.dart_circle[x.twin(d)]];
    gluings.push_back(gl);
  }
  PantsComplex bp(g, std::move(gluings));
  if (auto r = validate_pants_complex(bp); !r)
    throw InternalInconsistency("certified B pants complex invalid: " + r.message);
  cert.b_pants = std::move(bp);
  cert.accept = true;
  cert.reason = "complete system";
  return out;
}

Decomposition decompose_minus_a(const IntersectionComplex& x, const FaceCensus& faces) {
  Decomposition dec = decompose(x, faces, System::A, [&](int d) {
    return x.vertex_curve(IntersectionComplex::dart_vertex(d));
  });
  const auto& p = x.pants();
  if (static_cast<int>(dec.components.size()) != p.pants_count())
    throw InternalInconsistency("A-complement has " + std::to_string(dec.components.size()) +
                                " components, expected " + std::to_string(p.pants_count()));
  std::set<int> seen;
  for (const auto& comp : dec.components) {
    const int q = faces.faces[comp.faces.front()].a_pants;
    for (int f : comp.faces)
      if (faces.faces[f].a_pants != q)
        throw InternalInconsistency("A-complement component mixes pants");
    if (!seen.insert(q).second) throw InternalInconsistency("pants recovered twice");
    if (comp.euler != -1 || comp.circles.size() != 3)
      throw InternalInconsistency("A-complement component of pants " + std::to_string(q) +
                                  " is not a pair of pants");
    std::set<int> slots;
    for (int ci : comp.circles) {
      const auto& circle = dec.circles[ci];
      const SlotRef side = x.a_dart_side(circle.darts.front());
      for (int d : circle.darts)
        if (x.a_dart_side(d) != side) throw InternalInconsistency("A-circle mixes slots");
      if (side.pants != q) throw InternalInconsistency("A-circle on wrong pants");
      slots.insert(side.slot);
    }
    if (slots.size() != 3) throw InternalInconsistency("A-circles do not cover the three slots");
  }
  return dec;
}

}  // namespace heegaard
