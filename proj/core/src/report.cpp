#include "heegaard/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace heegaard {

using nlohmann::json;

namespace {

std::string pair_label(const char* sys, const AdjacentPair& p) {
  std::ostringstream os;
  os << sys << p.pants << "{" << p.slot_lo << "," << p.slot_hi << "}";
  return os.str();
}

std::string triple_label(const char* sys, const AdjacentTriple& t) {
  std::ostringstream os;
  os << sys << "c" << t.middle << "[" << t.left.pants << "." << t.left.slot << "|" << t.right.pants
     << "." << t.right.slot << "]";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json pairs_json(const std::vector<AdjacentPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs)
    arr.push_back({{"pants", p.pants}, {"slots", {p.slot_lo, p.slot_hi}}, {"curves", {p.curve_lo, p.curve_hi}}});
  return arr;
}

json triples_json(const std::vector<AdjacentTriple>& triples) {
  json arr = json::array();
  for (const auto& t : triples)
    arr.push_back({{"middle", t.middle},
                   {"left", {t.left.pants, t.left.slot}},
                   {"right", {t.right.pants, t.right.slot}}});
  return arr;
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"reason", to_string(v.reason)}, {"text", v.text}});
  return arr;
}

const char* system_name(System s) { return s == System::A ? "A" : "B"; }

json waves_json(const std::vector<WaveWitness>& ws) {
  json arr = json::array();
  for (const auto& w : ws)
    arr.push_back({{"system", system_name(w.system)},
                   {"pants", w.pants},
                   {"slot", w.slot},
                   {"multiplicity", w.multiplicity}});
  return arr;
}

void matrix_text(std::ostream& os, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, const CountMatrix& m) {
  std::size_t rw = 0, cw = 3;
  for (const auto& r : rows) rw = std::max(rw, r.size());
  for (const auto& c : cols) cw = std::max(cw, c.size());
  os << std::string(rw, ' ');
  for (const auto& c : cols) os << "  " << std::setw(static_cast<int>(cw)) << c;
  os << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(rw)) << rows[i] << std::right;
    for (std::size_t j = 0; j < cols.size(); ++j) os << "  " << std::setw(static_cast<int>(cw)) << m[i][j];
    os << "\n";
  }
}

void waves_text(std::ostream& os, const std::vector<WaveWitness>& ws) {
  if (ws.empty()) {
    os << "waves: none\n";
    return;
  }
  os << "waves: " << ws.size() << "\n";
  for (const auto& w : ws)
    os << "  " << system_name(w.system) << "-wave in " << (w.system == System::B ? "A" : "B")
       << "-pants " << w.pants << " at slot " << w.slot << " (multiplicity " << w.multiplicity
       << ")\n";
}

void violations_text(std::ostream& os, const std::vector<Violation>& vs) {
  if (vs.empty()) return;
  os << "violations: " << vs.size() << "\n";
  for (const auto& v : vs) os << "  " << to_string(v.reason) << ": " << v.text << "\n";
}

std::vector<std::string> pair_labels(const char* sys, const std::vector<AdjacentPair>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(pair_label(sys, p));
  return out;
}

std::vector<std::string> triple_labels(const char* sys, const std::vector<AdjacentTriple>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(triple_label(sys, t));
  return out;
}

json rc_json(const RcReport& r) {
  const auto cert = certify_strongly_irreducible(r);
  return {{"verdict", to_string(r.verdict)},
          {"violations", violations_json(r.violations)},
          {"waves", waves_json(r.waves)},
          {"a_pairs", pairs_json(r.a_pairs)},
          {"b_pairs", pairs_json(r.b_pairs)},
          {"matrix", r.matrix},
          {"rectangles", r.rectangles},
          {"certificate",
           {{"certified", cert.certified}, {"inconclusive", cert.inconclusive}, {"note", cert.note}}}};
}

json drc_json(const DrcReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"violations", violations_json(r.violations)},
          {"a_triples", triples_json(r.a_triples)},
          {"b_triples", triples_json(r.b_triples)},
          {"a_pair_b_triple", r.a_pair_b_triple},
          {"b_pair_a_triple", r.b_pair_a_triple},
          {"double_rectangles", r.double_rectangles}};
}

json coords_json(const DTCoordinates& c) {
  json arr = json::array();
  for (int i = 0; i < c.size(); ++i) arr.push_back({{"curve", i}, {"m", c[i].m}, {"t", c[i].t}});
  return arr;
}

std::string coords_text(const DTCoordinates& c) {
  std::ostringstream os;
  for (int i = 0; i < c.size(); ++i) os << (i ? " " : "") << "(" << c[i].m << "," << c[i].t << ")";
  return os.str();
}

json row_json(const ScanRow& r, bool with_drc) {
  json j = {{"power", r.power},
            {"rc", to_string(r.rc)},
            {"complete_b", r.complete_b},
            {"rectangles", r.rectangles},
            {"vertices", r.vertices}};
  if (with_drc) {
    j["drc"] = to_string(r.drc);
    j["double_rectangles"] = r.double_rectangles;
  }
  return j;
}

void rows_text(std::ostream& os, const std::vector<ScanRow>& rows, bool with_drc) {
  os << std::setw(6) << "n" << "  " << std::left << std::setw(7) << "RC";
  if (with_drc) os << "  " << std::setw(7) << "DRC";
  os << std::right << "  " << std::setw(6) << "rect";
  if (with_drc) os << "  " << std::setw(6) << "double";
  os << "  " << std::setw(5) << "V" << "\n";
  for (const auto& r : rows) {
    os << std::setw(6) << r.power << "  " << std::left << std::setw(7) << to_string(r.rc);
    if (with_drc) os << "  " << std::setw(7) << to_string(r.drc);
    os << std::right << "  " << std::setw(6) << r.rectangles;
    if (with_drc) os << "  " << std::setw(6) << r.double_rectangles;
    os << "  " << std::setw(5) << r.vertices << "\n";
  }
}

std::string dart_text(const Analysis& a, int d) {
  const auto& x = a.complex;
  std::ostringstream os;
  if (IntersectionComplex::is_a_dart(d)) {
    const int v = IntersectionComplex::dart_vertex(d);
    const SlotRef s = x.a_dart_side(d);
    os << "A c" << x.vertex_curve(v) << ":" << x.vertex_point(v)
       << (IntersectionComplex::role(d) == DartRole::APlus ? "+" : "-") << " P" << s.pants << "."
       << s.slot;
  } else {
    const auto& e = x.edge(x.dart_edge(d));
    os << "B P" << e.pants << " arc" << e.arc << (d == e.dart ? "+" : "-");
  }
  return os.str();
}

}  // namespace

std::string render_check(const CheckOutcome& out, Format f) {
  if (f == Format::Json) {
    json j;
    j["condition"] = out.drc ? "DRC" : "RC";
    j["verdict"] = to_string(out.drc ? out.drc->verdict : out.rc.verdict);
    j["rc"] = rc_json(out.rc);
    if (out.drc) j["drc"] = drc_json(*out.drc);
    if (out.oracle) j["oracle"] = *out.oracle;
    return dump(j);
  }
  std::ostringstream os;
  const RcReport& rc = out.rc;
  os << "RC: " << to_string(rc.verdict) << "\n";
  if (out.drc) os << "DRC: " << to_string(out.drc->verdict) << "\n";
  os << "rectangles: " << rc.rectangles << "\n";
  if (out.drc) os << "double rectangles: " << out.drc->double_rectangles << "\n";
  waves_text(os, rc.waves);
  os << "certificate: " << certify_strongly_irreducible(rc).note << "\n";
  if (!rc.b_pairs.empty()) {
    os << "rectangles per A-pair x B-pair:\n";
    matrix_text(os, pair_labels("A", rc.a_pairs), pair_labels("B", rc.b_pairs), rc.matrix);
  }
  if (out.drc && !out.drc->b_triples.empty()) {
    os << "double rectangles per A-pair x B-triple:\n";
    matrix_text(os, pair_labels("A", rc.a_pairs), triple_labels("B", out.drc->b_triples),
                out.drc->a_pair_b_triple);
    os << "double rectangles per B-pair x A-triple:\n";
    matrix_text(os, pair_labels("B", rc.b_pairs), triple_labels("A", out.drc->a_triples),
                out.drc->b_pair_a_triple);
  }
  violations_text(os, out.drc ? out.drc->violations : rc.violations);
  if (out.oracle) os << "oracle: " << *out.oracle << "\n";
  return os.str();
}

std::string render_faces(const Analysis& a, Format f) {
  const auto& x = a.complex;
  const auto& faces = a.faces;
  const int nf = static_cast<int>(faces.faces.size());
  const int euler = x.vertex_count() - x.edge_count() + nf;
  std::vector<std::array<int, 3>> per_pants(x.pants().pants_count(), {0, 0, 0});
  for (const auto& face : faces.faces) ++per_pants[face.a_pants][static_cast<int>(face.cls)];
  const auto& cert = a.bdec.certificate;

  if (f == Format::Json) {
    json j;
    j["genus"] = a.genus();
    j["vertices"] = x.vertex_count();
    j["edges"] = x.edge_count();
    j["faces"] = nf;
    j["euler"] = euler;
    j["classes"] = {{"bigon", faces.count(FaceClass::Bigon)},
                    {"rectangle", faces.count(FaceClass::Rectangle)},
                    {"polygon", faces.count(FaceClass::Polygon)}};
    json pp = json::array();
    for (std::size_t q = 0; q < per_pants.size(); ++q)
      pp.push_back({{"pants", q},
                    {"bigon", per_pants[q][0]},
                    {"rectangle", per_pants[q][1]},
                    {"polygon", per_pants[q][2]}});
    j["per_pants"] = pp;
    json list = json::array();
    for (const auto& face : faces.faces) {
      json word = json::array();
      for (int d : face.darts) word.push_back(dart_text(a, d));
      list.push_back({{"id", face.id},
                      {"class", to_string(face.cls)},
                      {"length", face.length()},
                      {"a_pants", face.a_pants},
                      {"b_component", a.bdec.decomposition.face_component[face.id]},
                      {"boundary", word}});
    }
    j["face_list"] = list;
    j["b_curves"] = a.bcurves.curves.size();
    j["b_certificate"] = {{"accept", cert.accept}, {"reason", cert.reason}};
    return dump(j);
  }
  std::ostringstream os;
  os << "V " << x.vertex_count() << "  E " << x.edge_count() << "  F " << nf << "  V-E+F "
     << euler << "\n";
  os << "bigons " << faces.count(FaceClass::Bigon) << "  rectangles "
     << faces.count(FaceClass::Rectangle) << "  polygons " << faces.count(FaceClass::Polygon)
     << "\n";
  os << "pants  bigon  rectangle  polygon\n";
  for (std::size_t q = 0; q < per_pants.size(); ++q)
    os << std::setw(5) << q << "  " << std::setw(5) << per_pants[q][0] << "  " << std::setw(9)
       << per_pants[q][1] << "  " << std::setw(7) << per_pants[q][2] << "\n";
  os << "B-curves: " << a.bcurves.curves.size() << "\n";
  os << "B certificate: " << (cert.accept ? "ACCEPT" : "REJECT") << " (" << cert.reason << ")\n";
  return os.str();
}

std::string render_waves(const Analysis& a, Format f) {
  const auto ws = detect_waves(a);
  if (f == Format::Json) return dump({{"count", ws.size()}, {"waves", waves_json(ws)}});
  std::ostringstream os;
  waves_text(os, ws);
  return os.str();
}

std::string render_scan(const std::vector<ScanRow>& rows, int curve, bool with_drc, Format f) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(row_json(r, with_drc));
    return dump({{"curve", curve}, {"rows", arr}});
  }
  std::ostringstream os;
  os << "twist family along curve " << curve << "\n";
  rows_text(os, rows, with_drc);
  return os.str();
}

std::string render_enumeration(const EnumerationCensus& c, Format f) {
  if (f == Format::Json) {
    json rc = json::array(), drc = json::array();
    for (const auto& v : c.rc_list) rc.push_back(coords_json(v));
    for (const auto& v : c.drc_list) drc.push_back(coords_json(v));
    return dump({{"box", {{"m_max", c.box.m_max}, {"t_max", c.box.t_max}}},
                 {"counts",
                  {{"candidates", c.candidates},
                   {"parity_valid", c.parity_valid},
                   {"built", c.built},
                   {"certified", c.certified},
                   {"rc_accepted", c.rc_accepted},
                   {"drc_accepted", c.drc_accepted}}},
                 {"rc_accepted", rc},
                 {"drc_accepted", drc}});
  }
  std::ostringstream os;
  os << "box: m <= " << c.box.m_max << ", |t| <= " << c.box.t_max << "\n";
  os << std::left << std::setw(14) << "candidates" << c.candidates << "\n"
     << std::setw(14) << "parity valid" << c.parity_valid << "\n"
     << std::setw(14) << "built" << c.built << "\n"
     << std::setw(14) << "certified" << c.certified << "\n"
     << std::setw(14) << "RC accepted" << c.rc_accepted << "\n"
     << std::setw(14) << "DRC accepted" << c.drc_accepted << "\n";
  for (const auto& v : c.drc_list) os << "  DRC " << coords_text(v) << "\n";
  return os.str();
}

std::string render_family_search(const FamilySearch& s, Format f) {
  if (f == Format::Json) {
    json j = {{"found", s.witness.has_value()}, {"candidates", s.candidates}, {"rc_bases", s.rc_bases}};
    if (s.witness) {
      json rows = json::array();
      for (const auto& r : s.witness->rows) rows.push_back(row_json(r, true));
      j["witness"] = {{"base", coords_json(s.witness->base)},
                      {"curve", s.witness->curve},
                      {"range", {s.witness->n_lo, s.witness->n_hi}},
                      {"drc_accepted", s.witness->drc_accepted},
                      {"rows", rows}};
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "candidates " << s.candidates << ", RC-accepting bases " << s.rc_bases << "\n";
  if (!s.witness) {
    os << "no witness in box\n";
    return os.str();
  }
  os << "witness " << coords_text(s.witness->base) << " along curve " << s.witness->curve
     << ", DRC accepted " << s.witness->drc_accepted << " times\n";
  rows_text(os, s.witness->rows, true);
  return os.str();
}

std::string render_census(const ArcCensus& c, Format f) {
  if (f == Format::Json) {
    json types = json::array();
    for (const auto& [t, n] : c.types)
      types.push_back({{"pants", t.pants},
                       {"ends", {{t.ends[0].slot, t.ends[0].interval}, {t.ends[1].slot, t.ends[1].interval}}},
                       {"same_slot", t.same_slot},
                       {"multiplicity", n}});
    json per = json::array();
    for (const auto& [q, n] : c.arcs_per_pants) per.push_back({{"pants", q}, {"arcs", n}});
    return dump({{"distinct", c.distinct()}, {"types", types}, {"arcs_per_pants", per}});
  }
  std::ostringstream os;
  os << "distinct arc types: " << c.distinct() << "\n";
  os << "pants  end 1     end 2     same  count\n";
  for (const auto& [t, n] : c.types) {
    std::ostringstream e0, e1;
    e0 << "s" << t.ends[0].slot << "/i" << t.ends[0].interval;
    e1 << "s" << t.ends[1].slot << "/i" << t.ends[1].interval;
    os << std::setw(5) << t.pants << "  " << std::left << std::setw(8) << e0.str() << "  "
       << std::setw(8) << e1.str() << "  " << std::setw(4) << (t.same_slot ? "yes" : "no")
       << std::right << "  " << std::setw(5) << n << "\n";
  }
  return os.str();
}

std::string export_dot(const Analysis& a) {
  const auto& x = a.complex;
  std::ostringstream os;
  os << "graph diagram {\n";
  os << "  graph [genus=" << a.genus() << "];\n";
  for (const auto& face : a.faces.faces) {
    const char* shape = face.cls == FaceClass::Bigon       ? "ellipse"
                        : face.cls == FaceClass::Rectangle ? "box"
                                                           : "hexagon";
    os << "  f" << face.id << " [shape=" << shape << ", label=\"f" << face.id << " P"
       << face.a_pants << " " << face.length() << "\", a_pants=" << face.a_pants
       << ", b_component=" << a.bdec.decomposition.face_component[face.id] << "];\n";
  }
  for (int e = 0; e < x.edge_count(); ++e) {
    const auto& info = x.edge(e);
    const int f0 = a.faces.dart_face[info.dart];
    const int f1 = a.faces.dart_face[x.twin(info.dart)];
    os << "  f" << f0 << " -- f" << f1 << " [";
    if (info.system == System::A)
      os << "style=solid, system=A, label=\"c" << info.curve << ":" << info.point << "\"";
    else
      os << "style=dashed, system=B, label=\"P" << info.pants << " arc" << info.arc << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace heegaard
