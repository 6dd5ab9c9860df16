#include "heegaard/diagram_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace heegaard {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const char* type_name(const json& j) { return j.type_name(); }

void require_keys(const json& obj, const std::string& path, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object()) throw ParseError(path, std::string("expected object, found ") + type_name(obj));
  for (const auto& key : required)
    if (!obj.contains(key)) throw ParseError(at(path, key), "missing required field");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      throw ParseError(at(path, it.key()), "unknown field");
}

std::int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ParseError(path, std::string("expected integer, found ") + type_name(j));
  return j.get<std::int64_t>();
}

int get_small(const json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = get_int(j, path);
  if (v < lo || v > hi)
    throw ParseError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  return static_cast<int>(v);
}

SlotRef get_slot(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path, "expected [pants, slot]");
  return {get_small(j[0], at(path, 0), 0, 1 << 20), get_small(j[1], at(path, 1), 0, 2)};
}

DTCoordinates get_system(const json& arr, const std::string& path, int curves) {
  if (!arr.is_array()) throw ParseError(path, std::string("expected array, found ") + type_name(arr));
  std::vector<std::optional<CurveCoord>> slots(curves);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = at(path, k);
    require_keys(arr[k], p, {"curve", "m", "t"});
    const int curve = get_small(arr[k]["curve"], at(p, "curve"), 0, curves - 1);
    if (slots[curve]) throw ParseError(at(p, "curve"), "duplicate entry for curve " + std::to_string(curve));
    CurveCoord cc;
    cc.m = get_small(arr[k]["m"], at(p, "m"), 0, 1 << 20);
    cc.t = get_int(arr[k]["t"], at(p, "t"));
    slots[curve] = cc;
  }
  DTCoordinates c;
  for (int i = 0; i < curves; ++i) {
    if (!slots[i]) throw ParseError(path, "no entry for curve " + std::to_string(i));
    c.curves.push_back(*slots[i]);
  }
  return c;
}

std::string locate(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json system_json(const DTCoordinates& c) {
  json arr = json::array();
  for (int i = 0; i < c.size(); ++i) arr.push_back({{"curve", i}, {"m", c[i].m}, {"t", c[i].t}});
  return arr;
}

}  // namespace

DiagramDocument parse_diagram(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("", locate(text, e.byte) + ": " + msg);
  }
  require_keys(root, "", {"genus", "gluings", "system_b"}, {"system_c", "metadata"});

  DiagramDocument doc;
  const int genus = get_small(root["genus"], "genus", 2, 64);
  const int ncurves = 3 * genus - 3;

  const json& gl = root["gluings"];
  if (!gl.is_array()) throw ParseError("gluings", std::string("expected array, found ") + type_name(gl));
  std::vector<std::pair<int, CurveGluing>> gluings;
  std::set<int> seen;
  for (std::size_t k = 0; k < gl.size(); ++k) {
    const std::string p = at("gluings", k);
    require_keys(gl[k], p, {"curve", "side_a", "side_b", "reversed"});
    const int curve = get_small(gl[k]["curve"], at(p, "curve"), 0, ncurves - 1);
    if (!seen.insert(curve).second)
      throw ParseError(at(p, "curve"), "duplicate gluing for curve " + std::to_string(curve));
    CurveGluing g;
    g.side_a = get_slot(gl[k]["side_a"], at(p, "side_a"));
    g.side_b = get_slot(gl[k]["side_b"], at(p, "side_b"));
    if (!gl[k]["reversed"].is_boolean()) throw ParseError(at(p, "reversed"), "expected boolean");
    g.reversed = gl[k]["reversed"].get<bool>();
    gluings.push_back({curve, g});
  }
  std::sort(gluings.begin(), gluings.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<CurveGluing> curves;
  for (const auto& [i, g] : gluings) curves.push_back(g);
  doc.pants = PantsComplex(genus, curves);
  if (auto r = validate_pants_complex(doc.pants); !r) throw InputError(r.message);

  doc.system_b = get_system(root["system_b"], "system_b", ncurves);
  if (auto r = validate_coords(doc.pants, doc.system_b); !r) throw InputError("system_b: " + r.message);
  if (root.contains("system_c")) {
    doc.system_c = get_system(root["system_c"], "system_c", ncurves);
    if (auto r = validate_coords(doc.pants, *doc.system_c); !r)
      throw InputError("system_c: " + r.message);
  }
  if (root.contains("metadata")) {
    const json& md = root["metadata"];
    if (!md.is_object()) throw ParseError("metadata", "expected object of strings");
    for (auto it = md.begin(); it != md.end(); ++it) {
      if (!it->is_string()) throw ParseError(at("metadata", it.key()), "expected string");
      doc.metadata[it.key()] = it->get<std::string>();
    }
  }
  return doc;
}

std::string serialize_diagram(const DiagramDocument& doc) {
  json root;
  root["genus"] = doc.pants.genus();
  json gl = json::array();
  for (int i = 0; i < doc.pants.curve_count(); ++i) {
    const auto& g = doc.pants.curve(i);
    gl.push_back({{"curve", i},
                  {"side_a", {g.side_a.pants, g.side_a.slot}},
                  {"side_b", {g.side_b.pants, g.side_b.slot}},
                  {"reversed", g.reversed}});
  }
  root["gluings"] = gl;
  root["system_b"] = system_json(doc.system_b);
  if (doc.system_c) root["system_c"] = system_json(*doc.system_c);
  if (!doc.metadata.empty()) root["metadata"] = doc.metadata;
  return root.dump(2) + "\n";
}

DiagramDocument read_diagram_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_diagram(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

}  // namespace heegaard
