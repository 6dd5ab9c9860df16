#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/diagram_io.hpp"
#include "heegaard/families.hpp"
#include "heegaard/oracle.hpp"
#include "heegaard/report.hpp"

namespace heegaard::cli {

namespace {

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

std::string oracle_status(const DiagramDocument& doc, const RcReport& rc) {
  for (const auto& cc : doc.system_b.curves)
    if (cc.m == 0) {
      for (const auto& row : rc.matrix)
        for (int v : row)
          if (v != 0) throw InternalInconsistency("rectangles counted on a diagram with an unmet curve");
      return "MATCH";
    }
  const Analysis a = analyze(doc.pants, doc.system_b);
  const auto primary = oracle::primary_census(a);
  const auto geometric = oracle::oracle_census(doc.pants, doc.system_b);
  if (auto diff = oracle::compare(primary, geometric)) throw InternalInconsistency("oracle mismatch: " + *diff);
  return "MATCH";
}

struct Options {
  std::string file;
  std::string format = "text";
  std::string output;
  bool double_condition = false;
  bool with_oracle = false;
  int curve = 0;
  std::int64_t power = 0;
  std::int64_t from = -10;
  std::int64_t to = 10;
  int m_max = 0;
  int t_max = 0;
  int max_drc = 3;
  std::string emit_dir;
  int threads = 1;
};

void emit_diagrams(const std::string& dir, const DiagramDocument& topology,
                   const std::vector<DTCoordinates>& list, const std::string& prefix) {
  std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < list.size(); ++k) {
    DiagramDocument d;
    d.pants = topology.pants;
    d.system_b = list[k];
    d.metadata["source"] = "enumerate";
    std::ostringstream name;
    name << prefix << "_" << std::setw(4) << std::setfill('0') << k << ".json";
    write_text_file((std::filesystem::path(dir) / name.str()).string(), serialize_diagram(d));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard diagram rectangle and double rectangle condition checker", "heegaard"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads for scan, enumerate and search")
      ->check(CLI::PositiveNumber);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "Check the rectangle condition (or DRC with --double)");
  check->add_option("file", o.file, "Diagram file")->required();
  check->add_flag("--double", o.double_condition, "Check the double rectangle condition");
  check->add_flag("--oracle", o.with_oracle, "Cross-check against the planar oracle");
  add_format(check);

  auto* faces = app.add_subcommand("faces", "Face census of the intersection complex");
  faces->add_option("file", o.file)->required();
  add_format(faces);

  auto* waves = app.add_subcommand("waves", "Wave witnesses of both systems");
  waves->add_option("file", o.file)->required();
  add_format(waves);

  auto* twist = app.add_subcommand("twist", "Apply a Dehn twist along a decomposition curve");
  twist->add_option("file", o.file)->required();
  twist->add_option("--curve", o.curve)->required();
  twist->add_option("--power", o.power)->required();
  twist->add_option("-o,--output", o.output, "Output diagram file (default: standard output)");

  auto* scan = app.add_subcommand("scan", "Scan a twist family");
  scan->add_option("file", o.file)->required();
  scan->add_option("--curve", o.curve)->required();
  scan->add_option("--from", o.from)->required();
  scan->add_option("--to", o.to)->required();
  scan->add_flag("--double", o.double_condition, "Include the double rectangle condition");
  add_format(scan);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all coordinates in a box");
  enumerate->add_option("--topology", o.file, "Diagram file supplying the pants complex")->required();
  enumerate->add_option("--m-max", o.m_max)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--t-max", o.t_max)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--emit-dir", o.emit_dir, "Write DRC-accepted diagrams here");
  add_format(enumerate);

  auto* search = app.add_subcommand("search", "Search a box for an RC-persistent twist family");
  search->add_option("--topology", o.file)->required();
  search->add_option("--m-max", o.m_max)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--t-max", o.t_max)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--from", o.from);
  search->add_option("--to", o.to);
  search->add_option("--max-drc", o.max_drc);
  add_format(search);

  auto* census = app.add_subcommand("census", "Connecting arc types of system_c rel system_b");
  census->add_option("file", o.file)->required();
  add_format(census);

  auto* dot = app.add_subcommand("export-dot", "Export the face adjacency graph as DOT");
  dot->add_option("file", o.file)->required();
  dot->add_option("-o,--output", o.output)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAccept : kInputError;
  }

  const Format fmt = parse_format(o.format);
  try {
    const DiagramDocument doc = read_diagram_file(o.file);
    const PantsComplex& p = doc.pants;

    if (check->parsed()) {
      CheckOutcome res;
      Verdict verdict;
      if (o.double_condition) {
        res.drc = check_double_rectangle_condition(p, doc.system_b);
        res.rc = res.drc->rc;
        verdict = res.drc->verdict;
      } else {
        res.rc = check_rectangle_condition(p, doc.system_b);
        verdict = res.rc.verdict;
      }
      if (o.with_oracle) res.oracle = oracle_status(doc, res.rc);
      out << render_check(res, fmt);
      return verdict == Verdict::Accept ? kAccept : kReject;
    }
    if (faces->parsed()) {
      out << render_faces(analyze(p, doc.system_b), fmt);
      return kAccept;
    }
    if (waves->parsed()) {
      out << render_waves(analyze(p, doc.system_b), fmt);
      return kAccept;
    }
    if (twist->parsed()) {
      if (o.curve < 0 || o.curve >= p.curve_count())
        throw InputError("--curve " + std::to_string(o.curve) + " out of range");
      DiagramDocument twisted = doc;
      twisted.system_b = apply_twist(doc.system_b, o.curve, o.power);
      const std::string text = serialize_diagram(twisted);
      if (o.output.empty())
        out << text;
      else
        write_text_file(o.output, text);
      return kAccept;
    }
    if (scan->parsed()) {
      const auto rows = scan_twist_family(p, doc.system_b, o.curve, o.from, o.to, o.threads);
      out << render_scan(rows, o.curve, o.double_condition, fmt);
      return kAccept;
    }
    if (enumerate->parsed()) {
      const auto cen = enumerate_diagrams(p, {o.m_max, o.t_max}, o.threads);
      if (!o.emit_dir.empty()) emit_diagrams(o.emit_dir, doc, cen.drc_list, "drc");
      out << render_enumeration(cen, fmt);
      return kAccept;
    }
    if (search->parsed()) {
      const auto res =
          search_rc_persistent_family(p, {o.m_max, o.t_max}, o.from, o.to, o.max_drc, o.threads);
      out << render_family_search(res, fmt);
      return kAccept;
    }
    if (census->parsed()) {
      if (!doc.system_c) throw InputError("census requires a system_c field");
      out << render_census(connecting_arc_census(p, doc.system_b, *doc.system_c), fmt);
      return kAccept;
    }
    if (dot->parsed()) {
      write_text_file(o.output, export_dot(analyze(p, doc.system_b)));
      return kAccept;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternalInconsistency;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const oracle::OracleError& e) {
    err << "oracle: " << e.what() << "\n";
    return kInternalInconsistency;
  }
  return kInputError;
}

}  // namespace heegaard::cli
