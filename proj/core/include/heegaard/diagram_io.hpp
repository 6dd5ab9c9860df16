#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"
#include "heegaard/validation.hpp"

namespace heegaard {

struct DiagramDocument {
  PantsComplex pants;
  DTCoordinates system_b;
  std::optional<DTCoordinates> system_c;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

/// Schema violations carry the JSON path of the offending field.
class ParseError : public InputError {
 public:
  ParseError(std::string path, const std::string& what)
      : InputError(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Throws ParseError on schema violations, InputError on semantic ones
/// (with the validate_pants_complex / validate_coords diagnostics).
DiagramDocument parse_diagram(std::string_view text);

/// Canonical form: sorted keys, two-space indent, records sorted by curve,
/// trailing newline.
std::string serialize_diagram(const DiagramDocument& doc);

DiagramDocument read_diagram_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace heegaard
