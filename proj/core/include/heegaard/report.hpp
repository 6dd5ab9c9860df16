#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heegaard/conditions.hpp"
#include "heegaard/families.hpp"

namespace heegaard {

enum class Format { Text, Json };

struct CheckOutcome {
  RcReport rc;
  std::optional<DrcReport> drc;
  /// "MATCH" when the oracle ran and agreed.
  std::optional<std::string> oracle;
};

std::string render_check(const CheckOutcome& out, Format f);
std::string render_faces(const Analysis& a, Format f);
std::string render_waves(const Analysis& a, Format f);
std::string render_scan(const std::vector<ScanRow>& rows, int curve, bool with_drc, Format f);
std::string render_enumeration(const EnumerationCensus& census, Format f);
std::string render_family_search(const FamilySearch& s, Format f);
std::string render_census(const ArcCensus& census, Format f);

/// Faces as nodes (shape by class), one link per shared edge (style by system).
std::string export_dot(const Analysis& a);

}  // namespace heegaard
