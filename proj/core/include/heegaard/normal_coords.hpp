#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heegaard/pants.hpp"
#include "heegaard/validation.hpp"

namespace heegaard {

/// Normal coordinates of the second curve system on one decomposition
/// curve: `m` intersection points and a twist `t` in marked-point units.
struct CurveCoord {
  int m = 0;
  std::int64_t t = 0;

  friend auto operator<=>(const CurveCoord&, const CurveCoord&) = default;
};

/// One CurveCoord per curve of a PantsComplex, indexed by curve.
struct DTCoordinates {
  std::vector<CurveCoord> curves;

  int size() const { return static_cast<int>(curves.size()); }
  const CurveCoord& operator[](int i) const { return curves.at(i); }
  CurveCoord& operator[](int i) { return curves.at(i); }
  int total_points() const;

  friend auto operator<=>(const DTCoordinates&, const DTCoordinates&) = default;
};

/// Endpoint of a normal arc: position `pos` in walking order around `slot`.
struct ArcEnd {
  int slot = 0;
  int pos = 0;

  friend auto operator<=>(const ArcEnd&, const ArcEnd&) = default;
};

/// A normal arc in one pants; `from` < `to` lexicographically.
struct NormalArc {
  ArcEnd from;
  ArcEnd to;

  bool same_boundary() const { return from.slot == to.slot; }
  friend auto operator<=>(const NormalArc&, const NormalArc&) = default;
};

/// Standard normal arcs in a pants for boundary multiplicities m.
///
/// Walking each boundary circle in its induced orientation (pants on the
/// left) from the slot's basepoint, the endpoints come in four blocks:
///
///   [to slot j+1 : x_{j,j+1}] [wave ends : s_j] [to slot j+2 : x_{j,j+2}] [wave ends : s_j]
///
/// Connecting arcs between two slots pair positions in reverse block order;
/// waves pair position x_{j,j+1}+p with position m_j-1-p.
struct PantsArcPattern {
  std::array<int, 3> m{};
  /// x[k] counts arcs joining the two slots other than k.
  std::array<int, 3> x{};
  std::array<int, 3> s{};
  std::vector<NormalArc> arcs;
  /// endpoint_arc[slot][pos] = index into arcs.
  std::array<std::vector<int>, 3> endpoint_arc;

  int between(int j, int k) const { return x[3 - j - k]; }
  int arc_count() const { return static_cast<int>(arcs.size()); }
};

/// Throws InputError on odd total or negative entries.
PantsArcPattern expand_pants_arcs(std::array<int, 3> m);

ValidationResult validate_coords(const PantsComplex& p, const DTCoordinates& c);

/// t_i += n * m_i.
DTCoordinates apply_twist(const DTCoordinates& c, int curve, std::int64_t n);

/// Multiplicities seen by the three slots of a pants.
std::array<int, 3> pants_multiplicities(const PantsComplex& p, const DTCoordinates& c, int pants);

/// Walking position on side B of the point with side-A position k.
int side_b_position(const CurveGluing& g, const CurveCoord& cc, int k);

/// Inverse of side_b_position.
int side_a_position(const CurveGluing& g, const CurveCoord& cc, int w);

inline int floor_mod(std::int64_t a, int m) {
  std::int64_t r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace heegaard
