#include "heegaard/normal_coords.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace heegaard {

int DTCoordinates::total_points() const {
  int v = 0;
  for (const auto& cc : curves) v += cc.m;
  return v;
}

PantsArcPattern expand_pants_arcs(std::array<int, 3> m) {
  for (int j = 0; j < 3; ++j)
    if (m[j] < 0) throw InputError("negative multiplicity in pants pattern");
  if ((m[0] + m[1] + m[2]) % 2 != 0) throw InputError("parity violation: odd boundary total");

  PantsArcPattern pat;
  pat.m = m;
  int heavy = -1;
  for (int j = 0; j < 3; ++j)
    if (m[j] > m[(j + 1) % 3] + m[(j + 2) % 3]) heavy = j;

  if (heavy < 0) {
    for (int k = 0; k < 3; ++k) {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      pat.x[k] = (m[i] + m[j] - m[k]) / 2;
    }
  } else {
    const int k = (heavy + 1) % 3, l = (heavy + 2) % 3;
    pat.x[l] = m[k];  // heavy <-> k
    pat.x[k] = m[l];  // heavy <-> l
    pat.x[heavy] = 0;
    pat.s[heavy] = (m[heavy] - m[k] - m[l]) / 2;
  }

  for (int j = 0; j < 3; ++j) pat.endpoint_arc[j].assign(m[j], -1);

  auto add = [&](ArcEnd a, ArcEnd b) {
    if (b < a) std::swap(a, b);
    pat.endpoint_arc[a.slot][a.pos] = pat.arc_count();
    pat.endpoint_arc[b.slot][b.pos] = pat.arc_count();
    pat.arcs.push_back({a, b});
  };

  // Position of the block toward slot j+2 in slot j's walk.
  auto back_block = [&](int j) { return pat.between(j, (j + 1) % 3) + pat.s[j]; };

  for (int j = 0; j < 3; ++j) {
    const int nxt = (j + 1) % 3;
    const int n = pat.between(j, nxt);
    // Slot nxt sees slot j in its second connecting block.
    const int start = back_block(nxt);
    for (int p = 0; p < n; ++p) add({j, p}, {nxt, start + (n - 1 - p)});
  }
  for (int j = 0; j < 3; ++j) {
    const int x1 = pat.between(j, (j + 1) % 3);
    for (int p = 0; p < pat.s[j]; ++p) add({j, x1 + p}, {j, m[j] - 1 - p});
  }

  // Arcs were appended per block; renumber so ids follow the smallest endpoint.
  std::vector<int> order(pat.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return pat.arcs[a].from < pat.arcs[b].from; });
  std::vector<NormalArc> sorted;
  std::vector<int> rename(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    rename[order[i]] = i;
    sorted.push_back(pat.arcs[order[i]]);
  }
  pat.arcs = std::move(sorted);
  for (auto& row : pat.endpoint_arc)
    for (int& a : row) a = rename[a];
  return pat;
}

std::array<int, 3> pants_multiplicities(const PantsComplex& p, const DTCoordinates& c, int pants) {
  std::array<int, 3> m{};
  const auto curves = p.pants_curves(pants);
  for (int s = 0; s < 3; ++s) m[s] = curves[s] >= 0 ? c[curves[s]].m : 0;
  return m;
}

ValidationResult validate_coords(const PantsComplex& p, const DTCoordinates& c) {
  if (c.size() != p.curve_count()) {
    return ValidationResult::failure(ValidationCode::CountMismatch,
                                     "coordinates list " + std::to_string(c.size()) +
                                         " curves, pants complex has " +
                                         std::to_string(p.curve_count()));
  }
  for (int i = 0; i < c.size(); ++i) {
    if (c[i].m < 0)
      return ValidationResult::failure(ValidationCode::NegativeMultiplicity,
                                       "negative multiplicity on curve " + std::to_string(i));
  }
  for (int q = 0; q < p.pants_count(); ++q) {
    const auto m = pants_multiplicities(p, c, q);
    if ((m[0] + m[1] + m[2]) % 2 != 0) {
      return ValidationResult::failure(
          ValidationCode::ParityViolation,
          "parity violation at pants " + std::to_string(q) + ": multiplicities (" +
              std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) +
              ") have odd sum");
    }
  }
  for (int i = 0; i < c.size(); ++i) {
    if (c[i].m == 0 && c[i].t != 0)
      return ValidationResult::failure(
          ValidationCode::TwistOnUnmetCurve,
          "twist on unmet curve " + std::to_string(i) + " (m = 0, t = " + std::to_string(c[i].t) +
              ")");
  }
  return ValidationResult::success();
}

DTCoordinates apply_twist(const DTCoordinates& c, int curve, std::int64_t n) {
  DTCoordinates out = c;
  out[curve].t += n * out[curve].m;
  return out;
}

int side_b_position(const CurveGluing& g, const CurveCoord& cc, int k) {
  const std::int64_t shift = g.reversed ? cc.t : -cc.t;
  return floor_mod(static_cast<std::int64_t>(cc.m) - 1 - k + shift, cc.m);
}

int side_a_position(const CurveGluing& g, const CurveCoord& cc, int w) {
  // k -> m-1-k+shift is an involution.
  return side_b_position(g, cc, w);
}

}  // namespace heegaard
