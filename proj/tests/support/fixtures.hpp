#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"

namespace heegaard::testing {

/// Genus 2, each curve k joining (P0,k) and (P1,k).
inline PantsComplex theta_genus2(bool reversed = false) {
  std::vector<CurveGluing> g;
  for (int k = 0; k < 3; ++k) g.push_back({{0, k}, {1, k}, reversed});
  return PantsComplex(2, g);
}

/// Genus 2 with two self-glued pants joined by curve 1.
inline PantsComplex eyeglasses_genus2() {
  return PantsComplex(2, {{{0, 0}, {0, 1}, false}, {{0, 2}, {1, 0}, false}, {{1, 1}, {1, 2}, false}});
}

/// Genus 3 chain: P0 self-glued, P0-P1, P1=P2 doubly, P2-P3, P3 self-glued.
inline PantsComplex chain_genus3() {
  return PantsComplex(3, {{{0, 0}, {0, 1}, false},
                          {{0, 2}, {1, 0}, false},
                          {{1, 1}, {2, 0}, false},
                          {{1, 2}, {2, 1}, true},
                          {{2, 2}, {3, 0}, false},
                          {{3, 1}, {3, 2}, false}});
}

/// Uniform random connected pants complex (random perfect matching of slots).
template <typename Rng>
PantsComplex random_pants_complex(int genus, Rng& rng) {
  const int npants = 2 * genus - 2;
  while (true) {
    std::vector<SlotRef> slots;
    for (int q = 0; q < npants; ++q)
      for (int s = 0; s < 3; ++s) slots.push_back({q, s});
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<CurveGluing> g;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
      SlotRef a = slots[i], b = slots[i + 1];
      if (b < a) std::swap(a, b);
      g.push_back({a, b, coin(rng)});
    }
    std::sort(g.begin(), g.end(), [](const CurveGluing& l, const CurveGluing& r) {
      return l.side_a < r.side_a;
    });
    PantsComplex p(genus, g);
    if (validate_pants_complex(p)) return p;
  }
}

/// Random coordinates with m in [m_lo, m_hi], |t| <= t_max, valid parity.
template <typename Rng>
DTCoordinates random_coords(const PantsComplex& p, int m_lo, int m_hi, int t_max, Rng& rng) {
  std::uniform_int_distribution<int> md(m_lo, m_hi);
  std::uniform_int_distribution<int> td(-t_max, t_max);
  while (true) {
    DTCoordinates c;
    for (int i = 0; i < p.curve_count(); ++i) {
      const int m = md(rng);
      c.curves.push_back({m, m == 0 ? 0 : td(rng)});
    }
    if (validate_coords(p, c)) return c;
  }
}

struct RandomDiagram {
  PantsComplex pants;
  DTCoordinates coords;
};

/// The structural-invariant corpus: genus 2 and 3, alternating topologies,
/// including the two fixed genus-2 shapes.
inline std::vector<RandomDiagram> random_corpus(int count, int m_max, int t_max,
                                                std::uint64_t seed, int total_cap = 0) {
  std::mt19937_64 rng(seed);
  std::vector<RandomDiagram> out;
  while (static_cast<int>(out.size()) < count) {
    const int k = static_cast<int>(out.size());
    PantsComplex p = k % 4 == 0   ? theta_genus2(k % 8 == 0)
                     : k % 4 == 1 ? eyeglasses_genus2()
                     : k % 4 == 2 ? random_pants_complex(2, rng)
                                  : random_pants_complex(3, rng);
    DTCoordinates c = random_coords(p, 1, m_max, t_max, rng);
    if (total_cap > 0 && c.total_points() > total_cap) continue;
    out.push_back({std::move(p), std::move(c)});
  }
  return out;
}

inline DTCoordinates coords(std::initializer_list<CurveCoord> list) {
  return DTCoordinates{std::vector<CurveCoord>(list)};
}

}  // namespace heegaard::testing
