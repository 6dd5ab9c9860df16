#pragma once

#include <array>
#include <optional>
#include <vector>

#include "heegaard/validation.hpp"

namespace heegaard {

/// One boundary position of a pair of pants.
struct SlotRef {
  int pants = 0;
  int slot = 0;

  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

enum class Side { A = 0, B = 1 };

/// A decomposition curve and the two pants boundaries it glues.
///
/// `reversed` selects the numbering convention on side B (see
/// normal_coords.hpp, `side_b_position`); both settings give an
/// orientation-compatible gluing.
struct CurveGluing {
  SlotRef side_a;
  SlotRef side_b;
  bool reversed = false;

  const SlotRef& side(Side s) const { return s == Side::A ? side_a : side_b; }

  friend bool operator==(const CurveGluing&, const CurveGluing&) = default;
};

/// Owner of a slot: the curve glued there and which of its sides it is.
struct SlotOwner {
  int curve = -1;
  Side side = Side::A;

  friend bool operator==(const SlotOwner&, const SlotOwner&) = default;
};

/// Reference pants decomposition of a closed genus-g surface.
///
/// Pants are implicit (indices 0 .. 2g-3); curves carry the gluing data.
/// Construction does not validate; call validate_pants_complex first.
class PantsComplex {
 public:
  PantsComplex() = default;
  PantsComplex(int genus, std::vector<CurveGluing> curves);

  int genus() const { return genus_; }
  int pants_count() const { return 2 * genus_ - 2; }
  int curve_count() const { return static_cast<int>(curves_.size()); }
  const std::vector<CurveGluing>& curves() const { return curves_; }
  const CurveGluing& curve(int i) const { return curves_.at(i); }

  /// Curve glued at (pants, slot). Empty when the slot is unmatched or
  /// out of range.
  std::optional<SlotOwner> owner(int pants, int slot) const;
  std::optional<SlotOwner> owner(SlotRef s) const { return owner(s.pants, s.slot); }

  /// Curve index at each slot of a pants (-1 when unmatched).
  std::array<int, 3> pants_curves(int pants) const;

  friend bool operator==(const PantsComplex&, const PantsComplex&) = default;

 private:
  void index_slots();

  int genus_ = 0;
  std::vector<CurveGluing> curves_;
  std::vector<std::array<SlotOwner, 3>> slot_owner_;
};

/// Two distinct slots of one pants. The underlying curves may coincide.
struct AdjacentPair {
  int pants = 0;
  int slot_lo = 0;
  int slot_hi = 0;
  int curve_lo = 0;
  int curve_hi = 0;

  friend auto operator<=>(const AdjacentPair&, const AdjacentPair&) = default;
};

/// A middle curve plus one flanking slot on each of its two sides.
/// `left` sits in the pants of the middle curve's side A, `right` in the
/// pants of its side B.
struct AdjacentTriple {
  int middle = 0;
  SlotRef left;
  SlotRef right;

  friend auto operator<=>(const AdjacentTriple&, const AdjacentTriple&) = default;
};

ValidationResult validate_pants_complex(const PantsComplex& p);

/// Three pairs per pants, ordered by pants then slot pair.
std::vector<AdjacentPair> enumerate_adjacent_pairs(const PantsComplex& p);

/// Four triples per curve, ordered by middle curve then (left, right).
std::vector<AdjacentTriple> enumerate_adjacent_triples(const PantsComplex& p);

/// The two slots of a pants other than `slot`, ascending.
inline std::array<int, 2> other_slots(int slot) {
  switch (slot) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace heegaard
