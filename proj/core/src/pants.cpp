#include "heegaard/pants.hpp"

#include <numeric>
#include <sstream>

namespace heegaard {

const char* to_string(ValidationCode code) {
  switch (code) {
    case ValidationCode::Ok: return "ok";
    case ValidationCode::BadIndex: return "index out of range";
    case ValidationCode::SlotMatchedTwice: return "slot matched twice";
    case ValidationCode::SlotUnmatched: return "slot unmatched";
    case ValidationCode::CountMismatch: return "counts inconsistent with genus";
    case ValidationCode::Disconnected: return "disconnected gluing graph";
    case ValidationCode::ParityViolation: return "parity violation";
    case ValidationCode::TwistOnUnmetCurve: return "twist on unmet curve";
    case ValidationCode::NegativeMultiplicity: return "negative multiplicity";
  }
  return "unknown";
}

PantsComplex::PantsComplex(int genus, std::vector<CurveGluing> curves)
    : genus_(genus), curves_(std::move(curves)) {
  index_slots();
}

void PantsComplex::index_slots() {
  slot_owner_.assign(genus_ >= 1 ? pants_count() : 0, {});
  for (int i = 0; i < curve_count(); ++i) {
    for (Side s : {Side::A, Side::B}) {
      const SlotRef& at = curves_[i].side(s);
      if (at.pants < 0 || at.pants >= static_cast<int>(slot_owner_.size()) ||
          at.slot < 0 || at.slot > 2)
        continue;
      SlotOwner& o = slot_owner_[at.pants][at.slot];
      if (o.curve < 0) o = {i, s};
    }
  }
}

std::optional<SlotOwner> PantsComplex::owner(int pants, int slot) const {
  if (pants < 0 || pants >= static_cast<int>(slot_owner_.size()) || slot < 0 || slot > 2)
    return std::nullopt;
  const SlotOwner& o = slot_owner_[pants][slot];
  if (o.curve < 0) return std::nullopt;
  return o;
}

std::array<int, 3> PantsComplex::pants_curves(int pants) const {
  std::array<int, 3> out{-1, -1, -1};
  for (int s = 0; s < 3; ++s)
    if (auto o = owner(pants, s)) out[s] = o->curve;
  return out;
}

namespace {

std::string slot_name(const SlotRef& s) {
  std::ostringstream os;
  os << "(pants " << s.pants << ", slot " << s.slot << ")";
  return os.str();
}

}  // namespace

ValidationResult validate_pants_complex(const PantsComplex& p) {
  if (p.genus() < 2) {
    return ValidationResult::failure(ValidationCode::CountMismatch,
                                     "genus must be at least 2, got " + std::to_string(p.genus()));
  }
  const int npants = p.pants_count();

  for (int i = 0; i < p.curve_count(); ++i) {
    for (Side s : {Side::A, Side::B}) {
      const SlotRef& at = p.curve(i).side(s);
      if (at.pants < 0 || at.pants >= npants || at.slot < 0 || at.slot > 2) {
        return ValidationResult::failure(
            ValidationCode::BadIndex,
            "curve " + std::to_string(i) + " attaches to nonexistent " + slot_name(at));
      }
    }
  }

  std::vector<std::array<int, 3>> uses(npants, {-1, -1, -1});
  for (int i = 0; i < p.curve_count(); ++i) {
    for (Side s : {Side::A, Side::B}) {
      const SlotRef& at = p.curve(i).side(s);
      int& u = uses[at.pants][at.slot];
      if (u >= 0) {
        return ValidationResult::failure(
            ValidationCode::SlotMatchedTwice,
            "slot matched twice: " + slot_name(at) + " used by curve " + std::to_string(u) +
                " and curve " + std::to_string(i));
      }
      u = i;
    }
  }

  for (int q = 0; q < npants; ++q)
    for (int s = 0; s < 3; ++s)
      if (uses[q][s] < 0)
        return ValidationResult::failure(ValidationCode::SlotUnmatched,
                                         "slot unmatched: " + slot_name({q, s}));

  if (p.curve_count() != 3 * p.genus() - 3) {
    return ValidationResult::failure(
        ValidationCode::CountMismatch,
        "expected " + std::to_string(3 * p.genus() - 3) + " curves for genus " +
            std::to_string(p.genus()) + ", got " + std::to_string(p.curve_count()));
  }

  std::vector<int> parent(npants);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : p.curves()) parent[find(c.side_a.pants)] = find(c.side_b.pants);
  for (int q = 1; q < npants; ++q) {
    if (find(q) != find(0)) {
      return ValidationResult::failure(
          ValidationCode::Disconnected,
          "disconnected gluing graph: pants " + std::to_string(q) + " not reachable from pants 0");
    }
  }
  return ValidationResult::success();
}

std::vector<AdjacentPair> enumerate_adjacent_pairs(const PantsComplex& p) {
  std::vector<AdjacentPair> out;
  out.reserve(3 * p.pants_count());
  for (int q = 0; q < p.pants_count(); ++q) {
    const auto curves = p.pants_curves(q);
    for (int lo = 0; lo < 3; ++lo)
      for (int hi = lo + 1; hi < 3; ++hi) out.push_back({q, lo, hi, curves[lo], curves[hi]});
  }
  return out;
}

std::vector<AdjacentTriple> enumerate_adjacent_triples(const PantsComplex& p) {
  std::vector<AdjacentTriple> out;
  out.reserve(4 * p.curve_count());
  for (int b = 0; b < p.curve_count(); ++b) {
    const auto& g = p.curve(b);
    for (int l : other_slots(g.side_a.slot))
      for (int r : other_slots(g.side_b.slot))
        out.push_back({b, {g.side_a.pants, l}, {g.side_b.pants, r}});
  }
  return out;
}

}  // namespace heegaard
