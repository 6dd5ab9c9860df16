#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "heegaard/conditions.hpp"
#include "heegaard/normal_coords.hpp"
#include "heegaard/pants.hpp"

namespace heegaard {

struct ScanRow {
  std::int64_t power = 0;
  Verdict rc = Verdict::Reject;
  Verdict drc = Verdict::Reject;
  bool complete_b = false;
  int rectangles = 0;
  int double_rectangles = 0;
  int vertices = 0;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// One row per power n in [n_lo, n_hi] of apply_twist(c, curve, n).
std::vector<ScanRow> scan_twist_family(const PantsComplex& p, const DTCoordinates& c, int curve,
                                       std::int64_t n_lo, std::int64_t n_hi, int threads = 1);

struct SearchBox {
  int m_max = 1;
  int t_max = 0;
};

struct EnumerationCensus {
  SearchBox box;
  std::uint64_t candidates = 0;
  std::uint64_t parity_valid = 0;
  std::uint64_t built = 0;
  std::uint64_t certified = 0;
  std::uint64_t rc_accepted = 0;
  std::uint64_t drc_accepted = 0;
  std::vector<DTCoordinates> rc_list;
  std::vector<DTCoordinates> drc_list;
};

constexpr std::uint64_t kMaxCandidates = 10'000'000;

/// Number of coordinate vectors in the box, saturating at UINT64_MAX.
std::uint64_t candidate_count(const PantsComplex& p, const SearchBox& box);

/// All vectors with 1 <= m_i <= M and |t_i| <= T, filtered by parity, build,
/// pants certificate, RC and DRC. Throws BudgetExceeded above kMaxCandidates.
EnumerationCensus enumerate_diagrams(const PantsComplex& p, const SearchBox& box, int threads = 1);

struct FamilyWitness {
  DTCoordinates base;
  int curve = 0;
  std::int64_t n_lo = -10;
  std::int64_t n_hi = 10;
  std::vector<ScanRow> rows;
  int drc_accepted = 0;
};

struct FamilySearch {
  std::optional<FamilyWitness> witness;
  std::uint64_t candidates = 0;
  std::uint64_t rc_bases = 0;
};

/// First (in enumeration order) base diagram and curve whose twist family is
/// RC-accepting at every n in [n_lo, n_hi] with DRC accepted at most
/// `max_drc` times.
FamilySearch search_rc_persistent_family(const PantsComplex& p, const SearchBox& box,
                                         std::int64_t n_lo = -10, std::int64_t n_hi = 10,
                                         int max_drc = 3, int threads = 1);

/// Endpoint of a candidate arc: slot and the complementary interval of the
/// marking points on that curve containing it.
struct ArcEndType {
  int slot = 0;
  int interval = 0;

  friend auto operator<=>(const ArcEndType&, const ArcEndType&) = default;
};

struct ArcType {
  int pants = 0;
  std::array<ArcEndType, 2> ends{};  // sorted
  bool same_slot = false;

  friend auto operator<=>(const ArcType&, const ArcType&) = default;
};

struct ArcCensus {
  std::map<ArcType, int> types;
  std::map<int, int> arcs_per_pants;

  int distinct() const { return static_cast<int>(types.size()); }
};

/// Marking point k of a curve sits at (k + 1/4)/m_marking and candidate
/// point k at (k + 3/4)/m_candidate, both in side-A numbering; ties put the
/// marking point first.
int marking_interval(int marking_m, int candidate_m, int candidate_index);

ArcCensus connecting_arc_census(const PantsComplex& p, const DTCoordinates& marking,
                                const DTCoordinates& candidate);

}  // namespace heegaard
