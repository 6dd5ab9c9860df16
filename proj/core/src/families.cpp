#include "heegaard/families.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace heegaard {

namespace {

template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn fn) {
  const int n = std::max(1, threads);
  if (n == 1 || total < 2) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < n; ++w) {
    const std::uint64_t lo = total * w / n, hi = total * (w + 1) / n;
    pool.emplace_back([=, &fn] { fn(w, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

ScanRow row_for(const PantsComplex& p, const DTCoordinates& c, std::int64_t n) {
  const DrcReport r = check_double_rectangle_condition(p, c);
  ScanRow row;
  row.power = n;
  row.rc = r.rc.verdict;
  row.drc = r.verdict;
  row.complete_b = r.violations.empty() ||
                   r.violations.front().reason == RejectReason::UncoveredCombination;
  row.rectangles = r.rc.rectangles;
  row.double_rectangles = r.double_rectangles;
  row.vertices = c.total_points();
  return row;
}

class Box {
 public:
  Box(int curves, const SearchBox& box) : curves_(curves), box_(box) {
    base_ = static_cast<std::uint64_t>(box.m_max) * (2 * static_cast<std::uint64_t>(box.t_max) + 1);
  }

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < curves_; ++i) {
      if (base_ != 0 && s > std::numeric_limits<std::uint64_t>::max() / base_)
        return std::numeric_limits<std::uint64_t>::max();
      s *= base_;
    }
    return box_.m_max < 1 ? 0 : s;
  }

  // Curve 0 is the most significant digit, m before t.
  DTCoordinates decode(std::uint64_t index) const {
    DTCoordinates c;
    c.curves.resize(curves_);
    const std::uint64_t tw = 2 * static_cast<std::uint64_t>(box_.t_max) + 1;
    for (int i = curves_ - 1; i >= 0; --i) {
      const std::uint64_t digit = index % base_;
      index /= base_;
      c.curves[i].m = static_cast<int>(digit / tw) + 1;
      c.curves[i].t = static_cast<std::int64_t>(digit % tw) - box_.t_max;
    }
    return c;
  }

 private:
  int curves_;
  SearchBox box_;
  std::uint64_t base_;
};

void check_budget(const PantsComplex& p, const SearchBox& box) {
  const std::uint64_t n = candidate_count(p, box);
  if (n > kMaxCandidates)
    throw BudgetExceeded("search box has " + std::to_string(n) + " candidates, limit is " +
                         std::to_string(kMaxCandidates));
}

}  // namespace

std::vector<ScanRow> scan_twist_family(const PantsComplex& p, const DTCoordinates& c, int curve,
                                       std::int64_t n_lo, std::int64_t n_hi, int threads) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  if (auto r = validate_coords(p, c); !r) throw InputError(r.message);
  if (curve < 0 || curve >= p.curve_count())
    throw InputError("twist curve " + std::to_string(curve) + " out of range");
  if (n_hi < n_lo) return {};
  const std::uint64_t count = static_cast<std::uint64_t>(n_hi - n_lo) + 1;
  std::vector<ScanRow> rows(count);
  parallel_chunks(count, threads, [&](int, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      const std::int64_t n = n_lo + static_cast<std::int64_t>(k);
      rows[k] = row_for(p, apply_twist(c, curve, n), n);
    }
  });
  return rows;
}

std::uint64_t candidate_count(const PantsComplex& p, const SearchBox& box) {
  return Box(p.curve_count(), box).size();
}

EnumerationCensus enumerate_diagrams(const PantsComplex& p, const SearchBox& box, int threads) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  if (box.m_max < 0 || box.t_max < 0) throw InputError("search box bounds must be nonnegative");
  check_budget(p, box);
  const Box b(p.curve_count(), box);
  const std::uint64_t total = b.size();
  const int n = std::max(1, threads);
  std::vector<EnumerationCensus> parts(n);

  parallel_chunks(total, n, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    EnumerationCensus& part = parts[w];
    for (std::uint64_t k = lo; k < hi; ++k) {
      const DTCoordinates c = b.decode(k);
      ++part.candidates;
      if (!validate_coords(p, c)) continue;
      ++part.parity_valid;
      const Analysis a = analyze(p, c);
      ++part.built;
      if (!a.complete_b()) continue;
      ++part.certified;
      const DrcReport r = check_double_rectangle_condition(a);
      if (r.rc.verdict != Verdict::Accept) continue;
      ++part.rc_accepted;
      part.rc_list.push_back(c);
      if (r.verdict != Verdict::Accept) continue;
      ++part.drc_accepted;
      part.drc_list.push_back(c);
    }
  });

  EnumerationCensus out;
  out.box = box;
  for (auto& part : parts) {
    out.candidates += part.candidates;
    out.parity_valid += part.parity_valid;
    out.built += part.built;
    out.certified += part.certified;
    out.rc_accepted += part.rc_accepted;
    out.drc_accepted += part.drc_accepted;
    out.rc_list.insert(out.rc_list.end(), part.rc_list.begin(), part.rc_list.end());
    out.drc_list.insert(out.drc_list.end(), part.drc_list.begin(), part.drc_list.end());
  }
  std::sort(out.rc_list.begin(), out.rc_list.end());
  std::sort(out.drc_list.begin(), out.drc_list.end());
  return out;
}

FamilySearch search_rc_persistent_family(const PantsComplex& p, const SearchBox& box,
                                         std::int64_t n_lo, std::int64_t n_hi, int max_drc,
                                         int threads) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  check_budget(p, box);
  const Box b(p.curve_count(), box);
  const std::uint64_t total = b.size();
  const int n = std::max(1, threads);

  struct Part {
    std::optional<FamilyWitness> witness;
    std::uint64_t rc_bases = 0;
  };
  std::vector<Part> parts(n);
  parallel_chunks(total, n, [&](int w, std::uint64_t lo, std::uint64_t hi) {
    Part& part = parts[w];
    for (std::uint64_t k = lo; k < hi && !part.witness; ++k) {
      const DTCoordinates c = b.decode(k);
      if (!validate_coords(p, c)) continue;
      if (check_rectangle_condition(p, c).verdict != Verdict::Accept) continue;
      ++part.rc_bases;
      for (int curve = 0; curve < p.curve_count(); ++curve) {
        auto rows = scan_twist_family(p, c, curve, n_lo, n_hi);
        const bool rc_all = std::all_of(rows.begin(), rows.end(),
                                        [](const ScanRow& r) { return r.rc == Verdict::Accept; });
        const int drc = static_cast<int>(std::count_if(
            rows.begin(), rows.end(), [](const ScanRow& r) { return r.drc == Verdict::Accept; }));
        if (rc_all && drc <= max_drc) {
          part.witness = FamilyWitness{c, curve, n_lo, n_hi, std::move(rows), drc};
          break;
        }
      }
    }
  });

  FamilySearch out;
  out.candidates = total;
  for (auto& part : parts) {
    out.rc_bases += part.rc_bases;
    if (part.witness) {
      out.witness = std::move(part.witness);
      break;
    }
  }
  return out;
}

int marking_interval(int marking_m, int candidate_m, int candidate_index) {
  if (marking_m == 0) return 0;
  // Marking point j precedes iff (4j+1) * candidate_m <= (4k+3) * marking_m.
  const std::int64_t rhs = (4 * static_cast<std::int64_t>(candidate_index) + 3) * marking_m;
  std::int64_t preceding = 0;
  if (rhs >= candidate_m) preceding = (rhs - candidate_m) / (4 * static_cast<std::int64_t>(candidate_m)) + 1;
  preceding = std::min<std::int64_t>(preceding, marking_m);
  return static_cast<int>(preceding % marking_m);
}

ArcCensus connecting_arc_census(const PantsComplex& p, const DTCoordinates& marking,
                                const DTCoordinates& candidate) {
  if (auto r = validate_pants_complex(p); !r) throw InputError(r.message);
  // The marking only positions reference points, so its pants need not close up.
  if (marking.size() != p.curve_count())
    throw InputError("marking: " + validate_coords(p, marking).message);
  for (int i = 0; i < marking.size(); ++i) {
    if (marking[i].m < 0) throw InputError("marking: negative multiplicity on curve " + std::to_string(i));
    if (marking[i].m == 0 && marking[i].t != 0)
      throw InputError("marking: twist on unmet curve " + std::to_string(i));
  }
  if (auto r = validate_coords(p, candidate); !r) throw InputError("candidate: " + r.message);

  ArcCensus out;
  for (int q = 0; q < p.pants_count(); ++q) {
    const PantsArcPattern pat = expand_pants_arcs(pants_multiplicities(p, candidate, q));
    auto end_type = [&](const ArcEnd& e) {
      const SlotOwner o = *p.owner(q, e.slot);
      const auto& g = p.curve(o.curve);
      const int index = o.side == Side::A ? e.pos : side_a_position(g, candidate[o.curve], e.pos);
      return ArcEndType{e.slot, marking_interval(marking[o.curve].m, candidate[o.curve].m, index)};
    };
    out.arcs_per_pants[q] = pat.arc_count();
    for (const auto& arc : pat.arcs) {
      ArcType t;
      t.pants = q;
      t.ends = {end_type(arc.from), end_type(arc.to)};
      std::sort(t.ends.begin(), t.ends.end());
      t.same_slot = arc.same_boundary();
      ++out.types[t];
    }
  }
  return out;
}

}  // namespace heegaard
