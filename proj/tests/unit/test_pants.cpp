#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "heegaard/pants.hpp"

using namespace heegaard;
using namespace heegaard::testing;

TEST_CASE("theta and eyeglasses complexes validate") {
  CHECK(validate_pants_complex(theta_genus2()).ok());
  CHECK(validate_pants_complex(theta_genus2(true)).ok());
  CHECK(validate_pants_complex(eyeglasses_genus2()).ok());
  CHECK(validate_pants_complex(chain_genus3()).ok());
}

TEST_CASE("slot attached twice is rejected") {
  PantsComplex p(2, {{{0, 0}, {1, 0}, false}, {{0, 0}, {1, 1}, false}, {{0, 2}, {1, 2}, false}});
  const auto r = validate_pants_complex(p);
  CHECK(r.code == ValidationCode::SlotMatchedTwice);
  CHECK(r.message.find("slot matched twice") != std::string::npos);
}

TEST_CASE("other malformed complexes") {
  SUBCASE("wrong curve count") {
    PantsComplex p(2, {{{0, 0}, {1, 0}, false}, {{0, 1}, {1, 1}, false}});
    CHECK_FALSE(validate_pants_complex(p).ok());
  }
  SUBCASE("pants index out of range") {
    PantsComplex p(2, {{{0, 0}, {2, 0}, false}, {{0, 1}, {1, 1}, false}, {{0, 2}, {1, 2}, false}});
    CHECK(validate_pants_complex(p).code == ValidationCode::BadIndex);
  }
  SUBCASE("disconnected genus 3") {
    // P0,P1 theta-glued on two curves and P2,P3 likewise leaves two slots per side.
    PantsComplex p(3, {{{0, 0}, {1, 0}, false},
                       {{0, 1}, {1, 1}, false},
                       {{0, 2}, {1, 2}, false},
                       {{2, 0}, {3, 0}, false},
                       {{2, 1}, {3, 1}, false},
                       {{2, 2}, {3, 2}, false}});
    CHECK(validate_pants_complex(p).code == ValidationCode::Disconnected);
  }
}

TEST_CASE("adjacent pair counts") {
  CHECK(enumerate_adjacent_pairs(theta_genus2()).size() == 6);
  CHECK(enumerate_adjacent_pairs(chain_genus3()).size() == 12);
  const auto pairs = enumerate_adjacent_pairs(eyeglasses_genus2());
  const AdjacentPair& self = pairs.front();
  CHECK(self.pants == 0);
  CHECK(self.slot_lo == 0);
  CHECK(self.slot_hi == 1);
  CHECK(self.curve_lo == 0);
  CHECK(self.curve_hi == 0);
}

TEST_CASE("adjacent triple flanks") {
  CHECK(enumerate_adjacent_triples(theta_genus2()).size() == 12);
  CHECK(enumerate_adjacent_triples(chain_genus3()).size() == 24);

  PantsComplex p(2, {{{0, 0}, {1, 2}, false}, {{0, 1}, {1, 0}, false}, {{0, 2}, {1, 1}, false}});
  REQUIRE(validate_pants_complex(p).ok());
  std::set<std::pair<SlotRef, SlotRef>> flanks;
  for (const auto& t : enumerate_adjacent_triples(p))
    if (t.middle == 0) flanks.insert({t.left, t.right});
  const std::set<std::pair<SlotRef, SlotRef>> expected = {
      {{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 0}}, {{0, 2}, {1, 1}}};
  CHECK(flanks == expected);
}

TEST_CASE("pair and triple invariants on random complexes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int genus = 2 + trial % 3;
    const PantsComplex p = random_pants_complex(genus, rng);
    const auto pairs = enumerate_adjacent_pairs(p);
    const auto triples = enumerate_adjacent_triples(p);
    REQUIRE(pairs.size() == static_cast<std::size_t>(6 * genus - 6));
    REQUIRE(triples.size() == static_cast<std::size_t>(12 * genus - 12));
    CHECK(pairs == enumerate_adjacent_pairs(p));
    CHECK(triples == enumerate_adjacent_triples(p));

    std::set<std::pair<int, std::pair<int, int>>> pair_keys;
    for (const auto& a : pairs) pair_keys.insert({a.pants, {a.slot_lo, a.slot_hi}});
    for (const auto& t : triples) {
      const auto& g = p.curve(t.middle);
      for (const auto& [side, flank] : {std::pair{g.side_a, t.left}, std::pair{g.side_b, t.right}}) {
        CHECK(side.pants == flank.pants);
        CHECK(side.slot != flank.slot);
        const int lo = std::min(side.slot, flank.slot), hi = std::max(side.slot, flank.slot);
        CHECK(pair_keys.count({side.pants, {lo, hi}}) == 1);
      }
    }
  }
}
