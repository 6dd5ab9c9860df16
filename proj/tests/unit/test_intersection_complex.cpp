#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "heegaard/conditions.hpp"
#include "heegaard/intersection_complex.hpp"

using namespace heegaard;
using namespace heegaard::testing;

namespace {

void check_structure(const PantsComplex& p, const DTCoordinates& c) {
  const auto x = build_complex(p, c);
  const auto faces = trace_faces(x);
  const int V = x.vertex_count(), E = x.edge_count(), F = static_cast<int>(faces.faces.size());
  CHECK(V - E + F == 2 - 2 * p.genus());
  CHECK(E == 2 * V);
  CHECK(faces.total_length() == 2 * E);
  CHECK(faces.count(FaceClass::Bigon) == 0);
  int excess = 0;
  for (const auto& f : faces.faces) {
    REQUIRE(f.length() % 2 == 0);
    CHECK(f.length() >= 4);
    excess += f.length() - 4;
    for (int k = 0; k < f.length(); ++k)
      CHECK(x.dart_system(f.darts[k]) != x.dart_system(f.darts[(k + 1) % f.length()]));
  }
  CHECK(excess == 8 * p.genus() - 8);

  const auto adec = decompose_minus_a(x, faces);
  CHECK(static_cast<int>(adec.components.size()) == p.pants_count());
  for (const auto& comp : adec.components) {
    CHECK(comp.euler == -1);
    CHECK(comp.circles.size() == 3);
  }
}

}  // namespace

TEST_CASE("theta with all m = 2") {
  const auto p = theta_genus2();
  const auto c = coords({{2, 0}, {2, 0}, {2, 0}});
  const auto x = build_complex(p, c);
  CHECK(x.vertex_count() == 6);
  CHECK(x.edge_count() == 12);
  const auto faces = trace_faces(x);
  CHECK(faces.faces.size() == 4);
  check_structure(p, c);
}

TEST_CASE("unmet curve refuses to build") {
  CHECK_THROWS_AS(build_complex(theta_genus2(), coords({{2, 0}, {2, 0}, {0, 0}})), InputError);
  CHECK_THROWS_AS(build_complex(theta_genus2(), coords({{1, 0}, {1, 0}, {1, 0}})), InputError);
}

TEST_CASE("dart rotation and twins") {
  const auto x = build_complex(eyeglasses_genus2(), coords({{4, 1}, {2, 0}, {2, -1}}));
  for (int d = 0; d < x.dart_count(); ++d) {
    CHECK(x.twin(x.twin(d)) == d);
    CHECK(x.twin(d) != d);
    CHECK(x.dart_system(x.twin(d)) == x.dart_system(d));
    CHECK(IntersectionComplex::next(IntersectionComplex::prev(d)) == d);
    CHECK(IntersectionComplex::is_a_dart(d) != IntersectionComplex::is_a_dart(IntersectionComplex::next(d)));
  }
}

TEST_CASE("structural invariants on fixed shapes") {
  check_structure(theta_genus2(), coords({{4, 1}, {2, 0}, {2, -1}}));
  check_structure(theta_genus2(true), coords({{3, 2}, {5, -1}, {2, 1}}));
  check_structure(eyeglasses_genus2(), coords({{6, 0}, {2, 0}, {3, 1}}));
  check_structure(chain_genus3(), coords({{2, 1}, {2, 0}, {3, -2}, {1, 4}, {2, 0}, {4, 3}}));
}

TEST_CASE("structural invariants on a random corpus") {
  for (const auto& d : random_corpus(200, 8, 5, 2024)) check_structure(d.pants, d.coords);
}

TEST_CASE("B component counts") {
  SUBCASE("single long curve") {
    const auto x = build_complex(theta_genus2(), coords({{1, -1}, {1, -1}, {2, 0}}));
    const auto b = trace_b_components(x);
    CHECK(b.curves.size() == 1);
    CHECK(b.curves[0].edges.size() == 4);
  }
  SUBCASE("three components") {
    const auto x = build_complex(theta_genus2(), coords({{1, -1}, {1, -1}, {4, -1}}));
    CHECK(trace_b_components(x).curves.size() == 3);
  }
  SUBCASE("twisting preserves the count") {
    std::mt19937_64 rng(5);
    for (const auto& d : random_corpus(40, 6, 3, 99)) {
      const auto base = trace_b_components(build_complex(d.pants, d.coords)).curves.size();
      for (int curve = 0; curve < d.pants.curve_count(); ++curve)
        for (int n : {-3, 1, 4})
          CHECK(trace_b_components(build_complex(d.pants, apply_twist(d.coords, curve, n))).curves.size() ==
                base);
    }
  }
  SUBCASE("every B edge in exactly one component") {
    const auto x = build_complex(eyeglasses_genus2(), coords({{4, 0}, {2, -1}, {4, 0}}));
    const auto b = trace_b_components(x);
    int total = 0;
    for (const auto& cv : b.curves) total += static_cast<int>(cv.edges.size());
    CHECK(total == x.vertex_count());
    for (int e = 0; e < x.edge_count(); ++e)
      CHECK((b.edge_curve[e] == -1) == (x.edge(e).system == System::A));
  }
}

TEST_CASE("decompose_minus_b certificates") {
  auto reason = [](const PantsComplex& p, const DTCoordinates& c) {
    const auto a = analyze(p, c);
    int chi = 0;
    for (const auto& comp : a.bdec.decomposition.components) chi += comp.euler;
    CHECK(chi == 2 - 2 * p.genus());
    return a.bdec.certificate;
  };
  const auto genus1 = reason(theta_genus2(), coords({{2, 0}, {2, 0}, {2, 0}}));
  CHECK_FALSE(genus1.accept);
  CHECK(genus1.reason.find("genus-1 complement") != std::string::npos);

  const auto annulus = reason(theta_genus2(), coords({{2, 0}, {2, 0}, {4, 0}}));
  CHECK_FALSE(annulus.accept);
  CHECK(annulus.reason.find("annulus") != std::string::npos);

  const auto complete = reason(theta_genus2(), coords({{1, -1}, {1, -1}, {4, -1}}));
  CHECK(complete.accept);
  REQUIRE(complete.b_pants.has_value());
  CHECK(validate_pants_complex(*complete.b_pants).ok());
  CHECK(complete.b_pants->genus() == 2);
}
