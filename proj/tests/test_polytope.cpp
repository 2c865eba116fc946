#include "cusplat/polytope.hpp"

#include "doctest.h"

using namespace cusplat;

namespace {
Vec v3(long a, long b, long c) { return {Surd(Rat(a)), Surd(Rat(b)), Surd(Rat(c))}; }
}

TEST_CASE("box polytope, membership, barycenter") {
  auto P = box_polytope({{Surd(0), Surd(2)}, {Surd(0), Surd(1)}});
  CHECK(P.verts.size() == 4);
  CHECK(contains(P, {Surd(1), Surd(Rat(1, 2))}, true));
  CHECK(contains(P, {Surd(2), Surd(1)}));
  CHECK(!contains(P, {Surd(2), Surd(1)}, true));
  CHECK(!contains(P, {Surd(3), Surd(0)}));
  Vec b = barycenter(P.verts);
  CHECK(b[0] == Surd(1));
  CHECK(b[1] == Surd(Rat(1, 2)));
}

TEST_CASE("split keeps exact crossings and prunes non-vertices") {
  auto P = box_polytope({{Surd(0), Surd(2)}, {Surd(0), Surd(2)}});
  // Diagonal cut x + y = 1.
  Hyperplane h{{Surd(1), Surd(1)}, Surd(1)};
  auto [lo, hi] = split(P, h);
  REQUIRE(lo);
  REQUIRE(hi);
  CHECK(lo->verts.size() == 3);  // triangle (0,0),(1,0),(0,1)
  CHECK(hi->verts.size() == 5);
  for (const auto& v : lo->verts) CHECK((dot(h.a, v) - h.b).sign() <= 0);
  // No-split case.
  Hyperplane far{{Surd(1), Surd(0)}, Surd(10)};
  auto [l2, h2] = split(P, far);
  CHECK(l2);
  CHECK(!h2);
}

TEST_CASE("3d facet derivation matches the hull") {
  // Unit tetrahedron.
  std::vector<Vec> verts = {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)};
  auto faces = facets_3d(verts);
  CHECK(faces.size() == 4);
  // Every vertex satisfies the faces; the centroid is strictly inside.
  for (const auto& v : verts) CHECK(satisfies(faces, v));
  CHECK(satisfies(faces, barycenter(verts), true));
  // Round trip through vertex enumeration.
  auto back = vertices_from_faces(faces, 3);
  CHECK(back.size() == 4);
}

TEST_CASE("vertex enumeration from halfspaces") {
  auto P = box_polytope({{Surd(0), Surd(1)}, {Surd(0), Surd(1)}, {Surd(0), Surd(1)}});
  auto vs = vertices_from_faces(P.faces, 3);
  CHECK(vs.size() == 8);
}

TEST_CASE("product polytope") {
  auto A = box_polytope({{Surd(0), Surd(1)}});
  auto B = box_polytope({{Surd(0), Surd(2)}, {Surd(-1), Surd(1)}});
  auto P = product(A, B);
  CHECK(P.dim == 3);
  CHECK(P.verts.size() == 8);
  CHECK(P.faces.size() == 6);
}

TEST_CASE("linear solve over surds") {
  // x + y = 2, x - y = sqrt(7) has solution (1 + s/2, 1 - s/2).
  std::vector<Vec> M = {{Surd(1), Surd(1)}, {Surd(1), Surd(-1)}};
  Vec rhs = {Surd(2), Surd(Rat(0), Rat(1), 7)};
  auto x = solve_linear(M, rhs);
  REQUIRE(x);
  CHECK((*x)[0] == Surd(Rat(1), Rat(1, 2), 7));
  CHECK((*x)[1] == Surd(Rat(1), Rat(-1, 2), 7));
  std::vector<Vec> S = {{Surd(1), Surd(1)}, {Surd(2), Surd(2)}};
  CHECK(!solve_linear(S, {Surd(1), Surd(2)}));
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({v3(0, 0, 0), v3(1, 0, 0), v3(2, 0, 0)}) == 1);
  CHECK(affine_rank({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}) == 2);
  CHECK(affine_rank({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) == 3);
}
