#pragma once

#include <optional>

#include "cusplat/numeric.hpp"

namespace cusplat {

using Vec = std::vector<Surd>;

Surd dot(const Vec& a, const Vec& b);

// a . x <= b
struct Halfspace {
  Vec a;
  Surd b;
};

// a . x = b
struct Hyperplane {
  Vec a;
  Surd b;
};

// Convex polytope carried in both representations. The invariant
// conv(verts) = intersection(faces) is established at construction time
// (verified for hand-written data) and preserved by split().
struct Polytope {
  int dim = 0;
  std::vector<Vec> verts;
  std::vector<Halfspace> faces;
};

Vec barycenter(const std::vector<Vec>& pts);
bool contains(const Polytope& P, const Vec& x, bool strict = false);
bool satisfies(const std::vector<Halfspace>& faces, const Vec& x,
               bool strict = false);

int affine_rank(const std::vector<Vec>& pts);

// Canonical form of (a, b): first nonzero coefficient scaled to +-1.
Hyperplane canonical_hyperplane(Vec a, Surd b);
bool same_hyperplane(const Hyperplane& h1, const Hyperplane& h2);

// Cuts P by h. Returns the two closed sides (a.x <= b first); a side whose
// vertex set is empty is returned as nullopt. New vertices come from segment
// crossings; the lists are pruned back to true vertices afterwards.
std::pair<std::optional<Polytope>, std::optional<Polytope>> split(
    const Polytope& P, const Hyperplane& h);

// Removes duplicates and points whose active constraint set has rank < dim.
void prune_vertices(Polytope& P);

// Supporting halfspaces of a full-dimensional 3D vertex set.
std::vector<Halfspace> facets_3d(const std::vector<Vec>& verts);

// Vertices of the intersection of halfspaces (exhaustive dim-subset solve;
// meant for small systems in dimension <= 4).
std::vector<Vec> vertices_from_faces(const std::vector<Halfspace>& faces,
                                     int dim);

// Axis-aligned product [lo_i, hi_i] as a polytope.
Polytope box_polytope(const std::vector<std::pair<Surd, Surd>>& bounds);

// Product polytope (concatenated coordinates).
Polytope product(const Polytope& A, const Polytope& B);

// Solves the square linear system M x = rhs over the surd field; nullopt when
// singular.
std::optional<Vec> solve_linear(std::vector<Vec> M, Vec rhs);

}  // namespace cusplat
