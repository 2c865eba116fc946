#pragma once

#include "cusplat/heisenberg.hpp"
#include "cusplat/polytope.hpp"

namespace cusplat {

// Fourth power of the isometric-sphere radius of g: 4 / |g_{n+1,1}|^2.
// Elements fixing infinity are rejected.
Rat sphere_radius4(const Form& f, const Mat& g);

// u(n)^2 = 4/n: horoball intersections at height u exist iff u^2 <= 4/n.
Rat height_threshold_sq(const Int& n);

// Affine cell of the horosphere slice with an assigned covering ball.
struct Cell {
  Polytope poly;
  int ball = -1;
};

struct CellCheck {
  int cell = -1;
  std::vector<Surd> margins;  // r4 - xcygan4(vertex, center), all > 0
};

struct UnionLeaf {
  std::vector<Vec> verts;
  Vec barycenter;
  int cell = -1;  // covering cell containing the leaf
};

struct CoverCertificate {
  bool valid = false;
  std::string failure;
  Rat height;
  std::vector<CyganBall> balls;
  std::vector<Cell> cells;
  std::vector<CellCheck> cell_checks;
  std::vector<Hyperplane> union_planes;
  std::vector<UnionLeaf> leaves;
};

// Exact margins of every cell vertex against the assigned ball at height u.
// Throws CellRejected with the offending vertex when a margin fails.
struct CellRejected : std::runtime_error {
  Vec vertex;
  explicit CellRejected(Vec v)
      : std::runtime_error("cell vertex escapes its ball"), vertex(std::move(v)) {}
};
std::vector<Surd> certify_cell(const Form& f, const Cell& c,
                               const CyganBall& ball, const Rat& u);

// Exact union check: splits P by every cell facet hyperplane and verifies the
// barycenter of each leaf lies in at least one closed cell. On failure the
// witness barycenter is reported.
struct UnionResult {
  bool covered = false;
  Vec witness;
  std::vector<Hyperplane> planes;
  std::vector<UnionLeaf> leaves;
};
UnionResult certify_union(const std::vector<Cell>& cells, const Polytope& P);

// Full covering certificate; the decomposition must index into `balls`.
CoverCertificate certify_cover(const Form& f, const Polytope& prism,
                               const Rat& u, const std::vector<CyganBall>& balls,
                               const std::vector<Cell>& cells);

// Greedy axis-aligned decomposition: bisects the prism until every piece has
// all vertices strictly inside a single ball. Used for the lattices whose
// cell data the paper leaves to the reader.
std::vector<Cell> derive_cells_kd(const Form& f, const Polytope& prism,
                                  const Rat& u,
                                  const std::vector<CyganBall>& balls,
                                  int max_depth = 14);

// Decomposition by a fixed hyperplane list with first-match sign rules
// (the quaternionic quarter-prism split).
struct SignRule {
  std::vector<std::pair<int, int>> signs;  // (plane index, required side +-1)
  int ball;
};
std::vector<Cell> derive_cells_split(const Polytope& prism,
                                     const std::vector<Hyperplane>& planes,
                                     const std::vector<SignRule>& rules);

}  // namespace cusplat
