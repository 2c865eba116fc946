#include "cusplat/covering.hpp"

#include <algorithm>
#include <functional>

namespace cusplat {

Rat sphere_radius4(const Form& f, const Mat& g) {
  const Scalar& corner = g.at(f.n - 1, 0);
  if (corner.is_zero())
    throw std::domain_error("isometric sphere undefined: g fixes infinity");
  return Rat(4) / corner.norm();
}

Rat height_threshold_sq(const Int& n) {
  if (n <= 0) throw std::domain_error("depth must be positive");
  return Rat(4, n);
}

std::vector<Surd> certify_cell(const Form& f, const Cell& c,
                               const CyganBall& ball, const Rat& u) {
  std::vector<Surd> margins;
  Vec center = to_affine(f, ball.center);
  for (const auto& v : c.poly.verts) {
    Surd m = Surd(ball.r4) - xcygan4_affine(f, v, u, center, Rat(0));
    if (m.sign() <= 0) throw CellRejected(v);
    margins.push_back(std::move(m));
  }
  return margins;
}

UnionResult certify_union(const std::vector<Cell>& cells, const Polytope& P) {
  UnionResult res;
  // Distinct facet hyperplanes of all cells.
  for (const auto& c : cells)
    for (const auto& face : c.poly.faces) {
      Hyperplane h = canonical_hyperplane(face.a, face.b);
      bool dup = false;
      for (const auto& seen : res.planes)
        if (same_hyperplane(seen, h)) {
          dup = true;
          break;
        }
      if (!dup) res.planes.push_back(std::move(h));
    }
  bool failed = false;
  std::function<void(const Polytope&, size_t)> rec = [&](const Polytope& Q,
                                                         size_t idx) {
    if (failed) return;
    if (idx == res.planes.size()) {
      UnionLeaf leaf;
      leaf.verts = Q.verts;
      leaf.barycenter = barycenter(Q.verts);
      for (size_t ci = 0; ci < cells.size(); ++ci)
        if (satisfies(cells[ci].poly.faces, leaf.barycenter)) {
          leaf.cell = (int)ci;
          break;
        }
      if (leaf.cell < 0) {
        failed = true;
        res.witness = leaf.barycenter;
        return;
      }
      res.leaves.push_back(std::move(leaf));
      return;
    }
    auto [lo, hi] = split(Q, res.planes[idx]);
    if (lo && hi) {
      rec(*lo, idx + 1);
      rec(*hi, idx + 1);
    } else {
      rec(Q, idx + 1);
    }
  };
  rec(P, 0);
  res.covered = !failed;
  return res;
}

CoverCertificate certify_cover(const Form& f, const Polytope& prism,
                               const Rat& u, const std::vector<CyganBall>& balls,
                               const std::vector<Cell>& cells) {
  CoverCertificate cert;
  cert.height = u;
  cert.balls = balls;
  cert.cells = cells;
  // Radii must follow the depth law r^4 = 4/n.
  for (const auto& b : balls) {
    if (b.r4 != height_threshold_sq(Int(b.depth))) {
      cert.failure = "ball radius does not match its depth";
      return cert;
    }
  }
  for (size_t ci = 0; ci < cells.size(); ++ci) {
    const Cell& c = cells[ci];
    if (c.ball < 0 || c.ball >= (int)balls.size()) {
      cert.failure = "cell with unassigned ball";
      return cert;
    }
    for (const auto& v : c.poly.verts)
      if (!contains(prism, v)) {
        cert.failure = "cell vertex escapes the prism";
        return cert;
      }
    try {
      CellCheck check;
      check.cell = (int)ci;
      check.margins = certify_cell(f, c, balls[c.ball], u);
      cert.cell_checks.push_back(std::move(check));
    } catch (const CellRejected& e) {
      cert.failure = "cell " + std::to_string(ci) + " rejected at vertex";
      return cert;
    }
  }
  UnionResult ur = certify_union(cells, prism);
  cert.union_planes = ur.planes;
  cert.leaves = ur.leaves;
  if (!ur.covered) {
    cert.failure = "union check failed; uncovered point found";
    return cert;
  }
  cert.valid = true;
  return cert;
}

std::vector<Cell> derive_cells_kd(const Form& f, const Polytope& prism,
                                  const Rat& u,
                                  const std::vector<CyganBall>& balls,
                                  int max_depth) {
  std::vector<Vec> centers;
  for (const auto& b : balls) centers.push_back(to_affine(f, b.center));
  std::vector<Cell> out;
  std::function<void(const Polytope&, int)> rec = [&](const Polytope& Q,
                                                      int depth_left) {
    for (size_t bi = 0; bi < balls.size(); ++bi) {
      bool all_in = true;
      for (const auto& v : Q.verts) {
        Surd m = Surd(balls[bi].r4) -
                 xcygan4_affine(f, v, u, centers[bi], Rat(0));
        if (m.sign() <= 0) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        out.push_back({Q, (int)bi});
        return;
      }
    }
    if (depth_left == 0)
      throw std::runtime_error("kd decomposition: depth limit hit");
    // Bisect the widest axis.
    int dim = Q.dim;
    int axis = 0;
    Surd best_width(0);
    Surd mid(0);
    for (int a = 0; a < dim; ++a) {
      Surd lo = Q.verts[0][a], hi = Q.verts[0][a];
      for (const auto& v : Q.verts) {
        if (v[a] < lo) lo = v[a];
        if (v[a] > hi) hi = v[a];
      }
      Surd w = hi - lo;
      if (w > best_width) {
        best_width = w;
        axis = a;
        mid = (lo + hi) / Surd(2);
      }
    }
    if (best_width.sign() == 0)
      throw std::runtime_error("kd decomposition: degenerate piece");
    Vec normal(dim, Surd(0));
    normal[axis] = Surd(1);
    auto [lo, hi] = split(Q, Hyperplane{normal, mid});
    if (!lo || !hi) throw std::runtime_error("kd decomposition: bad split");
    rec(*lo, depth_left - 1);
    rec(*hi, depth_left - 1);
  };
  rec(prism, max_depth);
  return out;
}

std::vector<Cell> derive_cells_split(const Polytope& prism,
                                     const std::vector<Hyperplane>& planes,
                                     const std::vector<SignRule>& rules) {
  std::vector<Cell> out;
  std::function<void(const Polytope&, size_t, std::vector<int>&)> rec =
      [&](const Polytope& Q, size_t idx, std::vector<int>& signs) {
        if (idx == planes.size()) {
          Vec bary = barycenter(Q.verts);
          // Resolve weak sides by the barycenter.
          std::vector<int> eff = signs;
          for (size_t i = 0; i < planes.size(); ++i)
            if (eff[i] == 0)
              eff[i] = (dot(planes[i].a, bary) - planes[i].b).sign();
          for (const auto& rule : rules) {
            bool match = true;
            for (const auto& [pi, side] : rule.signs)
              if (eff[pi] != side) {
                match = false;
                break;
              }
            if (match) {
              out.push_back({Q, rule.ball});
              return;
            }
          }
          throw std::runtime_error("split decomposition: no rule matched");
        }
        auto [lo, hi] = split(Q, planes[idx]);
        if (lo && hi) {
          signs[idx] = -1;
          rec(*lo, idx + 1, signs);
          signs[idx] = 1;
          rec(*hi, idx + 1, signs);
          signs[idx] = 0;
        } else {
          signs[idx] = 0;
          rec(Q, idx + 1, signs);
        }
      };
  std::vector<int> signs(planes.size(), 0);
  rec(prism, 0, signs);
  return out;
}

}  // namespace cusplat
