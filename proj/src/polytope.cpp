#include "cusplat/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cusplat {

Surd dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("dot dim mismatch");
  Surd s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec barycenter(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::domain_error("barycenter of empty set");
  Vec s(pts[0].size(), Surd(0));
  for (const auto& p : pts)
    for (size_t i = 0; i < s.size(); ++i) s[i] += p[i];
  Surd inv = Surd(Rat((long)pts.size())).inverse();
  for (auto& x : s) x *= inv;
  return s;
}

bool satisfies(const std::vector<Halfspace>& faces, const Vec& x, bool strict) {
  for (const auto& f : faces) {
    Surd slack = f.b - dot(f.a, x);
    if (strict ? slack.sign() <= 0 : slack.sign() < 0) return false;
  }
  return true;
}

bool contains(const Polytope& P, const Vec& x, bool strict) {
  return satisfies(P.faces, x, strict);
}

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<Vec> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    Vec r(pts[i].size());
    for (size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  // Gaussian elimination rank.
  size_t rank = 0, cols = pts[0].size();
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].sign() == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Surd inv = rows[rank][col].inverse();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].sign() == 0) continue;
      Surd factor = rows[r][col] * inv;
      for (size_t j = col; j < cols; ++j)
        rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return (int)rank;
}

Hyperplane canonical_hyperplane(Vec a, Surd b) {
  for (const auto& x : a) {
    int s = x.sign();
    if (s == 0) continue;
    Surd inv = x.inverse();
    if (s < 0) inv = -inv;
    for (auto& y : a) y *= inv;
    b *= inv;
    return {std::move(a), std::move(b)};
  }
  throw std::domain_error("degenerate hyperplane");
}

bool same_hyperplane(const Hyperplane& h1, const Hyperplane& h2) {
  if (h1.a.size() != h2.a.size() || !(h1.b == h2.b)) return false;
  for (size_t i = 0; i < h1.a.size(); ++i)
    if (!(h1.a[i] == h2.a[i])) return false;
  return true;
}

std::pair<std::optional<Polytope>, std::optional<Polytope>> split(
    const Polytope& P, const Hyperplane& h) {
  std::vector<int> side(P.verts.size());
  bool any_neg = false, any_pos = false;
  for (size_t i = 0; i < P.verts.size(); ++i) {
    side[i] = (dot(h.a, P.verts[i]) - h.b).sign();
    any_neg |= side[i] < 0;
    any_pos |= side[i] > 0;
  }
  auto side_polytope = [&](int keep) -> std::optional<Polytope> {
    Polytope Q;
    Q.dim = P.dim;
    for (size_t i = 0; i < P.verts.size(); ++i)
      if (side[i] * keep >= 0) Q.verts.push_back(P.verts[i]);
    // Crossing points of all mixed-sign segments: the hull of kept vertices
    // plus crossings is exactly the closed side.
    for (size_t i = 0; i < P.verts.size(); ++i)
      for (size_t j = i + 1; j < P.verts.size(); ++j) {
        if (side[i] * side[j] >= 0) continue;
        Surd fi = dot(h.a, P.verts[i]) - h.b;
        Surd fj = dot(h.a, P.verts[j]) - h.b;
        Surd t = fi / (fi - fj);  // in (0,1)
        Vec x(P.verts[i].size());
        for (size_t k = 0; k < x.size(); ++k)
          x[k] = P.verts[i][k] + t * (P.verts[j][k] - P.verts[i][k]);
        Q.verts.push_back(std::move(x));
      }
    if (Q.verts.empty()) return std::nullopt;
    Q.faces = P.faces;
    if (keep < 0)
      Q.faces.push_back({h.a, h.b});
    else {
      Vec na(h.a.size());
      for (size_t k = 0; k < na.size(); ++k) na[k] = -h.a[k];
      Q.faces.push_back({std::move(na), -h.b});
    }
    prune_vertices(Q);
    return Q;
  };
  std::optional<Polytope> lo, hi;
  if (any_neg || !any_pos) lo = side_polytope(-1);
  if (any_pos || !any_neg) hi = side_polytope(+1);
  return {std::move(lo), std::move(hi)};
}

void prune_vertices(Polytope& P) {
  std::vector<Vec> keep;
  for (const auto& v : P.verts) {
    bool dup = false;
    for (const auto& u : keep) {
      bool eq = true;
      for (size_t i = 0; i < v.size() && eq; ++i) eq = u[i] == v[i];
      if (eq) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    // Active constraints must pin the point: rank of tight face normals = dim.
    std::vector<Vec> active;
    bool feasible = true;
    for (const auto& f : P.faces) {
      int s = (f.b - dot(f.a, v)).sign();
      if (s < 0) {
        feasible = false;
        break;
      }
      if (s == 0) active.push_back(f.a);
    }
    if (!feasible) continue;
    // Rank of the normal vectors (linear, not affine).
    std::vector<Vec> rows = active;
    size_t rank = 0, cols = v.size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
      size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][col].sign() == 0) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      Surd inv = rows[rank][col].inverse();
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col].sign() == 0) continue;
        Surd factor = rows[r][col] * inv;
        for (size_t j = col; j < cols; ++j)
          rows[r][j] -= factor * rows[rank][j];
      }
      ++rank;
    }
    if (rank == (size_t)P.dim) keep.push_back(v);
  }
  if (!keep.empty()) P.verts = std::move(keep);
}

std::vector<Halfspace> facets_3d(const std::vector<Vec>& verts) {
  if (affine_rank(verts) != 3)
    throw std::domain_error("facets_3d needs a full-dimensional vertex set");
  std::vector<Halfspace> out;
  std::vector<Hyperplane> seen;
  size_t n = verts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Vec u(3), w(3);
        for (int c = 0; c < 3; ++c) {
          u[c] = verts[j][c] - verts[i][c];
          w[c] = verts[k][c] - verts[i][c];
        }
        Vec nrm = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
                   u[0] * w[1] - u[1] * w[0]};
        if (nrm[0].sign() == 0 && nrm[1].sign() == 0 && nrm[2].sign() == 0)
          continue;
        Surd b = dot(nrm, verts[i]);
        bool le = true, ge = true;
        for (const auto& v : verts) {
          int s = (dot(nrm, v) - b).sign();
          if (s > 0) le = false;
          if (s < 0) ge = false;
        }
        if (!le && !ge) continue;
        Vec a = nrm;
        Surd bb = b;
        if (!le) {
          for (auto& x : a) x = -x;
          bb = -bb;
        }
        Hyperplane ch = canonical_hyperplane(a, bb);
        bool dup = false;
        for (const auto& s : seen)
          if (same_hyperplane(s, ch)) {
            dup = true;
            break;
          }
        if (dup) continue;
        seen.push_back(ch);
        // Keep the inequality side that contains the vertex set.
        if (le)
          out.push_back({nrm, b});
        else {
          Vec na(3);
          for (int c = 0; c < 3; ++c) na[c] = -nrm[c];
          out.push_back({std::move(na), -b});
        }
      }
  return out;
}

std::optional<Vec> solve_linear(std::vector<Vec> M, Vec rhs) {
  size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && M[pivot][col].sign() == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[col], M[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    Surd inv = M[col][col].inverse();
    for (size_t j = col; j < n; ++j) M[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].sign() == 0) continue;
      Surd factor = M[r][col];
      for (size_t j = col; j < n; ++j) M[r][j] -= factor * M[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

std::vector<Vec> vertices_from_faces(const std::vector<Halfspace>& faces,
                                     int dim) {
  std::vector<Vec> out;
  size_t n = faces.size();
  std::vector<size_t> idx(dim);
  auto try_combo = [&](const std::vector<size_t>& combo) {
    std::vector<Vec> M;
    Vec rhs;
    for (size_t i : combo) {
      M.push_back(faces[i].a);
      rhs.push_back(faces[i].b);
    }
    auto x = solve_linear(std::move(M), std::move(rhs));
    if (!x) return;
    if (!satisfies(faces, *x)) return;
    for (const auto& v : out) {
      bool eq = true;
      for (size_t i = 0; i < v.size() && eq; ++i) eq = v[i] == (*x)[i];
      if (eq) return;
    }
    out.push_back(std::move(*x));
  };
  std::vector<size_t> combo;
  std::function<void(size_t)> rec = [&](size_t start) {
    if ((int)combo.size() == dim) {
      try_combo(combo);
      return;
    }
    for (size_t i = start; i + (dim - combo.size()) <= n; ++i) {
      combo.push_back(i);
      rec(i + 1);
      combo.pop_back();
    }
  };
  rec(0);
  return out;
}

Polytope box_polytope(const std::vector<std::pair<Surd, Surd>>& bounds) {
  Polytope P;
  P.dim = (int)bounds.size();
  size_t n = bounds.size();
  for (size_t i = 0; i < n; ++i) {
    Vec a(n, Surd(0)), na(n, Surd(0));
    a[i] = Surd(1);
    na[i] = Surd(-1);
    P.faces.push_back({a, bounds[i].second});
    P.faces.push_back({na, -bounds[i].first});
  }
  size_t count = 1;
  for (size_t i = 0; i < n; ++i) count *= 2;
  for (size_t m = 0; m < count; ++m) {
    Vec v(n);
    for (size_t i = 0; i < n; ++i)
      v[i] = (m >> i) & 1 ? bounds[i].second : bounds[i].first;
    P.verts.push_back(std::move(v));
  }
  return P;
}

Polytope product(const Polytope& A, const Polytope& B) {
  Polytope P;
  P.dim = A.dim + B.dim;
  for (const auto& fa : A.faces) {
    Vec a = fa.a;
    a.resize(P.dim, Surd(0));
    P.faces.push_back({std::move(a), fa.b});
  }
  for (const auto& fb : B.faces) {
    Vec a(P.dim, Surd(0));
    for (int i = 0; i < B.dim; ++i) a[A.dim + i] = fb.a[i];
    P.faces.push_back({std::move(a), fb.b});
  }
  for (const auto& va : A.verts)
    for (const auto& vb : B.verts) {
      Vec v = va;
      v.insert(v.end(), vb.begin(), vb.end());
      P.verts.push_back(std::move(v));
    }
  return P;
}

}  // namespace cusplat
