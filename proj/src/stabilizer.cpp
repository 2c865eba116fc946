#include "cusplat/stabilizer.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cusplat {

namespace {

// Heisenberg coordinates of a translation matrix (which must be one).
std::optional<HeisPoint> translation_coords(const Form& f, const Mat& m) {
  Ring r = f.ring;
  if (f.kind == FormKind::Symplectic) {
    if (!(m.at(0, 0) == Scalar::one(r)) || !(m.at(1, 1) == Scalar::one(r)) ||
        !m.at(1, 0).is_zero())
      return std::nullopt;
    return HeisPoint(m.at(0, 1));
  }
  for (int i = 0; i < 3; ++i)
    if (!(m.at(i, i) == Scalar::one(r))) return std::nullopt;
  if (!m.at(1, 0).is_zero() || !m.at(2, 0).is_zero() || !m.at(2, 1).is_zero())
    return std::nullopt;
  Scalar z = m.at(1, 2);
  if (!(m.at(0, 1) == -z.conj())) return std::nullopt;
  Scalar v = m.at(0, 2) * Rat(2) + Scalar(r, z.norm());
  if (!v.is_pure_imaginary()) return std::nullopt;
  HeisPoint p(z);
  switch (r.kind) {
    case RingKind::Integers:
      if (!v.is_zero()) return std::nullopt;
      break;
    case RingKind::Quadratic:
      p.t[0] = r.d == 1 ? Surd(v.c[1]) : Surd(Rat(0), v.im_coeff(), r.d);
      break;
    case RingKind::Quaternion:
      p.t = {Surd(v.c[1]), Surd(v.c[2]), Surd(v.c[3])};
      break;
  }
  return p;
}

}  // namespace

HeisPoint StabilizerData::heis_of(int sym) const {
  auto p = translation_coords(form, syms->matrix(sym));
  if (!p)
    throw std::logic_error("symbol " + syms->name(sym) +
                           " is not a Heisenberg translation");
  return *p;
}

void StabilizerData::build(const Form& f, const SymbolTable& table) {
  form = f;
  syms = &table;
  // Finite part: BFS over the rotation/conjugation generators, matrices keyed
  // modulo unit scalars. Shortest words win; ties by lexicographic key.
  finite_.clear();
  std::map<std::string, size_t> seen;
  Mat id = Mat::identity(f.ring, f.n);
  finite_.push_back({canonical_up_to_unit(id), {}});
  seen[finite_[0].canonical.key()] = 0;
  for (size_t head = 0; head < finite_.size(); ++head) {
    Mat cur = finite_[head].canonical;
    Word cur_word = finite_[head].word;
    for (int g : finite_gens)
      for (int e : {1, -1}) {
        Mat step = e > 0 ? syms->matrix(g) : f.inverse(syms->matrix(g));
        Mat nxt = canonical_up_to_unit(cur * step);
        Word w = concat(cur_word, Word{{g, e}});
        auto it = seen.find(nxt.key());
        if (it == seen.end()) {
          seen[nxt.key()] = finite_.size();
          finite_.push_back({nxt, w});
        }
      }
    if (finite_.size() > 4096)
      throw std::logic_error("finite subgroup unexpectedly large");
  }
  basis_pts_.clear();
  for (int sym : horizontal_basis) basis_pts_.push_back(heis_of(sym));
  vertical_pts_.clear();
  for (int sym : vertical_gens) vertical_pts_.push_back(heis_of(sym));
}

std::optional<std::vector<Int>> StabilizerData::solve_horizontal(
    const Scalar& zeta) const {
  size_t k = basis_pts_.size();
  if (k == 0) return zeta.is_zero() ? std::make_optional(std::vector<Int>{})
                                    : std::nullopt;
  // Coefficient columns of the basis zetas; 1, 2 or 4 active coordinates.
  int coords = form.ring.kind == RingKind::Quaternion ? 4
               : form.ring.kind == RingKind::Quadratic ? 2
                                                       : 1;
  std::vector<Vec> M(coords, Vec(k, Surd(0)));
  Vec rhs(coords, Surd(0));
  for (int i = 0; i < coords; ++i) {
    rhs[i] = Surd(zeta.c[i]);
    for (size_t j = 0; j < k; ++j) M[i][j] = Surd(basis_pts_[j].zeta.c[i]);
  }
  if ((int)k != coords) {
    // Over- or under-determined systems do not occur in the shipped data.
    throw std::logic_error("horizontal basis size mismatch");
  }
  auto sol = solve_linear(M, rhs);
  if (!sol) return std::nullopt;
  std::vector<Int> n(k);
  for (size_t j = 0; j < k; ++j) {
    Rat v = (*sol)[j].rational();
    if (!is_integer(v)) return std::nullopt;
    n[j] = num(v);
  }
  return n;
}

std::optional<Word> StabilizerData::translation_word(const HeisPoint& p) const {
  auto n = solve_horizontal(p.zeta);
  if (!n) return std::nullopt;
  Word horiz;
  for (size_t j = 0; j < n->size(); ++j)
    if ((*n)[j] != 0) horiz.push_back({horizontal_basis[j], (int)(*n)[j]});
  // Vertical discrepancy after the fixed-order horizontal product.
  HeisPoint acc(Scalar::zero(form.ring));
  for (size_t j = 0; j < n->size(); ++j) {
    HeisPoint step = basis_pts_[j];
    Int e = (*n)[j];
    HeisPoint powed(Scalar::zero(form.ring));
    HeisPoint unit = e >= 0 ? step : heis_inv(step);
    for (Int i = 0; i < boost::multiprecision::abs(e); ++i)
      powed = heis_mul(powed, unit);
    acc = heis_mul(acc, powed);
  }
  if (!(acc.zeta == p.zeta)) return std::nullopt;
  Word vert;
  std::array<Surd, 3> delta;
  for (int i = 0; i < 3; ++i) delta[i] = p.t[i] - acc.t[i];
  // Express the central part in the vertical generators (disjoint axes).
  for (size_t vj = 0; vj < vertical_pts_.size(); ++vj) {
    const HeisPoint& vp = vertical_pts_[vj];
    for (int axis = 0; axis < 3; ++axis) {
      if (vp.t[axis].is_zero()) continue;
      Surd q = delta[axis] / vp.t[axis];
      if (!q.is_rational() || !is_integer(q.rational())) continue;
      Int m = num(q.rational());
      if (m != 0) vert.push_back({vertical_gens[vj], (int)m});
      delta[axis] = Surd(0);
    }
  }
  for (int i = 0; i < 3; ++i)
    if (!delta[i].is_zero()) return std::nullopt;
  Word w = concat(vert, horiz);
  // Exact check: translations compose without unit slack.
  if (!(eval_word(w, *syms, form) == translation_matrix(form, p)))
    return std::nullopt;
  return w;
}

std::optional<Word> StabilizerData::matrix_to_word(const Mat& g,
                                                   std::string* why) const {
  if (!form.is_in_group(g)) {
    if (why) *why = "matrix is not in U(H, O_E)";
    return std::nullopt;
  }
  BoundaryPoint inf = BoundaryPoint::infinity(form.ring);
  if (!(apply(form, g, inf) == inf)) {
    if (why) *why = "matrix does not fix infinity";
    return std::nullopt;
  }
  std::vector<Scalar> us = units(form.ring);
  for (const auto& fe : finite_) {
    Mat x = g * form.inverse(fe.canonical);
    // Peel a unit scalar so the remainder is a genuine translation matrix.
    const Scalar& corner = x.at(form.n - 1, form.n - 1);
    if (!corner.is_unit()) continue;
    Mat xn = x.scaled_right(corner.inverse());
    auto p = translation_coords(form, xn);
    if (!p) continue;
    auto tw = translation_word(*p);
    if (!tw) continue;
    Word w = concat(*tw, fe.word);
    if (equal_up_to_unit(eval_word(w, *syms, form), g)) return w;
  }
  if (why) *why = "no finite-part/lattice decomposition found";
  return std::nullopt;
}

bool StabilizerData::point_in_prism(const HeisPoint& p) const {
  return contains(prism, to_affine(form, p));
}

std::pair<HeisPoint, Word> StabilizerData::reduce_to_domain(
    const HeisPoint& p) const {
  struct Candidate {
    HeisPoint r;
    Word gamma;
    std::string key;
  };
  std::optional<Candidate> best;
  auto consider = [&](const HeisPoint& r, const Word& gamma) {
    std::string k = word_key(gamma, *syms);
    if (!best || k < best->key) best = Candidate{r, gamma, k};
  };
  for (const auto& fe : finite_) {
    BoundaryPoint moved = apply(form, fe.canonical, BoundaryPoint::at(p));
    if (moved.inf) continue;
    HeisPoint p1 = moved.p;
    // Integer translations bringing the horizontal part into the base.
    std::vector<std::vector<Int>> offsets;
    size_t k = basis_pts_.size();
    {
      // Rational solve of the basis system to center the search box.
      int coords = form.ring.kind == RingKind::Quaternion ? 4
                   : form.ring.kind == RingKind::Quadratic ? 2
                                                           : 1;
      std::vector<Vec> M(coords, Vec(k, Surd(0)));
      Vec rhs(coords, Surd(0));
      for (int i = 0; i < coords; ++i) {
        rhs[i] = Surd(p1.zeta.c[i]);
        for (size_t j = 0; j < k; ++j) M[i][j] = Surd(basis_pts_[j].zeta.c[i]);
      }
      auto sol = solve_linear(M, rhs);
      if (!sol) continue;
      std::vector<std::pair<Int, Int>> ranges;
      for (size_t j = 0; j < k; ++j) {
        Int base = rat_floor((*sol)[j].rational());
        ranges.push_back({-base - 1, -base + 1});
      }
      std::vector<Int> cur(k);
      std::function<void(size_t)> enumerate = [&](size_t j) {
        if (j == k) {
          offsets.push_back(cur);
          return;
        }
        for (Int v = ranges[j].first; v <= ranges[j].second; ++v) {
          cur[j] = v;
          enumerate(j + 1);
        }
      };
      enumerate(0);
    }
    for (const auto& off : offsets) {
      Word horiz;
      HeisPoint tr(Scalar::zero(form.ring));
      for (size_t j = 0; j < k; ++j) {
        if (off[j] == 0) continue;
        horiz.push_back({horizontal_basis[j], (int)off[j]});
        HeisPoint unit = off[j] > 0 ? basis_pts_[j] : heis_inv(basis_pts_[j]);
        for (Int i = 0; i < boost::multiprecision::abs(off[j]); ++i)
          tr = heis_mul(tr, unit);
      }
      HeisPoint p2 = heis_mul(tr, p1);
      // Base membership of the horizontal part.
      Vec zc;
      Vec aff = to_affine(form, p2);
      for (int i = 0; i < base.dim; ++i) zc.push_back(aff[i]);
      if (!contains(base, zc)) continue;
      // Vertical offsets landing inside the prism bounds.
      std::vector<std::vector<Int>> voffsets{{}};
      for (size_t vj = 0; vj < vertical_pts_.size(); ++vj) {
        std::vector<std::vector<Int>> next;
        for (const auto& pref : voffsets)
          for (Int m = -3; m <= 3; ++m) {
            auto e = pref;
            e.push_back(m);
            next.push_back(e);
          }
        voffsets = next;
      }
      for (const auto& voff : voffsets) {
        Word vert;
        HeisPoint p3 = p2;
        for (size_t vj = 0; vj < vertical_pts_.size(); ++vj) {
          if (voff[vj] == 0) continue;
          vert.push_back({vertical_gens[vj], (int)voff[vj]});
          for (int a = 0; a < 3; ++a)
            p3.t[a] += vertical_pts_[vj].t[a] * Surd(Rat(voff[vj]));
        }
        if (!point_in_prism(p3)) continue;
        Word gamma = concat(vert, concat(horiz, fe.word));
        consider(p3, gamma);
      }
    }
  }
  if (!best)
    throw std::runtime_error("reduce_to_domain: no translate found for " +
                             p.str());
  // gamma maps p to r; the witness maps r back to p.
  Word witness = inverse_word(best->gamma);
  return {best->r, free_reduce(witness)};
}

std::optional<Word> StabilizerData::orbit_word(const HeisPoint& p,
                                               const HeisPoint& q) const {
  std::optional<std::pair<Word, std::string>> best;
  for (const auto& fe : finite_) {
    BoundaryPoint moved = apply(form, fe.canonical, BoundaryPoint::at(p));
    if (moved.inf) continue;
    HeisPoint tr = heis_mul(q, heis_inv(moved.p));
    if (!tr.is_E_rational()) continue;
    auto tw = translation_word(tr);
    if (!tw) continue;
    Word w = concat(*tw, fe.word);
    std::string k = word_key(w, *syms);
    if (!best || k < best->second) best = {w, k};
  }
  if (!best) return std::nullopt;
  return best->first;
}

}  // namespace cusplat
