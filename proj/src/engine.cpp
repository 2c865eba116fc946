#include "cusplat/engine.hpp"

#include <algorithm>

namespace cusplat {

Engine::Engine(LatticeData data) : L_(std::move(data)) {}

int DepthTable::orbit_of(const HeisPoint& p) const {
  for (const auto& tp : points)
    if (tp.p == p) return tp.orbit;
  return -1;
}

const DepthTable& Engine::depth_table() {
  if (table_) return *table_;
  DepthTable t;
  const Form& f = L_.form;
  for (const Int& n : represented_depths(L_.ring, Int(L_.depth_bound))) {
    auto pts = rational_points_of_depth(f, L_.stab, n);
    auto orbits = group_into_orbits(L_.stab, pts);
    // Match each orbit against the named representatives of this depth.
    for (const auto& orb : orbits) {
      const NamedRep* named = nullptr;
      for (const auto& r : L_.reps) {
        if (r.depth_declared != n) continue;
        bool member = false;
        for (const auto& m : orb.members)
          if (m.p == r.point) {
            member = true;
            break;
          }
        if (member) {
          if (named)
            throw std::runtime_error(L_.id +
                                     ": two named representatives in one "
                                     "orbit at depth " +
                                     n.str());
          named = &r;
        }
      }
      if (!named)
        throw std::runtime_error(L_.id + ": unnamed orbit at depth " +
                                 n.str());
      TableOrbit to;
      to.name = named->name;
      to.depth = n;
      to.rep = named->point;
      to.gen_word = named->gen_word;
      int oi = (int)t.orbits.size();
      for (const auto& m : orb.members) {
        auto w = L_.stab.orbit_word(named->point, m.p);
        if (!w) throw std::logic_error("witness from named rep lost");
        to.points.push_back((int)t.points.size());
        t.points.push_back({m.p, n, oi, *w});
      }
      t.orbits.push_back(std::move(to));
    }
  }
  // Every named representative must have been matched.
  for (const auto& r : L_.reps) {
    bool found = false;
    for (const auto& o : t.orbits)
      if (o.name == r.name) found = true;
    if (!found)
      throw std::runtime_error(L_.id + ": representative " + r.name +
                               " not found by enumeration");
  }
  table_ = std::move(t);
  return *table_;
}

RelationRow Engine::make_row(const std::string& acting, const TablePoint& tp) {
  const Form& f = L_.form;
  const DepthTable& t = *table_;
  RelationRow row;
  row.acting = acting;
  row.p = tp.p;
  row.p_orbit = t.orbits[tp.orbit].name;
  Word a_word{{L_.syms.id(acting), 1}};
  Word ap_word = concat(tp.witness, t.orbits[tp.orbit].gen_word);
  Mat A = L_.syms.matrix(acting);
  BoundaryPoint q = apply(f, A, BoundaryPoint::at(tp.p));
  Mat middle(L_.ring, f.n);
  if (q.inf) {
    row.q_inf = true;
    row.pp = "inf";
    middle = A * eval_word(ap_word, L_.syms, f);
  } else {
    Int dq = depth(f, q);
    if (dq > L_.depth_bound)
      throw std::logic_error("make_row called on a deep image");
    auto [r, w0] = L_.stab.reduce_to_domain(q.p);
    int oi = t.orbit_of(r);
    if (oi < 0)
      throw std::runtime_error(L_.id + ": reduced point missing from table: " +
                               r.str());
    // Witness from the target's named representative to q.
    Word member_witness;
    for (int pi : t.orbits[oi].points)
      if (t.points[pi].p == r) member_witness = t.points[pi].witness;
    Word W = concat(w0, member_witness);
    row.pp = t.orbits[oi].name;
    row.witness = W;
    Word app = t.orbits[oi].gen_word;
    middle = f.inverse(eval_word(app, L_.syms, f)) *
             f.inverse(eval_word(W, L_.syms, f)) * A *
             eval_word(ap_word, L_.syms, f);
    BoundaryPoint inf = BoundaryPoint::infinity(L_.ring);
    if (!(apply(f, middle, inf) == inf))
      throw std::logic_error("relation cycle does not close at infinity");
    row.relator = concat(inverse_word(app), concat(inverse_word(W),
                                                   concat(a_word, ap_word)));
  }
  if (q.inf)
    row.relator = concat(a_word, ap_word);
  row.middle = middle;
  std::string why;
  auto wp = L_.stab.matrix_to_word(middle, &why);
  if (wp) {
    row.wprime = *wp;
    row.relator = concat(inverse_word(*wp), row.relator);
    if (!verify_relator(row.relator, L_.syms, f))
      throw std::logic_error("extracted relator fails verification");
  } else {
    row.word_found = false;
  }
  return row;
}

std::vector<RelationRow> Engine::extract_relations() {
  if (rows_) return *rows_;
  const DepthTable& t = depth_table();
  std::vector<RelationRow> rows;
  for (const auto& acting : L_.acting) {
    Mat A = L_.syms.matrix(acting);
    for (const auto& tp : t.points) {
      BoundaryPoint q = apply(L_.form, A, BoundaryPoint::at(tp.p));
      if (!q.inf && depth(L_.form, q) > L_.depth_bound) continue;
      rows.push_back(make_row(acting, tp));
    }
  }
  rows_ = std::move(rows);
  return *rows_;
}

Presentation Engine::assemble_presentation() {
  auto rows = extract_relations();
  Presentation P;
  for (int g : L_.stab.gens) P.gens.push_back(g);
  for (const auto& [sym, def] : L_.aux_defs) P.gens.push_back(sym);
  // Cusp generators: distinct symbols appearing in the rep generator words.
  for (const auto& r : L_.reps)
    for (const auto& l : r.gen_word)
      if (std::find(P.gens.begin(), P.gens.end(), l.sym) == P.gens.end())
        P.gens.push_back(l.sym);
  std::vector<Word> rs = L_.stab.relators;
  for (const auto& [sym, def] : L_.aux_defs)
    rs.push_back(concat(Word{{sym, -1}}, def));
  for (const auto& row : rows) {
    if (!row.word_found)
      throw std::runtime_error("row without a stabilizer word; cannot "
                               "assemble the presentation");
    rs.push_back(row.relator);
  }
  P.relators = tidy_relators(std::move(rs), L_.syms);
  assert_relators_verify(P, L_.syms, L_.form, L_.id + " raw presentation");
  return P;
}

Presentation Engine::eliminated_presentation() {
  Presentation P = assemble_presentation();
  for (const auto& step : L_.elimination) {
    int g = L_.syms.id(step.gen);
    Word defining = step.defining.empty()
                        ? derive_defining_word(P, g, L_.syms)
                        : parse_word_tokens(step.defining, L_.syms);
    P = tietze_eliminate(P, g, defining, L_.syms, L_.form);
  }
  return P;
}

std::vector<RowCheck> Engine::verify_paper_rows() {
  const DepthTable& t = depth_table();
  const Form& f = L_.form;
  std::vector<RowCheck> checks;
  BoundaryPoint inf = BoundaryPoint::infinity(L_.ring);
  auto resolve = [&](const PointRef& pr) -> BoundaryPoint {
    if (pr.inf) return inf;
    if (!pr.ref.empty()) return BoundaryPoint::at(L_.rep(pr.ref).point);
    return BoundaryPoint::at(*pr.coords);
  };
  for (const auto& row : L_.rows) {
    RowCheck c;
    c.row = &row;
    c.annotated = !row.note.empty();
    try {
      Mat A = L_.syms.matrix(row.acting);
      BoundaryPoint p = resolve(row.p);
      BoundaryPoint pp = resolve(row.pp);
      // The pipeline must land on the same target orbit.
      BoundaryPoint q = apply(f, A, p);
      if (q.inf != pp.inf) {
        c.status = "target infinity mismatch";
        checks.push_back(c);
        continue;
      }
      if (!q.inf) {
        auto [r, w0] = L_.stab.reduce_to_domain(q.p);
        int oq = t.orbit_of(r);
        int op = pp.inf ? -2 : t.orbit_of(pp.p);
        if (op < 0 && !pp.inf) {
          // Coordinates of a non-representative: locate via reduction.
          auto [r2, w2] = L_.stab.reduce_to_domain(pp.p);
          op = t.orbit_of(r2);
        }
        if (oq < 0 || oq != op) {
          c.status = "target orbit mismatch";
          checks.push_back(c);
          continue;
        }
      }
      // Verbatim check: middle expression vs W'.
      Mat M = eval_word(parse_word_tokens(row.middle, L_.syms), L_.syms, f);
      Mat W = eval_word(parse_word_tokens(row.wprime, L_.syms), L_.syms, f);
      bool fixes_inf = apply(f, M, inf) == inf;
      if (equal_up_to_unit(M, W)) {
        c.ok = true;
        c.status = fixes_inf ? "ok" : "ok (middle does not fix infinity)";
      } else if (equal_up_to_unit(f.inverse(M), W)) {
        c.ok = true;
        c.status = "ok up to inversion of the middle expression";
      } else {
        c.status = "middle and W' disagree as matrices";
      }
    } catch (const std::exception& e) {
      c.status = std::string("error: ") + e.what();
    }
    checks.push_back(c);
  }
  return checks;
}

void Engine::verify_final_presentation() {
  for (const auto& r : L_.stab.relators)
    if (!verify_relator(r, L_.syms, L_.form))
      throw std::runtime_error(L_.id + ": stabilizer relator failed");
  for (const auto& r : L_.final_relators)
    if (!verify_relator(r, L_.syms, L_.form))
      throw std::runtime_error(L_.id + ": final relator failed: " +
                               fmt_word(r, L_.syms));
}

std::vector<Cell> Engine::decomposition() {
  const Form& f = L_.form;
  const auto& spec = L_.decomposition;
  if (spec.kind == "auto")
    return derive_cells_kd(f, L_.stab.prism, L_.cover_height, L_.balls);
  if (spec.kind == "split")
    return derive_cells_split(L_.stab.prism, spec.planes, spec.rules);
  // Explicit vertex lists (the d = 7 dissection).
  std::vector<Cell> cells;
  for (const auto& [pts, ball] : spec.cells) {
    Cell c;
    c.ball = ball;
    for (const auto& p : pts) c.poly.verts.push_back(to_affine(f, p));
    c.poly.dim = affine_dim(f);
    c.poly.faces = facets_3d(c.poly.verts);
    cells.push_back(std::move(c));
  }
  return cells;
}

CoverCertificate Engine::cover() {
  const Form& f = L_.form;
  // Height window: above the first invisible depth, at or below every listed
  // ball's threshold.
  Rat u2 = L_.cover_height * L_.cover_height;
  if (!(u2 > height_threshold_sq(Int(L_.depth_bound + 1))))
    throw std::runtime_error(L_.id + ": covering height too low");
  for (const auto& b : L_.balls)
    if (!(u2 <= height_threshold_sq(Int(b.depth))))
      throw std::runtime_error(L_.id + ": ball of depth " +
                               std::to_string(b.depth) +
                               " invisible at the covering height");
  return certify_cover(f, L_.stab.prism, L_.cover_height, L_.balls,
                       decomposition());
}

}  // namespace cusplat
