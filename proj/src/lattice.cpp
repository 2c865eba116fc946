#include "cusplat/lattice.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "json.hpp"

namespace cusplat {

using nlohmann::json;

namespace {

Surd parse_surd_json(const json& j, int d) {
  return parse_surd(j.get<std::string>(), d);
}

HeisPoint parse_point(const json& j, Ring ring) {
  int d = ring.surd();
  HeisPoint p(parse_scalar(j.at("z").get<std::string>(), ring));
  if (ring.kind == RingKind::Quaternion) {
    const auto& arr = j.at("t");
    for (int i = 0; i < 3; ++i)
      p.t[i] = parse_surd_json(arr.at(i), 0);
  } else if (ring.kind == RingKind::Quadratic) {
    p.t[0] = parse_surd_json(j.at("t"), d);
  }
  return p;
}

PointRef parse_point_ref(const json& j, Ring ring) {
  PointRef r;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf")
      r.inf = true;
    else
      r.ref = s;
  } else {
    r.coords = parse_point(j, ring);
  }
  return r;
}

Mat parse_matrix(const json& j, Ring ring, int dim) {
  Mat m(ring, dim);
  if ((int)j.size() != dim) throw std::invalid_argument("matrix row count");
  for (int i = 0; i < dim; ++i) {
    if ((int)j.at(i).size() != dim)
      throw std::invalid_argument("matrix column count");
    for (int k = 0; k < dim; ++k)
      m.at(i, k) = parse_scalar(j.at(i).at(k).get<std::string>(), ring);
  }
  return m;
}

std::vector<std::string> parse_tokens(const json& j) {
  std::vector<std::string> out;
  for (const auto& t : j) out.push_back(t.get<std::string>());
  return out;
}

// Supporting halfspaces of 1D / 2D vertex sets (3D has its own routine).
std::vector<Halfspace> facets_low_dim(const std::vector<Vec>& verts, int dim) {
  std::vector<Halfspace> out;
  if (dim == 1) {
    Surd lo = verts[0][0], hi = verts[0][0];
    for (const auto& v : verts) {
      if (v[0] < lo) lo = v[0];
      if (v[0] > hi) hi = v[0];
    }
    out.push_back({{Surd(1)}, hi});
    out.push_back({{Surd(-1)}, -lo});
    return out;
  }
  if (dim != 2) throw std::logic_error("facets_low_dim expects dim 1 or 2");
  std::vector<Hyperplane> seen;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Surd dx = verts[j][0] - verts[i][0], dy = verts[j][1] - verts[i][1];
      if (dx.sign() == 0 && dy.sign() == 0) continue;
      Vec nrm = {dy, -dx};
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
      if (!dup) {
        seen.push_back(ch);
        out.push_back({a, bb});
      }
    }
  return out;
}

void verify_polytope(const Polytope& P, const std::string& what) {
  for (const auto& v : P.verts)
    if (!satisfies(P.faces, v))
      throw std::runtime_error(what + ": vertex violates a face");
  if (P.dim <= 4) {
    auto from_faces = vertices_from_faces(P.faces, P.dim);
    auto key = [](const Vec& v) {
      std::string s;
      for (const auto& x : v) s += x.str() + ";";
      return s;
    };
    std::set<std::string> a, b;
    for (const auto& v : P.verts) a.insert(key(v));
    for (const auto& v : from_faces) b.insert(key(v));
    if (a != b)
      throw std::runtime_error(what + ": V- and H-representations disagree");
  }
}

}  // namespace

const NamedRep& LatticeData::rep(const std::string& name) const {
  for (const auto& r : reps)
    if (r.name == name) return r;
  throw std::out_of_range("unknown representative " + name);
}

std::string data_dir() {
  const char* env = std::getenv("CUSPLAT_DATA");
  if (env && *env) return env;
  return CUSPLAT_DATA_DIR;
}

std::vector<std::string> available_lattices() {
  return {"psl2z", "d1", "d3", "d7", "hurwitz"};
}

LatticeData load_lattice(const std::string& id_or_path) {
  namespace fs = std::filesystem;
  std::string path = id_or_path;
  if (!fs::exists(path)) path = data_dir() + "/" + id_or_path + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lattice data " + path);
  json j = json::parse(in, nullptr, true, /*allow comments*/ true);
  if (j.at("schema").get<std::string>() != "cusplat/1")
    throw std::runtime_error("unsupported schema in " + path);

  LatticeData L;
  L.id = j.at("id").get<std::string>();
  std::string rk = j.at("ring").at("kind").get<std::string>();
  if (rk == "integers")
    L.ring = {RingKind::Integers, 0};
  else if (rk == "quadratic")
    L.ring = {RingKind::Quadratic, j.at("ring").at("d").get<int>()};
  else if (rk == "quaternion")
    L.ring = {RingKind::Quaternion, 0};
  else
    throw std::runtime_error("bad ring kind " + rk);
  std::string fk = j.at("form").at("kind").get<std::string>();
  L.form.kind = fk == "symplectic" ? FormKind::Symplectic : FormKind::HermitianJ;
  L.form.ring = L.ring;
  L.form.n = j.at("form").at("dim").get<int>();

  int d = L.ring.surd();

  // Base polytope and prism.
  Polytope base;
  {
    const auto& bj = j.at("base");
    for (const auto& vj : bj.at("verts")) {
      Vec v;
      for (const auto& xj : vj) v.push_back(parse_surd_json(xj, d));
      base.verts.push_back(std::move(v));
    }
    base.dim = (int)base.verts[0].size();
    if (bj.contains("faces")) {
      for (const auto& fj : bj.at("faces")) {
        Vec a;
        for (const auto& xj : fj.at("a")) a.push_back(parse_surd_json(xj, d));
        base.faces.push_back({std::move(a), parse_surd_json(fj.at("b"), d)});
      }
    } else if (base.dim <= 2) {
      base.faces = facets_low_dim(base.verts, base.dim);
    } else if (base.dim == 3) {
      base.faces = facets_3d(base.verts);
    } else {
      throw std::runtime_error("base faces required in dimension 4");
    }
    verify_polytope(base, L.id + " base");
  }
  Polytope prism = base;
  {
    std::vector<std::pair<Surd, Surd>> vb;
    for (const auto& bj : j.at("vertical"))
      vb.push_back({parse_surd_json(bj.at(0), d), parse_surd_json(bj.at(1), d)});
    if (!vb.empty()) prism = product(base, box_polytope(vb));
  }

  // Symbols: stabilizer generators, auxiliary symbols, cusp generators.
  const auto& sj = j.at("stabilizer");
  for (const auto& gj : sj.at("generators")) {
    std::string name = gj.at("sym").get<std::string>();
    Mat m(L.ring, L.form.n);
    if (gj.contains("matrix")) {
      m = parse_matrix(gj.at("matrix"), L.ring, L.form.n);
    } else if (gj.contains("translation")) {
      m = translation_matrix(L.form, parse_point(gj.at("translation"), L.ring));
    } else if (gj.contains("rotation")) {
      m = rotation_matrix(
          L.form, parse_scalar(gj.at("rotation").get<std::string>(), L.ring));
    } else if (gj.contains("conj")) {
      m = conj_matrix(L.form,
                      parse_scalar(gj.at("conj").get<std::string>(), L.ring));
    } else {
      throw std::runtime_error("generator " + name + " without realization");
    }
    if (!L.form.is_in_group(m))
      throw std::runtime_error("stabilizer generator " + name +
                               " is not in the group");
    L.syms.add(name, m);
    L.stab.gens.push_back(L.syms.id(name));
  }
  if (sj.contains("aux")) {
    for (const auto& aj : sj.at("aux")) {
      std::string name = aj.at("sym").get<std::string>();
      Word w = parse_word_tokens(parse_tokens(aj.at("word")), L.syms);
      Mat m = eval_word(w, L.syms, L.form);
      L.syms.add(name, m);
      L.aux_defs.push_back({L.syms.id(name), w});
    }
  }
  for (const auto& gj : j.at("generators")) {
    std::string name = gj.at("sym").get<std::string>();
    Mat m = parse_matrix(gj.at("matrix"), L.ring, L.form.n);
    if (!L.form.is_in_group(m))
      throw std::runtime_error("generator " + name + " is not in the group");
    L.syms.add(name, m);
  }

  // Stabilizer wiring.
  L.stab.form = L.form;
  for (const auto& t : parse_tokens(sj.at("horizontal_basis")))
    L.stab.horizontal_basis.push_back(L.syms.id(t));
  if (sj.contains("vertical_gens"))
    for (const auto& t : parse_tokens(sj.at("vertical_gens")))
      L.stab.vertical_gens.push_back(L.syms.id(t));
  if (sj.contains("finite_gens"))
    for (const auto& t : parse_tokens(sj.at("finite_gens")))
      L.stab.finite_gens.push_back(L.syms.id(t));
  L.stab.prism = prism;
  L.stab.base = base;
  L.stab.build(L.form, L.syms);
  L.declared_finite_order = sj.value("finite_order", 1);
  if (L.stab.finite_order() != L.declared_finite_order)
    throw std::runtime_error(
        L.id + ": finite subgroup order " +
        std::to_string(L.stab.finite_order()) + " != declared " +
        std::to_string(L.declared_finite_order));
  for (const auto& rj : sj.at("relators")) {
    Word w = parse_word_tokens(parse_tokens(rj), L.syms);
    if (!verify_relator(w, L.syms, L.form))
      throw std::runtime_error(L.id + ": stabilizer relator fails: " +
                               fmt_word(w, L.syms));
    L.stab.relators.push_back(std::move(w));
  }
  // Stabilizer generators must fix infinity.
  BoundaryPoint inf = BoundaryPoint::infinity(L.ring);
  for (int g : L.stab.gens)
    if (!(apply(L.form, L.syms.matrix(g), inf) == inf))
      throw std::runtime_error("stabilizer generator moves infinity");

  // Named representatives.
  for (const auto& pj : j.at("points")) {
    NamedRep r;
    r.name = pj.at("name").get<std::string>();
    r.point = parse_point(pj, L.ring);
    r.depth_declared = pj.at("depth").get<int>();
    for (const auto& xj : pj.at("lift"))
      r.lift.push_back(parse_scalar(xj.get<std::string>(), L.ring));
    r.gen_word = parse_word_tokens(parse_tokens(pj.at("gen")), L.syms);
    if (!r.point.is_E_rational())
      throw std::runtime_error(r.name + ": representative not E-rational");
    BoundaryPoint bp = BoundaryPoint::at(r.point);
    if (depth(L.form, bp) != r.depth_declared)
      throw std::runtime_error(r.name + ": depth mismatch");
    // Shipped lift: integral, primitive, and a lift of the point.
    if (!is_primitive(r.lift))
      throw std::runtime_error(r.name + ": lift is not primitive");
    auto canon = primitive_lift(L.form, bp);
    auto shipped = primitive_lift_vec(L.form, r.lift);
    if (!(canon == shipped))
      throw std::runtime_error(r.name + ": lift does not match the point");
    Mat A = eval_word(r.gen_word, L.syms, L.form);
    if (!L.form.is_in_group(A))
      throw std::runtime_error(r.name + ": generator not in the group");
    if (!(apply(L.form, A, inf) == bp))
      throw std::runtime_error(r.name + ": generator does not map inf to it");
    L.reps.push_back(std::move(r));
  }

  L.acting = parse_tokens(j.at("acting"));
  for (const auto& a : L.acting) L.syms.id(a);  // must resolve

  // Covering data.
  const auto& cj = j.at("covering");
  L.depth_bound = j.at("depth_bound").get<int>();
  L.cover_height = parse_rat(cj.at("height").get<std::string>());
  for (const auto& bj : cj.at("balls")) {
    CyganBall b;
    b.center = parse_point(bj, L.ring);
    b.depth = bj.at("depth").get<int>();
    b.r4 = Rat(4, b.depth);
    if (depth(L.form, BoundaryPoint::at(b.center)) != b.depth)
      throw std::runtime_error(L.id + ": ball center depth mismatch");
    L.balls.push_back(std::move(b));
  }
  {
    const auto& dj = cj.at("decomposition");
    L.decomposition.kind = dj.at("kind").get<std::string>();
    if (L.decomposition.kind == "cells") {
      std::map<std::string, HeisPoint> named;
      for (auto it = dj.at("points").begin(); it != dj.at("points").end(); ++it)
        named.emplace(it.key(), parse_point(it.value(), L.ring));
      for (const auto& cjj : dj.at("cells")) {
        std::vector<HeisPoint> verts;
        for (const auto& vj : cjj.at("verts")) verts.push_back(named.at(vj));
        L.decomposition.cells.push_back({verts, cjj.at("ball").get<int>()});
      }
    } else if (L.decomposition.kind == "split") {
      for (const auto& pjj : dj.at("planes")) {
        Vec a;
        for (const auto& xj : pjj.at("a")) a.push_back(parse_surd_json(xj, d));
        L.decomposition.planes.push_back(
            canonical_hyperplane(a, parse_surd_json(pjj.at("b"), d)));
      }
      for (const auto& rjj : dj.at("rules")) {
        SignRule rule;
        rule.ball = rjj.at("ball").get<int>();
        for (const auto& sjj : rjj.at("signs"))
          rule.signs.push_back({sjj.at(0).get<int>(), sjj.at(1).get<int>()});
        L.decomposition.rules.push_back(std::move(rule));
      }
    } else if (L.decomposition.kind != "auto") {
      throw std::runtime_error("bad decomposition kind");
    }
  }

  // Relation tables.
  if (j.contains("tables")) {
    for (const auto& rj : j.at("tables")) {
      PaperRow row;
      row.table = rj.at("table").get<std::string>();
      row.acting = rj.at("A").get<std::string>();
      L.syms.id(row.acting);
      row.p = parse_point_ref(rj.at("p"), L.ring);
      row.pp = parse_point_ref(rj.at("pp"), L.ring);
      row.middle = parse_tokens(rj.at("middle"));
      row.wprime = parse_tokens(rj.at("wprime"));
      row.note = rj.value("note", "");
      L.rows.push_back(std::move(row));
    }
  }

  if (j.contains("elimination")) {
    for (const auto& ej : j.at("elimination")) {
      EliminationStep step;
      step.gen = ej.at("eliminate").get<std::string>();
      if (ej.contains("defining")) step.defining = parse_tokens(ej.at("defining"));
      L.elimination.push_back(std::move(step));
    }
  }

  if (j.contains("final")) {
    const auto& fj = j.at("final");
    if (fj.contains("aliases"))
      for (auto it = fj.at("aliases").begin(); it != fj.at("aliases").end(); ++it)
        L.syms.add_alias(it.key(), L.syms.id(it.value().get<std::string>()));
    L.final_gens = parse_tokens(fj.at("gens"));
    for (const auto& g : L.final_gens) L.syms.id(g);
    for (const auto& rj : fj.at("relators"))
      L.final_relators.push_back(
          parse_word_tokens(parse_tokens(rj), L.syms));
  }

  return L;
}

}  // namespace cusplat
