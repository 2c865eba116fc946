#pragma once

#include "cusplat/lattice.hpp"

namespace cusplat {

// One entry of the depth table: a rational point of the prism with its orbit
// assignment and a witness word from the orbit's named representative.
struct TablePoint {
  HeisPoint p;
  Int depth;
  int orbit;
  Word witness;  // eval maps the named representative's lift to p's lift
};

struct TableOrbit {
  std::string name;  // paper name of the representative
  Int depth;
  HeisPoint rep;     // the named representative's coordinates
  Word gen_word;     // A_p
  std::vector<int> points;  // indices into the point list
};

struct DepthTable {
  std::vector<TablePoint> points;
  std::vector<TableOrbit> orbits;

  int orbit_of(const HeisPoint& p) const;
};

// One extracted Macbeath relation.
struct RelationRow {
  std::string acting;
  HeisPoint p;
  std::string p_orbit;
  bool q_inf = false;
  std::string pp;  // orbit name of the target, or "inf"
  Word witness;    // W: maps the target representative's lift to (A p)'s lift
  Mat middle;
  Word wprime;
  Word relator;
  bool word_found = true;
};

// Verification verdict for a verbatim paper row.
struct RowCheck {
  const PaperRow* row = nullptr;
  bool ok = false;
  bool annotated = false;
  std::string status;
};

class Engine {
 public:
  explicit Engine(LatticeData data);

  const LatticeData& data() const { return L_; }
  const DepthTable& depth_table();

  std::vector<RelationRow> extract_relations();
  Presentation assemble_presentation();
  Presentation eliminated_presentation();
  std::vector<RowCheck> verify_paper_rows();

  // Final-presentation relators (and the stabilizer relators) all evaluate to
  // unit times identity; throws otherwise.
  void verify_final_presentation();

  CoverCertificate cover();

  // Derived decomposition for the covering certificate.
  std::vector<Cell> decomposition();

 private:
  LatticeData L_;
  std::optional<DepthTable> table_;
  std::optional<std::vector<RelationRow>> rows_;

  RelationRow make_row(const std::string& acting, const TablePoint& tp);
};

}  // namespace cusplat
