#pragma once

#include <optional>

#include "cusplat/hermitian.hpp"
#include "cusplat/polytope.hpp"
#include "cusplat/words.hpp"

namespace cusplat {

// Everything the engine needs about Gamma_inf: generators, relators, the
// fundamental (or coarse) prism, the horizontal/vertical lattice data of the
// short exact sequence 1 -> v -> Gamma_inf -> h -> 1, and the finite
// rotation/conjugation part materialized as a word table.
class StabilizerData {
 public:
  Form form;
  const SymbolTable* syms = nullptr;
  std::vector<int> gens;        // S_inf
  std::vector<Word> relators;   // R_inf
  std::vector<int> horizontal_basis;  // translation symbols spanning the lattice
  std::vector<int> vertical_gens;     // central vertical translation symbols
  std::vector<int> finite_gens;       // rotation / conjugation symbols
  Polytope prism;  // fundamental (coarse) domain, affine coordinates
  Polytope base;   // horizontal projection of the prism

  struct FiniteElement {
    Mat canonical;  // representative mod unit scalars
    Word word;
  };

  void build(const Form& f, const SymbolTable& table);

  const std::vector<FiniteElement>& finite_table() const { return finite_; }
  int finite_order() const { return (int)finite_.size(); }

  // Word for a lattice translation by the Heisenberg element p; nullopt when
  // p is not in the lattice.
  std::optional<Word> translation_word(const HeisPoint& p) const;

  // Word for an upper-triangular group element: finite-part lookup, integer
  // solve for the horizontal part, vertical correction. Equality holds up to
  // a unit scalar. Diagnostics describe the failure.
  std::optional<Word> matrix_to_word(const Mat& g, std::string* why = nullptr) const;

  // Gamma_inf-translate of p inside the closed prism together with a witness:
  // eval(witness) maps the returned point's lift to p's lift projectively.
  std::pair<HeisPoint, Word> reduce_to_domain(const HeisPoint& p) const;

  // Word gamma with gamma(p) = q, i.e. eval maps p's lift to q's lift;
  // nullopt when p and q are not Gamma_inf-equivalent. The search is exact
  // and complete (finite part times a lattice translation).
  std::optional<Word> orbit_word(const HeisPoint& p, const HeisPoint& q) const;

  bool point_in_prism(const HeisPoint& p) const;

  // Heisenberg coordinates of a translation generator.
  HeisPoint heis_of(int sym) const;

 private:
  std::vector<FiniteElement> finite_;
  std::vector<HeisPoint> basis_pts_;
  std::vector<HeisPoint> vertical_pts_;

  std::optional<std::vector<Int>> solve_horizontal(const Scalar& zeta) const;
};

}  // namespace cusplat
