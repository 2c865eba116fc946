#pragma once

#include "cusplat/covering.hpp"
#include "cusplat/depth.hpp"
#include "cusplat/presentation.hpp"
#include "cusplat/stabilizer.hpp"

namespace cusplat {

// Orbit representative named as in the paper, with its published lift and the
// generator word A_p mapping infinity to it.
struct NamedRep {
  std::string name;
  HeisPoint point;
  Int depth_declared;
  std::vector<Scalar> lift;
  Word gen_word;
};

// A point reference in a relation table: named representative, explicit
// coordinates, or infinity.
struct PointRef {
  std::string ref;  // nonempty when named
  std::optional<HeisPoint> coords;
  bool inf = false;
};

// One verbatim row of the paper's relation tables.
struct PaperRow {
  std::string table;
  std::string acting;
  PointRef p;
  PointRef pp;
  std::vector<std::string> middle;
  std::vector<std::string> wprime;
  std::string note;  // transcription annotation (suspected typos etc.)
};

struct EliminationStep {
  std::string gen;
  std::vector<std::string> defining;  // empty: derive from the relators
};

struct DecompositionSpec {
  std::string kind;  // "auto" | "cells" | "split"
  // kind == "cells"
  std::vector<std::pair<std::vector<HeisPoint>, int>> cells;
  // kind == "split"
  std::vector<Hyperplane> planes;
  std::vector<SignRule> rules;
};

struct LatticeData {
  std::string id;
  Ring ring;
  Form form;
  SymbolTable syms;
  StabilizerData stab;
  std::vector<std::pair<int, Word>> aux_defs;  // derived stabilizer symbols
  int declared_finite_order = 0;
  std::vector<NamedRep> reps;
  std::vector<std::string> acting;
  int depth_bound = 0;
  Rat cover_height;
  std::vector<CyganBall> balls;
  DecompositionSpec decomposition;
  std::vector<PaperRow> rows;
  std::vector<EliminationStep> elimination;
  std::vector<std::string> final_gens;
  std::vector<Word> final_relators;

  const NamedRep& rep(const std::string& name) const;
};

// Loads and fully verifies a lattice data file. `id_or_path` is one of the
// shipped ids (psl2z, d1, d3, d7, hurwitz) resolved against the data
// directory, or a path to a JSON file.
LatticeData load_lattice(const std::string& id_or_path);

std::vector<std::string> available_lattices();
std::string data_dir();

}  // namespace cusplat
