#pragma once

#include <map>

#include "cusplat/matrix.hpp"

namespace cusplat {

// Generator alphabet with matrix realizations.
class SymbolTable {
 public:
  int add(const std::string& name, Mat m);
  // Extra lookup name for an existing symbol (the paper renames generators
  // when stating final presentations).
  void add_alias(const std::string& name, int id);
  int id(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  const std::string& name(int id) const { return names_.at(id); }
  const Mat& matrix(int id) const { return mats_.at(id); }
  const Mat& matrix(const std::string& name) const { return mats_.at(id(name)); }
  int size() const { return (int)names_.size(); }

 private:
  std::vector<std::string> names_;
  std::vector<Mat> mats_;
  std::map<std::string, int> index_;
};

struct Letter {
  int sym;
  int exp;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
int word_length(const Word& w);  // total letter count with multiplicity

// Word comparison key used for deterministic tie-breaking.
std::string word_key(const Word& w, const SymbolTable& syms);

// Exact matrix product; negative exponents via the form inverse.
Mat eval_word(const Word& w, const SymbolTable& syms, const Form& f);

// Tokens like "T1", "I0^-1", "Tv^2".
Word parse_word_tokens(const std::vector<std::string>& tokens,
                       const SymbolTable& syms);
std::vector<std::string> word_tokens(const Word& w, const SymbolTable& syms);
std::string fmt_word(const Word& w, const SymbolTable& syms);

// Replaces every occurrence of symbol g by the given word (g^-1 by its
// inverse) and freely reduces.
Word substitute(const Word& w, int g, const Word& replacement);

// Folds inverses of involutions (symbols with a g^2 relator present) to
// positive exponents, then cyclically reduces; canonical rotation chosen by
// key. Used for presentation comparison up to the obvious rewritings.
Word involution_normal_form(Word w, const std::vector<bool>& is_involution,
                            const SymbolTable& syms);

}  // namespace cusplat
