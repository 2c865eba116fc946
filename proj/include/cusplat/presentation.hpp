#pragma once

#include "cusplat/words.hpp"

namespace cusplat {

struct Presentation {
  std::vector<int> gens;
  std::vector<Word> relators;
};

// Returns the unit lambda with eval(w) = lambda * Id, or nullopt. For the
// Hurwitz order only +-1 count as trivial.
std::optional<Scalar> verify_relator(const Word& w, const SymbolTable& syms,
                                     const Form& f);

void assert_relators_verify(const Presentation& P, const SymbolTable& syms,
                            const Form& f, const std::string& context);

// Tietze elimination of g using a defining word over the remaining
// generators; eval(defining) must equal eval(g) up to a unit scalar.
Presentation tietze_eliminate(const Presentation& P, int g, const Word& defining,
                              const SymbolTable& syms, const Form& f);

// Derives the defining word from a relator containing g exactly once
// (shortest such relator, ties by key). Throws when none exists.
Word derive_defining_word(const Presentation& P, int g, const SymbolTable& syms);

// Cleans a relator set: free/cyclic reduction, drops empties and exact
// duplicates (also of inverses).
std::vector<Word> tidy_relators(std::vector<Word> rs, const SymbolTable& syms);

// Presentation comparison after folding involutions and cyclic rotation;
// used by the toy-pipeline golden check.
bool relator_sets_match(const std::vector<Word>& ours,
                        const std::vector<Word>& golden,
                        const std::vector<int>& gens, const SymbolTable& syms);

}  // namespace cusplat
