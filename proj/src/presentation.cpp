#include "cusplat/presentation.hpp"

#include <algorithm>
#include <set>

namespace cusplat {

std::optional<Scalar> verify_relator(const Word& w, const SymbolTable& syms,
                                     const Form& f) {
  Mat m = eval_word(w, syms, f);
  Scalar unit(f.ring);
  if (equal_up_to_unit(m, Mat::identity(f.ring, f.n), &unit)) return unit;
  return std::nullopt;
}

void assert_relators_verify(const Presentation& P, const SymbolTable& syms,
                            const Form& f, const std::string& context) {
  for (const auto& r : P.relators)
    if (!verify_relator(r, syms, f))
      throw std::runtime_error(context + ": relator fails to verify: " +
                               fmt_word(r, syms));
}

Presentation tietze_eliminate(const Presentation& P, int g, const Word& defining,
                              const SymbolTable& syms, const Form& f) {
  for (const auto& l : defining)
    if (l.sym == g)
      throw std::invalid_argument("defining word mentions the eliminated " +
                                  syms.name(g));
  Mat lhs = eval_word(Word{{g, 1}}, syms, f);
  Mat rhs = eval_word(defining, syms, f);
  if (!equal_up_to_unit(lhs, rhs))
    throw std::invalid_argument("defining word for " + syms.name(g) +
                                " fails matrix verification");
  Presentation out;
  for (int x : P.gens)
    if (x != g) out.gens.push_back(x);
  std::vector<Word> rs;
  for (const auto& r : P.relators) rs.push_back(substitute(r, g, defining));
  out.relators = tidy_relators(std::move(rs), syms);
  assert_relators_verify(out, syms, f, "after eliminating " + syms.name(g));
  return out;
}

Word derive_defining_word(const Presentation& P, int g, const SymbolTable& syms) {
  const Word* best = nullptr;
  int best_len = 0;
  std::string best_key;
  for (const auto& r : P.relators) {
    int occ = 0;
    for (const auto& l : r)
      if (l.sym == g) occ += std::abs(l.exp);
    if (occ != 1) continue;
    int len = word_length(r);
    std::string k = word_key(r, syms);
    if (!best || len < best_len || (len == best_len && k < best_key)) {
      best = &r;
      best_len = len;
      best_key = k;
    }
  }
  if (!best)
    throw std::runtime_error("no relator defines " + syms.name(g) +
                             " (single occurrence required)");
  // r = u g^e v = 1.
  Word u, v;
  int e = 0;
  bool seen = false;
  for (const auto& l : *best) {
    if (l.sym == g) {
      e = l.exp;
      seen = true;
    } else {
      (seen ? v : u).push_back(l);
    }
  }
  if (e == 1) return concat(inverse_word(u), inverse_word(v));
  return concat(v, u);  // u g^-1 v = 1  =>  g = v u
}

std::vector<Word> tidy_relators(std::vector<Word> rs, const SymbolTable& syms) {
  std::vector<Word> out;
  std::set<std::string> seen;
  for (auto& r : rs) {
    Word w = cyclic_reduce(free_reduce(std::move(r)));
    if (w.empty()) continue;
    std::string k = word_key(w, syms);
    std::string ki = word_key(cyclic_reduce(inverse_word(w)), syms);
    if (seen.count(k) || seen.count(ki)) continue;
    seen.insert(k);
    out.push_back(std::move(w));
  }
  return out;
}

bool relator_sets_match(const std::vector<Word>& ours,
                        const std::vector<Word>& golden,
                        const std::vector<int>& gens, const SymbolTable& syms) {
  // Involutions: generators with a g^2 relator on either side.
  std::vector<bool> inv(syms.size(), false);
  auto scan = [&](const std::vector<Word>& rs) {
    for (const auto& r : rs) {
      Word w = cyclic_reduce(r);
      if (w.size() == 1 && std::abs(w[0].exp) == 2) inv[w[0].sym] = true;
    }
  };
  scan(ours);
  scan(golden);
  auto normalize = [&](const std::vector<Word>& rs) {
    std::multiset<std::string> keys;
    for (const auto& r : rs) {
      Word w = involution_normal_form(r, inv, syms);
      if (!w.empty()) keys.insert(word_key(w, syms));
    }
    return keys;
  };
  return normalize(ours) == normalize(golden);
}

}  // namespace cusplat
