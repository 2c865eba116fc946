#include "cusplat/words.hpp"

#include <algorithm>

namespace cusplat {

int SymbolTable::add(const std::string& name, Mat m) {
  if (index_.count(name)) throw std::logic_error("duplicate symbol " + name);
  int id = (int)names_.size();
  names_.push_back(name);
  mats_.push_back(std::move(m));
  index_[name] = id;
  return id;
}

void SymbolTable::add_alias(const std::string& name, int id) {
  if (index_.count(name)) {
    if (index_.at(name) != id)
      throw std::logic_error("alias collides with symbol " + name);
    return;
  }
  index_[name] = id;
}

int SymbolTable::id(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unbound symbol " + name);
  return it->second;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->sym, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word free_reduce(Word w) {
  Word out;
  for (const auto& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().sym == l.sym) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().sym == w.back().sym) {
    int s = w.front().sym;
    int e = w.front().exp + w.back().exp;
    w.erase(w.begin());
    w.pop_back();
    if (e != 0) w.insert(w.begin(), {s, e});
    w = free_reduce(std::move(w));
  }
  return w;
}

int word_length(const Word& w) {
  int n = 0;
  for (const auto& l : w) n += std::abs(l.exp);
  return n;
}

std::string word_key(const Word& w, const SymbolTable& syms) {
  std::string s;
  for (const auto& l : w)
    s += syms.name(l.sym) + "^" + std::to_string(l.exp) + ".";
  return s;
}

Mat eval_word(const Word& w, const SymbolTable& syms, const Form& f) {
  Mat acc = Mat::identity(f.ring, f.n);
  for (const auto& l : w) {
    Mat base = syms.matrix(l.sym);
    if (l.exp < 0) base = f.inverse(base);
    for (int i = 0; i < std::abs(l.exp); ++i) acc = acc * base;
  }
  return acc;
}

Word parse_word_tokens(const std::vector<std::string>& tokens,
                       const SymbolTable& syms) {
  Word w;
  for (const auto& t : tokens) {
    auto caret = t.find('^');
    std::string name = t.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(t.substr(caret + 1));
    if (name == "Id") continue;
    w.push_back({syms.id(name), exp});
  }
  return free_reduce(w);
}

std::vector<std::string> word_tokens(const Word& w, const SymbolTable& syms) {
  std::vector<std::string> out;
  for (const auto& l : w) {
    std::string t = syms.name(l.sym);
    if (l.exp != 1) t += "^" + std::to_string(l.exp);
    out.push_back(t);
  }
  return out;
}

std::string fmt_word(const Word& w, const SymbolTable& syms) {
  if (w.empty()) return "Id";
  std::string s;
  for (const auto& t : word_tokens(w, syms)) {
    if (!s.empty()) s += " ";
    s += t;
  }
  return s;
}

Word substitute(const Word& w, int g, const Word& replacement) {
  Word out;
  Word repl_inv = inverse_word(replacement);
  for (const auto& l : w) {
    if (l.sym != g) {
      out.push_back(l);
      continue;
    }
    const Word& unit = l.exp > 0 ? replacement : repl_inv;
    for (int i = 0; i < std::abs(l.exp); ++i)
      out.insert(out.end(), unit.begin(), unit.end());
  }
  return free_reduce(out);
}

Word involution_normal_form(Word w, const std::vector<bool>& is_involution,
                            const SymbolTable& syms) {
  w = free_reduce(std::move(w));
  Word flat;
  for (const auto& l : w) {
    int e = l.exp;
    if (is_involution[l.sym]) e = std::abs(e) % 2;
    if (e == 0 && is_involution[l.sym]) continue;
    for (int i = 0; i < std::abs(e); ++i) flat.push_back({l.sym, e > 0 ? 1 : -1});
  }
  flat = cyclic_reduce(std::move(flat));
  if (flat.empty()) return flat;
  // Canonical rotation over the word and its inverse.
  Word best = flat;
  std::string best_key = word_key(best, syms);
  for (int variant = 0; variant < 2; ++variant) {
    Word base = variant ? cyclic_reduce(inverse_word(flat)) : flat;
    for (size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      std::string k = word_key(rot, syms);
      if (k < best_key) {
        best_key = k;
        best = rot;
      }
    }
  }
  return best;
}

}  // namespace cusplat
