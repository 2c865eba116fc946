#include "cusplat/presentation.hpp"

#include "doctest.h"

using namespace cusplat;

namespace {
// Small concrete alphabet over PSL(2,Z)-style matrices.
struct Fixture {
  Ring z{RingKind::Integers, 0};
  Form f{FormKind::Symplectic, z, 2};
  SymbolTable syms;
  Fixture() {
    Mat T = Mat::identity(z, 2);
    T.at(0, 1) = Scalar::one(z);
    Mat I(z, 2);
    I.at(0, 1) = -Scalar::one(z);
    I.at(1, 0) = Scalar::one(z);
    syms.add("T", T);
    syms.add("I0", I);
  }
};
}  // namespace

TEST_CASE("parsing, formatting, reduction") {
  Fixture fx;
  Word w = parse_word_tokens({"T^2", "I0^-1", "I0", "T^-1"}, fx.syms);
  CHECK(fmt_word(w, fx.syms) == "T");
  CHECK(word_length(w) == 1);
  Word c = cyclic_reduce(parse_word_tokens({"T^-1", "I0", "T"}, fx.syms));
  CHECK(fmt_word(c, fx.syms) == "I0");
  Word inv = inverse_word(parse_word_tokens({"T", "I0^2"}, fx.syms));
  CHECK(fmt_word(inv, fx.syms) == "I0^-2 T^-1");
  CHECK(fmt_word(parse_word_tokens({"Id"}, fx.syms), fx.syms) == "Id");
}

TEST_CASE("evaluation with symplectic inverses") {
  Fixture fx;
  Word w = parse_word_tokens({"I0", "T"}, fx.syms);
  Mat m = eval_word(w, fx.syms, fx.f);
  Mat m3 = m * m * m;
  Scalar unit(fx.z);
  CHECK(equal_up_to_unit(m3, Mat::identity(fx.z, 2), &unit));
  CHECK(unit.c[0] == -1);  // (I0 T)^3 = -Id
  Word r = parse_word_tokens({"I0", "T", "I0", "T", "I0", "T"}, fx.syms);
  auto u = verify_relator(r, fx.syms, fx.f);
  REQUIRE(u);
  CHECK(u->c[0] == -1);
  CHECK(!verify_relator(parse_word_tokens({"T"}, fx.syms), fx.syms, fx.f));
}

TEST_CASE("substitution semantics") {
  Fixture fx;
  // b := a^2 elimination in <a, b | b = a^2, b a b>.
  SymbolTable syms;
  Ring z{RingKind::Integers, 0};
  Form f{FormKind::Symplectic, z, 2};
  Mat T = Mat::identity(z, 2);
  T.at(0, 1) = Scalar::one(z);
  Mat T2 = T * T;
  syms.add("a", T);
  syms.add("b", T2);
  Presentation P;
  P.gens = {syms.id("a"), syms.id("b")};
  P.relators.push_back(parse_word_tokens({"b", "a^-2"}, syms));
  Word defining = derive_defining_word(P, syms.id("b"), syms);
  CHECK(fmt_word(defining, syms) == "a^2");
  Presentation Q = tietze_eliminate(P, syms.id("b"), defining, syms, f);
  CHECK(Q.gens.size() == 1);
  CHECK(Q.relators.empty());  // the defining relator collapses
}

TEST_CASE("involution normal form folds inverses") {
  Fixture fx;
  std::vector<bool> inv(fx.syms.size(), false);
  inv[fx.syms.id("I0")] = true;
  Word w = parse_word_tokens({"T", "I0^-1", "T", "I0", "T", "I0"}, fx.syms);
  Word n = involution_normal_form(w, inv, fx.syms);
  Word golden = parse_word_tokens({"I0", "T", "I0", "T", "I0", "T"}, fx.syms);
  Word ng = involution_normal_form(golden, inv, fx.syms);
  CHECK(word_key(n, fx.syms) == word_key(ng, fx.syms));
}

TEST_CASE("relator set matching up to the obvious rewritings") {
  Fixture fx;
  std::vector<int> gens = {fx.syms.id("T"), fx.syms.id("I0")};
  std::vector<Word> ours = {
      parse_word_tokens({"I0^2"}, fx.syms),
      parse_word_tokens({"T", "I0^-1", "T", "I0", "T", "I0"}, fx.syms)};
  std::vector<Word> golden = {
      parse_word_tokens({"I0^2"}, fx.syms),
      parse_word_tokens({"I0", "T", "I0", "T", "I0", "T"}, fx.syms)};
  CHECK(relator_sets_match(ours, golden, gens, fx.syms));
  std::vector<Word> wrong = {
      parse_word_tokens({"I0^2"}, fx.syms),
      parse_word_tokens({"I0", "T", "I0", "T"}, fx.syms)};
  CHECK(!relator_sets_match(ours, wrong, gens, fx.syms));
}
