#include <doctest.h>

#include "csym/colored_hopf.hpp"
#include "csym/ops.hpp"

using namespace csym;

namespace {
const Alphabet kAb("ab");
const Alphabet kAbc("abc");
const Alphabet kAbcde("abcde");

PSentence ps(const Alphabet& a, std::initializer_list<Word> words) {
  return PSentence(a, Sentence(words));
}
}  // namespace

TEST_CASE("H basis multiplies by concatenation") {
  FormalSum p = product_H(Sentence{"bc", "a"}, Sentence{"b", "ac"});
  CHECK(p == FormalSum(key_H(Sentence{"bc", "a", "b", "ac"})));
  CHECK(product_H(Sentence(), Sentence{"a"}) == FormalSum(key_H(Sentence{"a"})));
}

TEST_CASE("H coproduct splits off right-contained parts") {
  TensorSum got = coproduct_H(Sentence{"ab"});
  TensorSum want(Algebra::NSymA);
  want.add_term(key_H(Sentence{"ab"}), key_H(Sentence()), 1);
  want.add_term(key_H(Sentence{"a"}), key_H(Sentence{"b"}), 1);
  want.add_term(key_H(Sentence()), key_H(Sentence{"ab"}), 1);
  CHECK(got == want);
  // Two words: one suffix choice per word, flattened on both legs.
  CHECK(coproduct_H(Sentence{"a", "b"}).num_terms() == 4);
}

TEST_CASE("M basis multiplies by quasishuffle") {
  // The thirteen-term product, all coefficients 1.
  FormalSum p = product_M(Sentence{"a", "bc"}, Sentence{"d", "e"});
  CHECK(p.num_terms() == 13);
  for (const auto& [k, c] : p.terms()) CHECK(c == 1);
  CHECK(p.coefficient(key_M(Sentence{"a", "bcd", "e"})) == 1);
  CHECK(p.coefficient(key_M(Sentence{"d", "ae", "bc"})) == 1);
  CHECK(p.coefficient(key_M(Sentence{"d", "e", "a", "bc"})) == 1);
}

TEST_CASE("M coproduct deconcatenates") {
  TensorSum got = coproduct_M(Sentence{"a", "bc"});
  TensorSum want(Algebra::QSymA);
  want.add_term(key_M(Sentence()), key_M(Sentence{"a", "bc"}), 1);
  want.add_term(key_M(Sentence{"a"}), key_M(Sentence{"bc"}), 1);
  want.add_term(key_M(Sentence{"a", "bc"}), key_M(Sentence()), 1);
  CHECK(got == want);
}

TEST_CASE("M antipode at small degree") {
  // Forced by the antipode axiom in degree 2.
  FormalSum s = antipode_M(Sentence{"a", "b"});
  FormalSum want(key_M(Sentence{"b", "a"}));
  want.add_term(key_M(Sentence{"ab"}), 1);
  CHECK(s == want);
  CHECK(antipode_M(Sentence{"a"}) == FormalSum(key_M(Sentence{"a"}), -1));
  CHECK(antipode_M(Sentence()) == FormalSum(key_M(Sentence())));
}

TEST_CASE("h basis multiplies by sorted concatenation") {
  FormalSum p = product_h(kAbc, ps(kAbc, {"aba", "c"}), ps(kAbc, {"bb", "a"}));
  CHECK(p == FormalSum(key_h(kAbc, Sentence{"aba", "bb", "a", "c"})));
}

TEST_CASE("h coproduct of a two-word p-sentence has nine terms") {
  TensorSum got = coproduct_h(kAbc, ps(kAbc, {"ab", "bc"}));
  TensorSum want(Algebra::PSymA);
  auto add = [&](std::initializer_list<Word> l, std::initializer_list<Word> r) {
    want.add_term(key_h(kAbc, Sentence(l)), key_h(kAbc, Sentence(r)), 1);
  };
  add({"ab", "bc"}, {});
  add({"bc", "a"}, {"b"});
  add({"ab", "b"}, {"c"});
  add({"a", "b"}, {"b", "c"});
  add({"bc"}, {"ab"});
  add({"ab"}, {"bc"});
  add({"b"}, {"ab", "c"});
  add({"a"}, {"bc", "b"});
  add({}, {"ab", "bc"});
  CHECK(got == want);
}

TEST_CASE("h antipode alternates over refinements of the multiset") {
  FormalSum s = antipode_h(kAbc, ps(kAbc, {"aba", "c"}));
  FormalSum want(key_h(kAbc, Sentence{"aba", "c"}));
  want.add_term(key_h(kAbc, Sentence{"ba", "a", "c"}), -1);
  want.add_term(key_h(kAbc, Sentence{"ab", "a", "c"}), -1);
  want.add_term(key_h(kAbc, Sentence{"a", "a", "b", "c"}), 1);
  CHECK(s == want);
}

TEST_CASE("m basis product") {
  FormalSum p = product_m(kAbc, ps(kAbc, {"bc", "a"}), ps(kAbc, {"b"}));
  FormalSum want(key_m(kAbc, Sentence{"bc", "a", "b"}));
  want.add_term(key_m(kAbc, Sentence{"bcb", "a"}), 1);
  want.add_term(key_m(kAbc, Sentence{"ab", "bc"}), 1);
  CHECK(p == want);
}

TEST_CASE("m coproduct sums over submultisets") {
  TensorSum got = coproduct_m(kAbc, ps(kAbc, {"aba", "bb", "ca"}));
  TensorSum want(Algebra::SymA);
  auto add = [&](std::initializer_list<Word> l, std::initializer_list<Word> r) {
    want.add_term(key_m(kAbc, Sentence(l)), key_m(kAbc, Sentence(r)), 1);
  };
  add({}, {"aba", "bb", "ca"});
  add({"aba"}, {"bb", "ca"});
  add({"bb"}, {"aba", "ca"});
  add({"ca"}, {"aba", "bb"});
  add({"aba", "bb"}, {"ca"});
  add({"aba", "ca"}, {"bb"});
  add({"bb", "ca"}, {"aba"});
  add({"aba", "bb", "ca"}, {});
  CHECK(got == want);
}

TEST_CASE("iota expands m over rearrangements") {
  FormalSum got = iota(kAbc, FormalSum(key_m(kAbc, Sentence{"ab", "c", "c"})));
  FormalSum want(key_M(Sentence{"ab", "c", "c"}));
  want.add_term(key_M(Sentence{"c", "ab", "c"}), 1);
  want.add_term(key_M(Sentence{"c", "c", "ab"}), 1);
  CHECK(got == want);
}

TEST_CASE("m_from_M inverts iota and rejects non-symmetric sums") {
  FormalSum f(key_m(kAb, Sentence{"ab", "a"}), 3);
  f.add_term(key_m(kAb, Sentence{"b", "b"}), -2);
  CHECK(m_from_M(kAb, iota(kAb, f)) == f);

  FormalSum bad(key_M(Sentence{"a", "b"}));  // missing the (b,a) term
  CHECK_THROWS_WITH_AS(m_from_M(kAb, bad), doctest::Contains("rearrange each other"),
                       std::invalid_argument);
  try {
    m_from_M(kAb, bad);
  } catch (const not_symmetric_error& e) {
    CHECK(sort_sentence(kAb, e.left).sentence() == sort_sentence(kAb, e.right).sentence());
    CHECK(e.left != e.right);
  }
}

TEST_CASE("chi sorts the index") {
  FormalSum got = chi(kAbc, FormalSum(key_H(Sentence{"c", "aba", "bc"})));
  CHECK(got == FormalSum(key_h(kAbc, Sentence{"aba", "bc", "c"})));
  // chi is an algebra map: chi(H_I H_J) = chi(H_I) chi(H_J).
  FormalSum l = chi(kAbc, product_H(Sentence{"b"}, Sentence{"ab"}));
  FormalSum r = product_h(kAbc, ps(kAbc, {"b"}), ps(kAbc, {"ab"}));
  CHECK(l == r);
}

TEST_CASE("uncoloring maps indices to their word lengths") {
  CHECK(uncolor_distinguished(kAbc, FormalSum(key_H(Sentence{"ab", "c"}))) ==
        FormalSum(key_classical(Algebra::NSym, Basis::H, {2, 1})));
  CHECK(uncolor_distinguished(kAbc, FormalSum(key_M(Sentence{"a", "bc"}))) ==
        FormalSum(key_classical(Algebra::QSym, Basis::M, {1, 2})));
  CHECK(uncolor_distinguished(kAbc, FormalSum(key_h(kAbc, Sentence{"ab", "a"}))) ==
        FormalSum(key_classical(Algebra::Sym, Basis::h, {2, 1})));
}

TEST_CASE("uncoloring the m basis carries a rearrangement multiplicity") {
  // m_(a,b) = M_(a,b) + M_(b,a) and both sentences uncolor to (1,1).
  CHECK(uncolor_distinguished(kAb, FormalSum(key_m(kAb, Sentence{"a", "b"}))) ==
        FormalSum(key_classical(Algebra::Sym, Basis::m, {1, 1}), 2));
  // Distinct word sizes leave a single rearrangement in sorted position.
  CHECK(uncolor_distinguished(kAb, FormalSum(key_m(kAb, Sentence{"ab", "a"}))) ==
        FormalSum(key_classical(Algebra::Sym, Basis::m, {2, 1})));
  // Without the multiplicity the map would not even be multiplicative:
  // uncolor(m_a m_b) must equal m_1 m_1 = 2 m_(1,1) + m_(2).
  FormalSum prod = product_m(kAb, ps(kAb, {"a"}), ps(kAb, {"b"}));
  FormalSum want(key_classical(Algebra::Sym, Basis::m, {1, 1}), 2);
  want.add_term(key_classical(Algebra::Sym, Basis::m, {2}), 1);
  CHECK(uncolor_distinguished(kAb, prod) == want);
}

TEST_CASE("counit and unit") {
  FormalSum f(key_M(Sentence()), 3);
  f.add_term(key_M(Sentence{"a"}), 5);
  CHECK(colored_counit(f) == 3);
  CHECK(colored_unit(kAb, Algebra::SymA) == FormalSum(key_m(kAb, Sentence())));
  CHECK(colored_counit(colored_unit(kAb, Algebra::NSymA)) == 1);
}

TEST_CASE("linear extensions validate letters against the declared alphabet") {
  FormalSum f(key_M(Sentence{"a", "bc"}));
  FormalSum g(key_M(Sentence{"d", "e"}));
  CHECK(colored_product(kAbcde, f, g).num_terms() == 13);
  CHECK_THROWS_WITH_AS(colored_product(kAbc, f, g), doctest::Contains("unknown color"),
                       std::invalid_argument);
  // Mixing algebras is refused before any kernel runs.
  CHECK_THROWS_AS(colored_product(kAbc, f, FormalSum(key_H(Sentence{"a"}))),
                  std::invalid_argument);
}
