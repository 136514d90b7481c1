#include <doctest.h>

#include <set>

#include "csym/classical.hpp"
#include "csym/tableaux.hpp"

using namespace csym;

namespace {
const Alphabet kAbc("abc");
const Alphabet kAb("ab");
const Alphabet kA("a");

PSentence ps(const Alphabet& a, std::initializer_list<Word> words) {
  return PSentence(a, Sentence(words));
}
}  // namespace

TEST_CASE("tableau types read colors per entry from the bottom row up") {
  Sentence shape{"abb", "ca"};
  CHECK(tableau_type({shape, {{1, 1, 1}, {2, 2}}}) == WeakSentence{"abb", "ca"});
  CHECK(tableau_type({shape, {{1, 1, 2}, {2, 3}}}) == WeakSentence{"ab", "cb", "a"});
  CHECK(tableau_type({shape, {{1, 1, 3}, {2, 2}}}) == WeakSentence{"ab", "ca", "b"});
  // Skipped values leave empty words up to the maximum entry.
  CHECK(tableau_type({Sentence{"a"}, {{3}}}) == WeakSentence{"", "", "a"});
  CHECK(tableau_type({Sentence(), {}}) == WeakSentence());
  CHECK_THROWS_AS(tableau_type({shape, {{1, 1}, {2, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(tableau_type({shape, {{1, 1, 0}, {2, 2}}}), std::invalid_argument);
}

TEST_CASE("enumerated fillings are semistandard, distinct, and complete") {
  PSentence shape = ps(kAbc, {"abb", "ca"});
  std::vector<ColoredTableau> all = enumerate_cssyt(kAbc, shape, 3);
  CHECK(all.size() == 15);
  std::set<std::vector<std::vector<int>>> seen;
  for (const ColoredTableau& t : all) {
    CHECK(t.shape == shape.sentence());
    REQUIRE(t.entries.size() == 2);
    REQUIRE(t.entries[0].size() == 3);
    REQUIRE(t.entries[1].size() == 2);
    // Independent re-check of the defining inequalities.
    for (const auto& row : t.entries)
      for (size_t c = 0; c + 1 < row.size(); ++c) CHECK(row[c] <= row[c + 1]);
    for (size_t c = 0; c < 2; ++c) CHECK(t.entries[0][c] < t.entries[1][c]);
    for (const auto& row : t.entries)
      for (int v : row) {
        CHECK(v >= 1);
        CHECK(v <= 3);
      }
    seen.insert(t.entries);
  }
  CHECK(seen.size() == all.size());
  // With only two values no filling of a two-row shape leaves row one
  // above 1... there are exactly as many as SSYT in the unary case.
  CHECK(enumerate_cssyt(kA, ps(kA, {"aa", "a"}), 3).size() == count_ssyt({2, 1}, 3));
}

TEST_CASE("colored Kostka numbers count exact types") {
  CHECK(colored_kostka(kAbc, ps(kAbc, {"abb", "ca"}), ps(kAbc, {"abb", "ca"})) == 1);
  CHECK(colored_kostka(kAbc, ps(kAbc, {"abb", "ca"}), ps(kAbc, {"ab", "cb", "a"})) == 1);
  CHECK(colored_kostka(kAbc, ps(kAbc, {"abb", "ca"}), ps(kAbc, {"ab", "ca", "b"})) == 1);
  // A rearranged-color type counts zero even with the right sizes.
  CHECK(colored_kostka(kAbc, ps(kAbc, {"abb", "ca"}), ps(kAbc, {"ba", "cb", "a"})) == 0);
  // Unary colored Kostka equals the classical count.
  CHECK(colored_kostka(kA, ps(kA, {"aaa", "aa"}), ps(kA, {"a", "a", "a", "a", "a"})) == 5);
  CHECK(colored_kostka(kA, ps(kA, {"aaa", "aa"}), ps(kA, {"a", "a", "a", "a", "a"})) ==
        classical_kostka({3, 2}, {1, 1, 1, 1, 1}));
  // Mismatched sizes count zero tableaux.
  CHECK(colored_kostka(kAb, ps(kAb, {"ab"}), ps(kAb, {"a"})) == 0);
}

TEST_CASE("matrix order sorts by word-length partition then text") {
  std::vector<PSentence> order = psentences_in_matrix_order(kAb, 2);
  std::vector<std::string> texts;
  for (const PSentence& p : order) texts.push_back(p.text());
  CHECK(texts == std::vector<std::string>{"(aa)", "(ab)", "(ba)", "(bb)", "(a,a)", "(a,b)",
                                          "(b,b)"});
  for (size_t i = 0; i + 1 < order.size(); ++i) {
    CHECK(matrix_order_before(kAb, order[i], order[i + 1]));
    CHECK_FALSE(matrix_order_before(kAb, order[i + 1], order[i]));
  }
}

TEST_CASE("the Kostka matrix is upper unitriangular with integer inverse") {
  KostkaMatrix km = kostka_matrix(kAb, 2);
  REQUIRE(km.order.size() == 7);
  for (size_t i = 0; i < km.order.size(); ++i) {
    CHECK(km.entries[i][i] == 1);
    for (size_t j = 0; j < i; ++j) CHECK(km.entries[i][j] == 0);
  }
  // One-word shapes admit only their own type.
  size_t ba = 2;  // position of (ba) in the order above
  for (size_t j = 0; j < km.order.size(); ++j)
    CHECK(km.entries[ba][j] == (j == ba ? 1 : 0));
  // (aa) also covers the split type (a,a).
  CHECK(km.entries[0][4] == 1);
}

TEST_CASE("colored dual Schur functions expand in the monomial basis") {
  FormalSum f = dual_schur_in_m(kAbc, ps(kAbc, {"abb", "ca"}));
  FormalSum want(key_m(kAbc, Sentence{"abb", "ca"}));
  want.add_term(key_m(kAbc, Sentence{"ab", "cb", "a"}), 1);
  want.add_term(key_m(kAbc, Sentence{"ab", "ca", "b"}), 1);
  CHECK(f == want);
}

TEST_CASE("unary dual Schur matches the classical Schur expansion") {
  // All five monomial terms, including the (aaa,a,a) one.
  FormalSum f = dual_schur_in_m(kA, ps(kA, {"aaa", "aa"}));
  FormalSum want(key_m(kA, Sentence{"aaa", "aa"}));
  want.add_term(key_m(kA, Sentence{"aaa", "a", "a"}), 1);
  want.add_term(key_m(kA, Sentence{"aa", "aa", "a"}), 2);
  want.add_term(key_m(kA, Sentence{"aa", "a", "a", "a"}), 3);
  want.add_term(key_m(kA, Sentence{"a", "a", "a", "a", "a"}), 5);
  CHECK(f == want);
}

TEST_CASE("colored Schur functions invert the Kostka triangle") {
  FormalSum s = schur_in_h(kAb, ps(kAb, {"a", "a"}));
  FormalSum want(key_h(kAb, Sentence{"a", "a"}));
  want.add_term(key_h(kAb, Sentence{"aa"}), -1);
  CHECK(s == want);
  // h_Q = sum over P of K(P,Q) s_P, checked for Q = (a,a).
  FormalSum h(key_h(kAb, Sentence{"a", "a"}));
  FormalSum back = s_to_h(kAb, h_to_s(kAb, h));
  CHECK(back == h);
}

TEST_CASE("Schur-type conversions round trip") {
  FormalSum f(key_sstar(kAb, Sentence{"ab", "a"}), 2);
  f.add_term(key_sstar(kAb, Sentence{"a", "a", "b"}), -3);
  CHECK(m_to_sstar(kAb, sstar_to_m(kAb, f)) == f);
  FormalSum g(key_s(kAb, Sentence{"ba", "b"}));
  CHECK(h_to_s(kAb, s_to_h(kAb, g)) == g);
}
