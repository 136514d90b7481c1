#include <doctest.h>

#include <algorithm>
#include <set>

#include "csym/sentence.hpp"
#include "csym/sentence_ops.hpp"

using namespace csym;

namespace {
const Alphabet kAbc("abc");
const Alphabet kAbcde("abcde");
}  // namespace

TEST_CASE("sentence text and parse round trip") {
  Sentence s{"ab", "c"};
  CHECK(s.text() == "(ab,c)");
  CHECK(Sentence::parse("(ab,c)") == s);
  CHECK(Sentence().text() == "()");
  CHECK(Sentence::parse("()") == Sentence());
  CHECK(s.size() == 3);
  CHECK(s.length() == 2);
  CHECK(s.maximal_word() == "abc");
  CHECK(s.word_lengths() == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Sentence::parse("(ab,,c)"), std::invalid_argument);
  CHECK_THROWS_AS(Sentence::parse("ab,c"), std::invalid_argument);
}

TEST_CASE("weak sentences render empty words as dashes and flatten") {
  WeakSentence w{"", "ab", "", "c"};
  CHECK(w.text() == "(-,ab,-,c)");
  CHECK(WeakSentence::parse("(-,ab,-,c)") == w);
  CHECK(w.flatten() == Sentence{"ab", "c"});
  CHECK(w.size() == 3);
}

TEST_CASE("alphabet membership is enforced") {
  Sentence s{"ab", "d"};
  CHECK(s.over(kAbcde));
  CHECK_FALSE(s.over(kAbc));
  CHECK_THROWS_WITH_AS(s.require_over(kAbc), doctest::Contains("unknown color 'd'"),
                       std::invalid_argument);
}

TEST_CASE("refinements of a single word split it in every way") {
  // All four refinements of (bac).
  std::vector<Sentence> r = refinements(Sentence{"bac"});
  std::set<Sentence> got(r.begin(), r.end());
  std::set<Sentence> want = {Sentence{"bac"}, Sentence{"b", "ac"}, Sentence{"ba", "c"},
                             Sentence{"b", "a", "c"}};
  CHECK(got == want);
  for (const Sentence& i : r) CHECK(refines(i, Sentence{"bac"}));
  CHECK_FALSE(refines(Sentence{"bac"}, Sentence{"b", "ac"}));
  // Coarsening is the reverse relation.
  for (const Sentence& j : coarsenings(Sentence{"b", "a", "c"}))
    CHECK(refines(Sentence{"b", "a", "c"}, j));
  CHECK(coarsenings(Sentence{"b", "a", "c"}).size() == 4);
  // Different maximal words never compare.
  CHECK_FALSE(refines(Sentence{"ab"}, Sentence{"ba"}));
}

TEST_CASE("concatenation and near-concatenation") {
  Sentence i{"bc", "a"};
  Sentence j{"b", "ac"};
  CHECK(concat(i, j) == Sentence{"bc", "a", "b", "ac"});
  CHECK(near_concat(i, j) == Sentence{"bc", "ab", "ac"});
  CHECK(concat(Sentence(), i) == i);
  CHECK_THROWS_AS(near_concat(Sentence(), i), std::invalid_argument);
}

TEST_CASE("reversal flips the word order and complement flips the splits") {
  Sentence i{"ab", "cde"};
  CHECK(reversal(i) == Sentence{"cde", "ab"});
  CHECK(complement(i) == Sentence{"a", "bc", "d", "e"});
  CHECK(complement(complement(i)) == i);
  CHECK(reversal(reversal(i)) == i);
  CHECK(complement(Sentence{"ab"}) == Sentence{"a", "b"});
}

TEST_CASE("right and left containment with quotients") {
  Sentence i{"abc", "def"};
  WeakSentence quotient;
  CHECK(right_contained(WeakSentence{"c", "ef"}, i, &quotient));
  CHECK(quotient == WeakSentence{"ab", "d"});
  CHECK(left_contained(WeakSentence{"a", "de"}, i, &quotient));
  CHECK(quotient == WeakSentence{"bc", "f"});
  CHECK_FALSE(right_contained(WeakSentence{"a", "ef"}, i));
  CHECK_FALSE(left_contained(WeakSentence{"c", "de"}, i));
  // A shorter weak sentence is simply not contained.
  CHECK_FALSE(right_contained(WeakSentence{"c"}, i));

  // Every right splitting reassembles the sentence.
  for (const Splitting& sp : right_splittings(i)) {
    REQUIRE(sp.quotient.length() == i.length());
    for (int k = 0; k < i.length(); ++k)
      CHECK(sp.quotient.word(k) + sp.part.word(k) == i.word(k));
  }
  CHECK(right_splittings(i).size() == 16);  // 4 suffix cuts per word
}

TEST_CASE("quasishuffle of two sentences") {
  // The thirteen-term expansion of (a,bc) with (d,e).
  std::map<Sentence, long> q = quasishuffle(Sentence{"a", "bc"}, Sentence{"d", "e"});
  std::set<Sentence> want = {
      Sentence{"a", "bc", "d", "e"}, Sentence{"a", "bcd", "e"}, Sentence{"a", "d", "bc", "e"},
      Sentence{"ad", "bc", "e"},     Sentence{"a", "d", "bce"}, Sentence{"ad", "bce"},
      Sentence{"d", "a", "bc", "e"}, Sentence{"d", "a", "bce"}, Sentence{"a", "d", "e", "bc"},
      Sentence{"ad", "e", "bc"},     Sentence{"d", "a", "e", "bc"}, Sentence{"d", "ae", "bc"},
      Sentence{"d", "e", "a", "bc"}};
  CHECK(q.size() == 13);
  for (const auto& [s, mult] : q) {
    CHECK(want.count(s) == 1);
    CHECK(mult == 1);
  }
  // Plain shuffles are the subset with no glued words.
  CHECK(shuffles(Sentence{"a", "bc"}, Sentence{"d", "e"}).size() == 6);
  // Unit cases.
  CHECK(quasishuffle(Sentence(), Sentence{"ab"}).at(Sentence{"ab"}) == 1);
}

TEST_CASE("p-sentences demand canonical order") {
  // Larger words first, equal sizes in alphabet order.
  CHECK(is_canonical(kAbc, Sentence{"abb", "cab", "ba", "cc", "a", "b"}));
  CHECK_FALSE(is_canonical(kAbc, Sentence{"b", "a"}));
  CHECK(sort_sentence(kAbc, Sentence{"c", "aba", "bc"}).text() == "(aba,bc,c)");
  CHECK_THROWS_WITH_AS(PSentence(kAbc, Sentence{"b", "a"}), doctest::Contains("(a,b)"),
                       std::invalid_argument);
  // The declared order decides ties, not byte order.
  CHECK(sort_sentence(Alphabet("ba"), Sentence{"a", "b"}).text() == "(b,a)");
}

TEST_CASE("rearrangements of a p-sentence") {
  std::vector<Sentence> r = rearrangements(PSentence(kAbc, Sentence{"ab", "a"}));
  std::set<Sentence> got(r.begin(), r.end());
  CHECK(got == std::set<Sentence>{Sentence{"ab", "a"}, Sentence{"a", "ab"}});
  // Repeated words are not double counted.
  CHECK(rearrangements(PSentence(kAbc, Sentence{"a", "a"})).size() == 1);
}

TEST_CASE("submultisets and multiset difference") {
  PSentence p(kAbc, Sentence{"ab", "a", "a"});
  CHECK(submultiset(PSentence(kAbc, Sentence{"a", "a"}), p));
  CHECK_FALSE(submultiset(PSentence(kAbc, Sentence{"b"}), p));
  CHECK(multiset_difference(kAbc, p, PSentence(kAbc, Sentence{"a"})).text() == "(ab,a)");
  CHECK(submultisets(kAbc, p).size() == 6);  // ab in/out times zero/one/two a's
}

TEST_CASE("r coefficients count overlapping splittings") {
  const Alphabet a("a");
  // (a,a) arises from (a) and (a) in two ways.
  CHECK(r_coefficient(a, PSentence(a, Sentence{"a"}), PSentence(a, Sentence{"a"}),
                      PSentence(a, Sentence{"a", "a"})) == 2);
  // (aa) from (a) and (a) in one way (the two words glue).
  CHECK(r_coefficient(a, PSentence(a, Sentence{"a"}), PSentence(a, Sentence{"a"}),
                      PSentence(a, Sentence{"aa"})) == 1);
  CHECK(r_coefficient(a, PSentence(a, Sentence{"a"}), PSentence(a, Sentence{"a"}),
                      PSentence(a, Sentence{"aaa"})) == 0);
}

TEST_CASE("enumeration covers every sentence of a size exactly once") {
  const Alphabet ab("ab");
  std::vector<Sentence> all = enumerate_sentences(ab, 2);
  CHECK(all.size() == 8);  // 2 splits times 4 maximal words
  std::set<Sentence> distinct(all.begin(), all.end());
  CHECK(distinct.size() == all.size());
  for (const Sentence& s : all) CHECK(s.size() == 2);

  std::vector<PSentence> ps = enumerate_psentences(ab, 2);
  std::set<std::string> texts;
  for (const PSentence& p : ps) texts.insert(p.text());
  CHECK(texts == std::set<std::string>{"(aa)", "(ab)", "(ba)", "(bb)", "(a,a)", "(a,b)", "(b,b)"});
  CHECK(enumerate_sentences(ab, 0).size() == 1);
  CHECK(enumerate_sentences(ab, 0)[0] == Sentence());
}
