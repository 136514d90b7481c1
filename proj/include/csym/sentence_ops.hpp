#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "csym/alphabet.hpp"
#include "csym/sentence.hpp"

namespace csym {

// Graded lexicographic order on words: shorter first, ties by the
// alphabet's lexicographic order. Throws on colors outside a.
std::strong_ordering cmp_graded_lex(const Alphabet& a, const Word& v, const Word& w);

// Canonical order used to sort sentences: strictly larger words first,
// equal-size words ascending lexicographically. Returns true when u must
// come before v.
bool canonical_word_before(const Alphabet& a, const Word& u, const Word& v);

// A p-sentence: a sentence whose words are in canonical order (weakly
// decreasing sizes; equal sizes ascending lexicographically). Constructed
// either by validating a sentence or by sorting one.
class PSentence {
 public:
  PSentence() = default;  // the empty p-sentence
  // Validates canonical order; throws std::invalid_argument naming the
  // canonical form when s is out of order.
  PSentence(const Alphabet& a, Sentence s);

  const Sentence& sentence() const { return s_; }
  int length() const { return s_.length(); }
  int size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  std::string text() const { return s_.text(); }

  auto operator<=>(const PSentence&) const = default;

 private:
  struct sorted_tag {};
  PSentence(Sentence s, sorted_tag) : s_(std::move(s)) {}
  friend PSentence sort_sentence(const Alphabet&, const Sentence&);
  friend PSentence sort_weak_sentence(const Alphabet&, const WeakSentence&);

  Sentence s_;
};

bool is_canonical(const Alphabet& a, const Sentence& s);

// sort(I): the p-sentence with the same multiset of words as I.
PSentence sort_sentence(const Alphabet& a, const Sentence& s);
// sort of a weak sentence = sort of its flattening.
PSentence sort_weak_sentence(const Alphabet& a, const WeakSentence& w);

// I · J: concatenation of the word lists.
Sentence concat(const Sentence& i, const Sentence& j);
// I ⊙ J: concatenation with the last word of I glued to the first word of
// J. Requires both nonempty.
Sentence near_concat(const Sentence& i, const Sentence& j);
// I^r = (w_k, ..., w_1).
Sentence reversal(const Sentence& i);
// I^c: same maximal word, split exactly where I is not.
Sentence complement(const Sentence& i);

// True when i refines j: same maximal word and j is obtained by
// concatenating adjacent words of i.
bool refines(const Sentence& i, const Sentence& j);
// All refinements of i (all ways to split its words further).
std::vector<Sentence> refinements(const Sentence& i);
// All coarsenings of i (all ways to merge adjacent words).
std::vector<Sentence> coarsenings(const Sentence& i);

// Right containment: all pairs (quotient, part) such that part is
// right-contained in i with the given quotient; word i is split as
// w = quotient_word · part_word independently in every position.
struct Splitting {
  WeakSentence quotient;
  WeakSentence part;
};
std::vector<Splitting> right_splittings(const Sentence& i);
// Left containment analogue: w = part_word · quotient_word.
std::vector<Splitting> left_splittings(const Sentence& i);

// J ⊆_R I test plus quotient (I/_R J); a J of different length is simply
// not contained.
bool right_contained(const WeakSentence& j, const Sentence& i, WeakSentence* quotient = nullptr);
bool left_contained(const WeakSentence& j, const Sentence& i, WeakSentence* quotient = nullptr);

// All shuffles of the word lists, with multiplicity.
std::vector<Sentence> shuffles(const Sentence& i, const Sentence& j);
// Quasishuffle: shuffles where any consecutive pair (word of i, word of j)
// in that order may be concatenated; multiset result.
std::map<Sentence, long> quasishuffle(const Sentence& i, const Sentence& j);

// All distinct rearrangements of the words of a p-sentence.
std::vector<Sentence> rearrangements(const PSentence& p);

// Number of pairs of weak sentences (Y, Z) of length l(Q) with
// sort(Y) = P, sort(Z) = S and Q = (y_1 z_1, ..., y_m z_m).
long r_coefficient(const Alphabet& a, const PSentence& p, const PSentence& s, const PSentence& q);

// Submultiset relation on the word multisets of p-sentences, and the
// multiset difference (defined when q is a submultiset of p).
bool submultiset(const PSentence& q, const PSentence& p);
PSentence multiset_difference(const Alphabet& a, const PSentence& p, const PSentence& q);
// All distinct submultisets of p's words, as p-sentences.
std::vector<PSentence> submultisets(const Alphabet& a, const PSentence& p);

// All sentences of total size n over a: for each subset of split positions
// (binary-counter order), every maximal word in lexicographic order.
// Sizes 2^(n-1) * |a|^n for n >= 1; the single empty sentence for n = 0.
std::vector<Sentence> enumerate_sentences(const Alphabet& a, int n);
// All p-sentences of total size n, in the order induced by
// enumerate_sentences.
std::vector<PSentence> enumerate_psentences(const Alphabet& a, int n);

}  // namespace csym
