#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csym/alphabet.hpp"

namespace csym {

// A word is a finite string of colors.
using Word = std::string;

// A sentence is a finite list of nonempty words; the empty sentence () is
// the unit index everywhere. Structural value type: comparison operators
// are alphabet-independent (used for map keys), order-aware comparisons
// live in sentence_ops.
class Sentence {
 public:
  Sentence() = default;
  Sentence(std::initializer_list<Word> words);
  explicit Sentence(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_[static_cast<size_t>(i)]; }

  // Number of words, written l(I).
  int length() const { return static_cast<int>(words_.size()); }
  // Total number of letters, written |I|; the grading degree.
  int size() const;
  bool empty() const { return words_.empty(); }

  // Concatenation of all words, written w(I).
  Word maximal_word() const;
  // Word sizes (|w_1|, ..., |w_k|), written wl(I); a composition of |I|.
  std::vector<int> word_lengths() const;

  // Canonical text form "(ab,c)"; the empty sentence renders "()".
  std::string text() const;
  // Inverse of text(); accepts exactly the canonical form.
  static Sentence parse(std::string_view text);

  // True when every letter belongs to a.
  bool over(const Alphabet& a) const;
  // Throws std::invalid_argument naming the first foreign color.
  void require_over(const Alphabet& a) const;

  auto operator<=>(const Sentence&) const = default;

 private:
  std::vector<Word> words_;
};

// A weak sentence may contain empty words (rendered "-", e.g. "(-,ab,-,c)").
class WeakSentence {
 public:
  WeakSentence() = default;
  WeakSentence(std::initializer_list<Word> words) : words_(words) {}
  explicit WeakSentence(std::vector<Word> words) : words_(std::move(words)) {}

  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_[static_cast<size_t>(i)]; }
  int length() const { return static_cast<int>(words_.size()); }
  int size() const;

  // Removes empty words, keeping the order of the rest.
  Sentence flatten() const;

  std::string text() const;
  static WeakSentence parse(std::string_view text);

  auto operator<=>(const WeakSentence&) const = default;

 private:
  std::vector<Word> words_;
};

}  // namespace csym
