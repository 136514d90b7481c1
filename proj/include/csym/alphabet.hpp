#pragma once

#include <string>
#include <string_view>

namespace csym {

// A finite totally ordered set of colors. Each color is a single ASCII
// letter (case-sensitive) and the declared sequence fixes the order, so
// Alphabet("ba") means b < a regardless of byte values.
class Alphabet {
 public:
  Alphabet();  // the empty alphabet
  explicit Alphabet(std::string_view letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  // Position of c in the declared order; throws if c is not a color of this
  // alphabet (the "unknown color" error every consumer relies on).
  int rank(char c) const;
  char letter(int i) const { return letters_.at(static_cast<size_t>(i)); }

  bool letter_less(char x, char y) const { return rank(x) < rank(y); }

  // Lexicographic order on words in the declared letter order.
  bool word_less(std::string_view v, std::string_view w) const;

 private:
  std::string letters_;
  int rank_[256] = {};  // -1 when absent; set up in the constructor
};

}  // namespace csym
