#include "csym/sentence.hpp"

#include <numeric>
#include <stdexcept>

namespace csym {
namespace {

void check_no_empty_word(const std::vector<Word>& words) {
  for (const Word& w : words)
    if (w.empty())
      throw std::invalid_argument("sentence may not contain an empty word");
}

std::string render(const std::vector<Word>& words, bool weak) {
  std::string out = "(";
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out += ',';
    if (weak && words[i].empty())
      out += '-';
    else
      out += words[i];
  }
  out += ')';
  return out;
}

std::vector<Word> parse_words(std::string_view text, bool weak) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("sentence text must be parenthesized: '" + std::string(text) +
                                "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Word> words;
  if (body.empty()) return words;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string_view piece =
        comma == std::string_view::npos ? body.substr(start) : body.substr(start, comma - start);
    if (piece == "-" && weak)
      words.emplace_back();
    else if (piece.empty())
      throw std::invalid_argument("empty word in sentence text '" + std::string(text) + "'");
    else
      words.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return words;
}

}  // namespace

Sentence::Sentence(std::initializer_list<Word> words) : words_(words) {
  check_no_empty_word(words_);
}

Sentence::Sentence(std::vector<Word> words) : words_(std::move(words)) {
  check_no_empty_word(words_);
}

int Sentence::size() const {
  return std::accumulate(words_.begin(), words_.end(), 0,
                         [](int acc, const Word& w) { return acc + static_cast<int>(w.size()); });
}

Word Sentence::maximal_word() const {
  Word out;
  for (const Word& w : words_) out += w;
  return out;
}

std::vector<int> Sentence::word_lengths() const {
  std::vector<int> out;
  out.reserve(words_.size());
  for (const Word& w : words_) out.push_back(static_cast<int>(w.size()));
  return out;
}

std::string Sentence::text() const { return render(words_, /*weak=*/false); }

Sentence Sentence::parse(std::string_view text) {
  return Sentence(parse_words(text, /*weak=*/false));
}

bool Sentence::over(const Alphabet& a) const {
  for (const Word& w : words_)
    for (char c : w)
      if (!a.contains(c)) return false;
  return true;
}

void Sentence::require_over(const Alphabet& a) const {
  for (const Word& w : words_)
    for (char c : w) a.rank(c);
}

int WeakSentence::size() const {
  return std::accumulate(words_.begin(), words_.end(), 0,
                         [](int acc, const Word& w) { return acc + static_cast<int>(w.size()); });
}

Sentence WeakSentence::flatten() const {
  std::vector<Word> out;
  for (const Word& w : words_)
    if (!w.empty()) out.push_back(w);
  return Sentence(std::move(out));
}

std::string WeakSentence::text() const { return render(words_, /*weak=*/true); }

WeakSentence WeakSentence::parse(std::string_view text) {
  return WeakSentence(parse_words(text, /*weak=*/true));
}

}  // namespace csym
