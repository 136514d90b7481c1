#include "csym/alphabet.hpp"

#include <cctype>
#include <stdexcept>

#include "csym/rational.hpp"

namespace csym {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits = [](const std::string& s) {
    size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  Rational r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Alphabet::Alphabet() {
  for (int& r : rank_) r = -1;
}

Alphabet::Alphabet(std::string_view letters) {
  for (int& r : rank_) r = -1;
  for (char c : letters) {
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("color '") + c + "' is not a letter");
    if (rank_[static_cast<unsigned char>(c)] >= 0)
      throw std::invalid_argument(std::string("duplicate color '") + c + "' in alphabet");
    rank_[static_cast<unsigned char>(c)] = static_cast<int>(letters_.size());
    letters_.push_back(c);
  }
}

int Alphabet::rank(char c) const {
  int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0)
    throw std::invalid_argument(std::string("unknown color '") + c + "' for alphabet \"" +
                                letters_ + "\"");
  return r;
}

bool Alphabet::word_less(std::string_view v, std::string_view w) const {
  size_t n = std::min(v.size(), w.size());
  for (size_t i = 0; i < n; ++i) {
    int rv = rank(v[i]), rw = rank(w[i]);
    if (rv != rw) return rv < rw;
  }
  return v.size() < w.size();
}

}  // namespace csym
