#include "csym/poly.hpp"

#include <functional>
#include <stdexcept>

namespace csym {

namespace {

void check_monomial(const TruncatedPoly::Monomial& m, int num_slots) {
  int last = 0;
  for (const auto& [slot, word] : m) {
    if (slot < 1 || slot > num_slots)
      throw std::invalid_argument("monomial slot out of range [1, " +
                                  std::to_string(num_slots) + "]");
    if (slot <= last) throw std::invalid_argument("monomial slots must strictly increase");
    if (word.empty()) throw std::invalid_argument("monomial words must be nonempty");
    last = slot;
  }
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string monomial_text(const TruncatedPoly::Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& [slot, word] : m) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(slot) + "(" + word + ")";
  }
  return out;
}

}  // namespace

TruncatedPoly::TruncatedPoly(int num_slots) : num_slots_(num_slots) {
  if (num_slots < 0) throw std::invalid_argument("slot count must be non-negative");
}

void TruncatedPoly::add_term(const Monomial& m, const Rational& c) {
  check_monomial(m, num_slots_);
  Rational& entry = terms_[m];
  entry += c;
  if (entry == 0) terms_.erase(m);
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
  if (num_slots_ != o.num_slots_) throw std::invalid_argument("slot count mismatch");
  TruncatedPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const {
  if (num_slots_ != o.num_slots_) throw std::invalid_argument("slot count mismatch");
  TruncatedPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  if (num_slots_ != o.num_slots_) throw std::invalid_argument("slot count mismatch");
  TruncatedPoly out(num_slots_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      // Merge by slot; words landing in one slot concatenate, left first.
      Monomial merged;
      size_t i = 0, j = 0;
      while (i < m1.size() || j < m2.size()) {
        if (j == m2.size() || (i < m1.size() && m1[i].first < m2[j].first))
          merged.push_back(m1[i++]);
        else if (i == m1.size() || m2[j].first < m1[i].first)
          merged.push_back(m2[j++]);
        else {
          merged.emplace_back(m1[i].first, m1[i].second + m2[j].second);
          ++i;
          ++j;
        }
      }
      out.add_term(merged, c1 * c2);
    }
  }
  return out;
}

std::string TruncatedPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    out += rational_text(mag) + "*" + monomial_text(m);
  }
  return out;
}

TruncatedPoly TruncatedPoly::realize_M(const Alphabet& a, const Sentence& i, int num_slots) {
  i.require_over(a);
  TruncatedPoly out(num_slots);
  size_t k = i.length();
  if (k > static_cast<size_t>(num_slots)) return out;  // truncated away
  std::vector<int> slots(k, 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int low) {
    if (pos == k) {
      Monomial m;
      for (size_t t = 0; t < k; ++t) m.emplace_back(slots[t], i.word(t));
      out.add_term(m, 1);
      return;
    }
    for (int s = low; s <= num_slots; ++s) {
      slots[pos] = s;
      rec(pos + 1, s + 1);
    }
  };
  rec(0, 1);
  return out;
}

TruncatedPoly TruncatedPoly::realize(const Alphabet& a, const FormalSum& f, int num_slots) {
  if (f.algebra() != Algebra::QSymA)
    throw std::invalid_argument("realize expects the colored quasisymmetric algebra, got " +
                                algebra_name(f.algebra()));
  TruncatedPoly out(num_slots);
  for (const auto& [k, c] : f.terms()) {
    TruncatedPoly piece = realize_M(a, k.sentence(), num_slots);
    for (const auto& [m, pc] : piece.terms()) out.add_term(m, pc * c);
  }
  return out;
}

bool TruncatedPoly::is_quasisymmetric() const {
  // Group terms by the word sequence; every group must carry one common
  // coefficient on all C(N, k) slot choices.
  std::map<std::vector<Word>, std::pair<Rational, long>> groups;
  for (const auto& [m, c] : terms_) {
    std::vector<Word> words;
    words.reserve(m.size());
    for (const auto& [slot, word] : m) words.push_back(word);
    auto [it, fresh] = groups.try_emplace(std::move(words), std::make_pair(c, 0L));
    if (!fresh && it->second.first != c) return false;
    ++it->second.second;
  }
  for (const auto& [words, info] : groups)
    if (info.second != binomial(num_slots_, static_cast<int>(words.size()))) return false;
  return true;
}

FormalSum TruncatedPoly::to_M(const Alphabet& a) const {
  if (!is_quasisymmetric())
    throw std::invalid_argument("to_M: polynomial is not quasisymmetric in its slots");
  FormalSum out(Algebra::QSymA);
  for (const auto& [m, c] : terms_) {
    bool initial = true;
    for (size_t t = 0; t < m.size(); ++t)
      if (m[t].first != static_cast<int>(t) + 1) initial = false;
    if (!initial) continue;
    std::vector<Word> words;
    words.reserve(m.size());
    for (const auto& [slot, word] : m) words.push_back(word);
    Sentence s(std::move(words));
    s.require_over(a);
    out.add_term(BasisKey(Algebra::QSymA, Basis::M, std::move(s)), c);
  }
  return out;
}

}  // namespace csym
