#include "csym/sentence_ops.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace csym {
namespace {

// Split positions of a sentence: after how many letters of the maximal
// word each word boundary falls (the total size is excluded).
std::set<int> split_positions(const Sentence& s) {
  std::set<int> out;
  int acc = 0;
  for (int i = 0; i + 1 < s.length(); ++i) {
    acc += static_cast<int>(s.word(i).size());
    out.insert(acc);
  }
  return out;
}

Sentence from_split_positions(const Word& maximal, const std::set<int>& positions) {
  std::vector<Word> words;
  int start = 0;
  for (int p : positions) {
    words.push_back(maximal.substr(static_cast<size_t>(start), static_cast<size_t>(p - start)));
    start = p;
  }
  if (!maximal.empty()) words.push_back(maximal.substr(static_cast<size_t>(start)));
  return Sentence(std::move(words));
}

// All ways to cut one word into nonempty pieces.
std::vector<std::vector<Word>> word_splits(const Word& w) {
  std::vector<std::vector<Word>> out;
  int n = static_cast<int>(w.size());
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Word> pieces;
    int start = 0;
    for (int t = 0; t < n - 1; ++t) {
      if (mask & (1u << t)) {
        pieces.push_back(w.substr(static_cast<size_t>(start), static_cast<size_t>(t + 1 - start)));
        start = t + 1;
      }
    }
    pieces.push_back(w.substr(static_cast<size_t>(start)));
    out.push_back(std::move(pieces));
  }
  return out;
}

}  // namespace

std::strong_ordering cmp_graded_lex(const Alphabet& a, const Word& v, const Word& w) {
  for (char c : v) a.rank(c);
  for (char c : w) a.rank(c);
  if (v.size() != w.size()) return v.size() <=> w.size();
  if (a.word_less(v, w)) return std::strong_ordering::less;
  if (a.word_less(w, v)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool canonical_word_before(const Alphabet& a, const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() > v.size();
  return a.word_less(u, v);
}

bool is_canonical(const Alphabet& a, const Sentence& s) {
  s.require_over(a);
  for (int i = 0; i + 1 < s.length(); ++i)
    if (canonical_word_before(a, s.word(i + 1), s.word(i))) return false;
  return true;
}

PSentence::PSentence(const Alphabet& a, Sentence s) : s_(std::move(s)) {
  if (!is_canonical(a, s_))
    throw std::invalid_argument("sentence " + s_.text() + " is not in canonical order; its sort is " +
                                sort_sentence(a, s_).text());
}

PSentence sort_sentence(const Alphabet& a, const Sentence& s) {
  s.require_over(a);
  std::vector<Word> words = s.words();
  std::stable_sort(words.begin(), words.end(),
                   [&a](const Word& u, const Word& v) { return canonical_word_before(a, u, v); });
  return PSentence(Sentence(std::move(words)), PSentence::sorted_tag{});
}

PSentence sort_weak_sentence(const Alphabet& a, const WeakSentence& w) {
  return sort_sentence(a, w.flatten());
}

Sentence concat(const Sentence& i, const Sentence& j) {
  std::vector<Word> words = i.words();
  words.insert(words.end(), j.words().begin(), j.words().end());
  return Sentence(std::move(words));
}

Sentence near_concat(const Sentence& i, const Sentence& j) {
  if (i.empty() || j.empty())
    throw std::invalid_argument("near concatenation requires nonempty sentences");
  std::vector<Word> words = i.words();
  words.back() += j.word(0);
  words.insert(words.end(), j.words().begin() + 1, j.words().end());
  return Sentence(std::move(words));
}

Sentence reversal(const Sentence& i) {
  std::vector<Word> words(i.words().rbegin(), i.words().rend());
  return Sentence(std::move(words));
}

Sentence complement(const Sentence& i) {
  Word maximal = i.maximal_word();
  std::set<int> splits = split_positions(i);
  std::set<int> other;
  for (int p = 1; p < static_cast<int>(maximal.size()); ++p)
    if (!splits.count(p)) other.insert(p);
  return from_split_positions(maximal, other);
}

bool refines(const Sentence& i, const Sentence& j) {
  if (i.maximal_word() != j.maximal_word()) return false;
  std::set<int> si = split_positions(i), sj = split_positions(j);
  return std::includes(si.begin(), si.end(), sj.begin(), sj.end());
}

std::vector<Sentence> refinements(const Sentence& i) {
  std::vector<Sentence> out{Sentence{}};
  for (const Word& w : i.words()) {
    std::vector<Sentence> next;
    for (const auto& pieces : word_splits(w))
      for (const Sentence& prefix : out) {
        std::vector<Word> words = prefix.words();
        words.insert(words.end(), pieces.begin(), pieces.end());
        next.push_back(Sentence(std::move(words)));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Sentence> coarsenings(const Sentence& i) {
  std::vector<Sentence> out;
  if (i.empty()) return {i};
  int boundaries = i.length() - 1;
  for (unsigned mask = 0; mask < (1u << boundaries); ++mask) {
    std::vector<Word> words{i.word(0)};
    for (int t = 0; t < boundaries; ++t) {
      if (mask & (1u << t))
        words.back() += i.word(t + 1);  // merge boundary t
      else
        words.push_back(i.word(t + 1));
    }
    out.push_back(Sentence(std::move(words)));
  }
  return out;
}

std::vector<Splitting> right_splittings(const Sentence& i) {
  std::vector<Splitting> out{{WeakSentence{}, WeakSentence{}}};
  for (const Word& w : i.words()) {
    std::vector<Splitting> next;
    for (size_t cut = 0; cut <= w.size(); ++cut) {
      Word head = w.substr(0, cut), tail = w.substr(cut);
      for (const Splitting& prefix : out) {
        std::vector<Word> q = prefix.quotient.words(), p = prefix.part.words();
        q.push_back(head);
        p.push_back(tail);
        next.push_back({WeakSentence(std::move(q)), WeakSentence(std::move(p))});
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Splitting> left_splittings(const Sentence& i) {
  std::vector<Splitting> out;
  for (Splitting s : right_splittings(i)) {
    std::swap(s.quotient, s.part);
    out.push_back(std::move(s));
  }
  return out;
}

bool right_contained(const WeakSentence& j, const Sentence& i, WeakSentence* quotient) {
  if (j.length() != i.length()) return false;
  std::vector<Word> q;
  for (int t = 0; t < i.length(); ++t) {
    const Word &w = i.word(t), &v = j.word(t);
    if (v.size() > w.size() || w.substr(w.size() - v.size()) != v) return false;
    q.push_back(w.substr(0, w.size() - v.size()));
  }
  if (quotient) *quotient = WeakSentence(std::move(q));
  return true;
}

bool left_contained(const WeakSentence& j, const Sentence& i, WeakSentence* quotient) {
  if (j.length() != i.length()) return false;
  std::vector<Word> q;
  for (int t = 0; t < i.length(); ++t) {
    const Word &w = i.word(t), &v = j.word(t);
    if (v.size() > w.size() || w.substr(0, v.size()) != v) return false;
    q.push_back(w.substr(v.size()));
  }
  if (quotient) *quotient = WeakSentence(std::move(q));
  return true;
}

namespace {

void shuffle_rec(const std::vector<Word>& a, size_t ia, const std::vector<Word>& b, size_t ib,
                 std::vector<Word>& acc, std::vector<Sentence>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(Sentence(acc));
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    shuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

void quasishuffle_rec(const std::vector<Word>& a, size_t ia, const std::vector<Word>& b, size_t ib,
                      std::vector<Word>& acc, std::map<Sentence, long>& out) {
  if (ia == a.size() && ib == b.size()) {
    ++out[Sentence(acc)];
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    quasishuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    quasishuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    acc.push_back(a[ia] + b[ib]);  // concatenate the pair, left sentence's word first
    quasishuffle_rec(a, ia + 1, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Sentence> shuffles(const Sentence& i, const Sentence& j) {
  std::vector<Sentence> out;
  std::vector<Word> acc;
  shuffle_rec(i.words(), 0, j.words(), 0, acc, out);
  return out;
}

std::map<Sentence, long> quasishuffle(const Sentence& i, const Sentence& j) {
  std::map<Sentence, long> out;
  std::vector<Word> acc;
  quasishuffle_rec(i.words(), 0, j.words(), 0, acc, out);
  return out;
}

std::vector<Sentence> rearrangements(const PSentence& p) {
  std::vector<Word> words = p.sentence().words();
  std::sort(words.begin(), words.end());
  std::vector<Sentence> out;
  do {
    out.push_back(Sentence(words));
  } while (std::next_permutation(words.begin(), words.end()));
  return out;
}

long r_coefficient(const Alphabet& a, const PSentence& p, const PSentence& s,
                   const PSentence& q) {
  p.sentence().require_over(a);
  s.sentence().require_over(a);
  q.sentence().require_over(a);
  if (p.size() + s.size() != q.size()) return 0;
  std::vector<Word> target_p = p.sentence().words(), target_s = s.sentence().words();
  std::sort(target_p.begin(), target_p.end());
  std::sort(target_s.begin(), target_s.end());

  long count = 0;
  std::vector<Word> ys, zs;
  auto rec = [&](auto&& self, int at) -> void {
    if (at == q.length()) {
      std::vector<Word> py, pz;
      for (const Word& y : ys)
        if (!y.empty()) py.push_back(y);
      for (const Word& z : zs)
        if (!z.empty()) pz.push_back(z);
      std::sort(py.begin(), py.end());
      std::sort(pz.begin(), pz.end());
      if (py == target_p && pz == target_s) ++count;
      return;
    }
    const Word& w = q.sentence().word(at);
    for (size_t cut = 0; cut <= w.size(); ++cut) {
      ys.push_back(w.substr(0, cut));
      zs.push_back(w.substr(cut));
      self(self, at + 1);
      ys.pop_back();
      zs.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

bool submultiset(const PSentence& q, const PSentence& p) {
  std::map<Word, int> counts;
  for (const Word& w : p.sentence().words()) ++counts[w];
  for (const Word& w : q.sentence().words())
    if (--counts[w] < 0) return false;
  return true;
}

PSentence multiset_difference(const Alphabet& a, const PSentence& p, const PSentence& q) {
  if (!submultiset(q, p))
    throw std::invalid_argument("multiset difference: " + q.text() + " is not a submultiset of " +
                                p.text());
  std::map<Word, int> remove;
  for (const Word& w : q.sentence().words()) ++remove[w];
  std::vector<Word> rest;
  for (const Word& w : p.sentence().words()) {
    auto it = remove.find(w);
    if (it != remove.end() && it->second > 0)
      --it->second;
    else
      rest.push_back(w);
  }
  return sort_sentence(a, Sentence(std::move(rest)));
}

std::vector<PSentence> submultisets(const Alphabet& a, const PSentence& p) {
  // Distinct words with multiplicities; each submultiset picks 0..count of
  // each.
  std::vector<std::pair<Word, int>> groups;
  for (const Word& w : p.sentence().words()) {
    if (!groups.empty() && groups.back().first == w)
      ++groups.back().second;
    else
      groups.emplace_back(w, 1);
  }
  std::vector<PSentence> out;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    std::vector<Word> words;
    for (size_t g = 0; g < groups.size(); ++g)
      for (int t = 0; t < take[g]; ++t) words.push_back(groups[g].first);
    out.push_back(sort_sentence(a, Sentence(std::move(words))));
    size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return out;
}

std::vector<Sentence> enumerate_sentences(const Alphabet& a, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_sentences: negative size");
  if (n > 24) throw std::invalid_argument("enumerate_sentences: size too large");
  if (a.size() == 0 && n > 0) return {};
  if (n == 0) return {Sentence{}};
  std::vector<Sentence> out;
  unsigned masks = 1u << (n - 1);
  for (unsigned mask = 0; mask < masks; ++mask) {
    // Odometer over letter ranks gives maximal words in lexicographic order.
    std::vector<int> ranks(static_cast<size_t>(n), 0);
    while (true) {
      Word maximal;
      for (int r : ranks) maximal.push_back(a.letter(r));
      std::vector<Word> words;
      size_t start = 0;
      for (int t = 0; t < n - 1; ++t)
        if (mask & (1u << t)) {
          words.push_back(maximal.substr(start, static_cast<size_t>(t) + 1 - start));
          start = static_cast<size_t>(t) + 1;
        }
      words.push_back(maximal.substr(start));
      out.push_back(Sentence(std::move(words)));
      int pos = n - 1;
      while (pos >= 0 && ranks[static_cast<size_t>(pos)] == a.size() - 1)
        ranks[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++ranks[static_cast<size_t>(pos)];
    }
  }
  return out;
}

std::vector<PSentence> enumerate_psentences(const Alphabet& a, int n) {
  std::vector<PSentence> out;
  for (const Sentence& s : enumerate_sentences(a, n))
    if (is_canonical(a, s)) out.push_back(PSentence(a, s));
  return out;
}

}  // namespace csym
