#include "csym/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "csym/sentence_ops.hpp"

namespace csym {

WeakSentence tableau_type(const ColoredTableau& t) {
  if (t.entries.size() != static_cast<size_t>(t.shape.length()))
    throw std::invalid_argument("tableau has " + std::to_string(t.entries.size()) +
                                " rows but its shape " + t.shape.text() + " has " +
                                std::to_string(t.shape.length()));
  for (size_t r = 0; r < t.entries.size(); ++r)
    if (t.entries[r].size() != t.shape.word(static_cast<int>(r)).size())
      throw std::invalid_argument("row " + std::to_string(r + 1) + " of a tableau of shape " +
                                  t.shape.text() + " must hold " +
                                  std::to_string(t.shape.word(static_cast<int>(r)).size()) +
                                  " entries");
  int max_used = 0;
  for (const auto& row : t.entries)
    for (int v : row) max_used = std::max(max_used, v);
  std::vector<Word> words(static_cast<size_t>(max_used));
  size_t rows = t.entries.size();
  for (size_t r = rows; r-- > 0;) {  // lowest row first
    const Word& colors = t.shape.word(r);
    for (size_t c = 0; c < t.entries[r].size(); ++c) {
      int v = t.entries[r][c];
      if (v <= 0) throw std::invalid_argument("tableau entries must be positive");
      words[static_cast<size_t>(v) - 1].push_back(colors[c]);
    }
  }
  return WeakSentence(std::move(words));
}

std::vector<ColoredTableau> enumerate_cssyt(const Alphabet& a, const PSentence& shape,
                                            int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be non-negative");
  const Sentence& s = shape.sentence();
  s.require_over(a);
  size_t rows = s.length();
  std::vector<std::vector<int>> cells(rows);
  for (size_t r = 0; r < rows; ++r) cells[r].assign(s.word(r).size(), 0);

  std::vector<ColoredTableau> out;
  std::function<void(size_t, size_t)> rec = [&](size_t r, size_t c) {
    if (r == rows) {
      out.push_back(ColoredTableau{s, cells});
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == cells[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int low = 1;
    if (c > 0) low = std::max(low, cells[r][c - 1]);  // rows weakly increase
    if (r > 0 && c < cells[r - 1].size())
      low = std::max(low, cells[r - 1][c] + 1);  // columns strictly increase
    for (int v = low; v <= max_entry; ++v) {
      cells[r][c] = v;
      rec(nr, nc);
    }
  };
  rec(0, 0);
  return out;
}

long colored_kostka(const Alphabet& a, const PSentence& p, const PSentence& q) {
  if (p.size() != q.size()) return 0;
  WeakSentence target(q.sentence().words());
  long count = 0;
  for (const ColoredTableau& t : enumerate_cssyt(a, p, static_cast<int>(q.length())))
    if (tableau_type(t) == target) ++count;
  return count;
}

bool matrix_order_before(const Alphabet& a, const PSentence& x, const PSentence& y) {
  (void)a;
  std::vector<int> wx = x.sentence().word_lengths();
  std::vector<int> wy = y.sentence().word_lengths();
  if (wx != wy)
    // reverse-lexicographic: the lexicographically larger partition first
    return std::lexicographical_compare(wy.begin(), wy.end(), wx.begin(), wx.end());
  return x.text() < y.text();
}

std::vector<PSentence> psentences_in_matrix_order(const Alphabet& a, int n) {
  std::vector<PSentence> order = enumerate_psentences(a, n);
  std::sort(order.begin(), order.end(),
            [&](const PSentence& x, const PSentence& y) { return matrix_order_before(a, x, y); });
  return order;
}

namespace {

// Counts of every exact type produced by fillings of the shape with entries
// up to the total cell count; keyed by canonical p-sentence types only,
// which are the only ones a Kostka coefficient can refer to.
std::map<PSentence, long> type_counts(const Alphabet& a, const PSentence& shape) {
  std::map<PSentence, long> counts;
  int n = static_cast<int>(shape.size());
  for (const ColoredTableau& t : enumerate_cssyt(a, shape, n)) {
    WeakSentence type = tableau_type(t);
    bool gap_free = true;
    for (const Word& w : type.words())
      if (w.empty()) gap_free = false;
    if (!gap_free) continue;
    Sentence as_sentence(type.words());
    if (!is_canonical(a, as_sentence)) continue;
    ++counts[PSentence(a, as_sentence)];
  }
  return counts;
}

std::vector<std::vector<long>> unitriangular_inverse(const std::vector<std::vector<long>>& k) {
  size_t size = k.size();
  std::vector<std::vector<long>> inv(size, std::vector<long>(size, 0));
  for (size_t i = 0; i < size; ++i) inv[i][i] = 1;
  for (size_t i = 0; i < size; ++i)
    for (size_t j = i + 1; j < size; ++j) {
      long acc = 0;
      for (size_t l = i; l < j; ++l) acc += inv[i][l] * k[l][j];
      inv[i][j] = -acc;
    }
  return inv;
}

size_t position_of(const std::vector<PSentence>& order, const PSentence& p, const char* what) {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == p) return i;
  throw std::invalid_argument(std::string(what) + ": " + p.text() +
                              " not found in the matrix order");
}

}  // namespace

KostkaMatrix kostka_matrix(const Alphabet& a, int n) {
  KostkaMatrix km;
  km.order = psentences_in_matrix_order(a, n);
  size_t size = km.order.size();
  km.entries.assign(size, std::vector<long>(size, 0));
  for (size_t i = 0; i < size; ++i) {
    std::map<PSentence, long> row = type_counts(a, km.order[i]);
    for (size_t j = 0; j < size; ++j) {
      auto it = row.find(km.order[j]);
      if (it != row.end()) km.entries[i][j] = it->second;
    }
  }
  return km;
}

FormalSum dual_schur_in_m(const Alphabet& a, const PSentence& shape) {
  FormalSum out(Algebra::SymA);
  for (const auto& [type, count] : type_counts(a, shape))
    out.add_term(key_m(a, type), Rational(count));
  return out;
}

FormalSum schur_in_h(const Alphabet& a, const PSentence& shape) {
  int n = static_cast<int>(shape.size());
  KostkaMatrix km = kostka_matrix(a, n);
  std::vector<std::vector<long>> inv = unitriangular_inverse(km.entries);
  size_t j = position_of(km.order, shape, "schur_in_h");
  // h_Q = sum over P of K(P, Q) s_P inverts to s_(x_j) = sum_i inv[i][j] h_(x_i).
  FormalSum out(Algebra::PSymA);
  for (size_t i = 0; i <= j; ++i)
    if (inv[i][j] != 0) out.add_term(key_h(a, km.order[i]), Rational(inv[i][j]));
  return out;
}

namespace {

// Apply a per-degree expansion rule to the keys of one source basis,
// passing keys already in the target basis through unchanged.
FormalSum convert_schur_layer(
    const Alphabet& a, const FormalSum& f, Basis source, Basis target,
    const std::function<FormalSum(const Alphabet&, const PSentence&)>& expand) {
  return extend_linear(f.algebra(), f, [&](const BasisKey& k) -> FormalSum {
    if (k.basis() == target) return FormalSum(k);
    if (k.basis() != source)
      throw std::invalid_argument("cannot convert " + k.text() + " to " + basis_name(target));
    return expand(a, PSentence(a, k.sentence()));
  });
}

}  // namespace

FormalSum sstar_to_m(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() != Algebra::SymA)
    throw std::invalid_argument("sstar_to_m expects the colored symmetric algebra");
  return convert_schur_layer(a, f, Basis::sstar, Basis::m, dual_schur_in_m);
}

FormalSum m_to_sstar(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() != Algebra::SymA)
    throw std::invalid_argument("m_to_sstar expects the colored symmetric algebra");
  // s*_(x_i) = sum_j K[i][j] m_(x_j) inverts to m_(x_i) = sum_j inv[i][j] s*_(x_j).
  std::map<int, KostkaMatrix> matrices;
  std::map<int, std::vector<std::vector<long>>> inverses;
  return convert_schur_layer(a, f, Basis::m, Basis::sstar,
                             [&](const Alphabet& al, const PSentence& p) {
                               int n = static_cast<int>(p.size());
                               if (!matrices.count(n)) {
                                 matrices[n] = kostka_matrix(al, n);
                                 inverses[n] = unitriangular_inverse(matrices[n].entries);
                               }
                               const KostkaMatrix& km = matrices[n];
                               const auto& inv = inverses[n];
                               size_t i = position_of(km.order, p, "m_to_sstar");
                               FormalSum out(Algebra::SymA);
                               for (size_t j = i; j < km.order.size(); ++j)
                                 if (inv[i][j] != 0)
                                   out.add_term(key_sstar(al, km.order[j]), Rational(inv[i][j]));
                               return out;
                             });
}

FormalSum s_to_h(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() != Algebra::PSymA)
    throw std::invalid_argument("s_to_h expects the colored partial-commutative algebra");
  return convert_schur_layer(a, f, Basis::s, Basis::h, schur_in_h);
}

FormalSum h_to_s(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() != Algebra::PSymA)
    throw std::invalid_argument("h_to_s expects the colored partial-commutative algebra");
  // Direct expansion: h_(x_j) = sum over i <= j of K[i][j] s_(x_i).
  std::map<int, KostkaMatrix> matrices;
  return convert_schur_layer(a, f, Basis::h, Basis::s,
                             [&](const Alphabet& al, const PSentence& q) {
                               int n = static_cast<int>(q.size());
                               if (!matrices.count(n)) matrices[n] = kostka_matrix(al, n);
                               const KostkaMatrix& km = matrices[n];
                               size_t j = position_of(km.order, q, "h_to_s");
                               FormalSum out(Algebra::PSymA);
                               for (size_t i = 0; i <= j; ++i)
                                 if (km.entries[i][j] != 0)
                                   out.add_term(key_s(al, km.order[i]),
                                                Rational(km.entries[i][j]));
                               return out;
                             });
}

}  // namespace csym
