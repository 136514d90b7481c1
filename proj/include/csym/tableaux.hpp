#pragma once

#include <vector>

#include "csym/formal.hpp"

namespace csym {

// Colored tableaux. The diagram of a p-sentence shape P = (w_1, ..., w_k)
// has k left-justified rows, row r holding |w_r| cells colored by the
// letters of w_r; rows are listed top-down, so row lengths weakly
// decrease. A filling assigns a positive entry to each cell; it is a
// colored semistandard tableau when entries weakly increase along rows and
// strictly increase down columns.
struct ColoredTableau {
  Sentence shape;                         // a p-sentence
  std::vector<std::vector<int>> entries;  // ragged, same profile as shape
};

// The type of a tableau: word u_v collects the colors of the cells with
// entry v, read lowest row first, left to right within a row, then upward.
// Values up to the maximum entry used appear, so unused values contribute
// empty words.
WeakSentence tableau_type(const ColoredTableau& t);

// All colored semistandard tableaux of the shape with entries in
// [1, max_entry], in row-major lexicographic order of the entry arrays.
std::vector<ColoredTableau> enumerate_cssyt(const Alphabet& a, const PSentence& shape,
                                            int max_entry);

// Colored Kostka number: tableaux of shape p whose type equals the
// p-sentence q word for word.
long colored_kostka(const Alphabet& a, const PSentence& p, const PSentence& q);

// Matrix order on p-sentences of one size: reverse-lexicographic on the
// word-length partition, ties by plain lexicographic comparison of the
// canonical text form.
bool matrix_order_before(const Alphabet& a, const PSentence& x, const PSentence& y);
std::vector<PSentence> psentences_in_matrix_order(const Alphabet& a, int n);

// Colored Kostka matrix over all p-sentences of size n in matrix order;
// upper unitriangular.
struct KostkaMatrix {
  std::vector<PSentence> order;
  std::vector<std::vector<long>> entries;  // entries[i][j] = K(order[i], order[j])
};
KostkaMatrix kostka_matrix(const Alphabet& a, int n);

// s*_P = sum over p-sentence types Q of K(P, Q) m_Q; the types range over
// tableaux of shape P with entries at most |P| whose type is a gap-free
// p-sentence.
FormalSum dual_schur_in_m(const Alphabet& a, const PSentence& shape);
// s_P in the h basis, by back-substitution through h_Q = sum K(P, Q) s_P.
FormalSum schur_in_h(const Alphabet& a, const PSentence& shape);

// Conversions between distinguished and Schur-type bases.
FormalSum sstar_to_m(const Alphabet& a, const FormalSum& f);   // SymA
FormalSum m_to_sstar(const Alphabet& a, const FormalSum& f);   // SymA
FormalSum s_to_h(const Alphabet& a, const FormalSum& f);       // PSymA
FormalSum h_to_s(const Alphabet& a, const FormalSum& f);       // PSymA

}  // namespace csym
