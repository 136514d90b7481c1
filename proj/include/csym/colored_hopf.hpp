#pragma once

#include "csym/formal.hpp"

namespace csym {

// Hopf structure of the four colored algebras on their distinguished
// bases (NSymA: H, QSymA: M, SymA: m, PSymA: h). Per-key kernels plus
// linear extensions. Throws std::invalid_argument on keys outside the
// distinguished basis or letters outside a.

// Products of single basis elements.
FormalSum product_H(const Sentence& i, const Sentence& j);
FormalSum product_M(const Sentence& i, const Sentence& j);
FormalSum product_h(const Alphabet& a, const PSentence& p, const PSentence& q);
FormalSum product_m(const Alphabet& a, const PSentence& p, const PSentence& s);

// Coproducts of single basis elements.
TensorSum coproduct_H(const Sentence& i);
TensorSum coproduct_M(const Sentence& i);
TensorSum coproduct_h(const Alphabet& a, const PSentence& q);
TensorSum coproduct_m(const Alphabet& a, const PSentence& p);

// Antipodes of single basis elements.
FormalSum antipode_H(const Sentence& i);
FormalSum antipode_M(const Sentence& i);
FormalSum antipode_h(const Alphabet& a, const PSentence& p);
FormalSum antipode_m(const Alphabet& a, const PSentence& p);

// Linear extensions over a whole sum in the distinguished basis.
FormalSum colored_product(const Alphabet& a, const FormalSum& f, const FormalSum& g);
TensorSum colored_coproduct(const Alphabet& a, const FormalSum& f);
FormalSum colored_antipode(const Alphabet& a, const FormalSum& f);
// Coefficient of the empty index.
Rational colored_counit(const FormalSum& f);
// The unit element 1 of an algebra, in its distinguished basis.
FormalSum colored_unit(const Alphabet& a, Algebra alg);

// chi: NSymA -> PSymA, H_I -> h_sort(I). An algebra and coalgebra map.
FormalSum chi(const Alphabet& a, const FormalSum& f);
// iota: SymA -> QSymA, m_P -> sum of M over rearrangements of P.
FormalSum iota(const Alphabet& a, const FormalSum& f);

// Raised when a QSymA element in the M basis is not symmetric; names a
// violating pair of sentences with a common sort but distinct coefficients.
class not_symmetric_error : public std::invalid_argument {
 public:
  not_symmetric_error(const Sentence& x, const Sentence& y);
  Sentence left, right;
};
// Inverse of iota on its image: rewrite a symmetric M-sum in the m basis.
FormalSum m_from_M(const Alphabet& a, const FormalSum& f);

// Uncoloring on distinguished bases: index -> its word-length composition
// (sorted for m/h). NSymA->NSym, QSymA->QSym, SymA->Sym (m), PSymA->Sym (h).
FormalSum uncolor_distinguished(const Alphabet& a, const FormalSum& f);

}  // namespace csym
