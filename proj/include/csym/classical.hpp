#pragma once

#include "csym/formal.hpp"

namespace csym {

// Classical Sym / QSym / NSym layer. The primary product/coproduct/
// antipode kernels for m, h, M, H route through the colored kernels over a
// one-letter alphabet (compositions and unary sentences are in bijection
// via word lengths); the *_direct functions implement the classical
// formulas from scratch and are used as an independent cross-check.

// Bijection with the unary colored world.
Sentence unary_sentence(const Composition& c);            // (2,1) -> (aa,a)
Composition word_length_composition(const Sentence& s);   // (ab,c) -> (2,1)
const Alphabet& unary_alphabet();                         // the fixed {a}

// Primary kernels (distinguished bases m, h of Sym; M of QSym; H of NSym),
// plus the ribbon product rule R_alpha R_beta = R_(alpha.beta) + R_(alpha
// near beta).
FormalSum classical_product(const FormalSum& f, const FormalSum& g);
TensorSum classical_coproduct(const FormalSum& f);
FormalSum classical_antipode(const FormalSum& f);
FormalSum classical_unit(Algebra alg);

// Independent direct implementations of the classical structure formulas.
FormalSum m_product_direct(const Partition& lambda, const Partition& mu);
TensorSum m_coproduct_direct(const Partition& lambda);
FormalSum h_product_direct(const Partition& lambda, const Partition& mu);
TensorSum h_coproduct_direct(const Partition& lambda);
FormalSum M_product_direct(const Composition& alpha, const Composition& beta);
TensorSum M_coproduct_direct(const Composition& alpha);
FormalSum H_product_direct(const Composition& alpha, const Composition& beta);
TensorSum H_coproduct_direct(const Composition& alpha);
FormalSum ribbon_product(const Composition& alpha, const Composition& beta);

// Semistandard Young tableaux of a partition shape, composition content;
// the classical Kostka number. Independent of the colored tableau code.
long classical_kostka(const Partition& shape, const Composition& content);
// Number of SSYT of the shape with entries in [1, max_entry].
long count_ssyt(const Partition& shape, int max_entry);

// Basis conversions inside one classical algebra:
//   QSym: M <-> F;  NSym: H <-> R <-> E;  Sym: m <-> h <-> e <-> s.
FormalSum convert_classical(const FormalSum& f, Basis target);

// omega involution on Sym: h_n <-> e_n, s_lambda -> s_conjugate(lambda).
FormalSum omega(const FormalSum& f);

// Forgetful map NSym -> Sym, H_alpha -> h_sort(alpha).
FormalSum chi_classical(const FormalSum& f);
// Inclusion Sym -> QSym, m_lambda -> sum of M over rearrangements.
FormalSum iota_classical(const FormalSum& f);
// Inverse of iota_classical on its image (throws when not symmetric).
FormalSum m_from_M_classical(const FormalSum& f);

}  // namespace csym
