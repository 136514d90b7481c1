#pragma once

#include <compare>
#include <string>
#include <variant>

#include "csym/alphabet.hpp"
#include "csym/composition.hpp"
#include "csym/sentence.hpp"
#include "csym/sentence_ops.hpp"

namespace csym {

// The seven algebras. The colored ones are indexed by sentences or
// p-sentences over a declared alphabet; the classical ones by compositions
// or partitions.
enum class Algebra { NSymA, QSymA, SymA, PSymA, NSym, QSym, Sym };

enum class Basis {
  H,      // complete homogeneous, NSymA / NSym
  M,      // monomial, QSymA / QSym
  m,      // monomial, SymA / Sym
  h,      // complete homogeneous, PSymA / Sym
  s,      // Schur, PSymA / Sym
  sstar,  // dual Schur, SymA (renders "s*")
  F,      // fundamental, QSym
  R,      // ribbon, NSym
  E,      // elementary, NSym
  e,      // elementary, Sym
};

std::string algebra_name(Algebra a);
std::string basis_name(Basis b);  // the token used in text forms
bool algebra_is_colored(Algebra a);
// The basis a product/coproduct/antipode kernel is defined on.
Basis distinguished_basis(Algebra a);
// True when basis b indexes algebra a (e.g. sstar only in SymA).
bool basis_legal(Algebra a, Basis b);
// Bases whose colored index must be a p-sentence / whose classical index
// must be a partition.
bool basis_index_sorted(Basis b);

// One basis element: algebra + basis + index. The index is a sentence for
// colored algebras and a composition for classical ones; p-sentence and
// partition constraints are enforced by the factory functions below.
class BasisKey {
 public:
  BasisKey(Algebra alg, Basis basis, Sentence index);
  BasisKey(Algebra alg, Basis basis, Composition index);

  Algebra algebra() const { return alg_; }
  Basis basis() const { return basis_; }
  bool colored() const { return std::holds_alternative<Sentence>(index_); }
  const Sentence& sentence() const { return std::get<Sentence>(index_); }
  const Composition& composition() const { return std::get<Composition>(index_); }
  int degree() const { return degree_; }
  // Canonical text of the index alone, e.g. "(ab,c)".
  const std::string& index_text() const { return index_text_; }
  // Full text form, e.g. "M(ab,c)" or "s*(aa,a)".
  std::string text() const;

  bool operator==(const BasisKey& o) const;
  // Rendering order: degree, then index text, then basis, then algebra.
  bool operator<(const BasisKey& o) const;

 private:
  Algebra alg_;
  Basis basis_;
  std::variant<Sentence, Composition> index_;
  int degree_;
  std::string index_text_;
};

// Factories validating legality of (algebra, basis, index); the alphabet
// is needed where the index must be a canonical p-sentence.
BasisKey key_H(Sentence i);                               // NSymA
BasisKey key_M(Sentence i);                               // QSymA
BasisKey key_m(const Alphabet& a, const Sentence& p);     // SymA
BasisKey key_h(const Alphabet& a, const Sentence& p);     // PSymA
BasisKey key_s(const Alphabet& a, const Sentence& p);     // PSymA
BasisKey key_sstar(const Alphabet& a, const Sentence& p); // SymA
BasisKey key_m(const Alphabet& a, const PSentence& p);
BasisKey key_h(const Alphabet& a, const PSentence& p);
BasisKey key_s(const Alphabet& a, const PSentence& p);
BasisKey key_sstar(const Alphabet& a, const PSentence& p);
// Classical factory; validates partition-indexed bases.
BasisKey key_classical(Algebra alg, Basis b, Composition index);

}  // namespace csym
