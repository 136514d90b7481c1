#pragma once

#include "csym/formal.hpp"

namespace csym {

// Unified operation surface over all seven algebras and all legal bases.
// Inputs in a non-distinguished basis (s*, s, F, R, E, e, classical s) are
// converted to the distinguished basis first; product/coproduct/antipode
// results come back in the distinguished basis.

FormalSum product(const Alphabet& a, const FormalSum& f, const FormalSum& g);
TensorSum coproduct(const Alphabet& a, const FormalSum& f);
FormalSum antipode(const Alphabet& a, const FormalSum& f);
Rational counit(const Alphabet& a, const FormalSum& f);
FormalSum unit(const Alphabet& a, Algebra alg);

// Rewrite f in the target basis of the same algebra. Colored targets:
// m <-> s* in SymA, h <-> s in PSymA; classical targets as in
// convert_classical. Converting to the current basis is the identity.
FormalSum convert(const Alphabet& a, const FormalSum& f, Basis target);
// Rewrite into the distinguished basis of f's algebra.
FormalSum to_distinguished(const Alphabet& a, const FormalSum& f);

// Duality pairing. The two arguments must be one element each of a dual
// pair: NSymA/QSymA, PSymA/SymA, NSym/QSym, or Sym/Sym (self-dual);
// either argument order is accepted. Any legal bases: both sides are
// converted to the defining dual pair of bases first.
Rational pair(const Alphabet& a, const FormalSum& f, const FormalSum& g);
// Componentwise pairing of tensors (used by the duality checks).
Rational pair_tensor(const Alphabet& a, const TensorSum& f, const TensorSum& g);

// chi: NSymA -> PSymA or NSym -> Sym (accepts any legal basis, converts
// first; results in h / classical h).
FormalSum apply_chi(const Alphabet& a, const FormalSum& f);
// iota: SymA -> QSymA or Sym -> QSym.
FormalSum apply_iota(const Alphabet& a, const FormalSum& f);
// Uncoloring: colored algebra -> classical counterpart. Schur-type bases
// are expanded through m / h first.
FormalSum apply_uncolor(const Alphabet& a, const FormalSum& f);

}  // namespace csym
