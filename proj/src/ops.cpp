#include "csym/ops.hpp"

#include <stdexcept>
#include <utility>

#include "csym/classical.hpp"
#include "csym/colored_hopf.hpp"
#include "csym/tableaux.hpp"

namespace csym {

FormalSum convert(const Alphabet& a, const FormalSum& f, Basis target) {
  if (!basis_legal(f.algebra(), target))
    throw std::invalid_argument("basis " + basis_name(target) + " does not index " +
                                algebra_name(f.algebra()));
  if (algebra_is_colored(f.algebra())) {
    switch (f.algebra()) {
      case Algebra::SymA: return target == Basis::m ? sstar_to_m(a, f) : m_to_sstar(a, f);
      case Algebra::PSymA: return target == Basis::h ? s_to_h(a, f) : h_to_s(a, f);
      default: return f;  // NSymA and QSymA have a single basis
    }
  }
  return convert_classical(f, target);
}

FormalSum to_distinguished(const Alphabet& a, const FormalSum& f) {
  return convert(a, f, distinguished_basis(f.algebra()));
}

FormalSum product(const Alphabet& a, const FormalSum& f, const FormalSum& g) {
  if (f.algebra() != g.algebra())
    throw std::invalid_argument("product: algebra mismatch (" + algebra_name(f.algebra()) +
                                " vs " + algebra_name(g.algebra()) + ")");
  FormalSum df = to_distinguished(a, f), dg = to_distinguished(a, g);
  if (algebra_is_colored(f.algebra())) return colored_product(a, df, dg);
  return classical_product(df, dg);
}

TensorSum coproduct(const Alphabet& a, const FormalSum& f) {
  FormalSum df = to_distinguished(a, f);
  if (algebra_is_colored(f.algebra())) return colored_coproduct(a, df);
  return classical_coproduct(df);
}

FormalSum antipode(const Alphabet& a, const FormalSum& f) {
  FormalSum df = to_distinguished(a, f);
  if (algebra_is_colored(f.algebra())) return colored_antipode(a, df);
  return classical_antipode(df);
}

Rational counit(const Alphabet& a, const FormalSum& f) {
  FormalSum df = to_distinguished(a, f);
  if (algebra_is_colored(f.algebra())) return colored_counit(df);
  Rational c = 0;
  for (const auto& [k, v] : df.terms())
    if (k.degree() == 0) c += v;
  return c;
}

FormalSum unit(const Alphabet& a, Algebra alg) {
  if (algebra_is_colored(alg)) return colored_unit(a, alg);
  return classical_unit(alg);
}

namespace {

// The h-type side of each dual pair.
bool is_left_algebra(Algebra alg) {
  return alg == Algebra::NSymA || alg == Algebra::PSymA || alg == Algebra::NSym ||
         alg == Algebra::Sym;
}

Algebra dual_partner(Algebra alg) {
  switch (alg) {
    case Algebra::NSymA: return Algebra::QSymA;
    case Algebra::QSymA: return Algebra::NSymA;
    case Algebra::PSymA: return Algebra::SymA;
    case Algebra::SymA: return Algebra::PSymA;
    case Algebra::NSym: return Algebra::QSym;
    case Algebra::QSym: return Algebra::NSym;
    case Algebra::Sym: return Algebra::Sym;
  }
  throw std::invalid_argument("unknown algebra");
}

// Distinguished-basis key on the m-type side matching a key on the h-type
// side index for index.
BasisKey dual_key(const BasisKey& left) {
  switch (left.algebra()) {
    case Algebra::NSymA: return BasisKey(Algebra::QSymA, Basis::M, left.sentence());
    case Algebra::PSymA: return BasisKey(Algebra::SymA, Basis::m, left.sentence());
    case Algebra::NSym: return BasisKey(Algebra::QSym, Basis::M, left.composition());
    case Algebra::Sym: return BasisKey(Algebra::Sym, Basis::m, left.composition());
    default: throw std::invalid_argument("dual_key: not an h-type side algebra");
  }
}

// Orient (f, g) as (h-type side, m-type side) and validate the pair.
void orient_pair(const Alphabet& a, const FormalSum*& f, const FormalSum*& g,
                 FormalSum& f_store, FormalSum& g_store) {
  if (!is_left_algebra(f->algebra())) std::swap(f, g);
  if (!is_left_algebra(f->algebra()) || g->algebra() != dual_partner(f->algebra()))
    throw std::invalid_argument("no duality pairing between " + algebra_name(f->algebra()) +
                                " and " + algebra_name(g->algebra()));
  f_store = to_distinguished(a, *f);
  g_store = to_distinguished(a, *g);
  // Sym is self-dual through <h, m>: the left factor is rewritten in h.
  if (f_store.algebra() == Algebra::Sym) f_store = convert_classical(f_store, Basis::h);
}

}  // namespace

Rational pair(const Alphabet& a, const FormalSum& f, const FormalSum& g) {
  const FormalSum* pf = &f;
  const FormalSum* pg = &g;
  FormalSum df(f.algebra()), dg(g.algebra());
  orient_pair(a, pf, pg, df, dg);
  Rational total = 0;
  for (const auto& [k, c] : df.terms()) total += c * dg.coefficient(dual_key(k));
  return total;
}

Rational pair_tensor(const Alphabet& a, const TensorSum& f, const TensorSum& g) {
  // Componentwise: <x1 (x) x2, y1 (x) y2> = <x1, y1> <x2, y2>.
  if (!is_left_algebra(f.algebra()) || g.algebra() != dual_partner(f.algebra()))
    throw std::invalid_argument("no duality pairing between " + algebra_name(f.algebra()) +
                                " and " + algebra_name(g.algebra()));
  auto distinguish_left = [&](const BasisKey& k) {
    FormalSum one = to_distinguished(a, FormalSum(k));
    if (one.algebra() == Algebra::Sym) one = convert_classical(one, Basis::h);
    return one;
  };
  auto distinguish_right = [&](const BasisKey& k) { return to_distinguished(a, FormalSum(k)); };
  TensorSum df = map_tensor(f, f.algebra(), distinguish_left, distinguish_left);
  TensorSum dg = map_tensor(g, g.algebra(), distinguish_right, distinguish_right);
  Rational total = 0;
  for (const auto& [k, c] : df.terms())
    total += c * dg.coefficient(dual_key(k.first), dual_key(k.second));
  return total;
}

FormalSum apply_chi(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() == Algebra::NSymA) return chi(a, to_distinguished(a, f));
  if (f.algebra() == Algebra::NSym) return chi_classical(f);
  throw std::invalid_argument("chi expects a non-commutative algebra, got " +
                              algebra_name(f.algebra()));
}

FormalSum apply_iota(const Alphabet& a, const FormalSum& f) {
  if (f.algebra() == Algebra::SymA) return iota(a, to_distinguished(a, f));
  if (f.algebra() == Algebra::Sym) return iota_classical(f);
  throw std::invalid_argument("iota expects a symmetric algebra, got " +
                              algebra_name(f.algebra()));
}

FormalSum apply_uncolor(const Alphabet& a, const FormalSum& f) {
  if (!algebra_is_colored(f.algebra()))
    throw std::invalid_argument("uncoloring expects a colored algebra, got " +
                                algebra_name(f.algebra()));
  return uncolor_distinguished(a, to_distinguished(a, f));
}

}  // namespace csym
