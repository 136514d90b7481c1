#include "csym/colored_hopf.hpp"

#include <set>
#include <stdexcept>

#include "csym/sentence_ops.hpp"

namespace csym {
namespace {

// Distinguished-basis input contract shared by the linear extensions.
void require_distinguished(const Alphabet& a, const FormalSum& f, const char* what) {
  if (!algebra_is_colored(f.algebra()))
    throw std::invalid_argument(std::string(what) + ": expected a colored algebra, got " +
                                algebra_name(f.algebra()));
  Basis want = distinguished_basis(f.algebra());
  for (const auto& [k, c] : f.terms()) {
    if (k.basis() != want)
      throw std::invalid_argument(std::string(what) + ": expected the " + basis_name(want) +
                                  " basis of " + algebra_name(f.algebra()) + ", found " +
                                  k.text());
    k.sentence().require_over(a);
  }
}

PSentence psentence_of_key(const Alphabet& a, const BasisKey& k) {
  return PSentence(a, k.sentence());
}

}  // namespace

FormalSum product_H(const Sentence& i, const Sentence& j) {
  return FormalSum(key_H(concat(i, j)));
}

FormalSum product_M(const Sentence& i, const Sentence& j) {
  FormalSum out(Algebra::QSymA);
  for (const auto& [k, mult] : quasishuffle(i, j)) out.add_term(key_M(k), Rational(mult));
  return out;
}

FormalSum product_h(const Alphabet& a, const PSentence& p, const PSentence& q) {
  return FormalSum(key_h(a, sort_sentence(a, concat(p.sentence(), q.sentence()))));
}

FormalSum product_m(const Alphabet& a, const PSentence& p, const PSentence& s) {
  FormalSum out(Algebra::SymA);
  for (const PSentence& q : enumerate_psentences(a, p.size() + s.size())) {
    long r = r_coefficient(a, p, s, q);
    if (r != 0) out.add_term(key_m(a, q), Rational(r));
  }
  return out;
}

TensorSum coproduct_H(const Sentence& i) {
  TensorSum out(Algebra::NSymA);
  for (const Splitting& s : right_splittings(i))
    out.add_term(key_H(s.quotient.flatten()), key_H(s.part.flatten()), 1);
  return out;
}

TensorSum coproduct_M(const Sentence& i) {
  TensorSum out(Algebra::QSymA);
  for (int cut = 0; cut <= i.length(); ++cut) {
    std::vector<Word> left(i.words().begin(), i.words().begin() + cut);
    std::vector<Word> right(i.words().begin() + cut, i.words().end());
    out.add_term(key_M(Sentence(std::move(left))), key_M(Sentence(std::move(right))), 1);
  }
  return out;
}

TensorSum coproduct_h(const Alphabet& a, const PSentence& q) {
  TensorSum out(Algebra::PSymA);
  for (const Splitting& s : right_splittings(q.sentence()))
    out.add_term(key_h(a, sort_weak_sentence(a, s.quotient)),
                 key_h(a, sort_weak_sentence(a, s.part)), 1);
  return out;
}

TensorSum coproduct_m(const Alphabet& a, const PSentence& p) {
  TensorSum out(Algebra::SymA);
  for (const PSentence& q : submultisets(a, p))
    out.add_term(key_m(a, q), key_m(a, multiset_difference(a, p, q)), 1);
  return out;
}

FormalSum antipode_H(const Sentence& i) {
  FormalSum out(Algebra::NSymA);
  for (const Sentence& j : refinements(reversal(i)))
    out.add_term(key_H(j), (j.length() % 2) ? Rational(-1) : Rational(1));
  return out;
}

FormalSum antipode_M(const Sentence& i) {
  FormalSum out(Algebra::QSymA);
  Rational sign = (i.length() % 2) ? Rational(-1) : Rational(1);
  for (const Sentence& c : coarsenings(i)) out.add_term(key_M(reversal(c)), sign);
  return out;
}

FormalSum antipode_h(const Alphabet& a, const PSentence& p) {
  FormalSum out(Algebra::PSymA);
  for (const Sentence& j : refinements(p.sentence()))
    out.add_term(key_h(a, sort_sentence(a, j)), (j.length() % 2) ? Rational(-1) : Rational(1));
  return out;
}

FormalSum antipode_m(const Alphabet& a, const PSentence& p) {
  FormalSum image = iota(a, FormalSum(key_m(a, p)));
  return m_from_M(a, colored_antipode(a, image));
}

FormalSum colored_product(const Alphabet& a, const FormalSum& f, const FormalSum& g) {
  require_distinguished(a, f, "product");
  require_distinguished(a, g, "product");
  if (f.algebra() != g.algebra())
    throw std::invalid_argument("product: algebra mismatch (" + algebra_name(f.algebra()) +
                                " vs " + algebra_name(g.algebra()) + ")");
  FormalSum out(f.algebra());
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      FormalSum piece(f.algebra());
      switch (f.algebra()) {
        case Algebra::NSymA: piece = product_H(kf.sentence(), kg.sentence()); break;
        case Algebra::QSymA: piece = product_M(kf.sentence(), kg.sentence()); break;
        case Algebra::SymA:
          piece = product_m(a, psentence_of_key(a, kf), psentence_of_key(a, kg));
          break;
        case Algebra::PSymA:
          piece = product_h(a, psentence_of_key(a, kf), psentence_of_key(a, kg));
          break;
        default: break;
      }
      piece *= cf * cg;
      out += piece;
    }
  return out;
}

TensorSum colored_coproduct(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "coproduct");
  return extend_linear_tensor(f.algebra(), f, [&](const BasisKey& k) {
    switch (f.algebra()) {
      case Algebra::NSymA: return coproduct_H(k.sentence());
      case Algebra::QSymA: return coproduct_M(k.sentence());
      case Algebra::SymA: return coproduct_m(a, psentence_of_key(a, k));
      default: return coproduct_h(a, psentence_of_key(a, k));
    }
  });
}

FormalSum colored_antipode(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "antipode");
  return extend_linear(f.algebra(), f, [&](const BasisKey& k) {
    switch (f.algebra()) {
      case Algebra::NSymA: return antipode_H(k.sentence());
      case Algebra::QSymA: return antipode_M(k.sentence());
      case Algebra::SymA: return antipode_m(a, psentence_of_key(a, k));
      default: return antipode_h(a, psentence_of_key(a, k));
    }
  });
}

Rational colored_counit(const FormalSum& f) {
  for (const auto& [k, c] : f.terms())
    if (k.degree() == 0) return c;
  return 0;
}

FormalSum colored_unit(const Alphabet& a, Algebra alg) {
  (void)a;
  switch (alg) {
    case Algebra::NSymA: return FormalSum(key_H(Sentence{}));
    case Algebra::QSymA: return FormalSum(key_M(Sentence{}));
    case Algebra::SymA: return FormalSum(BasisKey(Algebra::SymA, Basis::m, Sentence{}));
    case Algebra::PSymA: return FormalSum(BasisKey(Algebra::PSymA, Basis::h, Sentence{}));
    default: throw std::invalid_argument("colored_unit: not a colored algebra");
  }
}

FormalSum chi(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "chi");
  if (f.algebra() != Algebra::NSymA)
    throw std::invalid_argument("chi expects NSymA, got " + algebra_name(f.algebra()));
  return extend_linear(Algebra::PSymA, f, [&](const BasisKey& k) {
    return FormalSum(key_h(a, sort_sentence(a, k.sentence())));
  });
}

FormalSum iota(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "iota");
  if (f.algebra() != Algebra::SymA)
    throw std::invalid_argument("iota expects SymA, got " + algebra_name(f.algebra()));
  return extend_linear(Algebra::QSymA, f, [&](const BasisKey& k) {
    FormalSum out(Algebra::QSymA);
    for (const Sentence& i : rearrangements(psentence_of_key(a, k))) out.add_term(key_M(i), 1);
    return out;
  });
}

not_symmetric_error::not_symmetric_error(const Sentence& x, const Sentence& y)
    : std::invalid_argument("not a colored symmetric function: sentences " + x.text() + " and " +
                            y.text() + " rearrange each other but carry distinct coefficients"),
      left(x),
      right(y) {}

FormalSum m_from_M(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "m_from_M");
  if (f.algebra() != Algebra::QSymA)
    throw std::invalid_argument("m_from_M expects QSymA, got " + algebra_name(f.algebra()));
  FormalSum out(Algebra::SymA);
  std::set<Sentence> seen;
  for (const auto& [k, c] : f.terms()) {
    PSentence p = sort_sentence(a, k.sentence());
    if (seen.count(p.sentence())) continue;
    seen.insert(p.sentence());
    // Every rearrangement must carry the same coefficient as the first.
    std::vector<Sentence> all = rearrangements(p);
    for (const Sentence& other : all) {
      Rational oc = f.coefficient(key_M(other));
      if (oc != c) throw not_symmetric_error(k.sentence(), other);
    }
    out.add_term(key_m(a, p), c);
  }
  return out;
}

FormalSum uncolor_distinguished(const Alphabet& a, const FormalSum& f) {
  require_distinguished(a, f, "uncolor");
  Algebra target;
  Basis basis;
  switch (f.algebra()) {
    case Algebra::NSymA: target = Algebra::NSym, basis = Basis::H; break;
    case Algebra::QSymA: target = Algebra::QSym, basis = Basis::M; break;
    case Algebra::SymA: target = Algebra::Sym, basis = Basis::m; break;
    default: target = Algebra::Sym, basis = Basis::h; break;
  }
  return extend_linear(target, f, [&](const BasisKey& k) {
    Composition wl = k.sentence().word_lengths();
    Rational c = 1;
    if (f.algebra() == Algebra::SymA) {
      // Restricting the monomial-variable map to the subalgebra spanned by
      // the m basis picks up a multiplicity: m_P is the sum of M_I over the
      // rearrangements I of P, and every I with the same length vector
      // lands on the same classical M index.
      long mult = 0;
      for (const Sentence& i : rearrangements(PSentence(a, k.sentence())))
        if (i.word_lengths() == wl) ++mult;
      c = mult;
    }
    FormalSum out(target);
    out.add_term(key_classical(target, basis, wl), c);
    return out;
  });
}

}  // namespace csym
