#include "csym/basis.hpp"

#include <stdexcept>
#include <tuple>

namespace csym {

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::NSymA: return "NSymA";
    case Algebra::QSymA: return "QSymA";
    case Algebra::SymA: return "SymA";
    case Algebra::PSymA: return "PSymA";
    case Algebra::NSym: return "NSym";
    case Algebra::QSym: return "QSym";
    case Algebra::Sym: return "Sym";
  }
  return "?";
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::M: return "M";
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::sstar: return "s*";
    case Basis::F: return "F";
    case Basis::R: return "R";
    case Basis::E: return "E";
    case Basis::e: return "e";
  }
  return "?";
}

bool algebra_is_colored(Algebra a) {
  return a == Algebra::NSymA || a == Algebra::QSymA || a == Algebra::SymA || a == Algebra::PSymA;
}

Basis distinguished_basis(Algebra a) {
  switch (a) {
    case Algebra::NSymA:
    case Algebra::NSym: return Basis::H;
    case Algebra::QSymA:
    case Algebra::QSym: return Basis::M;
    case Algebra::SymA:
    case Algebra::Sym: return Basis::m;
    case Algebra::PSymA: return Basis::h;
  }
  return Basis::H;
}

bool basis_legal(Algebra a, Basis b) {
  switch (a) {
    case Algebra::NSymA: return b == Basis::H;
    case Algebra::QSymA: return b == Basis::M;
    case Algebra::SymA: return b == Basis::m || b == Basis::sstar;
    case Algebra::PSymA: return b == Basis::h || b == Basis::s;
    case Algebra::NSym: return b == Basis::H || b == Basis::R || b == Basis::E;
    case Algebra::QSym: return b == Basis::M || b == Basis::F;
    case Algebra::Sym:
      return b == Basis::m || b == Basis::h || b == Basis::e || b == Basis::s;
  }
  return false;
}

bool basis_index_sorted(Basis b) {
  return b == Basis::m || b == Basis::h || b == Basis::s || b == Basis::sstar || b == Basis::e;
}

BasisKey::BasisKey(Algebra alg, Basis basis, Sentence index)
    : alg_(alg), basis_(basis), index_(std::move(index)) {
  if (!algebra_is_colored(alg)) throw std::invalid_argument("sentence index in classical algebra");
  if (!basis_legal(alg, basis))
    throw std::invalid_argument("basis " + basis_name(basis) + " does not index " +
                                algebra_name(alg));
  const Sentence& s = std::get<Sentence>(index_);
  degree_ = s.size();
  index_text_ = s.text();
}

BasisKey::BasisKey(Algebra alg, Basis basis, Composition index)
    : alg_(alg), basis_(basis), index_(std::move(index)) {
  if (algebra_is_colored(alg)) throw std::invalid_argument("composition index in colored algebra");
  if (!basis_legal(alg, basis))
    throw std::invalid_argument("basis " + basis_name(basis) + " does not index " +
                                algebra_name(alg));
  const Composition& c = std::get<Composition>(index_);
  for (int part : c)
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
  if (basis_index_sorted(basis) && !is_partition(c))
    throw std::invalid_argument("index " + comp_text(c) + " of basis " + basis_name(basis) +
                                " must be a partition; its sort is " +
                                comp_text(sort_composition(c)));
  degree_ = comp_size(c);
  index_text_ = comp_text(c);
}

std::string BasisKey::text() const { return basis_name(basis_) + index_text_; }

bool BasisKey::operator==(const BasisKey& o) const {
  return alg_ == o.alg_ && basis_ == o.basis_ && index_ == o.index_;
}

bool BasisKey::operator<(const BasisKey& o) const {
  return std::tie(degree_, index_text_, basis_, alg_) <
         std::tie(o.degree_, o.index_text_, o.basis_, o.alg_);
}

namespace {

Sentence require_psentence(const Alphabet& a, const Sentence& p, Basis b) {
  if (!is_canonical(a, p))
    throw std::invalid_argument("index " + p.text() + " of basis " + basis_name(b) +
                                " must be a p-sentence; its sort is " +
                                sort_sentence(a, p).text());
  return p;
}

}  // namespace

BasisKey key_H(Sentence i) { return BasisKey(Algebra::NSymA, Basis::H, std::move(i)); }
BasisKey key_M(Sentence i) { return BasisKey(Algebra::QSymA, Basis::M, std::move(i)); }

BasisKey key_m(const Alphabet& a, const Sentence& p) {
  return BasisKey(Algebra::SymA, Basis::m, require_psentence(a, p, Basis::m));
}
BasisKey key_h(const Alphabet& a, const Sentence& p) {
  return BasisKey(Algebra::PSymA, Basis::h, require_psentence(a, p, Basis::h));
}
BasisKey key_s(const Alphabet& a, const Sentence& p) {
  return BasisKey(Algebra::PSymA, Basis::s, require_psentence(a, p, Basis::s));
}
BasisKey key_sstar(const Alphabet& a, const Sentence& p) {
  return BasisKey(Algebra::SymA, Basis::sstar, require_psentence(a, p, Basis::sstar));
}

BasisKey key_m(const Alphabet& a, const PSentence& p) { return key_m(a, p.sentence()); }
BasisKey key_h(const Alphabet& a, const PSentence& p) { return key_h(a, p.sentence()); }
BasisKey key_s(const Alphabet& a, const PSentence& p) { return key_s(a, p.sentence()); }
BasisKey key_sstar(const Alphabet& a, const PSentence& p) { return key_sstar(a, p.sentence()); }

BasisKey key_classical(Algebra alg, Basis b, Composition index) {
  return BasisKey(alg, b, std::move(index));
}

}  // namespace csym
