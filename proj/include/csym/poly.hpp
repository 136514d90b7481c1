#pragma once

#include <map>
#include <utility>
#include <vector>

#include "csym/formal.hpp"

namespace csym {

// Truncated polynomial model of QSym_A in N commuting slots x_1 .. x_N of
// noncommuting letters: a monomial is a product of slot variables x_{w,i}
// with strictly increasing slots and nonempty words; multiplying two
// monomials merges their slot lists and concatenates words landing in the
// same slot (left factor's word first). This realizes the defining
// variables, so products of realized M functions can be compared against
// the algebraic quasishuffle rule.
class TruncatedPoly {
 public:
  // One factor x_{word, slot}; slot in [1, N].
  using Monomial = std::vector<std::pair<int, Word>>;

  explicit TruncatedPoly(int num_slots);

  int num_slots() const { return num_slots_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Rational& c);

  TruncatedPoly operator+(const TruncatedPoly& o) const;
  TruncatedPoly operator-(const TruncatedPoly& o) const;
  TruncatedPoly operator*(const TruncatedPoly& o) const;
  bool operator==(const TruncatedPoly& o) const = default;

  std::string text() const;

  // M_I in N slots: sum over strictly increasing slot choices of
  // x_{w_1,i_1} ... x_{w_k,i_k}. Sentences longer than N truncate to zero.
  static TruncatedPoly realize_M(const Alphabet& a, const Sentence& i, int num_slots);
  // Realize a QSymA sum in the M basis.
  static TruncatedPoly realize(const Alphabet& a, const FormalSum& f, int num_slots);

  // True when, for every sentence class, all slot choices occur with one
  // common coefficient (the defining partial-commutativity symmetry).
  bool is_quasisymmetric() const;
  // Read off the M expansion from the initial-slot monomials; requires
  // is_quasisymmetric().
  FormalSum to_M(const Alphabet& a) const;

 private:
  int num_slots_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace csym
