#include <doctest.h>

#include "csym/formal.hpp"

using namespace csym;

namespace {
const Alphabet kAb("ab");
}  // namespace

TEST_CASE("basis keys validate their index and algebra") {
  CHECK(key_H(Sentence{"ab", "c"}).text() == "H(ab,c)");
  CHECK(key_sstar(kAb, Sentence{"ab", "a"}).text() == "s*(ab,a)");
  CHECK(key_classical(Algebra::Sym, Basis::m, {2, 1}).text() == "m(2,1)");
  // Partition-indexed bases reject compositions out of order.
  CHECK_THROWS_AS(key_classical(Algebra::Sym, Basis::m, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(key_m(kAb, Sentence{"b", "a"}), std::invalid_argument);
  // Composition-indexed classical bases accept any order.
  CHECK(key_classical(Algebra::QSym, Basis::M, {1, 2}).text() == "M(1,2)");
  CHECK(key_classical(Algebra::NSym, Basis::R, {1, 2}).text() == "R(1,2)");
  // Basis/algebra legality.
  CHECK_THROWS_AS(key_classical(Algebra::QSym, Basis::R, {1}), std::invalid_argument);
  CHECK(key_H(Sentence()).degree() == 0);
  CHECK(key_H(Sentence{"ab", "c"}).degree() == 3);
}

TEST_CASE("formal sums prune zeros and keep deterministic order") {
  FormalSum f(Algebra::QSymA);
  CHECK(f.is_zero());
  CHECK(f.text() == "0");

  BasisKey x = key_M(Sentence{"a", "b"});
  BasisKey y = key_M(Sentence{"ab"});
  f.add_term(x, 2);
  f.add_term(y, Rational(1, 2));
  // Lower degree renders first; here both have degree 2, index text decides.
  CHECK(f.text() == "2*M(a,b) + 1/2*M(ab)");
  f.add_term(x, -2);
  CHECK(f.num_terms() == 1);
  CHECK(f.coefficient(x) == 0);
  CHECK(f.coefficient(y) == Rational(1, 2));

  FormalSum g = FormalSum(y, -1);
  CHECK(g.text() == "-1*M(ab)");
  CHECK((f + g).text() == "-1/2*M(ab)");
  CHECK((f - f).is_zero());
  FormalSum h = f;
  h *= 4;
  CHECK(h.text() == "2*M(ab)");
}

TEST_CASE("sums refuse to mix algebras") {
  FormalSum f(key_M(Sentence{"a"}));
  FormalSum g(key_H(Sentence{"a"}));
  CHECK_THROWS_AS(f += g, std::invalid_argument);
  FormalSum c(Algebra::QSymA);
  CHECK_THROWS_AS(c.add_term(key_H(Sentence{"a"}), 1), std::invalid_argument);
}

TEST_CASE("tensor sums render both slots") {
  TensorSum t(Algebra::QSymA);
  t.add_term(key_M(Sentence{"a"}), key_M(Sentence{"b"}), 1);
  t.add_term(key_M(Sentence()), key_M(Sentence{"a", "b"}), -1);
  CHECK(t.text() == "-1*M() (x) M(a,b) + 1*M(a) (x) M(b)");
  t.add_term(key_M(Sentence{"a"}), key_M(Sentence{"b"}), -1);
  CHECK(t.num_terms() == 1);
  CHECK(TensorSum(Algebra::SymA).text() == "0");
}

TEST_CASE("linear extension applies a rule per key") {
  FormalSum f(key_M(Sentence{"a"}), 2);
  f.add_term(key_M(Sentence{"b"}), 3);
  FormalSum out = extend_linear(Algebra::QSymA, f, [](const BasisKey& k) {
    return FormalSum(k, 2);  // doubling rule
  });
  CHECK(out.coefficient(key_M(Sentence{"a"})) == 4);
  CHECK(out.coefficient(key_M(Sentence{"b"})) == 6);
}
