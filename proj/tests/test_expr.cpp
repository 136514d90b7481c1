#include <doctest.h>
#include <json.hpp>

#include "csym/expr.hpp"

using namespace csym;

namespace {
const Alphabet kAb("ab");
const Alphabet kAbc("abc");

std::string eval_text(const Alphabet& a, const std::string& input) {
  return value_text(evaluate(a, parse_expression(a, input)));
}
}  // namespace

TEST_CASE("atoms, scalars, and arithmetic") {
  CHECK(eval_text(kAbc, "M(a,b) * M(c)") ==
        "1*M(a,b,c) + 1*M(a,bc) + 1*M(a,c,b) + 1*M(ac,b) + 1*M(c,a,b)");
  CHECK(eval_text(kAb, "1/2 * m(a)") == "1/2*m(a)");
  CHECK(eval_text(kAb, "2 + 3") == "5");
  CHECK(eval_text(kAb, "2 * 3 - 1") == "5");
  CHECK(eval_text(kAb, "-M(a)") == "-1*M(a)");
  CHECK(eval_text(kAb, "M(a) - M(a)") == "0");
  CHECK(eval_text(kAb, "(M(a) + M(b)) * 2") == "2*M(a) + 2*M(b)");
}

TEST_CASE("empty indices are the units") {
  CHECK(eval_text(kAb, "H() * H(a)") == "1*H(a)");
  CHECK(eval_text(kAb, "counit(M())") == "1");
  CHECK(eval_text(kAb, "counit(M(a))") == "0");
}

TEST_CASE("letter indices are colored, integer indices classical") {
  CHECK(eval_text(kAb, "m(2,1)") == "1*m(2,1)");
  CHECK(eval_text(kAb, "m(ab,a)") == "1*m(ab,a)");
  CHECK(eval_text(kAb, "convert(H(2,1); R)") == "1*R(2,1) + 1*R(3)");
  CHECK(eval_text(kAb, "F(2,1)") == "1*F(2,1)");
  // Classical-only bases reject letter indices.
  CHECK_THROWS_WITH_AS(parse_expression(kAb, "F(ab)"),
                       doctest::Contains("exists only in the classical layer"), parse_error);
  // Partition order is enforced for partition-indexed bases.
  CHECK_THROWS_AS(parse_expression(kAb, "m(1,2)"), parse_error);
  CHECK_THROWS_AS(parse_expression(kAb, "s*(2,1)"), parse_error);
  // Mixed letters and digits in one index are refused.
  CHECK_THROWS_AS(parse_expression(kAb, "M(a,2)"), parse_error);
}

TEST_CASE("canonical index order is demanded with a suggestion") {
  CHECK_THROWS_WITH_AS(parse_expression(kAb, "m(b,a)"), doctest::Contains("(a,b)"), parse_error);
  try {
    parse_expression(kAb, "M(a) + m(b,a)");
  } catch (const parse_error& e) {
    CHECK(e.position == 7);  // the atom starts at the basis name
  }
}

TEST_CASE("unknown colors report their position") {
  try {
    parse_expression(kAb, "M(c)");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("unknown color 'c'") != std::string::npos);
    CHECK(e.position == 0);
  }
}

TEST_CASE("calls: coproduct, antipode, pair, convert") {
  CHECK(eval_text(kAbc, "antipode(h(aba,c))") ==
        "1*h(a,a,b,c) - 1*h(ab,a,c) + 1*h(aba,c) - 1*h(ba,a,c)");
  CHECK(eval_text(kAb, "coproduct(M(a,b))") ==
        "1*M() (x) M(a,b) + 1*M(a) (x) M(b) + 1*M(a,b) (x) M()");
  CHECK(eval_text(kAbc, "pair(H(ab,c); M(ab,c))") == "1");
  CHECK(eval_text(kAbc, "pair(M(ab,c); H(c,ab))") == "0");
  CHECK(eval_text(kAb, "pair(h(a,a); s*(a,a))") == "1");
  CHECK(eval_text(kAb, "convert(s(a,a); h)") == "1*h(a,a) - 1*h(aa)");
  CHECK(eval_text(kAb, "uncolor(m(a,b))") == "2*m(1,1)");
  CHECK(eval_text(kAb, "chi(H(b,a))") == "1*h(a,b)");
  CHECK(eval_text(kAb, "iota(m(a,b))") == "1*M(a,b) + 1*M(b,a)");
  CHECK(eval_text(kAb, "omega(s(2,1))") == "1*s(2,1)");
  // Arity is enforced per call.
  CHECK_THROWS_AS(parse_expression(kAb, "pair(M(a))"), parse_error);
  CHECK_THROWS_AS(parse_expression(kAb, "antipode(M(a); M(b))"), parse_error);
  CHECK_THROWS_AS(parse_expression(kAb, "convert(M(a))"), parse_error);
  CHECK_THROWS_AS(parse_expression(kAb, "frobnicate(M(a))"), parse_error);
}

TEST_CASE("algebra mismatches are evaluation errors") {
  CHECK_THROWS_AS(evaluate(kAb, parse_expression(kAb, "M(a) + m(a)")), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(kAb, parse_expression(kAb, "M(a) * H(a)")), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(kAb, parse_expression(kAb, "pair(M(a); M(a))")), std::invalid_argument);
  // Scalars multiply into anything.
  CHECK(eval_text(kAb, "pair(H(a); M(a)) * M(ab)") == "1*M(ab)");
}

TEST_CASE("json output carries exact integers as strings") {
  using nlohmann::json;
  json sum = json::parse(value_json(evaluate(kAb, parse_expression(kAb, "1/2 * M(ab)"))));
  REQUIRE(sum.is_array());
  REQUIRE(sum.size() == 1);
  CHECK(sum[0]["basis"] == "M");
  CHECK(sum[0]["index"] == "(ab)");
  CHECK(sum[0]["num"] == "1");
  CHECK(sum[0]["den"] == "2");

  json scalar = json::parse(value_json(evaluate(kAb, parse_expression(kAb, "counit(M())"))));
  CHECK(scalar["num"] == "1");
  CHECK(scalar["den"] == "1");

  json tensor = json::parse(value_json(evaluate(kAb, parse_expression(kAb, "coproduct(M(a))"))));
  REQUIRE(tensor.is_array());
  REQUIRE(tensor.size() == 2);
  CHECK(tensor[0]["left"]["index"] == "()");
  CHECK(tensor[0]["right"]["index"] == "(a)");
}

TEST_CASE("parsing is the inverse of rendering on sums") {
  for (const std::string& s : {std::string("1*M(a,b) + 1*M(ab)"), std::string("-1/3*m(ab,a)"),
                               std::string("2*H(a,ba)")}) {
    CHECK(eval_text(kAb, s) == s);
  }
}
