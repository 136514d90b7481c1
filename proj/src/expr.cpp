#include "csym/expr.hpp"

#include <json.hpp>
#include <cctype>

#include "csym/classical.hpp"
#include "csym/composition.hpp"
#include "csym/ops.hpp"

namespace csym {

parse_error::parse_error(const std::string& message, int position)
    : std::runtime_error(message), position(position) {}

namespace {

const char* kCallNames[] = {"coproduct", "antipode", "counit", "chi",    "iota",
                            "uncolor",   "omega",    "pair",   "convert"};

bool is_call_name(const std::string& s) {
  for (const char* n : kCallNames)
    if (s == n) return true;
  return false;
}

bool basis_from_name(const std::string& s, Basis& out) {
  if (s == "H") out = Basis::H;
  else if (s == "M") out = Basis::M;
  else if (s == "m") out = Basis::m;
  else if (s == "h") out = Basis::h;
  else if (s == "s") out = Basis::s;
  else if (s == "s*") out = Basis::sstar;
  else if (s == "F") out = Basis::F;
  else if (s == "R") out = Basis::R;
  else if (s == "E") out = Basis::E;
  else if (s == "e") out = Basis::e;
  else return false;
  return true;
}

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr make_binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
  Expr e;
  e.kind = kind;
  e.children = {std::move(l), std::move(r)};
  return make(std::move(e));
}

struct Parser {
  const Alphabet& a;
  const std::string& in;
  size_t pos = 0;

  void skip_ws() {
    while (pos < in.size() && std::isspace(static_cast<unsigned char>(in[pos]))) ++pos;
  }
  bool at(char c) {
    skip_ws();
    return pos < in.size() && in[pos] == c;
  }
  bool eat(char c) {
    if (!at(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& where) {
    if (!eat(c))
      throw parse_error("expected '" + std::string(1, c) + "' " + where,
                        static_cast<int>(pos));
  }

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos < in.size())
      throw parse_error("unexpected trailing input", static_cast<int>(pos));
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      if (eat('+'))
        e = make_binary(Expr::Kind::Add, e, parse_term());
      else if (eat('-'))
        e = make_binary(Expr::Kind::Sub, e, parse_term());
      else
        return e;
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (eat('*')) e = make_binary(Expr::Kind::Mul, e, parse_factor());
    return e;
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (pos >= in.size()) throw parse_error("unexpected end of input", static_cast<int>(pos));
    char c = in[pos];
    if (c == '(') {
      ++pos;
      ExprPtr e = parse_expr();
      expect(')', "to close the parenthesized expression");
      return e;
    }
    if (c == '-') {
      ++pos;
      Expr minus;
      minus.kind = Expr::Kind::Scalar;
      minus.scalar = -1;
      return make_binary(Expr::Kind::Mul, make(std::move(minus)), parse_factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    throw parse_error("unexpected character '" + std::string(1, c) + "'",
                      static_cast<int>(pos));
  }

  ExprPtr parse_rational() {
    size_t start = pos;
    std::string digits = read_digits("a number");
    skip_ws();
    std::string text = digits;
    if (pos < in.size() && in[pos] == '/') {
      ++pos;
      skip_ws();
      text += "/" + read_digits("a denominator");
    }
    Expr e;
    e.kind = Expr::Kind::Scalar;
    try {
      e.scalar = rational_from_string(text);
    } catch (const std::invalid_argument& ex) {
      throw parse_error(ex.what(), static_cast<int>(start));
    }
    return make(std::move(e));
  }

  std::string read_digits(const std::string& what) {
    skip_ws();
    size_t start = pos;
    while (pos < in.size() && std::isdigit(static_cast<unsigned char>(in[pos]))) ++pos;
    if (pos == start) throw parse_error("expected " + what, static_cast<int>(pos));
    return in.substr(start, pos - start);
  }

  ExprPtr parse_name() {
    size_t start = pos;
    while (pos < in.size() && std::isalpha(static_cast<unsigned char>(in[pos]))) ++pos;
    std::string name = in.substr(start, pos - start);
    // "s*(" denotes the dual Schur basis, not s times a parenthesis.
    if (name == "s" && pos + 1 < in.size() && in[pos] == '*' && in[pos + 1] == '(') {
      name = "s*";
      ++pos;
    }
    if (is_call_name(name)) return parse_call(name, start);
    Basis b;
    if (basis_from_name(name, b)) return parse_atom(name, b, start);
    throw parse_error("unknown name \"" + name + "\"", static_cast<int>(start));
  }

  ExprPtr parse_call(const std::string& name, size_t start) {
    expect('(', "after \"" + name + "\"");
    Expr e;
    e.kind = Expr::Kind::Call;
    e.call_name = name;
    e.children.push_back(parse_expr());
    if (name == "pair") {
      expect(';', "between the two arguments of pair");
      e.children.push_back(parse_expr());
    } else if (name == "convert") {
      expect(';', "between the argument and target basis of convert");
      skip_ws();
      size_t bstart = pos;
      while (pos < in.size() && std::isalpha(static_cast<unsigned char>(in[pos]))) ++pos;
      std::string bname = in.substr(bstart, pos - bstart);
      if (bname == "s" && pos < in.size() && in[pos] == '*') {
        bname = "s*";
        ++pos;
      }
      Basis b;
      if (!basis_from_name(bname, b))
        throw parse_error("unknown basis \"" + bname + "\"", static_cast<int>(bstart));
      e.call_basis = bname;
    } else if (at(';')) {
      throw parse_error("\"" + name + "\" takes one argument", static_cast<int>(pos));
    }
    expect(')', "to close the call");
    (void)start;
    return make(std::move(e));
  }

  ExprPtr parse_atom(const std::string& name, Basis b, size_t start) {
    expect('(', "after basis \"" + name + "\"");
    size_t close = in.find(')', pos);
    if (close == std::string::npos)
      throw parse_error("unterminated index after \"" + name + "\"", static_cast<int>(pos));
    std::string index = in.substr(pos, close - pos);
    pos = close + 1;
    Expr e;
    e.kind = Expr::Kind::Atom;
    try {
      e.atom = atom_key(b, index);
    } catch (const std::invalid_argument& ex) {
      throw parse_error(ex.what(), static_cast<int>(start));
    }
    return make(std::move(e));
  }

  // Splits an index literal and builds the basis key. Letter parts select
  // the colored layer, integer parts the classical one; an empty index is
  // colored for the bases that exist there.
  BasisKey atom_key(Basis b, const std::string& index) {
    std::vector<std::string> parts;
    std::string current;
    bool any_content = false;
    for (char c : index + ",") {
      if (c == ',') {
        parts.push_back(current);
        current.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        current.push_back(c);
        any_content = true;
      }
    }
    if (!any_content && parts.size() == 1) parts.clear();

    bool letters = false, digits = false;
    for (const std::string& p : parts) {
      for (char c : p) {
        if (std::isdigit(static_cast<unsigned char>(c))) digits = true;
        else letters = true;
      }
      if (p.empty()) throw std::invalid_argument("index has an empty part");
    }
    if (letters && digits)
      throw std::invalid_argument("index must be all letters (colored) or all integers (classical)");

    bool colored_basis = b == Basis::H || b == Basis::M || b == Basis::m || b == Basis::h ||
                         b == Basis::s || b == Basis::sstar;
    bool colored = letters || (!digits && colored_basis);
    if (colored && !colored_basis)
      throw std::invalid_argument("basis " + basis_name(b) +
                                  " exists only in the classical layer; use integer parts");
    if (!colored && b == Basis::sstar)
      throw std::invalid_argument("basis s* exists only in the colored layer; use letter parts");

    if (colored) {
      Sentence s(std::vector<Word>(parts.begin(), parts.end()));
      switch (b) {
        case Basis::H:
          s.require_over(a);
          return BasisKey(Algebra::NSymA, Basis::H, s);
        case Basis::M:
          s.require_over(a);
          return BasisKey(Algebra::QSymA, Basis::M, s);
        case Basis::m: return key_m(a, s);
        case Basis::h: return key_h(a, s);
        case Basis::s: return key_s(a, s);
        default: return key_sstar(a, s);
      }
    }
    Composition comp;
    comp.reserve(parts.size());
    for (const std::string& p : parts) {
      if (p.size() > 9) throw std::invalid_argument("composition part too large: " + p);
      comp.push_back(std::stoi(p));
    }
    switch (b) {
      case Basis::H: return key_classical(Algebra::NSym, Basis::H, comp);
      case Basis::R: return key_classical(Algebra::NSym, Basis::R, comp);
      case Basis::E: return key_classical(Algebra::NSym, Basis::E, comp);
      case Basis::M: return key_classical(Algebra::QSym, Basis::M, comp);
      case Basis::F: return key_classical(Algebra::QSym, Basis::F, comp);
      default: return key_classical(Algebra::Sym, b, comp);
    }
  }
};

FormalSum expect_sum(const Value& v, const std::string& what) {
  if (const FormalSum* f = std::get_if<FormalSum>(&v)) return *f;
  if (std::holds_alternative<TensorSum>(v))
    throw std::invalid_argument(what + " cannot take a tensor; coproduct must be outermost");
  throw std::invalid_argument(what + " expects a basis sum, not a scalar");
}

Value evaluate_call(const Alphabet& a, const Expr& e) {
  Value arg = evaluate(a, e.children[0]);
  if (e.call_name == "coproduct") return coproduct(a, expect_sum(arg, "coproduct"));
  if (e.call_name == "antipode") return antipode(a, expect_sum(arg, "antipode"));
  if (e.call_name == "counit") return counit(a, expect_sum(arg, "counit"));
  if (e.call_name == "chi") return apply_chi(a, expect_sum(arg, "chi"));
  if (e.call_name == "iota") return apply_iota(a, expect_sum(arg, "iota"));
  if (e.call_name == "uncolor") return apply_uncolor(a, expect_sum(arg, "uncolor"));
  if (e.call_name == "omega") return omega(expect_sum(arg, "omega"));
  if (e.call_name == "pair") {
    Value right = evaluate(a, e.children[1]);
    return pair(a, expect_sum(arg, "pair"), expect_sum(right, "pair"));
  }
  // convert
  Basis b{};
  basis_from_name(e.call_basis, b);
  return convert(a, expect_sum(arg, "convert"), b);
}

}  // namespace

ExprPtr parse_expression(const Alphabet& a, const std::string& input) {
  Parser p{a, input};
  return p.parse();
}

Value evaluate(const Alphabet& a, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Scalar: return e->scalar;
    case Expr::Kind::Atom: return FormalSum(*e->atom);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Value l = evaluate(a, e->children[0]);
      Value r = evaluate(a, e->children[1]);
      bool add = e->kind == Expr::Kind::Add;
      if (std::holds_alternative<Rational>(l) && std::holds_alternative<Rational>(r))
        return add ? Rational(std::get<Rational>(l) + std::get<Rational>(r))
                   : Rational(std::get<Rational>(l) - std::get<Rational>(r));
      if (std::holds_alternative<FormalSum>(l) && std::holds_alternative<FormalSum>(r))
        return add ? std::get<FormalSum>(l) + std::get<FormalSum>(r)
                   : std::get<FormalSum>(l) - std::get<FormalSum>(r);
      throw std::invalid_argument(
          "addition needs two basis sums over one algebra, or two scalars");
    }
    case Expr::Kind::Mul: {
      Value l = evaluate(a, e->children[0]);
      Value r = evaluate(a, e->children[1]);
      if (std::holds_alternative<Rational>(l) && std::holds_alternative<Rational>(r))
        return Rational(std::get<Rational>(l) * std::get<Rational>(r));
      if (std::holds_alternative<Rational>(l) && std::holds_alternative<FormalSum>(r)) {
        FormalSum f = std::get<FormalSum>(r);
        f *= std::get<Rational>(l);
        return f;
      }
      if (std::holds_alternative<FormalSum>(l) && std::holds_alternative<Rational>(r)) {
        FormalSum f = std::get<FormalSum>(l);
        f *= std::get<Rational>(r);
        return f;
      }
      if (std::holds_alternative<FormalSum>(l) && std::holds_alternative<FormalSum>(r))
        return product(a, std::get<FormalSum>(l), std::get<FormalSum>(r));
      throw std::invalid_argument("multiplication does not apply to tensor values");
    }
    case Expr::Kind::Call: return evaluate_call(a, *e);
  }
  throw std::invalid_argument("malformed expression node");
}

std::string value_text(const Value& v) {
  if (const Rational* r = std::get_if<Rational>(&v)) return rational_text(*r);
  if (const FormalSum* f = std::get_if<FormalSum>(&v)) return f->text();
  return std::get<TensorSum>(v).text();
}

namespace {

nlohmann::ordered_json key_json(const BasisKey& k) {
  return {{"basis", basis_name(k.basis())}, {"index", k.index_text()}};
}

void put_rational(nlohmann::ordered_json& j, const Rational& c) {
  j["num"] = c.get_num().get_str();
  j["den"] = c.get_den().get_str();
}

}  // namespace

std::string value_json(const Value& v) {
  nlohmann::ordered_json j;
  if (const Rational* r = std::get_if<Rational>(&v)) {
    put_rational(j, *r);
  } else if (const FormalSum* f = std::get_if<FormalSum>(&v)) {
    j = nlohmann::ordered_json::array();
    for (const auto& [k, c] : f->terms()) {
      nlohmann::ordered_json term = key_json(k);
      put_rational(term, c);
      j.push_back(term);
    }
  } else {
    const TensorSum& t = std::get<TensorSum>(v);
    j = nlohmann::ordered_json::array();
    for (const auto& [k, c] : t.terms()) {
      nlohmann::ordered_json term;
      term["left"] = key_json(k.first);
      term["right"] = key_json(k.second);
      put_rational(term, c);
      j.push_back(term);
    }
  }
  return j.dump(2);
}

}  // namespace csym
