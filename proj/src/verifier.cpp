#include "csym/verifier.hpp"

#include <json.hpp>
#include <map>
#include <stdexcept>
#include <tuple>

#include "csym/classical.hpp"
#include "csym/colored_hopf.hpp"
#include "csym/composition.hpp"
#include "csym/ops.hpp"
#include "csym/poly.hpp"
#include "csym/sentence_ops.hpp"
#include "csym/tableaux.hpp"

namespace csym {

namespace {

constexpr Algebra kColoredAlgebras[] = {Algebra::NSymA, Algebra::QSymA, Algebra::SymA,
                                        Algebra::PSymA};

struct Ctx {
  Alphabet a;
  int max_degree;
};

// Distinguished-basis elements of one degree, in enumeration order.
std::vector<BasisKey> degree_elements(const Ctx& c, Algebra alg, int d) {
  std::vector<BasisKey> out;
  switch (alg) {
    case Algebra::NSymA:
      for (const Sentence& s : enumerate_sentences(c.a, d))
        out.emplace_back(Algebra::NSymA, Basis::H, s);
      break;
    case Algebra::QSymA:
      for (const Sentence& s : enumerate_sentences(c.a, d))
        out.emplace_back(Algebra::QSymA, Basis::M, s);
      break;
    case Algebra::SymA:
      for (const PSentence& p : enumerate_psentences(c.a, d)) out.push_back(key_m(c.a, p));
      break;
    case Algebra::PSymA:
      for (const PSentence& p : enumerate_psentences(c.a, d)) out.push_back(key_h(c.a, p));
      break;
    default: throw std::invalid_argument("degree_elements: colored algebras only");
  }
  return out;
}

void fail(CheckResult& r, std::string witness) {
  r.pass = false;
  r.witness = std::move(witness);
}

// Componentwise product of tensors: (x1 (x) x2) (y1 (x) y2) = x1y1 (x) x2y2.
TensorSum tensor_times(const Ctx& c, const TensorSum& s, const TensorSum& t) {
  TensorSum out(s.algebra());
  for (const auto& [k1, c1] : s.terms()) {
    for (const auto& [k2, c2] : t.terms()) {
      FormalSum left = product(c.a, FormalSum(k1.first), FormalSum(k2.first));
      FormalSum right = product(c.a, FormalSum(k1.second), FormalSum(k2.second));
      for (const auto& [lk, lc] : left.terms())
        for (const auto& [rk, rc] : right.terms()) out.add_term(lk, rk, c1 * c2 * lc * rc);
    }
  }
  return out;
}

using TripleKey = std::tuple<BasisKey, BasisKey, BasisKey>;
using TripleSum = std::map<TripleKey, Rational>;

void triple_add(TripleSum& t, const TripleKey& k, const Rational& c) {
  auto it = t.try_emplace(k, 0).first;
  it->second += c;
  if (it->second == 0) t.erase(it);
}

// Fully expanded (Delta (x) id) Delta and (id (x) Delta) Delta.
TripleSum expand_coproduct(const Ctx& c, const BasisKey& b, bool left_leg) {
  TripleSum out;
  TensorSum t = coproduct(c.a, FormalSum(b));
  for (const auto& [k, cv] : t.terms()) {
    TensorSum inner = coproduct(c.a, FormalSum(left_leg ? k.first : k.second));
    for (const auto& [ik, iv] : inner.terms()) {
      if (left_leg)
        triple_add(out, {ik.first, ik.second, k.second}, cv * iv);
      else
        triple_add(out, {k.first, ik.first, ik.second}, cv * iv);
    }
  }
  return out;
}

std::string pair_witness(const BasisKey& x, const BasisKey& y) {
  return algebra_name(x.algebra()) + ": " + x.text() + ", " + y.text();
}

// ---- individual checks ------------------------------------------------

void check_assoc(const Ctx& c, CheckResult& r) {
  for (Algebra alg : kColoredAlgebras) {
    for (int d1 = 0; d1 <= c.max_degree; ++d1) {
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (int d3 = 0; d1 + d2 + d3 <= c.max_degree; ++d3) {
          for (const BasisKey& x : degree_elements(c, alg, d1)) {
            for (const BasisKey& y : degree_elements(c, alg, d2)) {
              FormalSum xy = product(c.a, FormalSum(x), FormalSum(y));
              for (const BasisKey& z : degree_elements(c, alg, d3)) {
                FormalSum lhs = product(c.a, xy, FormalSum(z));
                FormalSum rhs =
                    product(c.a, FormalSum(x), product(c.a, FormalSum(y), FormalSum(z)));
                ++r.cases;
                if (!(lhs == rhs))
                  return fail(r, algebra_name(alg) + ": " + x.text() + ", " + y.text() + ", " +
                                     z.text());
              }
            }
          }
        }
      }
    }
  }
}

void check_coassoc(const Ctx& c, CheckResult& r) {
  for (Algebra alg : kColoredAlgebras) {
    for (int d = 0; d <= c.max_degree; ++d) {
      for (const BasisKey& b : degree_elements(c, alg, d)) {
        ++r.cases;
        if (expand_coproduct(c, b, true) != expand_coproduct(c, b, false))
          return fail(r, algebra_name(alg) + ": " + b.text());
      }
    }
  }
}

void check_counit_laws(const Ctx& c, CheckResult& r) {
  for (Algebra alg : kColoredAlgebras) {
    for (int d = 0; d <= c.max_degree; ++d) {
      for (const BasisKey& b : degree_elements(c, alg, d)) {
        TensorSum t = coproduct(c.a, FormalSum(b));
        FormalSum left(alg), right(alg);
        for (const auto& [k, cv] : t.terms()) {
          left.add_term(k.second, cv * counit(c.a, FormalSum(k.first)));
          right.add_term(k.first, cv * counit(c.a, FormalSum(k.second)));
        }
        ++r.cases;
        if (!(left == FormalSum(b)) || !(right == FormalSum(b)))
          return fail(r, algebra_name(alg) + ": " + b.text());
      }
    }
  }
}

void check_bialgebra_compat(const Ctx& c, CheckResult& r) {
  for (Algebra alg : kColoredAlgebras) {
    for (int d1 = 0; d1 <= c.max_degree; ++d1) {
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const BasisKey& x : degree_elements(c, alg, d1)) {
          TensorSum dx = coproduct(c.a, FormalSum(x));
          for (const BasisKey& y : degree_elements(c, alg, d2)) {
            TensorSum dy = coproduct(c.a, FormalSum(y));
            TensorSum lhs = coproduct(c.a, product(c.a, FormalSum(x), FormalSum(y)));
            TensorSum rhs = tensor_times(c, dx, dy);
            ++r.cases;
            if (!(lhs == rhs)) return fail(r, pair_witness(x, y));
          }
        }
      }
    }
  }
}

void check_antipode_axiom(const Ctx& c, CheckResult& r) {
  for (Algebra alg : kColoredAlgebras) {
    for (int d = 0; d <= c.max_degree; ++d) {
      for (const BasisKey& b : degree_elements(c, alg, d)) {
        TensorSum t = coproduct(c.a, FormalSum(b));
        FormalSum left(alg), right(alg);
        for (const auto& [k, cv] : t.terms()) {
          FormalSum l = product(c.a, antipode(c.a, FormalSum(k.first)), FormalSum(k.second));
          l *= cv;
          left += l;
          FormalSum rr = product(c.a, FormalSum(k.first), antipode(c.a, FormalSum(k.second)));
          rr *= cv;
          right += rr;
        }
        FormalSum expected = unit(c.a, alg);
        expected *= counit(c.a, FormalSum(b));
        ++r.cases;
        if (!(left == expected) || !(right == expected))
          return fail(r, algebra_name(alg) + ": " + b.text());
      }
    }
  }
}

void check_antipode_squared(const Ctx& c, CheckResult& r) {
  for (Algebra alg : {Algebra::SymA, Algebra::PSymA}) {
    for (int d = 0; d <= c.max_degree; ++d) {
      for (const BasisKey& b : degree_elements(c, alg, d)) {
        ++r.cases;
        if (!(antipode(c.a, antipode(c.a, FormalSum(b))) == FormalSum(b)))
          return fail(r, algebra_name(alg) + ": " + b.text());
      }
    }
  }
}

void check_duality_product_coproduct(const Ctx& c, CheckResult& r) {
  constexpr std::pair<Algebra, Algebra> kPairs[] = {{Algebra::NSymA, Algebra::QSymA},
                                                    {Algebra::PSymA, Algebra::SymA}};
  for (auto [left_alg, right_alg] : kPairs) {
    for (int d = 0; d <= c.max_degree; ++d) {
      std::vector<BasisKey> rights = degree_elements(c, right_alg, d);
      std::vector<BasisKey> lefts = degree_elements(c, left_alg, d);
      // <x y, z> = <x (x) y, Delta z>
      std::vector<TensorSum> dz;
      dz.reserve(rights.size());
      for (const BasisKey& z : rights) dz.push_back(coproduct(c.a, FormalSum(z)));
      for (int d1 = 0; d1 <= d; ++d1) {
        for (const BasisKey& x : degree_elements(c, left_alg, d1)) {
          for (const BasisKey& y : degree_elements(c, left_alg, d - d1)) {
            FormalSum xy = product(c.a, FormalSum(x), FormalSum(y));
            TensorSum xt(left_alg);
            xt.add_term(x, y, 1);
            for (size_t zi = 0; zi < rights.size(); ++zi) {
              ++r.cases;
              if (pair(c.a, xy, FormalSum(rights[zi])) != pair_tensor(c.a, xt, dz[zi]))
                return fail(r, x.text() + ", " + y.text() + ", " + rights[zi].text());
            }
          }
        }
      }
      // <Delta b, y (x) z> = <b, y z>
      std::vector<TensorSum> db;
      db.reserve(lefts.size());
      for (const BasisKey& b : lefts) db.push_back(coproduct(c.a, FormalSum(b)));
      for (int d1 = 0; d1 <= d; ++d1) {
        for (const BasisKey& y : degree_elements(c, right_alg, d1)) {
          for (const BasisKey& z : degree_elements(c, right_alg, d - d1)) {
            FormalSum yz = product(c.a, FormalSum(y), FormalSum(z));
            TensorSum yt(right_alg);
            yt.add_term(y, z, 1);
            for (size_t bi = 0; bi < lefts.size(); ++bi) {
              ++r.cases;
              if (pair_tensor(c.a, db[bi], yt) != pair(c.a, FormalSum(lefts[bi]), yz))
                return fail(r, lefts[bi].text() + ", " + y.text() + ", " + z.text());
            }
          }
        }
      }
    }
  }
}

void check_duality_antipode(const Ctx& c, CheckResult& r) {
  constexpr std::pair<Algebra, Algebra> kPairs[] = {{Algebra::NSymA, Algebra::QSymA},
                                                    {Algebra::PSymA, Algebra::SymA}};
  for (auto [left_alg, right_alg] : kPairs) {
    for (int d = 0; d <= c.max_degree; ++d) {
      std::vector<BasisKey> lefts = degree_elements(c, left_alg, d);
      std::vector<BasisKey> rights = degree_elements(c, right_alg, d);
      std::vector<FormalSum> sb, sz;
      sb.reserve(lefts.size());
      sz.reserve(rights.size());
      for (const BasisKey& b : lefts) sb.push_back(antipode(c.a, FormalSum(b)));
      for (const BasisKey& z : rights) sz.push_back(antipode(c.a, FormalSum(z)));
      for (size_t bi = 0; bi < lefts.size(); ++bi) {
        for (size_t zi = 0; zi < rights.size(); ++zi) {
          ++r.cases;
          if (pair(c.a, sb[bi], FormalSum(rights[zi])) !=
              pair(c.a, FormalSum(lefts[bi]), sz[zi]))
            return fail(r, lefts[bi].text() + ", " + rights[zi].text());
        }
      }
    }
  }
}

void check_chi_morphism(const Ctx& c, CheckResult& r) {
  auto chi_key = [&](const BasisKey& k) { return apply_chi(c.a, FormalSum(k)); };
  for (int d1 = 0; d1 <= c.max_degree; ++d1) {
    for (const BasisKey& x : degree_elements(c, Algebra::NSymA, d1)) {
      FormalSum cx = chi_key(x);
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const BasisKey& y : degree_elements(c, Algebra::NSymA, d2)) {
          ++r.cases;
          FormalSum lhs = apply_chi(c.a, product(c.a, FormalSum(x), FormalSum(y)));
          FormalSum rhs = product(c.a, cx, chi_key(y));
          if (!(lhs == rhs)) return fail(r, "product: " + x.text() + ", " + y.text());
        }
      }
      ++r.cases;
      TensorSum dl = map_tensor(coproduct(c.a, FormalSum(x)), Algebra::PSymA, chi_key, chi_key);
      if (!(dl == coproduct(c.a, cx))) return fail(r, "coproduct: " + x.text());
      ++r.cases;
      if (!(apply_chi(c.a, antipode(c.a, FormalSum(x))) == antipode(c.a, cx)))
        return fail(r, "antipode: " + x.text());
    }
  }
}

void check_adjointness(const Ctx& c, CheckResult& r) {
  for (int d = 0; d <= c.max_degree; ++d) {
    std::vector<BasisKey> xs = degree_elements(c, Algebra::NSymA, d);
    std::vector<BasisKey> ys = degree_elements(c, Algebra::SymA, d);
    std::vector<FormalSum> cx, iy;
    cx.reserve(xs.size());
    iy.reserve(ys.size());
    for (const BasisKey& x : xs) cx.push_back(apply_chi(c.a, FormalSum(x)));
    for (const BasisKey& y : ys) iy.push_back(apply_iota(c.a, FormalSum(y)));
    for (size_t xi = 0; xi < xs.size(); ++xi) {
      for (size_t yi = 0; yi < ys.size(); ++yi) {
        ++r.cases;
        if (pair(c.a, cx[xi], FormalSum(ys[yi])) != pair(c.a, FormalSum(xs[xi]), iy[yi]))
          return fail(r, xs[xi].text() + ", " + ys[yi].text());
      }
    }
  }
}

void check_diagram_commute(const Ctx& c, CheckResult& r) {
  for (int d = 0; d <= c.max_degree; ++d) {
    for (const BasisKey& x : degree_elements(c, Algebra::NSymA, d)) {
      ++r.cases;
      FormalSum lhs = apply_uncolor(c.a, apply_chi(c.a, FormalSum(x)));
      FormalSum rhs = chi_classical(apply_uncolor(c.a, FormalSum(x)));
      if (!(lhs == rhs)) return fail(r, "chi path: " + x.text());
    }
    for (const BasisKey& p : degree_elements(c, Algebra::SymA, d)) {
      ++r.cases;
      FormalSum lhs = apply_uncolor(c.a, apply_iota(c.a, FormalSum(p)));
      FormalSum rhs = iota_classical(apply_uncolor(c.a, FormalSum(p)));
      if (!(lhs == rhs)) return fail(r, "iota path: " + p.text());
    }
  }
}

void check_syma_closure(const Ctx& c, CheckResult& r) {
  for (int d1 = 0; d1 <= c.max_degree; ++d1) {
    for (const BasisKey& p : degree_elements(c, Algebra::SymA, d1)) {
      FormalSum ip = apply_iota(c.a, FormalSum(p));
      // products against every partner, via the quasisymmetric route
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const BasisKey& q : degree_elements(c, Algebra::SymA, d2)) {
          ++r.cases;
          try {
            FormalSum via_M = m_from_M(c.a, product(c.a, ip, apply_iota(c.a, FormalSum(q))));
            if (!(via_M == product(c.a, FormalSum(p), FormalSum(q))))
              return fail(r, "product mismatch: " + p.text() + ", " + q.text());
          } catch (const not_symmetric_error&) {
            return fail(r, "product not symmetric: " + p.text() + ", " + q.text());
          }
        }
      }
      // antipode stays symmetric
      ++r.cases;
      try {
        antipode(c.a, FormalSum(p));
      } catch (const not_symmetric_error&) {
        return fail(r, "antipode not symmetric: " + p.text());
      }
      // coproduct agrees with the quasisymmetric coproduct through iota
      ++r.cases;
      auto iota_key = [&](const BasisKey& k) { return apply_iota(c.a, FormalSum(k)); };
      TensorSum lhs = map_tensor(coproduct(c.a, FormalSum(p)), Algebra::QSymA, iota_key, iota_key);
      if (!(lhs == coproduct(c.a, ip))) return fail(r, "coproduct mismatch: " + p.text());
    }
  }
}

void check_unary_specialization(const Ctx& c, CheckResult& r) {
  Alphabet u(std::string(1, c.a.letter(0)));
  Ctx uc{u, c.max_degree};
  auto uncolor_key = [&](const BasisKey& k) { return uncolor_distinguished(u, FormalSum(k)); };
  auto tensor_match = [&](const TensorSum& colored, const TensorSum& direct) {
    return map_tensor(colored, direct.algebra(), uncolor_key, uncolor_key) == direct;
  };
  // products and coproducts of H and M against composition-level formulas
  for (int d1 = 0; d1 <= c.max_degree; ++d1) {
    for (const Composition& alpha : compositions_of(d1)) {
      Sentence ia = unary_sentence(alpha);
      BasisKey ha(Algebra::NSymA, Basis::H, ia), ma(Algebra::QSymA, Basis::M, ia);
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const Composition& beta : compositions_of(d2)) {
          Sentence ib = unary_sentence(beta);
          ++r.cases;
          FormalSum hp = uncolor_distinguished(
              u, product(u, FormalSum(ha), FormalSum(BasisKey(Algebra::NSymA, Basis::H, ib))));
          if (!(hp == H_product_direct(alpha, beta)))
            return fail(r, "H product: " + comp_text(alpha) + ", " + comp_text(beta));
          ++r.cases;
          FormalSum mp = uncolor_distinguished(
              u, product(u, FormalSum(ma), FormalSum(BasisKey(Algebra::QSymA, Basis::M, ib))));
          if (!(mp == M_product_direct(alpha, beta)))
            return fail(r, "M product: " + comp_text(alpha) + ", " + comp_text(beta));
        }
      }
      ++r.cases;
      if (!tensor_match(coproduct(u, FormalSum(ha)), H_coproduct_direct(alpha)))
        return fail(r, "H coproduct: " + comp_text(alpha));
      ++r.cases;
      if (!tensor_match(coproduct(u, FormalSum(ma)), M_coproduct_direct(alpha)))
        return fail(r, "M coproduct: " + comp_text(alpha));
    }
  }
  // products and coproducts of m and h against partition-level formulas
  for (int d1 = 0; d1 <= c.max_degree; ++d1) {
    for (const Partition& lambda : partitions_of(d1)) {
      PSentence pl(u, unary_sentence(lambda));
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const Partition& mu : partitions_of(d2)) {
          PSentence pm(u, unary_sentence(mu));
          ++r.cases;
          FormalSum mp = uncolor_distinguished(
              u, product(u, FormalSum(key_m(u, pl)), FormalSum(key_m(u, pm))));
          if (!(mp == m_product_direct(lambda, mu)))
            return fail(r, "m product: " + comp_text(lambda) + ", " + comp_text(mu));
          ++r.cases;
          FormalSum hp = uncolor_distinguished(
              u, product(u, FormalSum(key_h(u, pl)), FormalSum(key_h(u, pm))));
          if (!(hp == h_product_direct(lambda, mu)))
            return fail(r, "h product: " + comp_text(lambda) + ", " + comp_text(mu));
        }
      }
      ++r.cases;
      if (!tensor_match(coproduct(u, FormalSum(key_m(u, pl))), m_coproduct_direct(lambda)))
        return fail(r, "m coproduct: " + comp_text(lambda));
      ++r.cases;
      if (!tensor_match(coproduct(u, FormalSum(key_h(u, pl))), h_coproduct_direct(lambda)))
        return fail(r, "h coproduct: " + comp_text(lambda));
    }
  }
  // colored Kostka vs the independent classical tableau enumerator
  for (int n = 0; n <= uc.max_degree; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      PSentence pl(u, unary_sentence(lambda));
      for (const Partition& mu : partitions_of(n)) {
        ++r.cases;
        if (colored_kostka(u, pl, PSentence(u, unary_sentence(mu))) !=
            classical_kostka(lambda, mu))
          return fail(r, "Kostka: " + comp_text(lambda) + ", " + comp_text(mu));
      }
    }
  }
}

void check_oracle_product_equivalence(const Ctx& c, CheckResult& r) {
  for (int d1 = 0; d1 <= c.max_degree; ++d1) {
    for (const Sentence& i : enumerate_sentences(c.a, d1)) {
      for (int d2 = 0; d1 + d2 <= c.max_degree; ++d2) {
        for (const Sentence& j : enumerate_sentences(c.a, d2)) {
          ++r.cases;
          int slots = static_cast<int>(i.length() + j.length());
          TruncatedPoly pi = TruncatedPoly::realize_M(c.a, i, slots);
          TruncatedPoly pj = TruncatedPoly::realize_M(c.a, j, slots);
          FormalSum algebraic = product_M(i, j);
          try {
            if (!((pi * pj).to_M(c.a) == algebraic))
              return fail(r, i.text() + ", " + j.text());
          } catch (const std::invalid_argument&) {
            return fail(r, "product not quasisymmetric: " + i.text() + ", " + j.text());
          }
        }
      }
    }
  }
}

void check_kostka_unitriangular(const Ctx& c, CheckResult& r) {
  for (int n = 0; n <= c.max_degree; ++n) {
    KostkaMatrix km = kostka_matrix(c.a, n);
    for (size_t i = 0; i < km.order.size(); ++i) {
      for (size_t j = 0; j < km.order.size(); ++j) {
        ++r.cases;
        bool ok = i == j ? km.entries[i][j] == 1 : (i < j || km.entries[i][j] == 0);
        if (!ok)
          return fail(r, "K(" + km.order[i].text() + ", " + km.order[j].text() + ") = " +
                             std::to_string(km.entries[i][j]));
      }
    }
  }
}

void check_schur_duality(const Ctx& c, CheckResult& r) {
  for (int n = 0; n <= c.max_degree; ++n) {
    std::vector<PSentence> order = psentences_in_matrix_order(c.a, n);
    std::vector<FormalSum> s_side, sstar_side;
    s_side.reserve(order.size());
    sstar_side.reserve(order.size());
    for (const PSentence& p : order) {
      s_side.push_back(schur_in_h(c.a, p));
      sstar_side.push_back(dual_schur_in_m(c.a, p));
    }
    for (size_t i = 0; i < order.size(); ++i) {
      for (size_t j = 0; j < order.size(); ++j) {
        ++r.cases;
        Rational got = pair(c.a, s_side[i], sstar_side[j]);
        if (got != (i == j ? Rational(1) : Rational(0)))
          return fail(r, "<s(" + order[i].text() + "), s*(" + order[j].text() + ")> = " +
                             rational_text(got));
      }
    }
  }
}

struct CheckSpec {
  const char* name;
  const char* statement;
  void (*run)(const Ctx&, CheckResult&);
};

constexpr CheckSpec kChecks[] = {
    {"assoc", "product associativity: (x y) z = x (y z) in each colored algebra", check_assoc},
    {"coassoc",
     "coproduct coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta, compared as fully "
     "expanded triple tensors",
     check_coassoc},
    {"counit-laws", "counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta",
     check_counit_laws},
    {"bialgebra-compat", "the coproduct is an algebra morphism: Delta(x y) = Delta(x) Delta(y)",
     check_bialgebra_compat},
    {"antipode-axiom", "antipode axiom: mu (S (x) id) Delta = unit . counit = mu (id (x) S) Delta",
     check_antipode_axiom},
    {"antipode-squared-commutative", "S composed with S is the identity on the commutative "
                                     "colored algebras",
     check_antipode_squared},
    {"duality-product-coproduct",
     "the pairing exchanges product and coproduct: <x y, z> = <x (x) y, Delta z> and "
     "<Delta x, y (x) z> = <x, y z>",
     check_duality_product_coproduct},
    {"duality-antipode", "the pairing intertwines the antipodes: <S x, y> = <x, S y>",
     check_duality_antipode},
    {"chi-morphism", "the forgetful map chi preserves product, coproduct, and antipode",
     check_chi_morphism},
    {"adjointness", "chi and iota are adjoint: <chi x, y> = <x, iota y>", check_adjointness},
    {"diagram-commute", "uncoloring commutes with chi and iota", check_diagram_commute},
    {"syma-closure",
     "the symmetric subspace is closed: products, antipodes, and coproducts of m elements stay "
     "symmetric and match the quasisymmetric route",
     check_syma_closure},
    {"unary-specialization",
     "over a one-letter alphabet the colored structure constants and Kostka numbers equal the "
     "classical ones under word lengths, classical values computed by independent formulas",
     check_unary_specialization},
    {"oracle-product-equivalence",
     "the quasishuffle product equals the product of truncated polynomial realizations",
     check_oracle_product_equivalence},
    {"kostka-unitriangular", "the colored Kostka matrix is upper unitriangular in matrix order",
     check_kostka_unitriangular},
    {"schur-duality", "<s_P, s*_Q> = 1 when P = Q and 0 otherwise", check_schur_duality},
};

}  // namespace

std::vector<std::string> verifier_check_names() {
  std::vector<std::string> names;
  for (const CheckSpec& s : kChecks) names.emplace_back(s.name);
  return names;
}

std::string VerifierReport::text() const {
  std::string out = "alphabet: " + alphabet + "\nmax degree: " + std::to_string(max_degree) + "\n";
  int passed = 0;
  for (const CheckResult& r : results) {
    out += r.pass ? "[pass] " : "[FAIL] ";
    out += r.name + ": " + r.statement + " (" + std::to_string(r.cases) + " cases)";
    if (!r.pass) out += "\n       witness: " + r.witness;
    out += "\n";
    if (r.pass) ++passed;
  }
  out += "result: " + std::string(all_pass ? "PASS" : "FAIL") + " (" + std::to_string(passed) +
         "/" + std::to_string(results.size()) + " checks)\n";
  return out;
}

std::string VerifierReport::json_text() const {
  nlohmann::ordered_json j;
  j["alphabet"] = alphabet;
  j["max_degree"] = max_degree;
  j["all_pass"] = all_pass;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["statement"] = r.statement;
    c["pass"] = r.pass;
    c["cases"] = r.cases;
    if (!r.pass) c["witness"] = r.witness;
    j["checks"].push_back(c);
  }
  return j.dump(2);
}

VerifierReport run_verifier(const VerifierConfig& config) {
  if (config.max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  if (config.alphabet.empty()) throw std::invalid_argument("the alphabet must not be empty");
  Alphabet a(config.alphabet);

  // Resource guard: refuse configurations whose sentence count explodes.
  long keys = 1;  // the empty sentence
  long per_degree = static_cast<long>(a.size());  // sentences of size 1
  for (int d = 1; d <= config.max_degree; ++d) {
    keys += per_degree;
    if (keys > config.max_keys)
      throw std::invalid_argument(
          "resource guard: configuration enumerates more than " +
          std::to_string(config.max_keys) + " basis keys; lower --max-degree");
    if (per_degree > config.max_keys / (2 * static_cast<long>(a.size())))
      per_degree = config.max_keys + 1;  // saturate
    else
      per_degree *= 2 * static_cast<long>(a.size());
  }

  std::vector<const CheckSpec*> selected;
  if (config.checks.empty()) {
    for (const CheckSpec& s : kChecks) selected.push_back(&s);
  } else {
    for (const CheckSpec& s : kChecks)
      for (const std::string& want : config.checks)
        if (want == s.name) {
          selected.push_back(&s);
          break;
        }
    for (const std::string& want : config.checks) {
      bool known = false;
      for (const CheckSpec& s : kChecks)
        if (want == s.name) known = true;
      if (!known) {
        std::string valid;
        for (const CheckSpec& s : kChecks) valid += std::string(valid.empty() ? "" : ", ") + s.name;
        throw std::invalid_argument("unknown check \"" + want + "\"; valid checks: " + valid);
      }
    }
  }

  VerifierReport report;
  report.alphabet = config.alphabet;
  report.max_degree = config.max_degree;
  Ctx ctx{a, config.max_degree};
  for (const CheckSpec* spec : selected) {
    CheckResult result;
    result.name = spec->name;
    result.statement = spec->statement;
    result.pass = true;
    spec->run(ctx, result);
    report.all_pass = report.all_pass && result.pass;
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace csym
