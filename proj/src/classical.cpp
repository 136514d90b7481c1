#include "csym/classical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "csym/colored_hopf.hpp"
#include "csym/sentence_ops.hpp"

namespace csym {

const Alphabet& unary_alphabet() {
  static const Alphabet a("a");
  return a;
}

Sentence unary_sentence(const Composition& c) {
  std::vector<Word> words;
  words.reserve(c.size());
  for (int part : c) {
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    words.push_back(Word(static_cast<size_t>(part), 'a'));
  }
  return Sentence(std::move(words));
}

Composition word_length_composition(const Sentence& s) { return s.word_lengths(); }

namespace {

// The four bases with colored counterparts, in both directions.
struct Bridge {
  Algebra colored_alg;
  Basis basis;
  Algebra classical_alg;
};

Bridge bridge_for(Basis b) {
  switch (b) {
    case Basis::m: return {Algebra::SymA, Basis::m, Algebra::Sym};
    case Basis::h: return {Algebra::PSymA, Basis::h, Algebra::Sym};
    case Basis::M: return {Algebra::QSymA, Basis::M, Algebra::QSym};
    case Basis::H: return {Algebra::NSymA, Basis::H, Algebra::NSym};
    default: throw std::invalid_argument("basis " + basis_name(b) + " has no colored counterpart");
  }
}

FormalSum to_unary_colored(const FormalSum& f, Basis b) {
  Bridge br = bridge_for(b);
  return extend_linear(br.colored_alg, f, [&](const BasisKey& k) {
    return FormalSum(BasisKey(br.colored_alg, br.basis, unary_sentence(k.composition())));
  });
}

FormalSum from_unary_colored(const FormalSum& f, Basis b) {
  Bridge br = bridge_for(b);
  return extend_linear(br.classical_alg, f, [&](const BasisKey& k) {
    return FormalSum(key_classical(br.classical_alg, b, k.sentence().word_lengths()));
  });
}

// The single basis all keys of f share; the distinguished one for zero.
Basis uniform_basis(const FormalSum& f, const char* what) {
  if (f.is_zero()) return distinguished_basis(f.algebra());
  Basis b = f.terms().begin()->first.basis();
  for (const auto& [k, c] : f.terms())
    if (k.basis() != b)
      throw std::invalid_argument(std::string(what) + ": mixed bases " + basis_name(b) + " and " +
                                  basis_name(k.basis()) + "; convert first");
  return b;
}

void require_classical(const FormalSum& f, const char* what) {
  if (algebra_is_colored(f.algebra()))
    throw std::invalid_argument(std::string(what) + ": expected a classical algebra, got " +
                                algebra_name(f.algebra()));
}

FormalSum single(Algebra alg, Basis b, Composition c) {
  return FormalSum(key_classical(alg, b, std::move(c)));
}

}  // namespace

FormalSum classical_unit(Algebra alg) {
  require_classical(FormalSum(alg), "classical_unit");
  return single(alg, distinguished_basis(alg), {});
}

FormalSum classical_product(const FormalSum& f, const FormalSum& g) {
  require_classical(f, "product");
  if (f.algebra() != g.algebra())
    throw std::invalid_argument("product: algebra mismatch (" + algebra_name(f.algebra()) +
                                " vs " + algebra_name(g.algebra()) + ")");
  Basis bf = uniform_basis(f, "product"), bg = uniform_basis(g, "product");
  if (!f.is_zero() && !g.is_zero() && bf != bg)
    throw std::invalid_argument("product: mixed bases " + basis_name(bf) + " and " +
                                basis_name(bg) + "; convert first");
  Basis b = f.is_zero() ? bg : bf;
  switch (b) {
    case Basis::m:
    case Basis::h:
    case Basis::M:
    case Basis::H: {
      FormalSum colored = colored_product(unary_alphabet(), to_unary_colored(f, b),
                                          to_unary_colored(g, b));
      return from_unary_colored(colored, b);
    }
    case Basis::e: {
      // e is multiplicative: e_lambda e_mu = e_sort(lambda.mu).
      FormalSum out(Algebra::Sym);
      for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
          out.add_term(key_classical(Algebra::Sym, Basis::e,
                                     sort_composition(comp_concat(kf.composition(),
                                                                  kg.composition()))),
                       cf * cg);
      return out;
    }
    case Basis::R: {
      FormalSum out(Algebra::NSym);
      for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms()) {
          FormalSum piece = ribbon_product(kf.composition(), kg.composition());
          piece *= cf * cg;
          out += piece;
        }
      return out;
    }
    case Basis::E: {
      // E is multiplicative: E_alpha E_beta = E_(alpha.beta).
      FormalSum out(Algebra::NSym);
      for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
          out.add_term(key_classical(Algebra::NSym, Basis::E,
                                     comp_concat(kf.composition(), kg.composition())),
                       cf * cg);
      return out;
    }
    default:
      throw std::invalid_argument("no product rule on basis " + basis_name(b) +
                                  "; convert first");
  }
}

TensorSum classical_coproduct(const FormalSum& f) {
  require_classical(f, "coproduct");
  Basis b = uniform_basis(f, "coproduct");
  switch (b) {
    case Basis::m:
    case Basis::h:
    case Basis::M:
    case Basis::H: {
      Bridge br = bridge_for(b);
      TensorSum colored = colored_coproduct(unary_alphabet(), to_unary_colored(f, b));
      return map_tensor(
          colored, f.algebra(),
          [&](const BasisKey& k) {
            return single(br.classical_alg, b, k.sentence().word_lengths());
          },
          [&](const BasisKey& k) {
            return single(br.classical_alg, b, k.sentence().word_lengths());
          });
    }
    case Basis::e: {
      // omega is a Hopf morphism: Delta(e_lambda) = (omega x omega) Delta(h_lambda).
      FormalSum as_h = extend_linear(Algebra::Sym, f, [&](const BasisKey& k) {
        return single(Algebra::Sym, Basis::h, k.composition());
      });
      TensorSum hh = classical_coproduct(as_h);
      auto h_to_e = [&](const BasisKey& k) {
        return single(Algebra::Sym, Basis::e, k.composition());
      };
      return map_tensor(hh, Algebra::Sym, h_to_e, h_to_e);
    }
    default:
      throw std::invalid_argument("no coproduct rule on basis " + basis_name(b) +
                                  "; convert first");
  }
}

FormalSum classical_antipode(const FormalSum& f) {
  require_classical(f, "antipode");
  Basis b = uniform_basis(f, "antipode");
  switch (b) {
    case Basis::m:
    case Basis::h:
    case Basis::M:
    case Basis::H:
      return from_unary_colored(colored_antipode(unary_alphabet(), to_unary_colored(f, b)), b);
    default:
      throw std::invalid_argument("no antipode rule on basis " + basis_name(b) +
                                  "; convert first");
  }
}

FormalSum m_product_direct(const Partition& lambda, const Partition& mu) {
  FormalSum out(Algebra::Sym);
  for (const Partition& nu : partitions_of(comp_size(lambda) + comp_size(mu))) {
    long r = comp_r_coefficient(lambda, mu, nu);
    if (r != 0) out.add_term(key_classical(Algebra::Sym, Basis::m, nu), Rational(r));
  }
  return out;
}

TensorSum m_coproduct_direct(const Partition& lambda) {
  // Sum over submultisets of the parts.
  std::vector<std::pair<int, int>> groups;  // (part value, count)
  for (int part : lambda) {
    if (!groups.empty() && groups.back().first == part)
      ++groups.back().second;
    else
      groups.emplace_back(part, 1);
  }
  TensorSum out(Algebra::Sym);
  std::vector<int> take(groups.size(), 0);
  while (true) {
    Partition left, right;
    for (size_t g = 0; g < groups.size(); ++g) {
      for (int t = 0; t < take[g]; ++t) left.push_back(groups[g].first);
      for (int t = take[g]; t < groups[g].second; ++t) right.push_back(groups[g].first);
    }
    out.add_term(key_classical(Algebra::Sym, Basis::m, sort_composition(left)),
                 key_classical(Algebra::Sym, Basis::m, sort_composition(right)), 1);
    size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return out;
}

FormalSum h_product_direct(const Partition& lambda, const Partition& mu) {
  return single(Algebra::Sym, Basis::h, sort_composition(comp_concat(lambda, mu)));
}

TensorSum h_coproduct_direct(const Partition& lambda) {
  // Delta(h_n) = sum h_k (x) h_(n-k); extend multiplicatively over parts.
  TensorSum acc(Algebra::Sym);
  acc.add_term(key_classical(Algebra::Sym, Basis::h, {}),
               key_classical(Algebra::Sym, Basis::h, {}), 1);
  for (int part : lambda) {
    TensorSum next(Algebra::Sym);
    for (const auto& [k, c] : acc.terms()) {
      for (int give = 0; give <= part; ++give) {
        Composition left = k.first.composition(), right = k.second.composition();
        if (give > 0) left.push_back(give);
        if (part - give > 0) right.push_back(part - give);
        next.add_term(key_classical(Algebra::Sym, Basis::h, sort_composition(left)),
                      key_classical(Algebra::Sym, Basis::h, sort_composition(right)), c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

FormalSum M_product_direct(const Composition& alpha, const Composition& beta) {
  FormalSum out(Algebra::QSym);
  for (const auto& [gamma, mult] : comp_quasishuffle(alpha, beta))
    out.add_term(key_classical(Algebra::QSym, Basis::M, gamma), Rational(mult));
  return out;
}

TensorSum M_coproduct_direct(const Composition& alpha) {
  TensorSum out(Algebra::QSym);
  for (size_t cut = 0; cut <= alpha.size(); ++cut) {
    Composition left(alpha.begin(), alpha.begin() + static_cast<long>(cut));
    Composition right(alpha.begin() + static_cast<long>(cut), alpha.end());
    out.add_term(key_classical(Algebra::QSym, Basis::M, left),
                 key_classical(Algebra::QSym, Basis::M, right), 1);
  }
  return out;
}

FormalSum H_product_direct(const Composition& alpha, const Composition& beta) {
  return single(Algebra::NSym, Basis::H, comp_concat(alpha, beta));
}

TensorSum H_coproduct_direct(const Composition& alpha) {
  // Delta(H_n) = sum H_i (x) H_j over i + j = n; extend multiplicatively,
  // concatenating in each slot (order matters in NSym).
  TensorSum acc(Algebra::NSym);
  acc.add_term(key_classical(Algebra::NSym, Basis::H, {}),
               key_classical(Algebra::NSym, Basis::H, {}), 1);
  for (int part : alpha) {
    TensorSum next(Algebra::NSym);
    for (const auto& [k, c] : acc.terms()) {
      for (int give = 0; give <= part; ++give) {
        Composition left = k.first.composition(), right = k.second.composition();
        if (give > 0) left.push_back(give);
        if (part - give > 0) right.push_back(part - give);
        next.add_term(key_classical(Algebra::NSym, Basis::H, left),
                      key_classical(Algebra::NSym, Basis::H, right), c);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

FormalSum ribbon_product(const Composition& alpha, const Composition& beta) {
  FormalSum out(Algebra::NSym);
  if (alpha.empty()) return single(Algebra::NSym, Basis::R, beta);
  if (beta.empty()) return single(Algebra::NSym, Basis::R, alpha);
  out.add_term(key_classical(Algebra::NSym, Basis::R, comp_concat(alpha, beta)), 1);
  out.add_term(key_classical(Algebra::NSym, Basis::R, comp_near_concat(alpha, beta)), 1);
  return out;
}

namespace {

// Backtracking SSYT enumeration over a partition shape. visit receives the
// content vector (counts of each entry value, 1-based) for every complete
// filling.
void enumerate_ssyt(const Partition& shape, int max_entry,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (shape.empty()) {
    std::vector<int> empty_content(static_cast<size_t>(max_entry), 0);
    visit(empty_content);
    return;
  }
  size_t rows = shape.size();
  std::vector<std::vector<int>> cells(rows);
  for (size_t r = 0; r < rows; ++r) cells[r].assign(static_cast<size_t>(shape[r]), 0);
  std::vector<int> content(static_cast<size_t>(max_entry), 0);

  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == rows) {
      visit(content);
      return;
    }
    size_t nr = r, nc = c + 1;
    if (nc == cells[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    int low = 1;
    if (c > 0) low = std::max(low, cells[r][c - 1]);                  // weakly increasing row
    if (r > 0) low = std::max(low, cells[r - 1][c] + 1);              // strictly increasing column
    for (int v = low; v <= max_entry; ++v) {
      cells[r][c] = v;
      ++content[static_cast<size_t>(v) - 1];
      self(self, nr, nc);
      --content[static_cast<size_t>(v) - 1];
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

long classical_kostka(const Partition& shape, const Composition& content) {
  if (!is_partition(shape)) throw std::invalid_argument("Kostka shape must be a partition");
  if (comp_size(shape) != comp_size(content)) return 0;
  int max_entry = static_cast<int>(content.size());
  if (max_entry == 0) return shape.empty() ? 1 : 0;
  long count = 0;
  std::vector<int> want(content.begin(), content.end());
  enumerate_ssyt(shape, max_entry, [&](const std::vector<int>& got) {
    if (got == want) ++count;
  });
  return count;
}

long count_ssyt(const Partition& shape, int max_entry) {
  long count = 0;
  enumerate_ssyt(shape, max_entry, [&](const std::vector<int>&) { ++count; });
  return count;
}

namespace {

// Kostka matrix over partitions_of(n) (descending lexicographic order);
// upper unitriangular, so exact inversion by back-substitution.
struct KostkaTable {
  std::vector<Partition> order;
  std::map<Partition, size_t> position;
  std::vector<std::vector<Rational>> k;     // k[i][j] = K(order[i], order[j])
  std::vector<std::vector<Rational>> kinv;  // exact inverse
};

KostkaTable kostka_table(int n) {
  KostkaTable t;
  t.order = partitions_of(n);
  size_t size = t.order.size();
  for (size_t i = 0; i < size; ++i) t.position[t.order[i]] = i;
  t.k.assign(size, std::vector<Rational>(size, 0));
  for (size_t i = 0; i < size; ++i)
    for (size_t j = i; j < size; ++j)
      t.k[i][j] = Rational(classical_kostka(t.order[i], t.order[j]));
  // Invert the unitriangular matrix.
  t.kinv.assign(size, std::vector<Rational>(size, 0));
  for (size_t i = 0; i < size; ++i) t.kinv[i][i] = 1;
  for (size_t i = 0; i < size; ++i)
    for (size_t j = i + 1; j < size; ++j) {
      Rational acc = 0;
      for (size_t l = i; l < j; ++l) acc += t.kinv[i][l] * t.k[l][j];
      t.kinv[i][j] = -acc;
    }
  return t;
}

// Expansion of one basis element in the Schur basis.
FormalSum key_to_s(const BasisKey& key) {
  const Composition& idx = key.composition();
  int n = comp_size(idx);
  KostkaTable t = kostka_table(n);
  FormalSum out(Algebra::Sym);
  auto s_key = [&](const Partition& p) { return key_classical(Algebra::Sym, Basis::s, p); };
  switch (key.basis()) {
    case Basis::s: out.add_term(s_key(idx), 1); break;
    case Basis::m: {
      // m = K^{-1} s.
      size_t row = t.position.at(idx);
      for (size_t j = 0; j < t.order.size(); ++j)
        out.add_term(s_key(t.order[j]), t.kinv[row][j]);
      break;
    }
    case Basis::h: {
      // h_mu = sum over lambda of K(lambda, mu) s_lambda.
      size_t col = t.position.at(idx);
      for (size_t i = 0; i < t.order.size(); ++i) out.add_term(s_key(t.order[i]), t.k[i][col]);
      break;
    }
    case Basis::e: {
      // e_mu = omega(h_mu) = sum K(lambda, mu) s_(lambda').
      size_t col = t.position.at(idx);
      for (size_t i = 0; i < t.order.size(); ++i)
        out.add_term(s_key(conjugate(t.order[i])), t.k[i][col]);
      break;
    }
    default: throw std::invalid_argument("key_to_s: unsupported basis " + basis_name(key.basis()));
  }
  return out;
}

// Expansion of one Schur element in the target basis.
FormalSum s_to_basis(const Partition& lambda, Basis target) {
  int n = comp_size(lambda);
  FormalSum out(Algebra::Sym);
  auto out_key = [&](const Partition& p) { return key_classical(Algebra::Sym, target, p); };
  KostkaTable t = kostka_table(n);
  switch (target) {
    case Basis::s: out.add_term(out_key(lambda), 1); break;
    case Basis::m: {
      // s_lambda = sum K(lambda, mu) m_mu.
      size_t row = t.position.at(lambda);
      for (size_t j = 0; j < t.order.size(); ++j) out.add_term(out_key(t.order[j]), t.k[row][j]);
      break;
    }
    case Basis::h: {
      // s_lambda = sum over mu of K^{-1}(mu, lambda) h_mu.
      size_t col = t.position.at(lambda);
      for (size_t i = 0; i < t.order.size(); ++i) out.add_term(out_key(t.order[i]), t.kinv[i][col]);
      break;
    }
    case Basis::e: {
      // omega: s_lambda = omega(s_(lambda')); expand s_(lambda') in h and
      // replace h by e.
      size_t col = t.position.at(conjugate(lambda));
      for (size_t i = 0; i < t.order.size(); ++i) out.add_term(out_key(t.order[i]), t.kinv[i][col]);
      break;
    }
    default: throw std::invalid_argument("s_to_basis: unsupported basis " + basis_name(target));
  }
  return out;
}

}  // namespace

FormalSum convert_classical(const FormalSum& f, Basis target) {
  require_classical(f, "convert");
  if (!basis_legal(f.algebra(), target))
    throw std::invalid_argument("basis " + basis_name(target) + " does not index " +
                                algebra_name(f.algebra()));
  switch (f.algebra()) {
    case Algebra::QSym: {
      return extend_linear(Algebra::QSym, f, [&](const BasisKey& k) {
        if (k.basis() == target) return FormalSum(k);
        FormalSum out(Algebra::QSym);
        const Composition& idx = k.composition();
        if (k.basis() == Basis::F && target == Basis::M) {
          for (const Composition& beta : comp_refinements(idx))
            out.add_term(key_classical(Algebra::QSym, Basis::M, beta), 1);
        } else {  // M -> F
          int la = static_cast<int>(idx.size());
          for (const Composition& beta : comp_refinements(idx))
            out.add_term(key_classical(Algebra::QSym, Basis::F, beta),
                         ((la - static_cast<int>(beta.size())) % 2) ? Rational(-1) : Rational(1));
        }
        return out;
      });
    }
    case Algebra::NSym: {
      // Through the H hub.
      FormalSum in_h = extend_linear(Algebra::NSym, f, [&](const BasisKey& k) {
        const Composition& idx = k.composition();
        FormalSum out(Algebra::NSym);
        switch (k.basis()) {
          case Basis::H: out.add_term(k, 1); break;
          case Basis::R: {
            int la = static_cast<int>(idx.size());
            for (const Composition& beta : comp_coarsenings(idx))
              out.add_term(key_classical(Algebra::NSym, Basis::H, beta),
                           ((la - static_cast<int>(beta.size())) % 2) ? Rational(-1)
                                                                      : Rational(1));
            break;
          }
          case Basis::E: {
            int size = comp_size(idx);
            for (const Composition& beta : comp_refinements(idx))
              out.add_term(key_classical(Algebra::NSym, Basis::H, beta),
                           ((size - static_cast<int>(beta.size())) % 2) ? Rational(-1)
                                                                        : Rational(1));
            break;
          }
          default: throw std::invalid_argument("convert: unsupported NSym basis");
        }
        return out;
      });
      if (target == Basis::H) return in_h;
      return extend_linear(Algebra::NSym, in_h, [&](const BasisKey& k) {
        const Composition& idx = k.composition();
        FormalSum out(Algebra::NSym);
        if (target == Basis::R) {
          // H_beta = sum of R over coarsenings of beta.
          for (const Composition& alpha : comp_coarsenings(idx))
            out.add_term(key_classical(Algebra::NSym, Basis::R, alpha), 1);
        } else {  // target E
          int size = comp_size(idx);
          for (const Composition& alpha : comp_refinements(idx))
            out.add_term(key_classical(Algebra::NSym, Basis::E, alpha),
                         ((size - static_cast<int>(alpha.size())) % 2) ? Rational(-1)
                                                                       : Rational(1));
        }
        return out;
      });
    }
    case Algebra::Sym: {
      return extend_linear(Algebra::Sym, f, [&](const BasisKey& k) {
        if (k.basis() == target) return FormalSum(k);
        FormalSum in_s = key_to_s(k);
        return extend_linear(Algebra::Sym, in_s, [&](const BasisKey& sk) {
          return s_to_basis(sk.composition(), target);
        });
      });
    }
    default:
      throw std::invalid_argument("convert: colored algebra passed to the classical converter");
  }
}

FormalSum omega(const FormalSum& f) {
  require_classical(f, "omega");
  if (f.algebra() != Algebra::Sym)
    throw std::invalid_argument("omega is defined on Sym, got " + algebra_name(f.algebra()));
  return extend_linear(Algebra::Sym, f, [&](const BasisKey& k) {
    FormalSum in_s = key_to_s(k);
    FormalSum flipped(Algebra::Sym);
    for (const auto& [sk, c] : in_s.terms())
      flipped.add_term(key_classical(Algebra::Sym, Basis::s, conjugate(sk.composition())), c);
    return extend_linear(Algebra::Sym, flipped, [&](const BasisKey& sk) {
      return s_to_basis(sk.composition(), k.basis());
    });
  });
}

FormalSum chi_classical(const FormalSum& f) {
  require_classical(f, "chi");
  if (f.algebra() != Algebra::NSym)
    throw std::invalid_argument("chi expects NSym, got " + algebra_name(f.algebra()));
  FormalSum in_h = convert_classical(f, Basis::H);
  return extend_linear(Algebra::Sym, in_h, [&](const BasisKey& k) {
    return single(Algebra::Sym, Basis::h, sort_composition(k.composition()));
  });
}

FormalSum iota_classical(const FormalSum& f) {
  require_classical(f, "iota");
  if (f.algebra() != Algebra::Sym)
    throw std::invalid_argument("iota expects Sym, got " + algebra_name(f.algebra()));
  FormalSum in_m = convert_classical(f, Basis::m);
  return extend_linear(Algebra::QSym, in_m, [&](const BasisKey& k) {
    FormalSum out(Algebra::QSym);
    for (const Composition& alpha : comp_rearrangements(k.composition()))
      out.add_term(key_classical(Algebra::QSym, Basis::M, alpha), 1);
    return out;
  });
}

FormalSum m_from_M_classical(const FormalSum& f) {
  require_classical(f, "m_from_M");
  if (f.algebra() != Algebra::QSym)
    throw std::invalid_argument("m_from_M expects QSym, got " + algebra_name(f.algebra()));
  FormalSum out(Algebra::Sym);
  std::set<Partition> seen;
  for (const auto& [k, c] : f.terms()) {
    if (k.basis() != Basis::M)
      throw std::invalid_argument("m_from_M expects the M basis, found " + k.text());
    Partition p = sort_composition(k.composition());
    if (seen.count(p)) continue;
    seen.insert(p);
    for (const Composition& other : comp_rearrangements(p)) {
      Rational oc = f.coefficient(key_classical(Algebra::QSym, Basis::M, other));
      if (oc != c)
        throw std::invalid_argument("not a symmetric function: compositions " + k.index_text() +
                                    " and " + comp_text(other) +
                                    " rearrange each other but carry distinct coefficients");
    }
    out.add_term(key_classical(Algebra::Sym, Basis::m, p), c);
  }
  return out;
}

}  // namespace csym
