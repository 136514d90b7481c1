#include "csym/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csym {

int comp_size(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::string comp_text(const Composition& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ')';
  return out;
}

Composition comp_parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("composition text must be parenthesized: '" + std::string(text) +
                                "'");
  std::string_view body = text.substr(1, text.size() - 2);
  Composition out;
  if (body.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string piece(comma == std::string_view::npos ? body.substr(start)
                                                      : body.substr(start, comma - start));
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed part '" + piece + "' in composition");
    int part = std::stoi(piece);
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    out.push_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_partition(const Composition& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1]) return false;
  return !c.empty() ? c.back() > 0 : true;
}

Partition sort_composition(const Composition& c) {
  Partition p = c;
  std::sort(p.rbegin(), p.rend());
  return p;
}

Partition conjugate(const Partition& p) {
  Partition out;
  for (int row = 1; !p.empty() && row <= p[0]; ++row) {
    int count = 0;
    for (int part : p)
      if (part >= row) ++count;
    out.push_back(count);
  }
  return out;
}

namespace {

// Partial sums without the total; refinement is containment of these sets.
std::vector<int> proper_prefix_sums(const Composition& c) {
  std::vector<int> out;
  int acc = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    out.push_back(acc);
  }
  return out;
}

}  // namespace

bool comp_refines(const Composition& alpha, const Composition& beta) {
  if (comp_size(alpha) != comp_size(beta)) return false;
  std::vector<int> sa = proper_prefix_sums(alpha), sb = proper_prefix_sums(beta);
  return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

std::vector<Composition> comp_refinements(const Composition& alpha) {
  std::vector<Composition> out{{}};
  for (int part : alpha) {
    // All compositions of one part.
    std::vector<Composition> pieces;
    unsigned masks = 1u << (part - 1);
    for (unsigned mask = 0; mask < masks; ++mask) {
      Composition piece;
      int run = 1;
      for (int t = 0; t < part - 1; ++t) {
        if (mask & (1u << t)) {
          piece.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      piece.push_back(run);
      pieces.push_back(std::move(piece));
    }
    std::vector<Composition> next;
    for (const Composition& prefix : out)
      for (const Composition& piece : pieces) {
        Composition joined = prefix;
        joined.insert(joined.end(), piece.begin(), piece.end());
        next.push_back(std::move(joined));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Composition> comp_coarsenings(const Composition& alpha) {
  if (alpha.empty()) return {alpha};
  std::vector<Composition> out;
  int boundaries = static_cast<int>(alpha.size()) - 1;
  for (unsigned mask = 0; mask < (1u << boundaries); ++mask) {
    Composition merged{alpha[0]};
    for (int t = 0; t < boundaries; ++t) {
      if (mask & (1u << t))
        merged.back() += alpha[static_cast<size_t>(t) + 1];
      else
        merged.push_back(alpha[static_cast<size_t>(t) + 1]);
    }
    out.push_back(std::move(merged));
  }
  return out;
}

Composition comp_concat(const Composition& a, const Composition& b) {
  Composition out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Composition comp_near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("near concatenation requires nonempty compositions");
  Composition out = a;
  out.back() += b[0];
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

Composition comp_reversal(const Composition& a) { return Composition(a.rbegin(), a.rend()); }

namespace {

void comp_quasishuffle_rec(const Composition& a, size_t ia, const Composition& b, size_t ib,
                           Composition& acc, std::map<Composition, long>& out) {
  if (ia == a.size() && ib == b.size()) {
    ++out[acc];
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    comp_quasishuffle_rec(a, ia + 1, b, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    comp_quasishuffle_rec(a, ia, b, ib + 1, acc, out);
    acc.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    acc.push_back(a[ia] + b[ib]);
    comp_quasishuffle_rec(a, ia + 1, b, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::map<Composition, long> comp_quasishuffle(const Composition& a, const Composition& b) {
  std::map<Composition, long> out;
  Composition acc;
  comp_quasishuffle_rec(a, 0, b, 0, acc, out);
  return out;
}

long comp_r_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (comp_size(lambda) + comp_size(mu) != comp_size(nu)) return 0;
  Partition tl = sort_composition(lambda), tm = sort_composition(mu);
  long count = 0;
  std::vector<int> ys, zs;
  auto rec = [&](auto&& self, size_t at) -> void {
    if (at == nu.size()) {
      Composition py, pz;
      for (int y : ys)
        if (y > 0) py.push_back(y);
      for (int z : zs)
        if (z > 0) pz.push_back(z);
      if (sort_composition(py) == tl && sort_composition(pz) == tm) ++count;
      return;
    }
    for (int y = 0; y <= nu[at]; ++y) {
      ys.push_back(y);
      zs.push_back(nu[at] - y);
      self(self, at + 1);
      ys.pop_back();
      zs.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative size");
  if (n > 24) throw std::invalid_argument("compositions_of: size too large");
  if (n == 0) return {{}};
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Composition c;
    int run = 1;
    for (int t = 0; t < n - 1; ++t) {
      if (mask & (1u << t)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Composition& x, const Composition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  if (n == 0) return {{}};
  std::vector<Partition> out;
  Partition acc;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(acc);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      acc.push_back(part);
      self(self, remaining - part, part);
      acc.pop_back();
    }
  };
  rec(rec, n, n);
  return out;  // descending lexicographic: (n) first, (1^n) last
}

std::vector<Composition> comp_rearrangements(const Partition& p) {
  Composition sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Composition> out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

}  // namespace csym
