#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "csym/basis.hpp"
#include "csym/rational.hpp"

namespace csym {

// A finite formal sum of basis elements of one algebra with exact rational
// coefficients. Zero coefficients are never stored; term order is the
// rendering order of BasisKey, so iteration and text() are deterministic.
class FormalSum {
 public:
  explicit FormalSum(Algebra alg) : alg_(alg) {}
  static FormalSum zero(Algebra alg) { return FormalSum(alg); }
  // c times a single basis element.
  FormalSum(const BasisKey& k, const Rational& c = 1);

  Algebra algebra() const { return alg_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  Rational coefficient(const BasisKey& k) const;

  void add_term(const BasisKey& k, const Rational& c);

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Rational& c, FormalSum f) { return f *= c; }

  bool operator==(const FormalSum& o) const;

  // "2*M(ab,c) - 1/2*M(c,ab)"; zero renders "0".
  std::string text() const;

 private:
  Algebra alg_;
  std::map<BasisKey, Rational> terms_;
};

// A finite formal sum in the tensor square of an algebra.
class TensorSum {
 public:
  explicit TensorSum(Algebra alg) : alg_(alg) {}
  static TensorSum zero(Algebra alg) { return TensorSum(alg); }
  TensorSum(const BasisKey& l, const BasisKey& r, const Rational& c = 1);

  using Key = std::pair<BasisKey, BasisKey>;

  Algebra algebra() const { return alg_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  Rational coefficient(const BasisKey& l, const BasisKey& r) const;

  void add_term(const BasisKey& l, const BasisKey& r, const Rational& c);

  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  TensorSum& operator*=(const Rational& c);
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }

  bool operator==(const TensorSum& o) const;

  // "1*M(a) (x) M(b) + ..."; zero renders "0".
  std::string text() const;

 private:
  Algebra alg_;
  std::map<Key, Rational> terms_;
};

// Linear extension helpers: apply a per-key rule and combine into a sum of
// the stated output algebra.
FormalSum extend_linear(Algebra out, const FormalSum& f,
                        const std::function<FormalSum(const BasisKey&)>& rule);
TensorSum extend_linear_tensor(Algebra out, const FormalSum& f,
                               const std::function<TensorSum(const BasisKey&)>& rule);
// Apply per-key rules to both tensor slots.
TensorSum map_tensor(const TensorSum& t, Algebra out,
                     const std::function<FormalSum(const BasisKey&)>& left,
                     const std::function<FormalSum(const BasisKey&)>& right);

}  // namespace csym
