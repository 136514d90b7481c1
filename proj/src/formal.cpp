#include "csym/formal.hpp"

#include <stdexcept>

namespace csym {
namespace {

void check_algebra(Algebra expected, Algebra got, const char* what) {
  if (expected != got)
    throw std::invalid_argument(std::string(what) + ": algebra mismatch (" +
                                algebra_name(expected) + " vs " + algebra_name(got) + ")");
}

// Writes " + c*" / " - c*" (or the leading-term variants) for a nonzero c.
void append_coefficient(std::string& out, const Rational& c, bool first) {
  Rational abs = c < 0 ? Rational(-c) : c;
  if (first)
    out += c < 0 ? "-" : "";
  else
    out += c < 0 ? " - " : " + ";
  out += rational_text(abs);
  out += '*';
}

}  // namespace

FormalSum::FormalSum(const BasisKey& k, const Rational& c) : alg_(k.algebra()) {
  add_term(k, c);
}

Rational FormalSum::coefficient(const BasisKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSum::add_term(const BasisKey& k, const Rational& c) {
  check_algebra(alg_, k.algebra(), "add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  check_algebra(alg_, o.alg_, "add");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  check_algebra(alg_, o.alg_, "subtract");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool FormalSum::operator==(const FormalSum& o) const {
  return alg_ == o.alg_ && terms_ == o.terms_;
}

std::string FormalSum::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_coefficient(out, c, first);
    out += k.text();
    first = false;
  }
  return out;
}

TensorSum::TensorSum(const BasisKey& l, const BasisKey& r, const Rational& c) : alg_(l.algebra()) {
  add_term(l, r, c);
}

Rational TensorSum::coefficient(const BasisKey& l, const BasisKey& r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSum::add_term(const BasisKey& l, const BasisKey& r, const Rational& c) {
  check_algebra(alg_, l.algebra(), "tensor add_term (left)");
  check_algebra(alg_, r.algebra(), "tensor add_term (right)");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{l, r}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  check_algebra(alg_, o.alg_, "tensor add");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  check_algebra(alg_, o.alg_, "tensor subtract");
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorSum& TensorSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool TensorSum::operator==(const TensorSum& o) const {
  return alg_ == o.alg_ && terms_ == o.terms_;
}

std::string TensorSum::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_coefficient(out, c, first);
    out += k.first.text();
    out += " (x) ";
    out += k.second.text();
    first = false;
  }
  return out;
}

FormalSum extend_linear(Algebra out, const FormalSum& f,
                        const std::function<FormalSum(const BasisKey&)>& rule) {
  FormalSum result(out);
  for (const auto& [k, c] : f.terms()) {
    FormalSum piece = rule(k);
    piece *= c;
    result += piece;
  }
  return result;
}

TensorSum extend_linear_tensor(Algebra out, const FormalSum& f,
                               const std::function<TensorSum(const BasisKey&)>& rule) {
  TensorSum result(out);
  for (const auto& [k, c] : f.terms()) {
    TensorSum piece = rule(k);
    piece *= c;
    result += piece;
  }
  return result;
}

TensorSum map_tensor(const TensorSum& t, Algebra out,
                     const std::function<FormalSum(const BasisKey&)>& left,
                     const std::function<FormalSum(const BasisKey&)>& right) {
  TensorSum result(out);
  for (const auto& [k, c] : t.terms()) {
    FormalSum l = left(k.first), r = right(k.second);
    for (const auto& [lk, lc] : l.terms())
      for (const auto& [rk, rc] : r.terms()) result.add_term(lk, rk, c * lc * rc);
  }
  return result;
}

}  // namespace csym
