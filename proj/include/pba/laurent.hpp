#pragma once

#include <map>
#include <string>

#include "pba/rational.hpp"

namespace pba {

/// Element of Q[v, v^-1]. No zero coefficients are ever stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT: constants convert implicitly

  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1)) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
  }

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  Rational evaluate_at_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
    LaurentPoly out;
    if (s == 0) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += format_rational(c);
      if (e != 0) s += "v^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::map<int, Rational> terms_;
};

}  // namespace pba
