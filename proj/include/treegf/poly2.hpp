#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "treegf/bigint.hpp"

namespace treegf {

/// Sparse bivariate polynomial in x (edge variable) and y (vertex variable)
/// with BigInt coefficients.  Terms are kept in a map ordered by
/// (x_degree, y_degree); zero coefficients are never stored.
class Poly2 {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x_deg, y_deg)
  using TermMap = std::map<Key, BigInt>;

  Poly2() = default;  // the zero polynomial
  Poly2(int c) : Poly2(BigInt(c)) {}
  Poly2(long c) : Poly2(BigInt(c)) {}
  Poly2(const BigInt& c) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static Poly2 x() { return monomial(1, 0, 1); }
  static Poly2 y() { return monomial(0, 1, 1); }
  static Poly2 monomial(std::uint32_t x_deg, std::uint32_t y_deg,
                        const BigInt& coeff) {
    Poly2 p;
    if (coeff != 0) p.terms_[{x_deg, y_deg}] = coeff;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coeff(std::uint32_t x_deg, std::uint32_t y_deg) const {
    auto it = terms_.find({x_deg, y_deg});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::uint32_t x_degree() const {  // 0 for the zero polynomial
    std::uint32_t d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  std::uint32_t y_degree() const {
    std::uint32_t d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  friend Poly2 operator-(const Poly2& a) { return Poly2() - a; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  Poly2& operator+=(const Poly2& b) { return *this = *this + b; }
  Poly2& operator-=(const Poly2& b) { return *this = *this - b; }
  Poly2& operator*=(const Poly2& b) { return *this = *this * b; }

  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.terms_ == b.terms_;
  }

  /// Full evaluation at integer points.
  BigInt eval(const BigInt& xv, const BigInt& yv) const {
    BigInt r = 0;
    for (const auto& [k, c] : terms_)
      r += c * ipow(xv, k.first) * ipow(yv, k.second);
    return r;
  }

  /// Partial substitution x := xv, leaving y symbolic.
  Poly2 substitute_x(const BigInt& xv) const {
    Poly2 r;
    for (const auto& [k, c] : terms_)
      r.add_term({0, k.second}, c * ipow(xv, k.first));
    return r;
  }
  /// Partial substitution y := yv, leaving x symbolic.
  Poly2 substitute_y(const BigInt& yv) const {
    Poly2 r;
    for (const auto& [k, c] : terms_)
      r.add_term({k.first, 0}, c * ipow(yv, k.second));
    return r;
  }

  /// Sum of all coefficients; equals eval(1, 1).
  BigInt coefficient_sum() const {
    BigInt r = 0;
    for (const auto& [k, c] : terms_) r += c;
    return r;
  }

  /// Renders like the paper prints its examples: terms in descending
  /// x-degree (then descending y-degree), e.g. "x^5+4x^4+6x^3+6x^2+5x+6".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      std::string mono;
      if (k.first > 0) {
        mono += "x";
        if (k.first > 1) mono += "^" + std::to_string(k.first);
      }
      if (k.second > 0) {
        mono += "y";
        if (k.second > 1) mono += "^" + std::to_string(k.second);
      }
      BigInt a = c;
      if (!out.empty()) {
        out += (a < 0) ? "-" : "+";
        if (a < 0) a = -a;
      }
      if (mono.empty()) {
        out += to_decimal(a);
      } else {
        if (a == -1)
          out += "-";
        else if (a != 1)
          out += to_decimal(a);
        out += mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Key& k, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static BigInt ipow(const BigInt& base, std::uint32_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
  }

  TermMap terms_;
};

}  // namespace treegf
