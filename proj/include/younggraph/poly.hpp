#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "younggraph/rational.hpp"

namespace younggraph {

/// Univariate polynomial in t with exact rational coefficients. The
/// representation is trimmed: the leading coefficient is nonzero, and the zero
/// polynomial has no coefficients.
class RationalPoly1 {
 public:
  RationalPoly1() = default;
  RationalPoly1(const BigRat& constant) {  // NOLINT: implicit from scalars is intended
    if (constant != 0) coeffs_.push_back(constant);
  }
  RationalPoly1(long constant) : RationalPoly1(BigRat(constant)) {}  // NOLINT
  explicit RationalPoly1(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RationalPoly1 t() { return RationalPoly1(std::vector<BigRat>{0, 1}); }

  /// 1 − t^k
  static RationalPoly1 one_minus_t_pow(unsigned k) {
    std::vector<BigRat> c(k + 1, BigRat(0));
    c[0] += 1;
    c[k] -= 1;
    return RationalPoly1(std::move(c));
  }

  /// [k]_t = 1 + t + … + t^{k−1}
  static RationalPoly1 q_integer(unsigned k) { return RationalPoly1(std::vector<BigRat>(k, BigRat(1))); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRat(0); }

  BigRat operator()(const BigRat& t0) const {
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
  }

  RationalPoly1& operator+=(const RationalPoly1& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  RationalPoly1& operator-=(const RationalPoly1& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend RationalPoly1 operator+(RationalPoly1 a, const RationalPoly1& b) { return a += b; }
  friend RationalPoly1 operator-(RationalPoly1 a, const RationalPoly1& b) { return a -= b; }
  friend RationalPoly1 operator*(const RationalPoly1& a, const RationalPoly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly1(std::move(c));
  }
  RationalPoly1& operator*=(const RationalPoly1& o) { return *this = *this * o; }

  /// Synthetic division by (t − root): returns quotient, sets remainder.
  RationalPoly1 divide_by_linear(const BigRat& root, BigRat& remainder) const {
    if (coeffs_.empty()) {
      remainder = 0;
      return {};
    }
    std::vector<BigRat> q(coeffs_.size() - 1, BigRat(0));
    BigRat carry = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      carry = carry * root + coeffs_[k];
      if (k > 0) q[k - 1] = carry;
    }
    remainder = carry;
    return RationalPoly1(std::move(q));
  }

  friend bool operator==(const RationalPoly1&, const RationalPoly1&) = default;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + coeffs_[k].get_str() + ")";
      if (k > 0) out += k == 1 ? "*t" : "*t^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigRat> coeffs_;
};

/// Value of num/den at t0, cancelling common factors (t − t0) when both
/// vanish there. Throws if t0 is a genuine pole.
inline BigRat evaluate_ratio(RationalPoly1 num, RationalPoly1 den, const BigRat& t0, bool* limit_taken = nullptr) {
  if (den.is_zero()) throw std::domain_error("evaluate_ratio: zero denominator polynomial");
  if (limit_taken) *limit_taken = false;
  while (den(t0) == 0) {
    if (num(t0) != 0) throw std::domain_error("evaluate_ratio: pole at t = " + t0.get_str());
    BigRat rem;
    num = num.divide_by_linear(t0, rem);
    den = den.divide_by_linear(t0, rem);
    if (limit_taken) *limit_taken = true;
  }
  return num(t0) / den(t0);
}

}  // namespace younggraph
