#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tdn {

// Integer polynomial in q; coefficient k multiplies q^k (b_{2k} for Poincare polynomials).
// Arithmetic is overflow-checked and throws std::overflow_error.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<std::int64_t> coeffs);
  explicit Poly(std::vector<std::int64_t> coeffs);

  static Poly constant(std::int64_t c);
  static Poly monomial(int k, std::int64_t c = 1);
  // 1 + q + ... + q^{c-1}; zero polynomial for c <= 0.
  static Poly qint(int c);
  // q + q^2 + ... + q^{c-1}; zero polynomial for c <= 1.
  static Poly blowup_factor(int c);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::int64_t operator[](int k) const;
  std::int64_t at_one() const;
  bool palindromic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int e) const;
  // Exact division; throws std::domain_error when the remainder is nonzero.
  Poly divexact(const Poly& divisor) const;
  // Coefficient-wise comparison a <= b.
  friend bool coefficientwise_leq(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace tdn
