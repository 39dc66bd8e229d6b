#include "tdn/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
  return r;
}

}  // namespace

Poly::Poly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(std::int64_t c) { return Poly(std::vector<std::int64_t>{c}); }

Poly Poly::monomial(int k, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::qint(int c) {
  if (c <= 0) return Poly();
  return Poly(std::vector<std::int64_t>(static_cast<std::size_t>(c), 1));
}

Poly Poly::blowup_factor(int c) {
  if (c <= 1) return Poly();
  std::vector<std::int64_t> v(static_cast<std::size_t>(c), 1);
  v[0] = 0;
  return Poly(std::move(v));
}

std::int64_t Poly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

std::int64_t Poly::at_one() const {
  std::int64_t s = 0;
  for (auto x : c_) s = checked_add(s, x);
  return s;
}

bool Poly::palindromic() const {
  return std::equal(c_.begin(), c_.end(), c_.rbegin());
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly Poly::pow(int e) const {
  Poly r = constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Poly Poly::divexact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<std::int64_t> rem = c_;
  int dd = divisor.degree();
  std::int64_t lead = divisor.c_.back();
  if (degree() < dd) {
    if (is_zero()) return Poly();
    throw std::domain_error("inexact polynomial division");
  }
  std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  for (int k = degree() - dd; k >= 0; --k) {
    std::int64_t top = rem[static_cast<std::size_t>(k + dd)];
    if (top % lead != 0) throw std::domain_error("inexact polynomial division");
    std::int64_t f = top / lead;
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k + j)];
      slot = checked_add(slot, -checked_mul(f, divisor.c_[static_cast<std::size_t>(j)]));
    }
  }
  for (auto x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return Poly(std::move(quot));
}

bool coefficientwise_leq(const Poly& a, const Poly& b) {
  int top = std::max(a.degree(), b.degree());
  for (int k = 0; k <= top; ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::int64_t v = c_[k];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    std::int64_t a = v < 0 ? -v : v;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a;
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace tdn
