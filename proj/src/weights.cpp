#include "tdn/weights.hpp"

namespace tdn {

DomainKind parse_domain_kind(const std::string& s) {
  if (s == "FM") return DomainKind::FM;
  if (s == "T") return DomainKind::T;
  if (s == "P") return DomainKind::P;
  throw StructuralError("unknown domain kind: " + s);
}

std::string to_string(DomainKind k) {
  switch (k) {
    case DomainKind::FM: return "FM";
    case DomainKind::T: return "T";
    case DomainKind::P: return "P";
  }
  return "?";
}

WeightVector::WeightVector(int d, std::vector<Rational> entries) : d_(d), a_(std::move(entries)) {
  if (d_ < 1) throw StructuralError("d must be positive");
  if (a_.size() < 2) throw StructuralError("need at least two marks");
  if (a_.size() > static_cast<std::size_t>(kMaxLabels)) throw StructuralError("too many marks");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] <= 0 || a_[i] > 1)
      throw StructuralError("weight a_" + std::to_string(i + 1) + " = " + to_string(a_[i]) +
                            " is outside (0,1]");
  }
}

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& x : a_) s += x;
  return s;
}

Rational WeightVector::sum(IndexSet s) const {
  Rational t = 0;
  for (int i : labels(s)) t += (*this)[i];
  return t;
}

Rational GitWeightVector::sum() const {
  Rational s = 0;
  for (const auto& x : w) s += x;
  return s;
}

GitWeightVector git_weights(int d, int n) {
  if (d < 1) throw StructuralError("d must be positive");
  if (n <= d + 2) throw StructuralError("git weights need n > d+2");
  GitWeightVector g;
  g.d = d;
  g.n = n;
  g.epsilon = Rational(1, n - d);
  g.epsilon_hat = Rational(1, (d + 1) * (n - d));
  for (int i = 1; i <= d; ++i) g.w.push_back(1 - g.epsilon_hat);
  g.w.push_back(1 - (n - d - 1) * g.epsilon + d * g.epsilon_hat);
  for (int i = d + 2; i <= n; ++i) g.w.push_back(g.epsilon);
  return g;
}

ValidationReport validate_domain(const WeightVector& a, DomainKind kind) {
  ValidationReport r;
  // entries already lie in (0,1] by construction, so D^FM always holds
  if (kind == DomainKind::T || kind == DomainKind::P) {
    Rational s = a.sum();
    if (kind == DomainKind::T && s <= 1) {
      r.accepted = false;
      r.violations.push_back("sum of weights " + to_string(s) + " is not > 1");
    }
  }
  if (kind == DomainKind::P) {
    if (a.n() < a.d() + 3) {
      throw StructuralError("P-domain needs n > d+2");
    }
    GitWeightVector g = git_weights(a.d(), a.n());
    for (int i = 1; i <= a.n(); ++i) {
      if (a[i] < g.w[static_cast<std::size_t>(i - 1)]) {
        r.accepted = false;
        r.violations.push_back("a_" + std::to_string(i) + " = " + to_string(a[i]) + " < w_" +
                               std::to_string(i) + " = " + to_string(g.w[static_cast<std::size_t>(i - 1)]));
      }
    }
  }
  return r;
}

std::pair<std::vector<Rational>, std::vector<Rational>> derived_weights(const WeightVector& a,
                                                                        IndexSet i) {
  if (i == 0) throw StructuralError("empty index set");
  if (!subset_of(i, range_set(1, a.n()))) throw StructuralError("index out of range");
  std::vector<Rational> inside, outside;
  for (int k = 1; k <= a.n(); ++k) (contains(i, k) ? inside : outside).push_back(a[k]);
  outside.push_back(Rational(1));
  return {inside, outside};
}

WeightVector lm_weights_T(int d, int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n - 1), Rational(1, n - 1));
  w.push_back(1);
  return WeightVector(d, w);
}

WeightVector lm_weights_P(int d, int n) {
  std::vector<Rational> w(static_cast<std::size_t>(d + 1), Rational(1));
  for (int i = d + 2; i <= n; ++i) w.push_back(Rational(1, n - d - 1));
  return WeightVector(d, w);
}

WeightVector unit_weights(int d, int n) {
  return WeightVector(d, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

}  // namespace tdn
