#pragma once

#include "tdn/index_set.hpp"
#include "tdn/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdn {

// Malformed input (wrong length, entries outside (0,1], bad indices). Distinct from a
// domain rejection, which is reported through a ValidationReport.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DomainKind { FM, T, P };

DomainKind parse_domain_kind(const std::string& s);
std::string to_string(DomainKind k);

class WeightVector {
 public:
  WeightVector(int d, std::vector<Rational> entries);

  int d() const { return d_; }
  int n() const { return static_cast<int>(a_.size()); }
  const std::vector<Rational>& entries() const { return a_; }
  const Rational& operator[](int label) const { return a_.at(static_cast<std::size_t>(label - 1)); }
  Rational sum() const;
  Rational sum(IndexSet s) const;
  bool heavy(IndexSet s) const { return sum(s) > 1; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  int d_;
  std::vector<Rational> a_;
};

struct GitWeightVector {
  int d = 0;
  int n = 0;
  Rational epsilon;
  Rational epsilon_hat;
  std::vector<Rational> w;
  Rational sum() const;
};

struct ValidationReport {
  bool accepted = true;
  std::vector<std::string> violations;
};

GitWeightVector git_weights(int d, int n);

ValidationReport validate_domain(const WeightVector& a, DomainKind kind);

// (A(I), A_+(I^c)); the second list has the complement weights followed by a weight 1.
std::pair<std::vector<Rational>, std::vector<Rational>> derived_weights(const WeightVector& a,
                                                                        IndexSet i);

// Losev-Manin weights used by the toric corollaries.
WeightVector lm_weights_T(int d, int n);
WeightVector lm_weights_P(int d, int n);
WeightVector unit_weights(int d, int n);

}  // namespace tdn
