#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tia/graph.hpp"

namespace tia {

// Exact rational on int64 with overflow checking; always normalized with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den);
  static Rational from_string(const std::string& s);  // "a/b" or "a"

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this == o || *this < o; }

  long long floor_div_into(const Rational& numerator) const;  // floor(numerator / *this)

  std::string to_string() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Per-level constants for the cycle-peeling recursion. Input: slack values
// delta_k in (0,1] for k = 2..K; outputs epsilon_k via
//   epsilon_2 = delta_2
//   epsilon_k = min(epsilon_{k-1}/20, delta_k/20, delta_k/(5(k+1)), 1/(30(k-2)))
struct EpsilonTable {
  std::vector<Rational> delta;    // delta[i] is delta_{i+2}
  std::vector<Rational> epsilon;  // epsilon[i] is epsilon_{i+2}
};

EpsilonTable epsilon_table(const std::vector<Rational>& delta);

// floor((t-1)/epsilon_k); requires epsilon_k > 0 and t >= 1
long long c_kt(const Rational& epsilon_k, int t);

}  // namespace tia
