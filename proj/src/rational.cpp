#include "tia/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace tia {

namespace {

long long checked(__int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(std::string("rational overflow in ") + op);
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(const std::string& s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw FormatError("bad rational '" + s + "'");
  }
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked(n, "*"), checked(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error("rational division by zero");
  __int128 n = static_cast<__int128>(num_) * o.den_;
  __int128 d = static_cast<__int128>(den_) * o.num_;
  return Rational(checked(n, "/"), checked(d, "/"));
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

long long Rational::floor_div_into(const Rational& numerator) const {
  if (num_ <= 0) throw Error("floor division by a nonpositive rational");
  // floor((a/b) / (c/d)) = floor(a*d / (b*c))
  __int128 top = static_cast<__int128>(numerator.num_) * den_;
  __int128 bottom = static_cast<__int128>(numerator.den_) * num_;
  __int128 q = top / bottom;
  if (top % bottom != 0 && ((top < 0) != (bottom < 0))) --q;
  return checked(q, "floor");
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

EpsilonTable epsilon_table(const std::vector<Rational>& delta) {
  EpsilonTable table;
  table.delta = delta;
  const Rational zero(0, 1), one(1, 1);
  for (size_t i = 0; i < delta.size(); ++i) {
    int k = static_cast<int>(i) + 2;
    if (!(zero < delta[i]) || one < delta[i])
      throw PreconditionFailed("delta_" + std::to_string(k) + " outside (0,1]",
                               delta[i].to_string());
    if (k == 2) {
      table.epsilon.push_back(delta[i]);
      continue;
    }
    Rational e = table.epsilon.back() / Rational(20, 1);
    e = std::min(e, delta[i] / Rational(20, 1));
    e = std::min(e, delta[i] / Rational(5 * (k + 1), 1));
    e = std::min(e, Rational(1, 30 * (k - 2)));
    table.epsilon.push_back(e);
  }
  return table;
}

long long c_kt(const Rational& epsilon_k, int t) {
  if (t < 1) throw PreconditionFailed("t must be at least 1", std::to_string(t));
  if (!(Rational(0, 1) < epsilon_k))
    throw PreconditionFailed("epsilon must be positive", epsilon_k.to_string());
  return epsilon_k.floor_div_into(Rational(t - 1, 1));
}

}  // namespace tia
