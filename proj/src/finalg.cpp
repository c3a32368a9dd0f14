#include "chainring/finalg.hpp"

#include <gmpxx.h>

namespace chainring::finalg {

std::string to_string(DomainVerdict v) {
  switch (v) {
    case DomainVerdict::Zero: return "zero";
    case DomainVerdict::Domain: return "domain";
    case DomainVerdict::NotDomain: return "not-domain";
  }
  return "?";
}

namespace {

constexpr long kMaxDivisorSearch = 1000000000000L;

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  if (n > kMaxDivisorSearch) throw UndecidableError("rational root search: coefficient too large");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<Rational> rational_root(const std::vector<Rational>& poly) {
  if (poly.size() < 2) return std::nullopt;
  mpz_class den = 1;
  for (const auto& c : poly) den = lcm(den, c.raw().get_den());
  std::vector<mpz_class> a;
  for (const auto& c : poly) a.push_back(mpz_class(c.raw() * den));
  auto eval = [&](const mpq_class& x) {
    mpq_class v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
    return v;
  };
  if (a.front() == 0) return Rational(0);
  for (const auto& p : divisors(a.front()))
    for (const auto& q : divisors(a.back()))
      for (int sign : {1, -1}) {
        mpq_class x(sign * p, q);
        x.canonicalize();
        if (eval(x) == 0) return Rational(x);
      }
  return std::nullopt;
}

}  // namespace chainring::finalg
