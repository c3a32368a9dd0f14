#include "chainring/field.hpp"

#include <charconv>

namespace chainring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  if (!d.empty() && d.front() == '+') d.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(zn, zd));
}

ModP ModP::parse(std::string_view text, std::uint32_t p) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  auto to_int = [&](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw std::invalid_argument("not an integer residue: '" + std::string(text) + "'");
    return v;
  };
  ModP r(to_int(num), p);
  if (slash != std::string_view::npos) r /= ModP(to_int(s.substr(slash + 1)), p);
  return r;
}

ModP ModP::inverse() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw std::domain_error("ModP: inverse of unbound constant");
  }
  if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
  // Extended Euclid.
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ModP(x0, p_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::parse(std::string_view s) {
  s = trim(s);
  if (s == "Q" || s == "QQ") return {};
  if (s == "Fp" || s == "GF2") return {Kind::Prime, 2};
  std::string_view digits;
  if (s.rfind("Fp:", 0) == 0) digits = s.substr(3);
  else if (s.rfind("GF", 0) == 0) digits = s.substr(2);
  else throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected Q or Fp:p)");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || !is_prime(p) || p > 2147483647ULL)
    throw std::invalid_argument("invalid prime in field '" + std::string(s) + "'");
  return {Kind::Prime, static_cast<std::uint32_t>(p)};
}

}  // namespace chainring
