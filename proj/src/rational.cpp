#include "netrep/rational.hpp"

#include <cctype>
#include <ostream>

namespace netrep {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-') {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
  const boost::multiprecision::mpz_int p(num);
  const boost::multiprecision::mpz_int q(den);
  if (q == 0) throw std::invalid_argument("bad rational (zero denominator): '" + s + "'");
  return Rat(p) / Rat(q);
}

std::string rat_to_string(const Rat& r) { return r.str(); }

std::string ExtRat::to_string() const { return inf_ ? "inf" : rat_to_string(v_); }

ExtRat ExtRat::from_string(const std::string& s) {
  if (s == "inf") return infinity();
  return ExtRat(rat_from_string(s));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.to_string(); }

}  // namespace netrep
