#include "simpsep/rational.hpp"

#include <stdexcept>

namespace simpsep {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rat(s);
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("bad rational literal: " + s);
  boost::multiprecision::mpz_int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(boost::multiprecision::mpz_int(num), d);
}

std::string rat_str(const Rat& r) {
  return r.str();  // mpq prints "p" or "p/q", already canonicalized
}

}  // namespace simpsep
