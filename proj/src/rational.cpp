#include "opair/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace opair {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!is_integer_token(num))
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (slash == std::string::npos) return Rat(mpz_class(num));
  const std::string den = s.substr(slash + 1);
  if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("not a rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rat q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace opair
