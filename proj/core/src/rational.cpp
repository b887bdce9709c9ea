#include "openchi/rational.hpp"

#include <cctype>

#include "openchi/error.hpp"

namespace openchi {

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  require(valid_int_token(num) && valid_int_token(den), Ec::ParseError,
          "not a rational: '" + text + "'");
  mpz_class n(num), d(den);
  require(d != 0, Ec::ParseError, "zero denominator in '" + text + "'");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace openchi
