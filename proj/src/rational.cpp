#include "kottman/rational.hpp"

#include <cctype>

#include "kottman/errors.hpp"

namespace kottman {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw PreconditionError("empty rational");

  const auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    if (s.find('/') != std::string::npos) throw PreconditionError("bad rational '" + s + "'");
    std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
    const std::size_t scale = s.size() - dot_pos - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw PreconditionError("bad rational '" + s + "'");
    s = digits + "/1" + std::string(scale, '0');
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool sign = (c == '-' || c == '+') && i == 0;
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && !sign)
      throw PreconditionError("bad rational '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw PreconditionError("bad rational '" + std::string(text) + "'");
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw PreconditionError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace kottman
