#include "lgg/rational.hpp"

#include <cctype>
#include <ostream>

namespace lgg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::EndpointQuery: return "EndpointQuery";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadFormula: return "BadFormula";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::TooManyPoints: return "TooManyPoints";
    case ErrorKind::SamePair: return "SamePair";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ShapeError: return "ShapeError";
  }
  return "Error";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorKind::BadParameter, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::BadParameter, "rational with zero denominator");
  v_ = mpq_class(num);
  v_ /= mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::BadParameter, "division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::to_int64(std::int64_t& out) const {
  if (v_.get_den() != 1) return false;
  const mpz_class& n = v_.get_num();
  if (!n.fits_slong_p()) return false;
  out = static_cast<std::int64_t>(n.get_si());
  return true;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty number");
  std::string s(text);
  // ratio form
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) fail(ErrorKind::ParseError, "bad ratio: " + s);
    mpz_class n, d;
    if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
      fail(ErrorKind::ParseError, "bad ratio: " + s);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator: " + s);
    return Rational(n, d);
  }
  // decimal form: [-]digits[.digits]
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') { neg = s[pos] == '-'; ++pos; }
  std::string digits;
  std::size_t frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_dot) fail(ErrorKind::ParseError, "bad decimal: " + s);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      fail(ErrorKind::ParseError, "bad decimal: " + s);
    }
  }
  if (!seen_digit) fail(ErrorKind::ParseError, "bad decimal: " + s);
  mpz_class n(digits, 10);
  if (neg) n = -n;
  mpz_class d = 1;
  for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace lgg
