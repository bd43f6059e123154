#include "qvar/rational.hpp"

#include <cctype>

#include "qvar/error.hpp"

namespace qvar {

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidArgument("not a rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Rational& ExtendedRational::value() const {
  if (infinite_) throw UndefinedArithmetic("value() of +inf");
  return value_;
}

std::string ExtendedRational::to_string() const {
  return infinite_ ? std::string("inf") : qvar::to_string(value_);
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  return ExtendedRational(parse_rational(text));
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return ExtendedRational::infinity();
  return ExtendedRational(Rational(a.value_ + b.value_));
}

ExtendedRational operator-(const ExtendedRational& a, const Rational& b) {
  if (a.infinite_) return a;
  return ExtendedRational(Rational(a.value_ - b));
}

ExtendedRational operator*(const Rational& scalar, const ExtendedRational& a) {
  if (a.infinite_) {
    if (sgn(scalar) == 0) throw UndefinedArithmetic("0 * inf is undefined");
    if (sgn(scalar) < 0) throw UndefinedArithmetic("negative * inf leaves Q ∪ {+inf}");
    return a;
  }
  return ExtendedRational(Rational(scalar * a.value_));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  return compare(a.value_, b.value_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value) {
  return os << value.to_string();
}

}  // namespace qvar
