#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qvar {

/// Arbitrary precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// An element of Q ∪ {+inf}.
///
/// +inf absorbs addition and positive scaling and is strictly above every
/// finite value. Operations without a value in this set (0 * inf, inf
/// multiplied by a negative scalar, finite - inf) throw UndefinedArithmetic.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) { value_.canonicalize(); }  // NOLINT
  ExtendedRational(long value) : value_(value) {}                                          // NOLINT
  ExtendedRational(int value) : value_(value) {}                                           // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The finite value; throws UndefinedArithmetic on +inf.
  const Rational& value() const;

  /// "inf" or the rational text.
  std::string to_string() const;
  /// Accepts "inf", "+inf", "p/q", "p".
  static ExtendedRational parse(std::string_view text);

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  /// a - b for finite b.
  friend ExtendedRational operator-(const ExtendedRational& a, const Rational& b);
  friend ExtendedRational operator*(const Rational& scalar, const ExtendedRational& a);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& value);

}  // namespace qvar
