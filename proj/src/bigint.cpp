#include "sl2t/bigint.hpp"

#include "sl2t/errors.hpp"

#include <cctype>

namespace sl2t {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty()) fail(errc::bad_format, "empty decimal string");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(errc::bad_format, "non-digit in decimal string '" + std::string(text) + "'");
  }
  if (digits.size() > 1 && digits.front() == '0')
    fail(errc::bad_format, "leading zero in decimal string '" + std::string(text) + "'");
  if (negative && digits == "0")
    fail(errc::bad_format, "negative zero");
  return BigInt{std::string(text)};
}

bool divide_exact(const BigInt& num, const BigInt& den, BigInt& out) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) return false;
  out = std::move(q);
  return true;
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

}  // namespace sl2t
