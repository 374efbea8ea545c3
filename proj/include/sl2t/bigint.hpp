#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sl2t {

// Every entry value in the repository is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& value);

// Strict canonical decimal: optional '-', then digits with no leading zero
// (except "0" itself). Anything else is errc::bad_format.
BigInt parse_decimal(std::string_view text);

// Quotient of num/den when the division is exact; false (out untouched)
// when a nonzero remainder would be dropped. den must be nonzero.
bool divide_exact(const BigInt& num, const BigInt& den, BigInt& out);

bool is_integer(const Rational& value);

}  // namespace sl2t
