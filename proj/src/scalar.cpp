#include "crosscap/scalar.hpp"

#include "crosscap/error.hpp"

#include <limits>

namespace crosscap {

std::string to_string(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::InvalidInput, "integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

}  // namespace crosscap
