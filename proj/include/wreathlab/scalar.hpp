#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wreathlab {

/// Exact rational scalar. All arithmetic in the library is exact; there is
/// no floating point anywhere. Values are kept in canonical form (reduced
/// fraction, positive denominator) by the underlying type.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" with nonzero q. Anything else throws ParseError.
inline Scalar scalar_from_string(const std::string& s) {
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid(s)) throw ParseError("not a rational: \"" + s + "\"");
      return Scalar(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid(num) || !valid(den)) throw ParseError("not a rational: \"" + s + "\"");
    Integer p(num), q(den);
    if (q == 0) throw ParseError("zero denominator: \"" + s + "\"");
    if (q < 0) {  // the rational type wants a positive denominator
      p = -p;
      q = -q;
    }
    return Scalar(p, q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
}

/// Lowest terms, "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string scalar_to_string(const Scalar& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace wreathlab
