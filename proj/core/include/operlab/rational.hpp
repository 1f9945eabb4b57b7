#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace operlab {

// Exact rational arithmetic for all Lie-theoretic constants.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// "p/q" (or "p" when q == 1), the serialization format used everywhere.
inline std::string rat_str(const Rat& r) {
  BigInt n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> rat_sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  BigInt n = numerator(r), d = denominator(r);
  BigInt sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rat(sn, sd);
}

}  // namespace operlab
