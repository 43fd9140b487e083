#pragma once

// Exact scalar types and the library-wide error type.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  invalid_type,
  not_dominant,
  cap_exceeded,
  not_module_character,
  repeated_point,
  zero_point,
  invalid_argument,
  not_interval_closed,
  parse_error,
  internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_type: return "invalid_type";
    case ErrorCode::not_dominant: return "not_dominant";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::not_module_character: return "not_module_character";
    case ErrorCode::repeated_point: return "repeated_point";
    case ErrorCode::zero_point: return "zero_point";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::not_interval_closed: return "not_interval_closed";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::parse_error, "malformed rational '" + s + "'");
  }
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw Error(ErrorCode::internal, "non-integral value " + to_string(q));
  return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
}

}  // namespace lie
