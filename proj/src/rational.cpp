#include "vcvis/rational.hpp"

#include <cctype>

#include "vcvis/error.hpp"

namespace vcvis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kRepeatedVertex: return "RepeatedVertex";
    case ErrorCode::kPointOutsidePolygon: return "PointOutsidePolygon";
    case ErrorCode::kPointOnBoundary: return "PointOnBoundary";
    case ErrorCode::kCutNotInPolygon: return "CutNotInPolygon";
    case ErrorCode::kPointOnCut: return "PointOnCut";
    case ErrorCode::kEmptyRegion: return "EmptyRegion";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  Rational r;
  mpz_class num(std::to_string(numerator));
  mpz_class den(std::to_string(denominator));
  r.get_num() = num;
  r.get_den() = den;
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "not an exact number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d{std::string(den)};
    if (d == 0) bad_number(text);
    result.get_num() = mpz_class(std::string(num));
    result.get_den() = d;
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) bad_number(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result.get_num() =
        mpz_class(std::string(whole)) * scale + mpz_class(std::string(frac));
    result.get_den() = scale;
    result.canonicalize();
  } else {
    if (!all_digits(body)) bad_number(text);
    result = mpz_class(std::string(body));
  }
  if (negative) result = -result;
  return result;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace vcvis
