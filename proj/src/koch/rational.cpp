#include "koch/rational.hpp"

#include "koch/error.hpp"

#include <cctype>

namespace koch {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::DuplicateSlope: return "DuplicateSlope";
    case ErrorCode::ConcurrentLines: return "ConcurrentLines";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::FlatteningDivergence: return "FlatteningDivergence";
    case ErrorCode::ChainInvalid: return "ChainInvalid";
    case ErrorCode::MissingAntipode: return "MissingAntipode";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::Parse,
                "rational must be written as num/den: '" + std::string(text) +
                    "'");
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) +
                                      "'");
  }
  const mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" +
                                                std::string(text) + "'");
  const mpz_class n{std::string(num)};
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow2(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(
                                      exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpq_class(mpz_class(1), p))
                      : Rational(mpq_class(p));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

}  // namespace koch
