#include "lagcorr/gaussian_rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "lagcorr/error.hpp"

namespace lagcorr {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InfiniteSupport: return "InfiniteSupport";
    case ErrorCode::InsufficientTerms: return "InsufficientTerms";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::MismatchedWeight: return "MismatchedWeight";
    case ErrorCode::ObjectMismatch: return "ObjectMismatch";
    case ErrorCode::UnknownComposition: return "UnknownComposition";
    case ErrorCode::NoAdjoint: return "NoAdjoint";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::InvalidCurveClass: return "InvalidCurveClass";
    case ErrorCode::IncompatibleContact: return "IncompatibleContact";
    case ErrorCode::CutoffMismatch: return "CutoffMismatch";
    case ErrorCode::NonUnitalLog: return "NonUnitalLog";
    case ErrorCode::ConstantTermInExp: return "ConstantTermInExp";
    case ErrorCode::ValuationBound: return "ValuationBound";
    case ErrorCode::MissingPairing: return "MissingPairing";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return {mpq_class(num, den)};
}

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1};
    case 1: return i();
    case 2: return {-1};
    default: return -i();
  }
}

bool GaussianRational::is_gaussian_integer() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string out;
  if (has_re) out = re_.get_str();
  if (im_ == 1) {
    out += has_re ? "+i" : "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    if (has_re && sgn(im_) > 0) out += '+';
    out += im_.get_str() + "*i";
  }
  return out;
}

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational in '" + std::string(whole) + "'");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw Error(ErrorCode::Parse, "unexpected character in '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::Parse, "empty scalar");
  if (s.back() != 'i') return {parse_rational(s, text)};

  // Imaginary part runs from the last sign that is not at position 0.
  std::size_t split = 0;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = std::string_view(s).substr(0, split);
  std::string_view im_part = std::string_view(s).substr(split);
  im_part.remove_suffix(1);  // trailing 'i'
  if (!im_part.empty() && im_part.back() == '*') im_part.remove_suffix(1);
  mpq_class im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part, text);
  }
  mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("unreachable");
}

}  // namespace lagcorr
