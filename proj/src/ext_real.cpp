#include "orlicz/ext_real.hpp"

#include <charconv>
#include <cmath>

#include "orlicz/errors.hpp"

namespace orlicz {

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw DomainError("ExtReal requires a non-negative value, got " + format_double(v));
  }
}

double ExtReal::finite() const {
  if (is_infinite()) throw DomainError("ExtReal: value is +inf");
  return v_;
}

ExtReal& ExtReal::operator+=(ExtReal o) {
  v_ += o.v_;
  return *this;
}

ExtReal operator*(double s, ExtReal a) {
  if (!(s >= 0.0) || std::isinf(s)) throw DomainError("ExtReal: scalar must be finite and non-negative");
  if (s == 0.0 && a.is_infinite()) throw DomainError("ExtReal: 0 * inf is undefined");
  return ExtReal(s * a.v_);
}

std::string ExtReal::str() const { return format_double(v_); }

ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

double difference(ExtReal a, ExtReal b) {
  if (a.is_infinite() && b.is_infinite()) throw DomainError("inf - inf is excluded");
  return a.value() - b.value();
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << x.str(); }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace orlicz
