#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace orlicz {

// Non-negative extended real. +inf is stored as the IEEE infinity; finite
// values that overflow during evaluation are therefore treated as +inf.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(double v);  // NOLINT: implicit from double is intended

  static constexpr ExtReal infinity() { return ExtReal(Tag{}); }

  bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
  bool is_finite() const { return !is_infinite(); }
  // The raw value, +inf for infinity.
  double value() const { return v_; }
  // Throws DomainError if infinite.
  double finite() const;

  ExtReal& operator+=(ExtReal o);
  friend ExtReal operator+(ExtReal a, ExtReal b) { return a += b; }
  // Scaling by a finite positive scalar; 0 * inf is rejected.
  friend ExtReal operator*(double s, ExtReal a);
  friend ExtReal operator*(ExtReal a, double s) { return s * a; }

  friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend auto operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

  std::string str() const;

 private:
  struct Tag {};
  constexpr explicit ExtReal(Tag) : v_(std::numeric_limits<double>::infinity()) {}
  double v_ = 0.0;
};

ExtReal max(ExtReal a, ExtReal b);
ExtReal min(ExtReal a, ExtReal b);

// Signed difference a - b in [-inf, inf]; inf - inf throws DomainError.
double difference(ExtReal a, ExtReal b);

std::ostream& operator<<(std::ostream& os, ExtReal x);

// Shortest round-trip decimal for a finite double, "inf" for +inf.
std::string format_double(double x);

}  // namespace orlicz
