#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace netrep {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator), which the serialization format relies on.
using Rat = boost::multiprecision::mpq_rational;

// Parses "p" or "p/q" with optional leading '-'. Input need not be reduced;
// the result is. Throws std::invalid_argument on malformed input or q = 0.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// A rational extended with +infinity. There is no -infinity: a + inf = inf,
// and every finite value compares below inf.
class ExtRat {
 public:
  ExtRat() : inf_(false), v_(0) {}
  ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtRat(int v) : inf_(false), v_(v) {}             // NOLINT(google-explicit-constructor)

  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const Rat& value() const {
    if (inf_) throw std::logic_error("ExtRat: value() on +inf");
    return v_;
  }

  ExtRat operator+(const ExtRat& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtRat(v_ + o.v_);
  }
  ExtRat& operator+=(const ExtRat& o) {
    *this = *this + o;
    return *this;
  }
  // Subtraction of a finite rational only; inf - q = inf.
  ExtRat operator-(const Rat& q) const {
    if (inf_) return infinity();
    return ExtRat(v_ - q);
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  // "inf" or the canonical rational form.
  std::string to_string() const;
  static ExtRat from_string(const std::string& s);

 private:
  bool inf_;
  Rat v_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& r);

}  // namespace netrep
