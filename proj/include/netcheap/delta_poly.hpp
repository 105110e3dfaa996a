#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace netcheap {

using Rational = mpq_class;

// Canonical num/den.
Rational make_rational(long num, long den = 1);

// Accepts "p/q", "p" or a plain decimal such as "0.25" or "-1.5e-3";
// decimals are converted exactly (0.2 -> 1/5).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& q, int digits = 12);

// A link parameter strictly inside (0, 1).
class DeltaValue {
 public:
  explicit DeltaValue(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

// Polynomial in the link parameter with exact rational coefficients.
// Zero coefficients are never stored, so equality is structural.
class DeltaPoly {
 public:
  using Coefficients = std::map<unsigned, Rational>;

  DeltaPoly() = default;
  DeltaPoly(std::initializer_list<std::pair<const unsigned, Rational>> terms);
  explicit DeltaPoly(Coefficients coeffs);

  static DeltaPoly constant(const Rational& c) { return monomial(0, c); }
  static DeltaPoly monomial(unsigned power, const Rational& coeff);

  const Coefficients& coefficients() const { return coeffs_; }
  Rational coefficient(unsigned power) const;
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;

  // Raw evaluation at any rational point (Horner).
  Rational operator()(const Rational& x) const;
  double evaluate_double(double x) const;

  DeltaPoly& operator+=(const DeltaPoly& other);
  DeltaPoly& operator-=(const DeltaPoly& other);
  DeltaPoly& operator*=(const Rational& factor);

  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator-(DeltaPoly a) { return a *= Rational(-1); }
  friend DeltaPoly operator*(DeltaPoly a, const Rational& f) { return a *= f; }
  friend DeltaPoly operator*(const Rational& f, DeltaPoly a) { return a *= f; }
  friend DeltaPoly operator/(DeltaPoly a, const Rational& d);

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void add_term(unsigned power, const Rational& coeff);

  Coefficients coeffs_;
};

// Human-readable form, e.g. "2/3*d^2 + d".
std::string to_string(const DeltaPoly& p);
std::ostream& operator<<(std::ostream& os, const DeltaPoly& p);

enum class PolyOp { add, subtract, scale };

// Coefficient-wise arithmetic; `factor` is used only by PolyOp::scale.
DeltaPoly poly_arith(const DeltaPoly& a, const DeltaPoly& b, PolyOp op,
                     const Rational& factor = Rational(1));

Rational poly_eval(const DeltaPoly& p, const DeltaValue& delta);

// Bisection for a root of `p` in [lo, hi]. Returns std::nullopt when p(lo)
// and p(hi) are both nonzero with the same sign, otherwise a point within
// `tol` of a root. An endpoint that is an exact root is returned as-is.
std::optional<Rational> sign_change(const DeltaPoly& p, const Rational& lo,
                                    const Rational& hi, const Rational& tol);

}  // namespace netcheap
