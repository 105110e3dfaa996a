#include "netcheap/delta_poly.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "netcheap/error.hpp"

namespace netcheap {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error("invalid_rational", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw Error("invalid_rational", "cannot parse '" + std::string(text) + "'");
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::string exp_text(text.substr(pos));
    if (exp_text.empty()) throw Error("invalid_rational", "empty exponent in '" + std::string(text) + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != exp_text.size() || exponent > 1000 || exponent < -1000)
      throw Error("invalid_rational", "bad exponent in '" + std::string(text) + "'");
    pos = text.size();
  }
  if (pos != text.size()) throw Error("invalid_rational", "cannot parse '" + std::string(text) + "'");

  mpz_class num(digits, 10);
  long shift = exponent - scale;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational q = shift >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error("invalid_rational", "empty rational");
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw Error("invalid_rational", "cannot parse '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error("invalid_rational", "cannot parse '" + std::string(text) + "'");
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("invalid_rational", "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

std::string to_decimal(const Rational& q, int digits) {
  mpf_class f(q, 256);
  std::vector<char> buf(64 + static_cast<std::size_t>(digits));
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  std::string out(buf.data());
  return out == "-0" ? "0" : out;
}

DeltaValue::DeltaValue(Rational value) : value_(std::move(value)) {
  if (value_ <= 0 || value_ >= 1)
    throw Error("delta_out_of_range",
                "delta must lie strictly inside (0,1), got " + to_string(value_));
}

DeltaPoly::DeltaPoly(std::initializer_list<std::pair<const unsigned, Rational>> terms) {
  for (const auto& [power, coeff] : terms) add_term(power, coeff);
}

DeltaPoly::DeltaPoly(Coefficients coeffs) {
  for (auto& [power, coeff] : coeffs) add_term(power, coeff);
}

DeltaPoly DeltaPoly::monomial(unsigned power, const Rational& coeff) {
  DeltaPoly p;
  p.add_term(power, coeff);
  return p;
}

Rational DeltaPoly::coefficient(unsigned power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int DeltaPoly::degree() const {
  return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first);
}

Rational DeltaPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  unsigned power = coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
  auto it = coeffs_.rbegin();
  // Horner over the dense range of powers.
  for (long p = power; p >= 0; --p) {
    acc *= x;
    if (it != coeffs_.rend() && it->first == static_cast<unsigned>(p)) {
      acc += it->second;
      ++it;
    }
  }
  return acc;
}

double DeltaPoly::evaluate_double(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto next = std::next(it);
    unsigned gap = next == coeffs_.rend() ? it->first : it->first - next->first;
    acc += it->second.get_d();
    for (unsigned i = 0; i < gap; ++i) acc *= x;
  }
  return acc;
}

void DeltaPoly::add_term(unsigned power, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  for (const auto& [power, coeff] : other.coeffs_) add_term(power, coeff);
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& other) {
  for (const auto& [power, coeff] : other.coeffs_) add_term(power, -coeff);
  return *this;
}

DeltaPoly& DeltaPoly::operator*=(const Rational& factor) {
  if (factor == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [power, coeff] : coeffs_) coeff *= factor;
  return *this;
}

DeltaPoly operator/(DeltaPoly a, const Rational& d) {
  if (d == 0) throw Error("division_by_zero", "polynomial divided by zero");
  return a *= Rational(1 / d);
}

std::string to_string(const DeltaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, coeff] : p.coefficients()) {
    Rational mag = abs(coeff);
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "d";
    if (power > 1) os << "^" << power;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DeltaPoly& p) {
  return os << to_string(p);
}

DeltaPoly poly_arith(const DeltaPoly& a, const DeltaPoly& b, PolyOp op,
                     const Rational& factor) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::subtract:
      return a - b;
    case PolyOp::scale:
      return a * factor;
  }
  return a;
}

Rational poly_eval(const DeltaPoly& p, const DeltaValue& delta) {
  return p(delta.value());
}

std::optional<Rational> sign_change(const DeltaPoly& p, const Rational& lo,
                                    const Rational& hi, const Rational& tol) {
  if (!(lo < hi)) throw Error("invalid_bracket", "sign_change needs lo < hi");
  if (tol <= 0) throw Error("invalid_bracket", "sign_change needs tol > 0");
  Rational a = lo;
  Rational b = hi;
  Rational fa = p(a);
  Rational fb = p(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if (sgn(fa) == sgn(fb)) return std::nullopt;
  while (b - a > tol) {
    Rational mid = (a + b) / 2;
    Rational fm = p(mid);
    if (fm == 0) return mid;
    if (sgn(fm) == sgn(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return Rational((a + b) / 2);
}

}  // namespace netcheap
