#include "linarr/scalars.hpp"

#include <cctype>
#include <sstream>

#include "linarr/detail/unipoly.hpp"

namespace linarr {

namespace {

using RPoly = std::vector<Rational>;

const Rational kZero(0);

}  // namespace

NumberField::NumberField(std::vector<Rational> modulus) : modulus_(std::move(modulus)) {
  detail::trim(modulus_);
  if (modulus_.size() < 2) throw MathError("modulus must have degree >= 1");
  if (modulus_.back() != 1) throw MathError("modulus must be monic");
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> c) const {
  const int n = degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= n; --i) {
    if (sgn(c[i]) == 0) continue;
    const Rational lead = c[i];
    for (int j = 0; j < n; ++j) c[i - n + j] -= lead * modulus_[j];
    c[i] = 0;
  }
  c.resize(n, kZero);
  return c;
}

std::string NumberField::to_string() const { return format_univariate(modulus_); }

FieldPtr make_field(std::vector<Rational> modulus) {
  return std::make_shared<const NumberField>(std::move(modulus));
}

FieldPtr rational_field() {
  static const FieldPtr q = make_field({Rational(-1), Rational(1)});
  return q;
}

std::vector<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw MathError("cyclotomic index must be positive");
  RPoly num(n + 1, kZero);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = detail::divmod(num, cyclotomic_polynomial(d), kZero).first;
  }
  return num;
}

FieldPtr make_cyclotomic(int n) {
  if (n <= 2) return n == 1 ? rational_field() : make_field(cyclotomic_polynomial(2));
  return make_field(cyclotomic_polynomial(n));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && *a == *b); }

FieldScalar::FieldScalar(FieldPtr field) : field_(std::move(field)) {
  coords_.assign(field_->degree(), kZero);
}

FieldScalar::FieldScalar(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  coords_.assign(field_->degree(), kZero);
  coords_[0] = value;
  coords_[0].canonicalize();
}

FieldScalar::FieldScalar(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  for (auto& c : coeffs) c.canonicalize();
  coords_ = field_->reduce(std::move(coeffs));
}

FieldScalar FieldScalar::generator(const FieldPtr& field) {
  return FieldScalar(field, std::vector<Rational>{Rational(0), Rational(1)});
}

bool FieldScalar::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldScalar::is_one() const { return is_rational() && coords_[0] == 1; }

bool FieldScalar::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

void FieldScalar::check_field(const FieldScalar& other) const {
  if (!same_field(field_, other.field_)) throw MathError("field mismatch");
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  check_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  check_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
  check_field(rhs);
  const std::size_t n = coords_.size();
  if (n == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1, kZero);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += coords_[i] * rhs.coords_[j];
  }
  coords_ = field_->reduce(std::move(prod));
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) { return *this *= rhs.inverse(); }

FieldScalar FieldScalar::operator*(const Rational& r) const {
  FieldScalar out(*this);
  Rational rc(r);
  rc.canonicalize();
  for (auto& c : out.coords_) c *= rc;
  return out;
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (coords_.size() == 1) return FieldScalar(field_, Rational(1 / coords_[0]));
  // Extended Euclid: track s with s*a == r (mod m).
  RPoly r0 = field_->modulus(), r1 = coords_;
  detail::trim(r1);
  RPoly s0, s1{Rational(1)};
  while (detail::degree(r1) > 0) {
    auto [q, rem] = detail::divmod(r0, r1, kZero);
    RPoly s2 = detail::sub(s0, detail::mul(q, s1, kZero), kZero);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw MathError("reducible modulus witness");
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return FieldScalar(field_, std::move(s1));
}

FieldScalar FieldScalar::pow(unsigned e) const {
  FieldScalar result(field_, Rational(1)), base(*this);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

bool FieldScalar::operator==(const FieldScalar& other) const {
  return same_field(field_, other.field_) && coords_ == other.coords_;
}

std::strong_ordering FieldScalar::operator<=>(const FieldScalar& other) const {
  for (std::size_t i = 0; i < coords_.size() && i < other.coords_.size(); ++i) {
    int c = cmp(coords_[i], other.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return coords_.size() <=> other.coords_.size();
}

std::string FieldScalar::to_string() const {
  if (field_->is_rational()) return format_rational(coords_[0]);
  return format_univariate(coords_);
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_univariate(const std::vector<Rational>& coeffs) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Rational& c = coeffs[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class UniParser {
 public:
  explicit UniParser(std::string_view s) : s_(s) {}

  RPoly parse() {
    RPoly result;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [coef, exp] = term();
      if (result.size() <= exp) result.resize(exp + 1, kZero);
      result[exp] += sign * coef;
      first = false;
      skip();
    }
    if (first) fail("empty expression");
    detail::trim(result);
    return result;
  }

 private:
  std::pair<Rational, std::size_t> term() {
    Rational coef(1);
    std::size_t exp = 0;
    while (true) {
      skip();
      if (peek() == 't') {
        ++pos_;
        skip();
        std::size_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          e = integer();
        }
        exp += e;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Rational num{Integer(integer_text())};
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          Integer den(integer_text());
          if (den == 0) fail("zero denominator");
          num /= Rational(den);
        }
        coef *= num;
      } else {
        fail("expected a number or t");
      }
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      return {coef, exp};
    }
  }

  std::string integer_text() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t integer() { return std::stoul(integer_text()); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse '" << s_ << "' at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Rational> parse_univariate(std::string_view text) { return UniParser(text).parse(); }

FieldScalar parse_scalar(std::string_view text, const FieldPtr& field) {
  return FieldScalar(field, parse_univariate(text));
}

}  // namespace linarr
