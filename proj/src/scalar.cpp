#include "chromo/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

namespace chromo {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t reduce(long long v, std::uint64_t p) {
  long long m = static_cast<long long>(p);
  long long r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 64-bit values; p < 2^32 keeps everything in range.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool parse_integer(std::string_view text, mpz_class& out) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  std::string s(digits);
  out.set_str(s, 10);
  if (text.front() == '-') out = -out;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) throw InvalidField("characteristic two is not supported");
  if (p > std::numeric_limits<std::uint32_t>::max()) throw InvalidField("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InvalidField("modulus is not an odd prime: " + std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rational") return rational();
  constexpr std::string_view prefix = "fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidField("bad modulus in field spec '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidField("unknown field spec '" + std::string(text) + "'");
}

Scalar FieldSpec::from_int(long long v) const { return Scalar(*this, v); }
Scalar FieldSpec::zero() const { return Scalar(*this, 0LL); }
Scalar FieldSpec::one() const { return Scalar(*this, 1LL); }

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "fp:" + std::to_string(modulus_);
}

Scalar::Scalar(const FieldSpec& field, long long v) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(mpz_class(static_cast<long>(v)));
  } else {
    value_ = reduce(v, field.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (field.is_rational()) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint64_t p = field.modulus();
    std::uint64_t d = reduce(den, p);
    if (d == 0) throw DivisionByZero();
    value_ = reduce(num, p) * inverse_mod(d, p) % p;
  }
}

Scalar::Scalar(mpq_class q) {
  q.canonicalize();
  value_ = std::move(q);
}

Scalar::Scalar(const FieldSpec& field, std::uint64_t residue, bool) : field_(field), value_(residue) {}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw InvalidField("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw InvalidField("scalar is not a residue");
  return std::get<std::uint64_t>(value_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) throw MixedFields();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t p = field_.modulus();
    *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r * std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw DivisionByZero();
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t p = field_.modulus();
    *r = (*r * inverse_mod(std::get<std::uint64_t>(rhs.value_), p)) % p;
  } else {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r, true);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const { return field_.one() / *this; }

Scalar Scalar::halve() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    // p odd: x/2 is x/2 when x is even, else (x + p)/2.
    std::uint64_t v = *r;
    return Scalar(field_, (v % 2 == 0 ? v : v + field_.modulus()) / 2, true);
  }
  mpq_class q = std::get<mpq_class>(value_);
  mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), 1);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.field_ != rhs.field_) return false;
  return lhs.value_ == rhs.value_;
}

std::string Scalar::format() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  const mpq_class& q = std::get<mpq_class>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double Scalar::to_double() const { return rational().get_d(); }

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  auto slash = text.find('/');
  mpz_class num, den = 1;
  std::string_view num_text = text.substr(0, slash);
  if (!parse_integer(num_text, num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    if (!parse_integer(text.substr(slash + 1), den)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
  }
  return Scalar(field, num, den);
}

}  // namespace chromo
