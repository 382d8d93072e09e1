#include "hopfkit/scalar.hpp"

#include <charconv>
#include <limits>

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = result * base % p;
    base = base * base % p;
    exp >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()) || !is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return Field{static_cast<std::uint32_t>(p)};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  return Scalar(reduce(v, characteristic_), characteristic_);
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw PreconditionError("zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse(std::string_view text) const {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed scalar \"" + std::string(text) + "\"");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in scalar \"" + std::string(text) + "\"");
  if (negative) n = -n;
  if (is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class p(characteristic_);
  mpz_class nr = n % p, dr = d % p;
  if (nr < 0) nr += p;
  if (dr == 0) throw ParseError("denominator of \"" + std::string(text) + "\" vanishes mod " + std::to_string(characteristic_));
  return Scalar(nr.get_ui(), characteristic_) / Scalar(dr.get_ui(), characteristic_);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(characteristic_);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {}

Scalar::Scalar(std::uint64_t residue, std::uint32_t modulus)
    : value_(Residue{static_cast<std::uint32_t>(residue % modulus), modulus}) {}


Field Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  auto a = std::get_if<Residue>(&value_);
  auto b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw std::invalid_argument("scalar field mismatch");
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.value_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t{r->value} + r->modulus - std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (auto r = std::get_if<Residue>(&value_)) {
    return Scalar(mod_pow(r->value, r->modulus - 2, r->modulus), r->modulus);
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace hopfkit
