#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace hopfkit {

class Scalar;

/// Ground field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  /// The rational numbers.
  static Field rationals() { return Field{0}; }
  /// F_p; throws PreconditionError unless p is prime and fits in 31 bits.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// Parses "n" or "n/d" (optional leading minus); throws ParseError.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  explicit Scalar(mpq_class q);
  Scalar(std::uint64_t residue, std::uint32_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Throws PreconditionError on zero.
  Scalar inverse() const;

  /// Lowest-terms "p/q", integer "n", or residue "r".
  std::string to_string() const;

  const mpq_class* rational() const { return std::get_if<mpq_class>(&value_); }

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace hopfkit
