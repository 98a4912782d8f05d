#ifndef PERMREL_SCALAR_HPP_
#define PERMREL_SCALAR_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permrel {

  using Rational = boost::multiprecision::cpp_rational;

  // Q when characteristic == 0, otherwise F_p.
  class Field {
   public:
    // Throws InvalidArgument unless p == 0 or p is prime.
    Field() : _p(0) {}
    explicit Field(std::uint64_t characteristic);

    static Field rationals() {
      return Field(0);
    }

    std::uint64_t characteristic() const noexcept {
      return _p;
    }
    bool is_rational() const noexcept {
      return _p == 0;
    }

    // "Q" or "F_p".
    std::string name() const;

    bool operator==(Field const&) const = default;

   private:
    std::uint64_t _p;
  };

  // An exact field element.  Over F_p the value is kept as an integer in
  // [0, p).
  class Scalar {
   public:
    explicit Scalar(Field field = Field(), Rational value = 0);

    Field const& field() const noexcept {
      return _field;
    }
    Rational const& value() const noexcept {
      return _value;
    }
    bool is_zero() const {
      return _value == 0;
    }

    Scalar& operator+=(Scalar const& other);
    Scalar& operator-=(Scalar const& other);
    Scalar& operator*=(Scalar const& other);
    Scalar& operator/=(Scalar const& other);
    Scalar  operator-() const;

    friend Scalar operator+(Scalar a, Scalar const& b) {
      return a += b;
    }
    friend Scalar operator-(Scalar a, Scalar const& b) {
      return a -= b;
    }
    friend Scalar operator*(Scalar a, Scalar const& b) {
      return a *= b;
    }
    friend Scalar operator/(Scalar a, Scalar const& b) {
      return a /= b;
    }

    bool operator==(Scalar const& other) const;

    std::string to_string() const;

   private:
    void check_field(Scalar const& other) const;
    void normalize();

    Field    _field;
    Rational _value;
  };

  // Parses "a" or "a/b" with an optional sign.
  Rational parse_rational(std::string const& text);

}  // namespace permrel

#endif  // PERMREL_SCALAR_HPP_
