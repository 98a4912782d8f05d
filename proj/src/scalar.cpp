#include "permrel/scalar.hpp"

#include <cctype>

#include "permrel/errors.hpp"

namespace permrel {

  namespace {
    using boost::multiprecision::cpp_int;

    bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    cpp_int mod(cpp_int a, cpp_int const& p) {
      a %= p;
      return a < 0 ? a + p : a;
    }

    // a^{-1} mod p by the extended Euclidean algorithm.
    cpp_int inverse_mod(cpp_int a, cpp_int const& p) {
      cpp_int r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
      while (r1 != 0) {
        cpp_int q  = r0 / r1;
        cpp_int r2 = r0 - q * r1;
        cpp_int s2 = s0 - q * s1;
        r0 = r1, r1 = r2, s0 = s1, s1 = s2;
      }
      if (r0 != 1) {
        throw InvalidArgument("division by zero in the field");
      }
      return mod(s0, p);
    }
  }  // namespace

  Field::Field(std::uint64_t characteristic) : _p(characteristic) {
    if (_p != 0 && !is_prime(_p)) {
      throw InvalidArgument("field characteristic " + std::to_string(_p)
                            + " is not prime");
    }
  }

  std::string Field::name() const {
    return _p == 0 ? "Q" : "F_" + std::to_string(_p);
  }

  Scalar::Scalar(Field field, Rational value)
      : _field(field), _value(std::move(value)) {
    normalize();
  }

  void Scalar::normalize() {
    if (_field.is_rational()) {
      return;
    }
    cpp_int const p   = _field.characteristic();
    cpp_int const num = mod(numerator(_value), p);
    cpp_int const den = denominator(_value);
    if (mod(den, p) == 0) {
      throw InvalidArgument("denominator divisible by the characteristic");
    }
    _value = Rational(mod(num * inverse_mod(den, p), p));
  }

  void Scalar::check_field(Scalar const& other) const {
    if (!(_field == other._field)) {
      throw InvalidArgument("field mismatch: " + _field.name() + " vs "
                            + other._field.name());
    }
  }

  Scalar& Scalar::operator+=(Scalar const& other) {
    check_field(other);
    _value += other._value;
    normalize();
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& other) {
    check_field(other);
    _value -= other._value;
    normalize();
    return *this;
  }

  Scalar& Scalar::operator*=(Scalar const& other) {
    check_field(other);
    _value *= other._value;
    normalize();
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& other) {
    check_field(other);
    if (other.is_zero()) {
      throw InvalidArgument("division by zero in the field");
    }
    if (_field.is_rational()) {
      _value /= other._value;
    } else {
      cpp_int const p = _field.characteristic();
      _value = Rational(mod(numerator(_value) * inverse_mod(numerator(other._value), p), p));
    }
    return *this;
  }

  Scalar Scalar::operator-() const {
    return Scalar(_field, -_value);
  }

  bool Scalar::operator==(Scalar const& other) const {
    return _field == other._field && _value == other._value;
  }

  std::string Scalar::to_string() const {
    return _value.str();
  }

  Rational parse_rational(std::string const& text) {
    std::size_t i   = 0;
    bool        neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i++] == '-';
    }
    auto digits = [&](std::size_t& j) {
      std::size_t const start = j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      if (j == start) {
        throw InvalidArgument("malformed rational '" + text + "'");
      }
      return cpp_int(text.substr(start, j - start));
    };
    cpp_int num = digits(i);
    cpp_int den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      den = digits(i);
      if (den == 0) {
        throw InvalidArgument("zero denominator in '" + text + "'");
      }
    }
    if (i != text.size()) {
      throw InvalidArgument("malformed rational '" + text + "'");
    }
    return Rational(neg ? -num : num, den);
  }

}  // namespace permrel
