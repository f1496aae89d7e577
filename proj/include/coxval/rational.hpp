#ifndef COXVAL_RATIONAL_HPP
#define COXVAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Dense>

#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coxval/errors.hpp"

namespace coxval {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always normalized: gcd(num, den) == 1 and den > 0,
// so equality is plain member comparison and values are safe map keys.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}              // NOLINT(runtime/explicit)
  Rational(long long n) : num_(n), den_(1) {}        // NOLINT(runtime/explicit)
  Rational(Int n) : num_(std::move(n)), den_(1) {}   // NOLINT(runtime/explicit)
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  // Requires is_integer(); the exact numerator otherwise makes no sense here.
  const Int& as_integer() const {
    if (den_ != 1) throw consistency_error("Rational::as_integer on non-integer " + str());
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw input_error("Rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
  std::string str() const;

  // Accepts "p", "p/q", optional leading '-'. Throws input_error otherwise.
  static Rational parse(const std::string& text);

 private:
  void normalize();
  Int num_, den_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace coxval

namespace Eigen {

template <>
struct NumTraits<coxval::Rational> : GenericNumTraits<coxval::Rational> {
  typedef coxval::Rational Real;
  typedef coxval::Rational NonInteger;
  typedef coxval::Rational Nested;
  static inline Real epsilon() { return coxval::Rational(0); }
  static inline Real dummy_precision() { return coxval::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

}  // namespace Eigen

namespace coxval {

// Dense exact types. Everything geometric in this library flows through these.
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

QVector make_qvector(std::initializer_list<Rational> entries);

// Lexicographic three-way compare; vectors of different sizes order by size.
int compare(const QVector& a, const QVector& b);
int compare(const QMatrix& a, const QMatrix& b);

struct QVectorLess {
  bool operator()(const QVector& a, const QVector& b) const { return compare(a, b) < 0; }
};
struct QMatrixLess {
  bool operator()(const QMatrix& a, const QMatrix& b) const { return compare(a, b) < 0; }
};

// Scales a nonzero rational vector to the unique primitive integer vector on
// the same ray (cleared denominators, gcd 1). Orientation is preserved.
QVector primitive_ray(const QVector& v);

// primitive_ray plus a sign fix making the first nonzero coordinate positive.
// Canonical representative of a line direction.
QVector primitive_direction(const QVector& v);

}  // namespace coxval

#endif
