#include "coxval/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace coxval {

void Rational::normalize() {
  if (den_ == 0) throw input_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& part) -> Int {
    if (part.empty()) throw input_error("empty integer in rational literal");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw input_error("bare sign in rational literal");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw input_error("bad rational literal: \"" + part + "\"");
    return Int(part[0] == '+' ? part.substr(1) : part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw input_error("rational literal with zero denominator: \"" + text + "\"");
  return Rational(num, den);
}

QVector make_qvector(std::initializer_list<Rational> entries) {
  QVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

int compare(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (b(i) < a(i)) return 1;
  }
  return 0;
}

int compare(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return -1;
      if (b(i, j) < a(i, j)) return 1;
    }
  return 0;
}

QVector primitive_ray(const QVector& v) {
  Int den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den_lcm = boost::multiprecision::lcm(den_lcm, v(i).den());
  Int num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    num_gcd = boost::multiprecision::gcd(num_gcd, v(i).num() * (den_lcm / v(i).den()));
  if (num_gcd == 0) throw consistency_error("primitive_ray of the zero vector");
  QVector out(v.size());
  Rational scale(den_lcm, num_gcd);
  scale = abs(scale);
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * scale;
  return out;
}

QVector primitive_direction(const QVector& v) {
  QVector out = primitive_ray(v);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i).is_zero()) continue;
    if (out(i).sign() < 0) out = -out;
    break;
  }
  return out;
}

}  // namespace coxval
