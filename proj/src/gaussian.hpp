#pragma once

#include <string>

#include "rational.hpp"

namespace abelcone {

// Element of Q(i). Conjugation is the ring automorphism a+bi -> a-bi.
struct GaussianRational {
  Rat re;
  Rat im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rat(0), Rat(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2, a nonnegative rational.
  Rat norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    if (is_zero()) fail(ErrorCode::Argument, "division by zero Gaussian rational");
    Rat n = norm();
    return {re / n, -im / n};
  }

  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  std::string str() const {
    if (im == 0) return rat_str(re);
    std::string s;
    if (re != 0) s = rat_str(re);
    if (im > 0 && !s.empty()) s += "+";
    if (im == -1) s += "-";
    else if (im != 1) s += rat_str(im);
    s += "i";
    return s;
  }
};

// i^e for any integer exponent.
inline GaussianRational i_power(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {Rat(1), Rat(0)};
    case 1: return {Rat(0), Rat(1)};
    case 2: return {Rat(-1), Rat(0)};
    default: return {Rat(0), Rat(-1)};
  }
}

}  // namespace abelcone
