#pragma once

// Exact arithmetic in ℚ(√2, √3), the field containing every Coxeter cosine
// cos(π/m) for the crystallographic labels m ∈ {2, 3, 4, 6}. Elements are
// stored as p + q√3 with p, q ∈ ℚ(√2); signs are decided exactly.

#include "adekit/exact.hpp"

namespace adekit {

/// r + s√2
struct Sqrt2Field {
  Rational r = 0, s = 0;

  friend Sqrt2Field operator+(const Sqrt2Field& a, const Sqrt2Field& b) { return {a.r + b.r, a.s + b.s}; }
  friend Sqrt2Field operator-(const Sqrt2Field& a, const Sqrt2Field& b) { return {a.r - b.r, a.s - b.s}; }
  friend Sqrt2Field operator*(const Sqrt2Field& a, const Sqrt2Field& b) {
    return {a.r * b.r + 2 * a.s * b.s, a.r * b.s + a.s * b.r};
  }
  Sqrt2Field inverse() const {
    const Rational norm = r * r - 2 * s * s;
    if (norm == 0) throw InputError("division by zero in Q(sqrt2)");
    return {r / norm, -s / norm};
  }
  bool is_zero() const { return r == 0 && s == 0; }

  int sign() const {
    const int sr = r > 0 ? 1 : r < 0 ? -1 : 0;
    const int ss = s > 0 ? 1 : s < 0 ? -1 : 0;
    if (ss == 0) return sr;
    if (sr == 0 || sr == ss) return ss;
    // opposite signs: whichever of r², 2s² dominates wins
    return r * r > 2 * s * s ? sr : ss;
  }
};

/// p + q√3 with p, q ∈ ℚ(√2)
struct Sqrt23Field {
  Sqrt2Field p, q;

  static Sqrt23Field rational(const Rational& v) { return {{v, 0}, {0, 0}}; }

  friend Sqrt23Field operator+(const Sqrt23Field& a, const Sqrt23Field& b) { return {a.p + b.p, a.q + b.q}; }
  friend Sqrt23Field operator-(const Sqrt23Field& a, const Sqrt23Field& b) { return {a.p - b.p, a.q - b.q}; }
  friend Sqrt23Field operator*(const Sqrt23Field& a, const Sqrt23Field& b) {
    const Sqrt2Field three{3, 0};
    return {a.p * b.p + three * a.q * b.q, a.p * b.q + a.q * b.p};
  }
  Sqrt23Field inverse() const {
    const Sqrt2Field norm = p * p - Sqrt2Field{3, 0} * q * q;
    const Sqrt2Field inv = norm.inverse();
    return {p * inv, Sqrt2Field{0, 0} - q * inv};
  }
  friend Sqrt23Field operator/(const Sqrt23Field& a, const Sqrt23Field& b) { return a * b.inverse(); }
  bool is_zero() const { return p.is_zero() && q.is_zero(); }

  int sign() const {
    const int sp = p.sign(), sq = q.sign();
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    return sp * (p * p - Sqrt2Field{3, 0} * q * q).sign();
  }

  double approx() const {
    return to_double(p.r) + to_double(p.s) * 1.4142135623730951 +
           (to_double(q.r) + to_double(q.s) * 1.4142135623730951) * 1.7320508075688772;
  }
};

/// −cos(π/m) for m ∈ {2, 3, 4, 6}.
inline Sqrt23Field negative_cosine(int m) {
  switch (m) {
    case 2: return Sqrt23Field::rational(0);
    case 3: return Sqrt23Field::rational(Rational(-1, 2));
    case 4: return {{0, Rational(-1, 2)}, {0, 0}};
    case 6: return {{0, 0}, {Rational(-1, 2), 0}};
    default: throw InputError("cos(pi/" + std::to_string(m) + ") is not in Q(sqrt2, sqrt3)");
  }
}

}  // namespace adekit
