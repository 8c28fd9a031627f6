#pragma once

#include <cmath>

namespace adekit {

/// a + bi + cj + dk
struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d, p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b, p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
  }
  friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.a, s * q.b, s * q.c, s * q.d}; }
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion quat_conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }
inline double quat_norm(const Quaternion& q) { return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d); }

inline double quat_distance(const Quaternion& p, const Quaternion& q) { return quat_norm(p - q); }

}  // namespace adekit
