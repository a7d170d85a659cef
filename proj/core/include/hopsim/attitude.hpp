#pragma once

#include <cmath>

#include "hopsim/vec3.hpp"

namespace hopsim {

// Euler angles, intrinsic Z-Y-X (yaw, then pitch, then roll). Radians.
// This convention is used consistently everywhere angles cross an API.
struct EulerAngles {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
    // Set when |pitch| is within ~0.01 rad of +-pi/2; conversion is still
    // returned but roll/yaw become poorly conditioned there.
    bool near_gimbal_lock = false;
};

// Unit quaternion body->world rotation.
struct Attitude {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Attitude() = default;
    constexpr Attitude(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Attitude normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    constexpr Attitude conjugate() const { return {w, -x, -y, -z}; }
};

// Hamilton product a*b (apply b first, then a).
constexpr Attitude operator*(const Attitude& a, const Attitude& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

// Rotate a body-frame vector into the world frame.
inline Vec3 rotate(const Attitude& q, const Vec3& v) {
    // v' = v + 2 qv x (qv x v + w v)
    const Vec3 qv{q.x, q.y, q.z};
    const Vec3 t = cross(qv, v) * 2.0;
    return v + t * q.w + cross(qv, t);
}

inline Vec3 rotate_inverse(const Attitude& q, const Vec3& v) { return rotate(q.conjugate(), v); }

inline Attitude from_axis_angle(const Vec3& axis, double angle) {
    const Vec3 a = normalized(axis);
    const double h = 0.5 * angle;
    const double s = std::sin(h);
    return {std::cos(h), a.x * s, a.y * s, a.z * s};
}

// Quaternion kinematics: q_dot = 1/2 q (x) (0, omega_body).
inline Attitude derivative(const Attitude& q, const Vec3& omega_body) {
    const Attitude w{0.0, omega_body.x, omega_body.y, omega_body.z};
    const Attitude d = q * w;
    return {0.5 * d.w, 0.5 * d.x, 0.5 * d.y, 0.5 * d.z};
}

inline Attitude euler_to_attitude(double roll, double pitch, double yaw) {
    const double cr = std::cos(0.5 * roll), sr = std::sin(0.5 * roll);
    const double cp = std::cos(0.5 * pitch), sp = std::sin(0.5 * pitch);
    const double cy = std::cos(0.5 * yaw), sy = std::sin(0.5 * yaw);
    return {cr * cp * cy + sr * sp * sy,
            sr * cp * cy - cr * sp * sy,
            cr * sp * cy + sr * cp * sy,
            cr * cp * sy - sr * sp * cy};
}

inline Attitude euler_to_attitude(const EulerAngles& e) {
    return euler_to_attitude(e.roll, e.pitch, e.yaw);
}

inline EulerAngles attitude_to_euler(const Attitude& q) {
    EulerAngles e;
    const double sp = 2.0 * (q.w * q.y - q.z * q.x);
    const double sp_clamped = sp > 1.0 ? 1.0 : (sp < -1.0 ? -1.0 : sp);
    e.pitch = std::asin(sp_clamped);
    e.roll = std::atan2(2.0 * (q.w * q.x + q.y * q.z), 1.0 - 2.0 * (q.x * q.x + q.y * q.y));
    e.yaw = std::atan2(2.0 * (q.w * q.z + q.x * q.y), 1.0 - 2.0 * (q.y * q.y + q.z * q.z));
    constexpr double kGimbalMargin = 0.01;  // rad from +-pi/2
    e.near_gimbal_lock = std::abs(sp_clamped) > std::sin(M_PI / 2.0 - kGimbalMargin);
    return e;
}

// Smallest rotation carrying the body +z axis onto `dir` (world frame).
// Used to aim the thrust axis before a burn.
inline Attitude align_z_with(const Vec3& dir) {
    const Vec3 d = normalized(dir);
    const Vec3 zhat{0.0, 0.0, 1.0};
    const double c = dot(zhat, d);
    if (c > 1.0 - 1e-12) return {};
    if (c < -1.0 + 1e-12) return from_axis_angle({1.0, 0.0, 0.0}, M_PI);
    return from_axis_angle(cross(zhat, d), std::acos(c));
}

// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + M_PI, 2.0 * M_PI);
    if (a <= 0.0) a += 2.0 * M_PI;
    return a - M_PI;
}

inline bool is_finite(const Attitude& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

}  // namespace hopsim
