// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_GEOMETRY_HPP
#define HGMIMO_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hgmimo {

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3 &v) { return {s * v.x, s * v.y, s * v.z}; }
};

inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

// Panel tilt angles about the x and y axes, radians.
struct Tilt
{
    double theta_x = 0.0;
    double theta_y = 0.0;
};

struct Mat3
{
    double a[3][3] = {};

    Vec3 operator*(const Vec3 &v) const
    {
        return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
                a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
                a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
    }
};

// Active right-handed rotation R_Y(theta_y) R_X(theta_x): the x tilt is
// applied first, then the y tilt.
inline Mat3 rotation_matrix(const Tilt &tilt)
{
    const double cx = std::cos(tilt.theta_x), sx = std::sin(tilt.theta_x);
    const double cy = std::cos(tilt.theta_y), sy = std::sin(tilt.theta_y);
    Mat3 r;
    r.a[0][0] = cy;
    r.a[0][1] = sy * sx;
    r.a[0][2] = sy * cx;
    r.a[1][0] = 0.0;
    r.a[1][1] = cx;
    r.a[1][2] = -sx;
    r.a[2][0] = -sy;
    r.a[2][1] = cy * sx;
    r.a[2][2] = cy * cx;
    return r;
}

inline Vec3 rotate(const Tilt &tilt, const Vec3 &v) { return rotation_matrix(tilt) * v; }

// Uniform planar array centered on the z axis at plane_z, axes parallel to
// x/y; (2 half_count + 1) elements per side.
struct PlanarArray
{
    int half_count_x;
    int half_count_y;
    double spacing; // m
    double plane_z; // m

    PlanarArray(int hx, int hy, double d, double z)
        : half_count_x(hx), half_count_y(hy), spacing(d), plane_z(z)
    {
        if (hx < 0 || hy < 0)
            throw std::invalid_argument("PlanarArray: half counts must be >= 0");
        if (!(d > 0.0))
            throw std::invalid_argument("PlanarArray: spacing must be > 0");
    }

    int count_x() const { return 2 * half_count_x + 1; }
    int count_y() const { return 2 * half_count_y + 1; }
    std::size_t size() const { return static_cast<std::size_t>(count_x()) * count_y(); }
    Vec3 center() const { return {0.0, 0.0, plane_z}; }
};

// Element centers in x-major order: the y index runs fastest.
inline std::vector<Vec3> element_positions(const PlanarArray &array)
{
    std::vector<Vec3> pts;
    pts.reserve(array.size());
    for (int ix = -array.half_count_x; ix <= array.half_count_x; ++ix)
        for (int iy = -array.half_count_y; iy <= array.half_count_y; ++iy)
            pts.push_back({ix * array.spacing, iy * array.spacing, array.plane_z});
    return pts;
}

// Element centers of the array tilted rigidly about its own center, so the
// panel pivots in place instead of swinging around the coordinate origin.
inline std::vector<Vec3> steered_sample_points(const PlanarArray &array, const Tilt &tilt)
{
    const Mat3 r = rotation_matrix(tilt);
    const Vec3 c = array.center();
    std::vector<Vec3> pts = element_positions(array);
    for (Vec3 &p : pts)
        p = c + r * (p - c);
    return pts;
}

// Orientation of a panel: local azimuth reference, local elevation reference,
// and the outward normal.
struct PanelFrame
{
    Vec3 right;
    Vec3 up;
    Vec3 boresight;
};

// A panel at negative z radiating toward +z.
inline PanelFrame tx_frame() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

// A panel at positive z facing back toward the transmitter.
inline PanelFrame rx_frame() { return {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}; }

inline PanelFrame steered_frame(const PanelFrame &frame, const Tilt &tilt)
{
    const Mat3 r = rotation_matrix(tilt);
    return {r * frame.right, r * frame.up, r * frame.boresight};
}

} // namespace hgmimo

#endif // HGMIMO_GEOMETRY_HPP
