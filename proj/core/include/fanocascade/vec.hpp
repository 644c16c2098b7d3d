#pragma once

#include <tuple>
#include <vector>

#include "fanocascade/numeric.hpp"

namespace fano {

/// A point of the rank two lattice N (or of its dual M; the two are only
/// distinguished by how a value is used).
struct Vec {
    Int x{0};
    Int y{0};

    Vec() = default;
    Vec(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec(long xx, long yy) : x(xx), y(yy) {}

    friend Vec operator+(const Vec& a, const Vec& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec operator-(const Vec& a, const Vec& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec operator-(const Vec& a) { return {-a.x, -a.y}; }
    friend Vec operator*(const Int& s, const Vec& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    friend bool operator<(const Vec& a, const Vec& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    }
};

/// Pairing of a dual vector w in M with a point v in N.
inline Int dot(const Vec& w, const Vec& v) { return w.x * v.x + w.y * v.y; }

/// Determinant of the 2x2 matrix with columns a, b.
inline Int cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

/// Counterclockwise quarter turn; rot90(f) is the primitive inner normal of
/// an edge traversed counterclockwise in direction f around the origin.
inline Vec rot90(const Vec& a) { return {-a.y, a.x}; }

inline bool is_zero(const Vec& a) { return a.x == 0 && a.y == 0; }

inline Int content(const Vec& a) { return int_gcd(a.x, a.y); }

inline bool is_primitive(const Vec& a) { return content(a) == 1; }

/// a divided by the gcd of its entries; the zero vector is rejected upstream.
inline Vec primitive(const Vec& a) {
    Int g = content(a);
    return {a.x / g, a.y / g};
}

/// A rational point, used for dual polygons and slice endpoints.
struct QVec {
    Rat x{0};
    Rat y{0};

    QVec() = default;
    QVec(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
    QVec(const Vec& v) : x(v.x), y(v.y) {}

    friend QVec operator+(const QVec& a, const QVec& b) { return {a.x + b.x, a.y + b.y}; }
    friend QVec operator-(const QVec& a, const QVec& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const QVec& a, const QVec& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const QVec& a, const QVec& b) { return !(a == b); }
    friend bool operator<(const QVec& a, const QVec& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

inline Rat qcross(const QVec& a, const QVec& b) { return a.x * b.y - a.y * b.x; }

inline Rat qdot(const QVec& a, const QVec& b) { return a.x * b.x + a.y * b.y; }

}  // namespace fano
