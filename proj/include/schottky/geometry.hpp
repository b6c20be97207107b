#pragma once

#include "schottky/interval.hpp"
#include "schottky/matrix.hpp"

#include <stdexcept>

namespace schottky {

// Normalization convention for homogeneous coordinates: divide by the entry
// of largest absolute value, then flip signs so the first nonzero coordinate
// is positive. Serialized centers are canonical this way.
inline Vec normalize_homogeneous(Vec v) {
    Eigen::Index best = -1;
    Rat mx(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Rat a = abs_rat(v(i));
        if (a > mx) {
            mx = a;
            best = i;
        }
    }
    if (best < 0) throw std::invalid_argument("zero homogeneous vector");
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= mx;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != 0) {
            if (v(i) < 0)
                for (Eigen::Index j = 0; j < v.size(); ++j) v(j) = -v(j);
            break;
        }
    }
    return v;
}

// Point of projective space enclosed by a metric ball around a rational
// center: every candidate direction lies within `radius` of [center] in the
// standard metric d([v],[w]) = ||v ^ w|| / (||v|| ||w||).
struct EnclosedProjPoint {
    Vec center;
    Rat radius;

    EnclosedProjPoint() : radius(0) {}
    EnclosedProjPoint(Vec c, Rat r) : center(normalize_homogeneous(std::move(c))), radius(std::move(r)) {
        if (radius < 0 || radius >= 1) throw std::invalid_argument("enclosure radius must be in [0,1)");
    }
};

// Hyperplane ker(conormal), enclosed within Hausdorff distance `radius` of
// the stated one. Hausdorff distance between hyperplanes equals the point
// distance of their conormals (Euclidean norms), so the slack transfers.
struct EnclosedProjHyperplane {
    Vec conormal;
    Rat radius;

    EnclosedProjHyperplane() : radius(0) {}
    EnclosedProjHyperplane(Vec c, Rat r) : conormal(normalize_homogeneous(std::move(c))), radius(std::move(r)) {
        if (radius < 0 || radius >= 1) throw std::invalid_argument("enclosure radius must be in [0,1)");
    }
};

// Closed metric ball; centers are exact rational points (any slack from the
// enclosure that produced the center belongs in the radius).
struct Ball {
    Vec center;
    Rat radius;

    Ball() : radius(0) {}
    Ball(Vec c, Rat r) : center(normalize_homogeneous(std::move(c))), radius(std::move(r)) {
        if (radius <= 0 || radius >= 1) throw std::invalid_argument("ball radius must be in (0,1)");
    }
};

// d([u],[v])^2 = 1 - <u,v>^2 / (|u|^2 |v|^2), a rational number.
inline Rat proj_dist_sq(const Vec& u, const Vec& v) {
    Rat uu = norm_sq(u), vv = norm_sq(v), uv = dot(u, v);
    Rat val = Rat(1) - uv * uv / (uu * vv);
    return val < 0 ? Rat(0) : val;
}

inline Interval proj_dist(const Vec& u, const Vec& v, unsigned bits = 64) {
    return sqrt(Interval(proj_dist_sq(u, v)), bits);
}

// d([v], ker phi)^2 = phi(v)^2 / (|phi|^2 |v|^2), again rational.
inline Rat point_hyperplane_dist_sq(const Vec& v, const Vec& phi) {
    Rat f = dot(phi, v);
    return f * f / (norm_sq(phi) * norm_sq(v));
}

inline Interval dist(const EnclosedProjPoint& p, const EnclosedProjPoint& q, unsigned bits = 64) {
    Interval c = proj_dist(p.center, q.center, bits);
    Rat slack = p.radius + q.radius;
    return Interval(std::max<Rat>(Rat(0), c.lo - slack), std::min<Rat>(Rat(1), c.hi + slack));
}

inline Interval dist_point_hyperplane(const EnclosedProjPoint& p, const EnclosedProjHyperplane& h, unsigned bits = 64) {
    Interval c = sqrt(Interval(point_hyperplane_dist_sq(p.center, h.conormal)), bits);
    Rat slack = p.radius + h.radius;
    return Interval(std::max<Rat>(Rat(0), c.lo - slack), std::min<Rat>(Rat(1), c.hi + slack));
}

inline Interval hausdorff_hyperplanes(const EnclosedProjHyperplane& a, const EnclosedProjHyperplane& b,
                                      unsigned bits = 64) {
    Interval c = proj_dist(a.conormal, b.conormal, bits);
    Rat slack = a.radius + b.radius;
    return Interval(std::max<Rat>(Rat(0), c.lo - slack), std::min<Rat>(Rat(1), c.hi + slack));
}

inline Interval dist(const Ball& b, const EnclosedProjHyperplane& h, unsigned bits = 64) {
    Interval c = sqrt(Interval(point_hyperplane_dist_sq(b.center, h.conormal)), bits);
    Rat slack = b.radius + h.radius;
    return Interval(std::max<Rat>(Rat(0), c.lo - slack), std::min<Rat>(Rat(1), c.hi + slack));
}

inline bool balls_disjoint(const Ball& a, const Ball& b, unsigned bits = 64) {
    Interval c = proj_dist(a.center, b.center, bits);
    return c.lo > a.radius + b.radius;
}

inline bool ball_contains_point(const Ball& b, const EnclosedProjPoint& p, unsigned bits = 64) {
    Interval c = proj_dist(b.center, p.center, bits);
    return c.hi + p.radius <= b.radius;
}

}  // namespace schottky
