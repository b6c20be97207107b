#pragma once

#include "schottky/rational.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace schottky {

// Dense exact-rational matrix/vector types. All arithmetic is exact; nothing
// here ever rounds.
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

inline void require_square(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("matrix must be square and nonempty");
}

inline void require_same_dim(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
}

inline bool is_integer_matrix(const Mat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j))) return false;
    return true;
}

inline Mat mat_identity(int n) { return Mat::Identity(n, n); }

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    return a * b;
}

inline Rat mat_det(const Mat& m) {
    require_square(m);
    return m.determinant();
}

// Exact inverse. Unimodular integer input yields integer output.
inline Mat mat_inv(const Mat& m) {
    require_square(m);
    if (mat_det(m) == 0) throw std::domain_error("singular matrix");
    return m.inverse();
}

inline Mat mat_pow(const Mat& m, long k) {
    require_square(m);
    Mat base = k < 0 ? mat_inv(m) : m;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul : static_cast<unsigned long>(k);
    Mat acc = mat_identity(static_cast<int>(m.rows()));
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// Characteristic polynomial det(xI - m) by the Faddeev-LeVerrier recurrence;
// exact, monic, integer coefficients for integer input. Returned low-to-high.
inline std::vector<Rat> char_poly_rat(const Mat& m) {
    require_square(m);
    const int n = static_cast<int>(m.rows());
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    c[n] = 1;
    Mat mk = Mat::Zero(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        for (int i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        Rat tr = 0;
        Mat am = m * mk;
        for (int i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / k;
    }
    return c;
}

inline Rat frobenius_sq(const Mat& m) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return s;
}

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

inline Rat norm_sq(const Vec& v) { return dot(v, v); }

}  // namespace schottky
