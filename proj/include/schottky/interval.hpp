#pragma once

#include "schottky/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schottky {

// Closed interval with exact rational endpoints. Addition, subtraction,
// multiplication and division are exact (no rounding is ever needed over Q);
// sqrt and log round outward at a requested bit precision.
struct Interval {
    Rat lo, hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rat v) : lo(v), hi(v) {}
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    }

    static Interval hull(const Rat& a, const Rat& b) { return a <= b ? Interval(a, b) : Interval(b, a); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool is_point() const { return lo == hi; }

    Interval operator-() const { return Interval(-hi, -lo); }
};

inline Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }
inline Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(Rat(0))) throw std::domain_error("interval division by an interval containing zero");
    Rat p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator+(const Interval& a, const Rat& b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, const Rat& b) { return a - Interval(b); }
inline Interval operator*(const Interval& a, const Rat& b) { return a * Interval(b); }
inline Interval operator*(const Rat& a, const Interval& b) { return Interval(a) * b; }

inline Interval abs(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return Interval(Rat(0), std::max<Rat>(-a.lo, a.hi));
}

inline Interval intersect(const Interval& a, const Interval& b) {
    Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
    if (l > h) throw std::domain_error("empty interval intersection");
    return Interval(l, h);
}

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval pow(const Interval& a, unsigned long k) {
    if (k == 0) return Interval(Rat(1));
    Interval acc(Rat(1));
    Interval base = a;
    unsigned long e = k;
    while (e > 0) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// ---- directed square roots --------------------------------------------------

// Largest rational of the form s/(d*2^bits) with (s/(d*2^bits))^2 <= x.
inline Rat sqrt_lower(const Rat& x, unsigned bits = 64) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    if (x == 0) return 0;
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits for precision.
    Int n = x.get_num(), d = x.get_den();
    Int scaled = n * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Int root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());  // floor sqrt
    Rat r(root, d);
    r /= Rat(Int(1) << bits);
    r.canonicalize();
    return r;
}

inline Rat sqrt_upper(const Rat& x, unsigned bits = 64) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    if (x == 0) return 0;
    Int n = x.get_num(), d = x.get_den();
    Int scaled = n * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
    if (rem != 0) root += 1;
    Rat r(root, d);
    r /= Rat(Int(1) << bits);
    r.canonicalize();
    return r;
}

inline Interval sqrt(const Interval& a, unsigned bits = 64) {
    if (a.lo < 0) throw std::domain_error("sqrt of interval with negative part");
    return Interval(sqrt_lower(a.lo, bits), sqrt_upper(a.hi, bits));
}

// ---- natural logarithm ------------------------------------------------------

namespace detail {

// Enclosure of ln(x) for x in [1, 2], via atanh series
// ln x = 2 * sum u^(2j+1)/(2j+1), u = (x-1)/(x+1), |u| <= 1/3,
// remainder after J terms bounded by u^(2J+1)/((2J+1)(1-u^2)).
inline Interval ln_reduced(const Rat& x, unsigned terms) {
    Rat u = (x - 1) / (x + 1);
    Rat u2 = u * u;
    Rat sum = 0, upow = u;
    for (unsigned j = 0; j < terms; ++j) {
        sum += upow / Rat(2 * j + 1);
        upow *= u2;
    }
    // upow = u^(2*terms+1)
    Rat rem = upow / (Rat(2 * terms + 1) * (Rat(1) - u2));
    return Interval(2 * sum, 2 * (sum + rem));
}

// ln 2 enclosure (x = 2 in the series above).
inline Interval ln2(unsigned terms = 40) { return ln_reduced(Rat(2), terms); }

}  // namespace detail

// Certified enclosure of ln(x) for rational x > 0.
inline Interval log_enclosure(const Rat& x, unsigned terms = 40) {
    if (x <= 0) throw std::domain_error("log of nonpositive rational");
    // range-reduce x = m * 2^e with m in [1, 2)
    Rat m = x;
    long e = 0;
    while (m >= 2) {
        m /= 2;
        ++e;
    }
    while (m < 1) {
        m *= 2;
        --e;
    }
    Interval lm = detail::ln_reduced(m, terms);
    Interval l2 = detail::ln2(terms);
    return lm + Interval(Rat(e)) * l2;
}

inline Interval log_enclosure(const Interval& x, unsigned terms = 40) {
    return Interval(log_enclosure(x.lo, terms).lo, log_enclosure(x.hi, terms).hi);
}

// ---- complex boxes ----------------------------------------------------------

struct ComplexBox {
    Interval re, im;

    ComplexBox() = default;
    ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool intersects(const ComplexBox& o) const { return re.intersects(o.re) && im.intersects(o.im); }
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// |z| enclosure over the box.
inline Interval modulus(const ComplexBox& z, unsigned bits = 64) {
    Interval m2 = z.re * z.re + z.im * z.im;
    return sqrt(Interval(std::max<Rat>(m2.lo, 0), m2.hi), bits);
}

}  // namespace schottky
