#pragma once

#include "schottky/matrix.hpp"
#include "schottky/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schottky {

// Integer polynomial, coefficients low-to-high, leading coefficient nonzero
// (the zero polynomial has an empty coefficient vector).
struct IntPolynomial {
    std::vector<Int> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& leading() const {
        if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs.back();
    }
    bool monic() const { return !is_zero() && leading() == 1; }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

inline IntPolynomial poly_from_rational_coeffs(const std::vector<Rat>& c) {
    Int lcm = 1;
    for (const Rat& q : c) {
        Int den = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<Int> out;
    out.reserve(c.size());
    for (const Rat& q : c) {
        Rat scaled = q * Rat(lcm);
        out.push_back(scaled.get_num());
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial char_poly(const Mat& m) {
    if (!is_integer_matrix(m)) throw std::invalid_argument("char_poly requires integer entries");
    std::vector<Rat> c = char_poly_rat(m);
    std::vector<Int> out;
    out.reserve(c.size());
    for (const Rat& q : c) {
        if (!is_integer(q)) throw std::logic_error("characteristic polynomial not integral");
        out.push_back(q.get_num());
    }
    return IntPolynomial(std::move(out));
}

inline IntPolynomial derivative(const IntPolynomial& p) {
    std::vector<Int> d;
    for (size_t i = 1; i < p.coeffs.size(); ++i) d.push_back(Int(static_cast<long>(i)) * p.coeffs[i]);
    return IntPolynomial(std::move(d));
}

inline Rat eval_poly(const IntPolynomial& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

inline Int content(const IntPolynomial& p) {
    Int g = 0;
    for (const Int& c : p.coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> out;
    out.reserve(p.coeffs.size());
    for (const Int& c : p.coeffs) out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

// Pseudo-remainder of a by b (degrees small here, growth is harmless).
inline IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Int la = a.leading(), lb = b.leading();
        std::vector<Int> next(a.coeffs.size());
        for (size_t i = 0; i < a.coeffs.size(); ++i) next[i] = a.coeffs[i] * lb;
        for (int i = 0; i <= db; ++i) next[static_cast<size_t>(i + shift)] -= la * b.coeffs[static_cast<size_t>(i)];
        a = IntPolynomial(std::move(next));
    }
    return a;
}

// gcd over Z (primitive, positive leading coefficient).
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact quotient, assuming divisibility over Q; result has rational->integer
// coefficients only when divisibility over Z holds (true for our callers).
inline IntPolynomial poly_div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Rat> rem(a.coeffs.size());
    for (size_t i = 0; i < a.coeffs.size(); ++i) rem[i] = Rat(a.coeffs[i]);
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) throw std::domain_error("exact division underflow");
    std::vector<Rat> q(static_cast<size_t>(dq) + 1);
    for (int k = dq; k >= 0; --k) {
        Rat c = rem[static_cast<size_t>(k + db)] / Rat(b.leading());
        q[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= c * Rat(b.coeffs[static_cast<size_t>(i)]);
    }
    for (const Rat& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return poly_from_rational_coeffs(q);
}

inline bool squarefree(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree undefined for zero polynomial");
    if (p.degree() == 0) return true;
    return poly_gcd(p, derivative(p)).degree() == 0;
}

// Yun decomposition: returns list of (factor, multiplicity) with factors
// squarefree, pairwise coprime, product of factor^mult = primitive part.
inline std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial f = primitive_part(p);
    if (f.degree() <= 0) return out;
    IntPolynomial df = derivative(f);
    IntPolynomial a = poly_gcd(f, df);
    IntPolynomial b = poly_div_exact(f, a);
    IntPolynomial c = poly_div_exact(df, a);
    int mult = 1;
    while (true) {
        std::vector<Int> dcoeffs;
        IntPolynomial db = derivative(b);
        std::vector<Int> diff(std::max(c.coeffs.size(), db.coeffs.size()), Int(0));
        for (size_t i = 0; i < c.coeffs.size(); ++i) diff[i] += c.coeffs[i];
        for (size_t i = 0; i < db.coeffs.size(); ++i) diff[i] -= db.coeffs[i];
        IntPolynomial d(std::move(diff));
        IntPolynomial factor = poly_gcd(b, d);
        if (factor.degree() > 0) out.emplace_back(factor, mult);
        if (factor.degree() == b.degree()) break;
        b = poly_div_exact(b, factor);
        if (b.degree() == 0) break;
        c = poly_div_exact(d, factor);
        ++mult;
    }
    return out;
}

// Cauchy bound: all roots satisfy |z| < 1 + max|a_i| / |a_n|.
inline Rat cauchy_root_bound(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    Int mx = 0;
    for (size_t i = 0; i + 1 < p.coeffs.size(); ++i) {
        Int a = abs(p.coeffs[i]);
        if (a > mx) mx = a;
    }
    return Rat(1) + Rat(mx) / Rat(abs(p.leading()));
}

// ---- Sturm sequences and real-root isolation --------------------------------

struct SturmChain {
    std::vector<IntPolynomial> seq;

    // Exact rational Sturm remainders, scaled to primitive integer
    // polynomials with the sign kept. Degrees here are tiny, so this is
    // cheap and avoids pseudo-remainder sign conventions entirely.
    explicit SturmChain(const IntPolynomial& p) {
        std::vector<std::vector<Rat>> rs;
        auto to_rat = [](const IntPolynomial& q) {
            std::vector<Rat> v;
            v.reserve(q.coeffs.size());
            for (const Int& c : q.coeffs) v.emplace_back(c);
            return v;
        };
        auto deg = [](const std::vector<Rat>& v) { return static_cast<int>(v.size()) - 1; };
        auto trim = [](std::vector<Rat>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        rs.push_back(to_rat(primitive_part(p)));
        rs.push_back(to_rat(primitive_part(derivative(p))));
        trim(rs[0]);
        trim(rs[1]);
        while (rs.size() < 64) {
            const std::vector<Rat>& a = rs[rs.size() - 2];
            const std::vector<Rat>& b = rs.back();
            if (b.empty()) break;
            std::vector<Rat> r = a;
            while (static_cast<int>(r.size()) - 1 >= deg(b) && !r.empty()) {
                Rat c = r.back() / b.back();
                int shift = static_cast<int>(r.size()) - static_cast<int>(b.size());
                for (size_t i = 0; i < b.size(); ++i) r[static_cast<size_t>(shift) + i] -= c * b[i];
                trim(r);
                if (r.empty()) break;
            }
            for (Rat& c : r) c = -c;
            trim(r);
            if (r.empty()) break;
            rs.push_back(std::move(r));
            if (deg(rs.back()) == 0) break;
        }
        seq.clear();
        for (const auto& v : rs) {
            std::vector<Rat> vv = v;
            seq.push_back(primitive_part_signed(vv));
        }
    }

    static IntPolynomial primitive_part_signed(const std::vector<Rat>& v) {
        // scale by positive lcm of denominators / gcd of numerators
        Int lcm = 1;
        for (const Rat& q : v) {
            Int den = q.get_den(), g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> w;
        w.reserve(v.size());
        for (const Rat& q : v) w.push_back(Rat(q * Rat(lcm)).get_num());
        Int g = 0;
        for (const Int& c : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g != 0)
            for (Int& c : w) c /= g;
        return IntPolynomial(std::move(w));
    }

    // Number of sign changes of the chain at x.
    int variations(const Rat& x) const {
        int count = 0, prev = 0;
        for (const IntPolynomial& q : seq) {
            int s = sign(eval_poly(q, x));
            if (s != 0) {
                if (prev != 0 && s != prev) ++count;
                prev = s;
            }
        }
        return count;
    }

    // Number of distinct real roots in (a, b], requires p(a) != 0 and p(b) != 0
    // for the textbook statement; we only call it off roots.
    int count_roots(const Rat& a, const Rat& b) const { return variations(a) - variations(b); }
};

struct RealRootInterval {
    Rat lo, hi;  // open-at-lo, closed-at-hi bracketing from Sturm counts; after
                 // refinement both endpoints are non-roots with a sign change
};

// Isolating intervals for all distinct real roots of a squarefree p, each
// refined to width <= tol. Endpoints are never roots (we nudge rationals that
// happen to hit one). Deterministic.
inline std::vector<RealRootInterval> isolate_real_roots(const IntPolynomial& p, const Rat& tol) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain chain(p);
    Rat bound = cauchy_root_bound(p);
    Rat lo = -bound, hi = bound;
    // make sure endpoints are not roots (Cauchy bound is strict, so they are not)
    std::vector<RealRootInterval> out;
    struct Item {
        Rat lo, hi;
        int count;
    };
    std::vector<Item> stack;
    int total = chain.count_roots(lo, hi);
    if (total > 0) stack.push_back({lo, hi, total});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 1 && it.hi - it.lo <= tol) {
            out.push_back({it.lo, it.hi});
            continue;
        }
        Rat mid = (it.lo + it.hi) / 2;
        if (eval_poly(p, mid) == 0) {
            // nudge: a rational root hit exactly; shift the split point
            mid = (it.lo + 2 * it.hi) / 3;
            if (eval_poly(p, mid) == 0) mid = (2 * it.lo + it.hi) / 3;
            if (eval_poly(p, mid) == 0) throw std::logic_error("could not find a non-root split point");
        }
        int left = chain.count_roots(it.lo, mid);
        int right = it.count - left;
        if (right > 0) stack.push_back({mid, it.hi, right});
        if (left > 0) stack.push_back({it.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RealRootInterval& a, const RealRootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Continue bisecting one isolating interval of squarefree p until width <= tol.
inline RealRootInterval refine_real_root(const IntPolynomial& p, RealRootInterval iv, const Rat& tol) {
    int slo = sign(eval_poly(p, iv.lo));
    int shi = sign(eval_poly(p, iv.hi));
    if (slo == 0 || shi == 0 || slo == shi) {
        // fall back to Sturm counting within the interval
        SturmChain chain(p);
        while (iv.hi - iv.lo > tol) {
            Rat mid = (iv.lo + iv.hi) / 2;
            if (eval_poly(p, mid) == 0) mid = (iv.lo + 2 * iv.hi) / 3;
            if (chain.count_roots(iv.lo, mid) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        return iv;
    }
    while (iv.hi - iv.lo > tol) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = sign(eval_poly(p, mid));
        if (sm == 0) {
            mid = (iv.lo + 2 * iv.hi) / 3;
            sm = sign(eval_poly(p, mid));
            if (sm == 0) throw std::logic_error("refinement hit a rational root twice");
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

}  // namespace schottky
