#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace schottky {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
    Int z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
    return z;
}

// Accepts "p" or "p/q", decimal digits only.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() <= 0) throw std::invalid_argument("nonpositive denominator: " + s);
    return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int sign(const Rat& q) { return sgn(q); }

// Largest power-of-two denominator approximation |x - d| <= 2^-bits, used to
// keep iterative refinements from accumulating huge denominators.
inline Rat round_dyadic(const Rat& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Rat scaled = x * Rat(scale);
    Int rounded;
    // round to nearest
    Int num = scaled.get_num(), den = scaled.get_den();
    Int twice_num = 2 * num + den;  // floor((num/den) + 1/2) = floor((2num+den)/(2den))
    mpz_fdiv_q(rounded.get_mpz_t(), twice_num.get_mpz_t(), Int(2 * den).get_mpz_t());
    Rat r(rounded, scale);
    r.canonicalize();
    return r;
}

}  // namespace schottky

namespace Eigen {

template <>
struct NumTraits<schottky::Rat> : GenericNumTraits<schottky::Rat> {
    typedef schottky::Rat Real;
    typedef schottky::Rat NonInteger;
    typedef schottky::Rat Nested;
    typedef schottky::Rat Literal;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100,
    };
};

}  // namespace Eigen
