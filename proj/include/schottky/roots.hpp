#pragma once

#include "schottky/interval.hpp"
#include "schottky/polynomial.hpp"

#include <string>
#include <vector>

namespace schottky {

struct Precision {
    unsigned start_bits = 64;
    unsigned cap_bits = 4096;
};

// An isolated single root of a squarefree integer polynomial. Real roots have
// im = [0,0] and exact rational bracketing; nonreal roots live in a disk
// certified by Pellet's theorem, stored with its circumscribed box.
struct RootCluster {
    ComplexBox box;
    Interval modulus;
    bool real = false;
};

enum class IsolationStatus {
    Separated,      // clusters valid, extreme moduli strictly separated
    TiedExtremes,   // certified: no strict extreme-modulus separation exists
    Undecided,      // precision cap reached without a decision
};

struct RootIsolation {
    IsolationStatus status = IsolationStatus::Undecided;
    std::vector<RootCluster> clusters;  // valid enclosures whenever nonempty
    int max_index = -1;                 // index of the strict max-modulus cluster
    int min_index = -1;                 // index of the strict min-modulus cluster
    unsigned precision_bits = 0;        // bits at which the run stopped
    std::string note;
};

// Isolates all complex roots of a squarefree p (degree <= degree_cap) into
// pairwise disjoint single-root clusters and refines until the extreme-modulus
// clusters separate strictly, or the precision cap is hit. Deterministic.
RootIsolation isolate_roots(const IntPolynomial& p, Precision prec = {}, int degree_cap = 8);

// Re-run at a higher precision, keeping every returned cluster inside the one
// it refines (falls back to the previous cluster when no tightening holds).
RootIsolation refine_isolation(const IntPolynomial& p, const RootIsolation& previous, Precision prec);

}  // namespace schottky
