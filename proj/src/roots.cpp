#include "schottky/roots.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace schottky {

namespace {

struct CRat {
    Rat re, im;

    CRat() : re(0), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator*(const CRat& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    CRat operator/(const CRat& o) const {
        Rat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Rat norm2() const { return re * re + im * im; }
};

CRat round_dyadic(const CRat& z, unsigned bits) {
    return {schottky::round_dyadic(z.re, bits), schottky::round_dyadic(z.im, bits)};
}

CRat eval_poly_c(const IntPolynomial& p, const CRat& z) {
    CRat acc;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * z;
        acc.re += Rat(*it);
    }
    return acc;
}

// Taylor shift: coefficients of p(c + y), exact Gaussian-rational arithmetic.
std::vector<CRat> taylor_shift(const IntPolynomial& p, const CRat& c) {
    int n = p.degree();
    std::vector<CRat> q(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) q[static_cast<size_t>(i)] = CRat(Rat(p.coeffs[static_cast<size_t>(i)]), Rat(0));
    // repeated synthetic division by (y - 0) after substitution x = c + y:
    // classic Horner-based shift
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) q[static_cast<size_t>(j)] = q[static_cast<size_t>(j)] + c * q[static_cast<size_t>(j) + 1];
    return q;
}

// Pellet test with k = 1: exactly one root of p in the open disk |x - c| < r.
bool pellet_one_root(const IntPolynomial& p, const CRat& c, const Rat& r, unsigned bits) {
    std::vector<CRat> q = taylor_shift(p, c);
    if (q.size() < 2) return false;
    Rat lhs = sqrt_lower(q[1].norm2(), bits) * r;
    Rat rhs = sqrt_upper(q[0].norm2(), bits);
    Rat rk = r;
    for (size_t k = 2; k < q.size(); ++k) {
        rk *= r;
        rhs += sqrt_upper(q[k].norm2(), bits) * rk;
    }
    return lhs > rhs;
}

// Durand-Kerner sweep at a fixed dyadic precision; returns approximations.
std::vector<CRat> durand_kerner(const IntPolynomial& p, unsigned bits, std::vector<CRat> start) {
    const int n = p.degree();
    std::vector<CRat> z = std::move(start);
    if (static_cast<int>(z.size()) != n) {
        z.clear();
        Rat radius = cauchy_root_bound(p);
        // rational points near the unit circle via exact Pythagorean rotation
        CRat rot(Rat(3, 5), Rat(4, 5));
        CRat dir(Rat(4, 5), Rat(3, 5));
        for (int i = 0; i < n; ++i) {
            Rat scale = radius * Rat(100 + 7 * i, 100);
            z.push_back({dir.re * scale, dir.im * scale});
            dir = dir * rot;
        }
    }
    Rat lead(p.leading());
    const int max_sweeps = 60 + 12 * n;
    Rat target = Rat(1) / Rat(Int(1) << (bits / 2));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Rat worst(0);
        for (int i = 0; i < n; ++i) {
            CRat num = eval_poly_c(p, z[static_cast<size_t>(i)]);
            num.re /= lead;
            num.im /= lead;
            CRat den(Rat(1), Rat(0));
            for (int j = 0; j < n; ++j)
                if (j != i) den = den * (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            if (den.norm2() == 0) {
                // collision: nudge deterministically
                z[static_cast<size_t>(i)].re += Rat(1, 1000 + i);
                continue;
            }
            CRat delta = num / den;
            z[static_cast<size_t>(i)] = round_dyadic(z[static_cast<size_t>(i)] - delta, bits);
            Rat dn = delta.norm2();
            if (dn > worst) worst = dn;
        }
        if (worst < target * target) break;
    }
    return z;
}

Interval real_interval_modulus(const Interval& iv) {
    if (iv.lo >= 0) return iv;
    if (iv.hi <= 0) return -iv;
    return Interval(Rat(0), std::max<Rat>(-iv.lo, iv.hi));
}

bool boxes_disjoint(const ComplexBox& a, const ComplexBox& b) { return !a.intersects(b); }

}  // namespace

RootIsolation isolate_roots(const IntPolynomial& p, Precision prec, int degree_cap) {
    RootIsolation result;
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.degree() > degree_cap) throw std::invalid_argument("degree exceeds cap");
    if (!squarefree(p)) throw std::invalid_argument("polynomial is not squarefree");

    IntPolynomial q = p;
    bool zero_root = false;
    if (!q.coeffs.empty() && q.coeffs[0] == 0) {
        zero_root = true;  // simple (p squarefree), factor x out
        q.coeffs.erase(q.coeffs.begin());
        q.normalize();
    }

    const int n = q.degree();
    const int total = p.degree();

    std::vector<CRat> dk_state;
    for (unsigned bits = prec.start_bits;; bits *= 2) {
        bool last = bits >= prec.cap_bits;
        result.precision_bits = bits;
        Rat tol = Rat(1) / Rat(Int(1) << std::min(bits, 512u));

        std::vector<RootCluster> clusters;
        bool ok = true;

        if (zero_root) {
            RootCluster zc;
            zc.box = ComplexBox(Interval(Rat(0)), Interval(Rat(0)));
            zc.modulus = Interval(Rat(0));
            zc.real = true;
            clusters.push_back(zc);
        }

        // real roots: exact Sturm isolation + bisection refinement
        std::vector<RealRootInterval> rr = n > 0 ? isolate_real_roots(q, tol) : std::vector<RealRootInterval>{};
        for (const auto& iv : rr) {
            RootCluster c;
            c.box = ComplexBox(Interval(iv.lo, iv.hi), Interval(Rat(0)));
            c.modulus = real_interval_modulus(Interval(iv.lo, iv.hi));
            c.real = true;
            clusters.push_back(c);
        }

        const int n_complex = n - static_cast<int>(rr.size());
        if (n_complex % 2 != 0) throw std::logic_error("nonreal root count must be even");

        if (n_complex > 0) {
            dk_state = durand_kerner(q, bits, std::move(dk_state));
            // candidates in the upper half plane, farthest from the axis first
            std::vector<size_t> idx(dk_state.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                if (dk_state[a].im != dk_state[b].im) return dk_state[a].im > dk_state[b].im;
                return dk_state[a].re < dk_state[b].re;
            });
            std::vector<CRat> upper;
            for (size_t i = 0; i < static_cast<size_t>(n_complex / 2) && i < idx.size(); ++i)
                if (dk_state[idx[i]].im > 0) upper.push_back(dk_state[idx[i]]);
            if (static_cast<int>(upper.size()) != n_complex / 2) ok = false;

            // certify each upper candidate by a Pellet disk kept off the axis
            Rat base_r = Rat(1) / Rat(Int(1) << (bits / 4));
            std::vector<std::pair<CRat, Rat>> disks;
            for (const CRat& c0 : upper) {
                if (!ok) break;
                CRat c = round_dyadic(c0, bits);
                bool found = false;
                Rat r = base_r;
                for (int attempt = 0; attempt < 8 && !found; ++attempt, r *= 16) {
                    if (r >= c.im) break;  // disk must stay strictly above the axis
                    if (pellet_one_root(q, c, r, std::min(bits, 256u))) {
                        disks.emplace_back(c, r);
                        found = true;
                    }
                }
                if (!found) ok = false;
            }

            if (ok) {
                for (const auto& [c, r] : disks) {
                    RootCluster up;
                    up.box = ComplexBox(Interval(c.re - r, c.re + r), Interval(c.im - r, c.im + r));
                    Interval m2(std::max<Rat>(Rat(0), c.norm2()), c.norm2());
                    Interval cm = sqrt(m2, std::min(bits, 256u));
                    up.modulus = Interval(std::max<Rat>(Rat(0), cm.lo - r), cm.hi + r);
                    up.real = false;
                    clusters.push_back(up);
                    RootCluster down = up;  // conjugate root
                    down.box.im = Interval(-(c.im + r), -(c.im - r));
                    clusters.push_back(down);
                }
            }
        }

        if (ok && static_cast<int>(clusters.size()) != total) ok = false;

        // pairwise box disjointness (real boxes are disjoint by construction,
        // but the check is cheap and total)
        if (ok) {
            for (size_t i = 0; i < clusters.size() && ok; ++i)
                for (size_t j = i + 1; j < clusters.size() && ok; ++j)
                    if (!boxes_disjoint(clusters[i].box, clusters[j].box)) ok = false;
        }

        if (ok) {
            result.clusters = clusters;

            // strict modulus separation of the extremes
            int maxi = 0, mini = 0;
            for (size_t i = 1; i < clusters.size(); ++i) {
                if (clusters[i].modulus.lo > clusters[static_cast<size_t>(maxi)].modulus.lo) maxi = static_cast<int>(i);
                if (clusters[i].modulus.hi < clusters[static_cast<size_t>(mini)].modulus.hi) mini = static_cast<int>(i);
            }
            bool max_sep = true, min_sep = true;
            for (size_t i = 0; i < clusters.size(); ++i) {
                if (static_cast<int>(i) != maxi && clusters[i].modulus.hi >= clusters[static_cast<size_t>(maxi)].modulus.lo)
                    max_sep = false;
                if (static_cast<int>(i) != mini && clusters[i].modulus.lo <= clusters[static_cast<size_t>(mini)].modulus.hi)
                    min_sep = false;
            }
            if (max_sep && min_sep) {
                result.status = IsolationStatus::Separated;
                result.max_index = maxi;
                result.min_index = mini;
                return result;
            }

            // certified ties: a nonreal cluster shares its modulus with its
            // conjugate exactly, so if every real cluster is strictly beaten
            // in modulus by some nonreal cluster, no strict max exists.
            if (!clusters.empty()) {
                bool some_real = false;
                for (const auto& c : clusters) some_real |= c.real;
                if (!some_real) {
                    result.status = IsolationStatus::TiedExtremes;
                    result.note = "no real roots, extreme moduli are attained by conjugate pairs";
                    return result;
                }
                // max (resp. min) certified tied if a nonreal cluster's modulus
                // strictly dominates (resp. is dominated by) all real clusters
                // and all other nonreal pairs
                for (size_t i = 0; i < clusters.size(); ++i) {
                    if (clusters[i].real) continue;
                    bool dominates = true, dominated = true;
                    for (size_t j = 0; j < clusters.size(); ++j) {
                        if (j == i) continue;
                        bool conj = !clusters[j].real && clusters[j].modulus.lo == clusters[i].modulus.lo &&
                                    clusters[j].modulus.hi == clusters[i].modulus.hi &&
                                    clusters[j].box.re.lo == clusters[i].box.re.lo;
                        if (conj) continue;
                        if (clusters[j].modulus.hi >= clusters[i].modulus.lo) dominates = false;
                        if (clusters[j].modulus.lo <= clusters[i].modulus.hi) dominated = false;
                    }
                    if (dominates) {
                        result.status = IsolationStatus::TiedExtremes;
                        result.note = "maximal modulus attained by a conjugate pair";
                        return result;
                    }
                    if (dominated) {
                        result.status = IsolationStatus::TiedExtremes;
                        result.note = "minimal modulus attained by a conjugate pair";
                        return result;
                    }
                }
            }
        }

        if (last) {
            result.status = IsolationStatus::Undecided;
            result.note = "precision cap reached at " + std::to_string(bits) + " bits";
            return result;
        }
    }
}

RootIsolation refine_isolation(const IntPolynomial& p, const RootIsolation& previous, Precision prec) {
    RootIsolation next = isolate_roots(p, prec);
    if (next.clusters.size() != previous.clusters.size()) return next;
    // keep enclosures nested: fall back to the previous cluster when the
    // rerun did not land inside it
    for (size_t i = 0; i < next.clusters.size(); ++i) {
        // match by nearest previous cluster
        size_t best = 0;
        Rat bestd(-1);
        for (size_t j = 0; j < previous.clusters.size(); ++j) {
            Rat d = abs_rat(next.clusters[i].box.re.mid() - previous.clusters[j].box.re.mid()) +
                    abs_rat(next.clusters[i].box.im.mid() - previous.clusters[j].box.im.mid());
            if (bestd < 0 || d < bestd) {
                bestd = d;
                best = j;
            }
        }
        const RootCluster& prev = previous.clusters[best];
        RootCluster& cur = next.clusters[i];
        bool nested = prev.box.re.contains(cur.box.re) && prev.box.im.contains(cur.box.im);
        if (!nested) {
            cur = prev;
        } else {
            cur.modulus = Interval(std::max(cur.modulus.lo, prev.modulus.lo), std::min(cur.modulus.hi, prev.modulus.hi));
        }
    }
    return next;
}

}  // namespace schottky
