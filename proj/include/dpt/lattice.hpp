#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpt/wrap.hpp"

namespace dpt {

/// 2x2 integer matrix [[a, b], [c, d]] acting on WrapVectors as columns:
/// M * (du, dv) = (a*du + b*dv, c*du + d*dv).
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    constexpr std::int64_t det() const { return a * d - b * c; }

    constexpr WrapVector apply(WrapVector v) const {
        return {a * v.du + b * v.dv, c * v.du + d * v.dv};
    }

    friend constexpr Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend constexpr bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    static constexpr Mat2 identity() { return {}; }

    /// Inverse of a unimodular matrix (|det| = 1).
    Mat2 unimodular_inverse() const {
        const std::int64_t dt = det();
        if (dt != 1 && dt != -1)
            throw std::invalid_argument("matrix is not unimodular, det = " + std::to_string(dt));
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    /// Solves M * x = v over the integers.  Throws if v is not in M's
    /// column image (only possible when |det| > 1).
    WrapVector solve(WrapVector v) const {
        const std::int64_t dt = det();
        if (dt == 0) throw std::invalid_argument("singular matrix");
        const std::int64_t x = d * v.du - b * v.dv;
        const std::int64_t y = -c * v.du + a * v.dv;
        if (x % dt != 0 || y % dt != 0)
            throw std::invalid_argument("vector not in lattice image");
        return {x / dt, y / dt};
    }
};

inline std::string to_string(const Mat2& m) {
    return "[" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" +
           std::to_string(m.c) + "," + std::to_string(m.d) + "]";
}

/// Hermite basis of the subgroup of Z^2 spanned by a set of vectors.
/// rank 0: no generators.  rank 1: g1 is the unique sign-normalized
/// generator of the line lattice.  rank 2: column-style lower-triangular
/// form g1 = (d1, e), g2 = (0, d2) with d1 > 0, d2 > 0, 0 <= e < d2.
struct HermiteBasis {
    int rank = 0;
    WrapVector g1{};
    WrapVector g2{};

    std::vector<WrapVector> generators() const {
        std::vector<WrapVector> out;
        if (rank >= 1) out.push_back(g1);
        if (rank >= 2) out.push_back(g2);
        return out;
    }
};

namespace detail {

// Extended gcd: returns g = gcd(x, y) >= 0 and coefficients with s*x + t*y = g.
inline std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
    if (y == 0) {
        s = (x < 0) ? -1 : 1;
        t = 0;
        return x < 0 ? -x : x;
    }
    std::int64_t s1, t1;
    std::int64_t g = ext_gcd(y, x % y, s1, t1);
    s = t1;
    t = s1 - (x / y) * t1;
    return g;
}

inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

} // namespace detail

inline HermiteBasis hermite_basis(std::span<const WrapVector> vectors) {
    // r1 carries the running generator with nonzero du; r2 the vertical part.
    WrapVector r1{0, 0};
    std::int64_t d2 = 0;
    for (WrapVector v : vectors) {
        if (v.is_zero()) continue;
        if (v.du != 0) {
            if (r1.du == 0) {
                std::swap(r1, v);
                if (v.is_zero()) continue;
            }
            if (v.du != 0) {
                std::int64_t s, t;
                const std::int64_t g = detail::ext_gcd(r1.du, v.du, s, t);
                const WrapVector combined{g, s * r1.dv + t * v.dv};
                const WrapVector reduced = (r1.du / g) * v - (v.du / g) * r1;
                r1 = combined;
                v = reduced; // du == 0 now
            }
        }
        if (v.dv != 0) d2 = std::gcd(d2, v.dv < 0 ? -v.dv : v.dv);
    }
    HermiteBasis basis;
    if (r1.du == 0 && r1.dv != 0) {
        // r1 degenerated to a vertical vector.
        d2 = std::gcd(d2, r1.dv < 0 ? -r1.dv : r1.dv);
        r1 = {0, 0};
    }
    if (r1.du != 0 && d2 != 0) {
        basis.rank = 2;
        if (r1.du < 0) r1 = -r1;
        r1.dv -= detail::floor_div(r1.dv, d2) * d2;
        basis.g1 = r1;
        basis.g2 = {0, d2};
    } else if (r1.du != 0) {
        basis.rank = 1;
        basis.g1 = sign_normalize(r1);
    } else if (d2 != 0) {
        basis.rank = 1;
        basis.g1 = {0, d2};
    }
    return basis;
}

inline HermiteBasis hermite_basis(const std::vector<WrapVector>& vectors) {
    return hermite_basis(std::span<const WrapVector>(vectors));
}

/// Index of the full-rank sublattice spanned by the given vectors, i.e.
/// |Z^2 / span|.  Throws if the span has rank < 2.
inline std::int64_t sublattice_index(std::span<const WrapVector> vectors) {
    HermiteBasis h = hermite_basis(vectors);
    if (h.rank != 2) throw std::invalid_argument("sublattice has rank < 2");
    return h.g1.du * h.g2.dv;
}

/// Canonical coset representatives of Z^2 / L*Z^2 where the columns of L
/// span the sublattice.  Uses the Hermite basis {(d1,e),(0,d2)}; the reps
/// are (x, y) with 0 <= x < d1, 0 <= y < d2, in lexicographic order.
class CosetSpace {
public:
    explicit CosetSpace(const Mat2& l) : l_(l) {
        if (l.det() == 0) throw std::invalid_argument("cover lattice is singular");
        const WrapVector cols[2] = {{l.a, l.c}, {l.b, l.d}};
        HermiteBasis h = hermite_basis(std::span<const WrapVector>(cols, 2));
        assert(h.rank == 2);
        d1_ = h.g1.du;
        e_ = h.g1.dv;
        d2_ = h.g2.dv;
    }

    std::int64_t size() const { return d1_ * d2_; }

    std::vector<WrapVector> representatives() const {
        std::vector<WrapVector> reps;
        reps.reserve(static_cast<std::size_t>(size()));
        for (std::int64_t x = 0; x < d1_; ++x)
            for (std::int64_t y = 0; y < d2_; ++y) reps.push_back({x, y});
        return reps;
    }

    /// Canonical representative of v modulo the sublattice.
    WrapVector reduce(WrapVector v) const {
        const std::int64_t q1 = detail::floor_div(v.du, d1_);
        v.du -= q1 * d1_;
        v.dv -= q1 * e_;
        const std::int64_t q2 = detail::floor_div(v.dv, d2_);
        v.dv -= q2 * d2_;
        return v;
    }

    /// Integer coordinates q with v = reduce(v) + L*q.
    WrapVector quotient(WrapVector v) const { return l_.solve(v - reduce(v)); }

private:
    Mat2 l_;
    std::int64_t d1_ = 1, e_ = 0, d2_ = 1;
};

/// Canonical representative of d modulo the subgroup spanned by gens.
/// Rank 2 reduces through the Hermite basis; rank 1 reduces the projection
/// onto the generator into [0, |g|^2).
inline WrapVector reduce_mod_lattice(WrapVector d, std::span<const WrapVector> gens) {
    const HermiteBasis h = hermite_basis(gens);
    if (h.rank == 0) return d;
    if (h.rank == 2) {
        const std::int64_t q1 = detail::floor_div(d.du, h.g1.du);
        d = d - q1 * h.g1;
        const std::int64_t q2 = detail::floor_div(d.dv, h.g2.dv);
        d = d - q2 * h.g2;
        return d;
    }
    const WrapVector g = h.g1;
    const std::int64_t gg = g.du * g.du + g.dv * g.dv;
    const std::int64_t k = detail::floor_div(d.du * g.du + d.dv * g.dv, gg);
    return d - k * g;
}

inline WrapVector reduce_mod_lattice(WrapVector d, WrapVector h1, WrapVector h2) {
    const WrapVector gens[2] = {h1, h2};
    return reduce_mod_lattice(d, std::span<const WrapVector>(gens, 2));
}

/// All Hermite-form matrices [[d1, 0], [e, d2]] ... enumerated as column
/// bases [[d1,0],[e,d2]] with d1*d2 = n, 0 <= e < d2, for 1 <= det <= max_det.
/// One representative per sublattice of index <= max_det.
inline std::vector<Mat2> hermite_covers_up_to(std::int64_t max_det) {
    std::vector<Mat2> out;
    for (std::int64_t n = 1; n <= max_det; ++n)
        for (std::int64_t d1 = 1; d1 <= n; ++d1) {
            if (n % d1 != 0) continue;
            const std::int64_t d2 = n / d1;
            for (std::int64_t e = 0; e < d2; ++e)
                out.push_back(Mat2{d1, 0, e, d2});
        }
    return out;
}

} // namespace dpt
