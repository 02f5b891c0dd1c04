#pragma once

#include <cstdint>
#include <string>

namespace dpt {

/// Integer translation vector of the fundamental domain: du counts steps in
/// the u (longitude) direction, dv steps in the v (meridian) direction.
/// Edge wraps, component homology classes, crossing offsets and lattice
/// generators are all WrapVectors.
struct WrapVector {
    std::int64_t du = 0;
    std::int64_t dv = 0;

    constexpr bool is_zero() const { return du == 0 && dv == 0; }

    friend constexpr WrapVector operator+(WrapVector a, WrapVector b) {
        return {a.du + b.du, a.dv + b.dv};
    }
    friend constexpr WrapVector operator-(WrapVector a, WrapVector b) {
        return {a.du - b.du, a.dv - b.dv};
    }
    constexpr WrapVector operator-() const { return {-du, -dv}; }
    friend constexpr WrapVector operator*(std::int64_t k, WrapVector v) {
        return {k * v.du, k * v.dv};
    }
    WrapVector& operator+=(WrapVector o) { du += o.du; dv += o.dv; return *this; }
    WrapVector& operator-=(WrapVector o) { du -= o.du; dv -= o.dv; return *this; }

    friend constexpr bool operator==(WrapVector a, WrapVector b) {
        return a.du == b.du && a.dv == b.dv;
    }
    friend constexpr bool operator!=(WrapVector a, WrapVector b) { return !(a == b); }
    friend constexpr bool operator<(WrapVector a, WrapVector b) {
        if (a.du != b.du) return a.du < b.du;
        return a.dv < b.dv;
    }
};

inline std::string to_string(WrapVector v) {
    return "(" + std::to_string(v.du) + "," + std::to_string(v.dv) + ")";
}

/// Identifies v with -v and picks the representative with du > 0,
/// or du == 0 and dv >= 0.  (0,0) is its own representative.
inline WrapVector sign_normalize(WrapVector v) {
    if (v.du < 0 || (v.du == 0 && v.dv < 0)) return -v;
    return v;
}

} // namespace dpt
