#ifndef MH_NUMTHEORY_HPP
#define MH_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mh {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm(i64 a, i64 b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

// returns g = gcd(a,b) >= 0 and s,t with s*a + t*b = g
inline i64 xgcd(i64 a, i64 b, i64& s, i64& t) {
    i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    s = s0; t = t0;
    return r0;
}

inline i64 inv_mod(i64 a, i64 m) {
    i64 s, t;
    if (xgcd(mod(a, m), m, s, t) != 1) throw std::domain_error("inv_mod: not a unit");
    return mod(s, m);
}

// order of a in Z/m
inline i64 additive_order(i64 a, i64 m) { return m / gcd(mod(a, m), m); }

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 t = 1; t <= n; ++t)
        if (n % t == 0) out.push_back(t);
    return out;
}

}  // namespace mh

#endif
