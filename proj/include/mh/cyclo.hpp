#ifndef MH_CYCLO_HPP
#define MH_CYCLO_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mh/numtheory.hpp"

namespace mh {

// Data for Q(zeta_M) in the power basis mod Phi_M.
struct CycloField {
    int M = 1;
    int phi = 1;
    std::vector<i64> Phi;               // coefficients, low degree first, monic
    std::vector<std::vector<i64>> red;  // red[j] = x^j mod Phi_M, length phi

    static const CycloField& get(int M);
};

std::vector<i64> cyclotomic_polynomial(int M);

// Exact element of Q(zeta_M): (sum c_i zeta^i) / den.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long v);  // NOLINT: integers embed implicitly
    static Cyclo rational(const mpq_class& q);
    static Cyclo root(int M, i64 e);  // zeta_M^e
    static Cyclo from_coeffs(int M, const std::vector<mpq_class>& coeffs);

    int modulus() const { return M_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()
    // coefficients in the power basis of Q(zeta_modulus()), length phi
    std::vector<mpq_class> coeffs() const;

    Cyclo lifted(int L) const;  // same value, stored in Q(zeta_L); modulus() must divide L
    Cyclo conjugate(i64 k) const;  // zeta -> zeta^k, gcd(k, M) = 1
    Cyclo inverse() const;
    Cyclo pow(i64 e) const;
    // e with *this == zeta_L^e for L = lcm(modulus(), L), if any
    std::optional<i64> root_exponent(int L) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // "1 - 2*z + 1/3*z^2" with z = zeta_M
    std::string str() const;
    // parses integers, rationals, "z", "z^k", "-z^k" relative to zeta_M
    static Cyclo parse(const std::string& s, int M);

private:
    void normalize();
    void align(Cyclo& o);  // bring both into a common field

    int M_ = 1;
    std::vector<mpz_class> c_;  // empty means zero
    mpz_class den_ = 1;
};

}  // namespace mh

#endif
