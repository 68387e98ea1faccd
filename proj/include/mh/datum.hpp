#ifndef MH_DATUM_HPP
#define MH_DATUM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mh/cohomology.hpp"
#include "mh/cyclo.hpp"
#include "mh/groups.hpp"

namespace mh {

struct DatumError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (G, g, chi, mu) with d = o(chi(g)), n = o(g), m = o(chi).
struct GroupDatum {
    GroupPtr G;
    int g = 0;
    Character chi;
    Cyclo mu;
    i64 d = 0, n = 0, m = 0;

    const FiniteGroup& group() const { return *G; }
    int gd() const { return G->pow(g, d); }  // g^d
    Cyclo chi_value(int h) const { return Cyclo::root((int)chi.M, chi(h)); }
    // chi(h) as an exponent in Z/L, chi.M | L
    i64 chi_exp(int h, i64 L) const { return chi(h) * (L / chi.M) % L; }
    bool chi_pow_trivial(i64 e) const;  // chi^e == 1
};

// Validates every invariant; the message names the one that failed.
GroupDatum make_datum(GroupPtr G, int g, const Character& chi, const Cyclo& mu);

enum class DatumType { I = 1, II, III, IV, V, VI };
std::string type_name(DatumType t);

struct TypeResult {
    DatumType type = DatumType::I;
    // type V: tau with tau(g^d, h) tau(h, g^d)^{-1} = chi(h)^d
    std::optional<Cocycle> witness;
    i64 search_modulus = 0;    // 0 when no search was needed
    std::string search_engine;  // "bicharacter" or "cochain"
};

// M (optional) is folded into the search modulus.
TypeResult classify_type(const GroupDatum& D, i64 M = 0);

// Does sigma satisfy sigma(g^d, h) sigma(h, g^d)^{-1} = chi(h)^d for all h?
bool is_symmetric_extension_witness(const GroupDatum& D, const Cocycle& s);

// chi'(h) = sigma(g, h)^{-1} sigma(h, g) chi(h); requires type III or IV
GroupDatum companion_datum(const GroupDatum& D, const Cocycle& s);
// same chi' with mu = -a (sigma(g,g)...sigma(g,g^{d-1}))^{-1}; type III, sigma in Z^2_{g^d}, a != 0
GroupDatum companion_datum_scalar(const GroupDatum& D, const Cocycle& s, const Cyclo& a);
// chi' exponents without validation (modulus lcm(chi.M, s.M))
Character twisted_character(const GroupDatum& D, const Cocycle& s);

struct DatumIsomorphism {
    std::vector<int> f;  // element map G1 -> G2
    Cyclo delta;         // mu1 = delta^d mu2
};
// delta is searched in mu_L (L = lcm of the data's moduli and `root_modulus`) plus `samples`.
std::optional<DatumIsomorphism> datum_isomorphic(const GroupDatum& D1, const GroupDatum& D2,
                                                 i64 root_modulus = 0, const std::vector<Cyclo>& samples = {});

// type V with witness -> (G, g, chi_sigma), type III
GroupDatum reduce_type_v(const GroupDatum& D, const Cocycle& witness);
// type VI -> (G, g, chi), type III
GroupDatum reduce_type_vi(const GroupDatum& D);

// default coefficient modulus: lcm(exp(G), modulus of chi)
i64 default_modulus(const GroupDatum& D);

}  // namespace mh

#endif
