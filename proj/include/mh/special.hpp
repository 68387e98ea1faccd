#ifndef MH_SPECIAL_HPP
#define MH_SPECIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "mh/bigalois.hpp"
#include "mh/datum.hpp"

namespace mh {

// q = zeta_mod^exp
struct RootOfUnity {
    i64 exp = 0, mod = 1;
    i64 order() const;
    Cyclo value() const { return Cyclo::root((int)mod, exp); }
};

// (d, n, N, alpha, q): d | n | N, alpha | N/n, gcd(alpha, d) = 1, o(q) = Nd / (alpha n)
struct CyclicDatum {
    i64 d = 0, n = 0, N = 0, alpha = 1;
    RootOfUnity q;
};

// C_N = <z>, g = z^{N/n}, chi(z) = q; element z^k has index k
CyclicDatum make_cyclic_datum(i64 d, i64 n, i64 N, i64 alpha, RootOfUnity q);
GroupDatum realize(const CyclicDatum& c, const Cyclo& mu = Cyclo(0));
CyclicDatum cyclic_normal_form(const GroupDatum& D);
// the type read off from (d, n, N, alpha) alone
DatumType cyclic_type_from_table(const CyclicDatum& c);

// named data
GroupDatum taft(i64 N, RootOfUnity q);
// C_N = <z> = <g>, chi(z) = q^{o(q)/d}; type III, or VI when mu != 0
GroupDatum simple_pointed(RootOfUnity q, const Cyclo& mu, i64 d, i64 N);
GroupDatum generalized_taft(i64 N, i64 m, RootOfUnity q);

// {b in U(Z/N) : b = 1 mod n_i}; N = 1 gives {1}
std::vector<i64> unit_subgroup(i64 N, const std::vector<i64>& divisors);

// G = <g> x K with K given by its elements; element g^a k has p1 = a, p2 = index of k in K
struct Decomposition {
    GroupPtr K;                // relabelled: K index i is G element k_elems[i]
    std::vector<int> k_elems;  // k_elems[0] = 1
    std::vector<int> p1, p2;
    std::vector<int> k_index;  // G element -> K index or -1
    bool kernel_of_chi = false;
    GroupPtr p_group;
    int g = 0;
    int compose(i64 a, int k) const;  // g^a k_elems[k]
};
// a complement of <g> (abelian G), preferring Ker(chi) when it is one
std::optional<Decomposition> decompose(const GroupDatum& D);
// sigma restricted to K x K, in K indices
Cocycle restrict_to(const Decomposition& Dc, const Cocycle& s);
// Hom(K, mu_t) as exponent vectors in Z/M over K indices (t | M)
std::vector<std::vector<i64>> characters_into(const Decomposition& Dc, i64 t, i64 M);

// every k-dot factor becomes mu_M and k-dot/k-dot^t becomes Z/gcd(M, t)
struct ShapePrediction {
    std::string family;  // "cyclic", "decomposable type I", "decomposable", or "none"
    std::string reason;  // why no closed form applies
    DatumType type = DatumType::I;
    std::vector<std::vector<i64>> gal_branches;  // invariant factors, in the enumerate_galois branch order
    bool gal_scalar_factor = false;
    std::string gal_text, bigal_text;
    bool bigal_available = false;
    i64 bigal_aut_order = 0;             // |U(Z/N)[..]| or |Aut(K)|
    std::vector<i64> bigal_aut_units;    // cyclic: the U(Z/N)[..] elements, z -> z^b
    std::vector<i64> bigal_h_part;       // invariant factors of the abelian normal part
    i64 bigal_order = 0;                 // finite part
    bool bigal_scalar_factor = false;
    bool available() const { return family != "none"; }
};
ShapePrediction closed_form_predictions(const GroupDatum& D, i64 M);

struct PredictionCheck {
    bool gal_match = false, bigal_match = false;
    std::vector<std::vector<i64>> gal_computed;
    i64 bigal_computed_order = 0;
    int bigal_computed_aut = 0;
    std::vector<i64> bigal_computed_h;
    std::string detail;
    bool ok() const { return gal_match && bigal_match; }
};
// compares against enumerate_galois and the Gamma group; BiGal is skipped when no closed form exists
PredictionCheck check_predictions(const GroupDatum& D, i64 M, const ShapePrediction& P);

// cyclic G: members of Gamma are exactly Aut_{g,chi}(G) x H^2_{1,g}
bool gamma_is_full_product(const GammaGroup& Gam);

// Omega(u, s) = (p2 o u|K, eps_d(s), [s|K], chi o u|K) for a type I datum with K = Ker(chi)
struct OmegaImage {
    GroupAutomorphism f;  // on K indices
    i64 lambda = 0;
    std::vector<i64> cls;  // H^2(K, mu_M)
    std::vector<i64> psi;  // exponents in Z/M over K indices
    bool operator==(const OmegaImage& o) const {
        return f == o.f && lambda == o.lambda && cls == o.cls && psi == o.psi;
    }
    bool operator<(const OmegaImage& o) const;
};
struct OmegaReport {
    i64 M = 0;
    int gamma_order = 0;
    i64 target_order = 0;  // |Aut K| M |H^2(K)| |Hom(K, mu_gcd(d,M))|
    bool well_defined = false, injective = false, surjective = false, homomorphism = false;
    bool preimages_verified = false;  // the assembled (u, sigma) lie in Gamma and map back
    int homomorphism_failures = 0;
    bool ok() const { return well_defined && injective && surjective && homomorphism && preimages_verified; }
};
OmegaReport omega_iso(const GammaGroup& Gam);

// non-type-I decomposable data with chi^n = 1:
// Gamma -> Aut(K) x Hom(K, <g>) x mu_M x H^2(K), (u, s) -> (p2 o u|K, p1 o u|K, eps_n(s), [s|K]), as sets
struct ProjectionReport {
    int gamma_order = 0;
    i64 target_order = 0;
    bool injective = false, surjective = false;
    bool ok() const { return injective && surjective; }
};
ProjectionReport decomposable_gamma_projection(const GammaGroup& Gam);

}  // namespace mh

#endif
