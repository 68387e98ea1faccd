#ifndef MH_BIGALOIS_HPP
#define MH_BIGALOIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mh/galois.hpp"

namespace mh {

// (u, class) with u in Aut_g(G) and the class in H^2_{1,g}(G, mu_M)
struct GammaElement {
    GroupAutomorphism u;
    std::vector<i64> cls;
    Cocycle rep;
    i64 eps = 0;  // sum_{i=1}^{d-1} rep(g, g^i) mod M
    bool operator==(const GammaElement& o) const { return u == o.u && cls == o.cls; }
    bool operator<(const GammaElement& o) const { return u < o.u || (u == o.u && cls < o.cls); }
};

class GammaGroup {
public:
    GammaGroup() = default;
    GammaGroup(const GroupDatum& D, i64 M);

    const GroupDatum& datum() const { return D_; }
    i64 modulus() const { return M_; }
    const CohomologyGroup& h2() const { return H_; }
    const std::vector<GroupAutomorphism>& aut_g() const { return aut_; }
    const std::vector<GammaElement>& elements() const { return elems_; }
    int order() const { return (int)elems_.size(); }

    // chi(u(h)) = sigma(g,h)^{-1} sigma(h,g) chi(h) for all h
    bool member(const GroupAutomorphism& u, const Cocycle& s) const;
    GammaElement make(const GroupAutomorphism& u, const Cocycle& s) const;  // canonicalized, no membership check
    GammaElement identity() const;
    // (u, s)(v, t) = (u v, (s o (v x v)) t)
    GammaElement mul(const GammaElement& x, const GammaElement& y) const;
    GammaElement inverse(const GammaElement& x) const;
    int index_of(const GammaElement& x) const;  // -1 if absent

    bool is_abelian() const;
    int aut_component_size() const;  // number of distinct u
    std::vector<GammaElement> generators() const;

private:
    GroupDatum D_;
    i64 M_ = 1;
    CohomologyGroup H_;
    std::vector<GroupAutomorphism> aut_;
    std::vector<GammaElement> elems_;
    std::map<GammaElement, int> index_;
};

// invariant factors of Gamma; throws if Gamma is not abelian
std::vector<i64> abelian_invariants(const GammaGroup& Gam);
// invariant factors of a finite abelian group from the list of its element orders
std::vector<i64> abelian_invariants_from_orders(const std::vector<i64>& element_orders);

// all u in Aut_g(G) with (u, s) in Gamma, without computing H^2_{1,g}
std::vector<GroupAutomorphism> gamma_partners(const GroupDatum& D, const Cocycle& s);

// u(h) = s(psi(h)) h with psi(h) = sigma(g,h)^{-1} sigma(h,g), s a section of chi on <g>; type I or II only
GroupAutomorphism extend_to_gamma(const GroupDatum& D, const Cocycle& s);

struct BiGaloisRep {
    GammaElement gamma;
    Cyclo a;
    ComoduleAlgebra Z;
    GaloisCheck right, left;
    bool left_comodule_algebra = false, bicomodule = false;
    bool ok() const;
};
// A^u_{sigma,a}(G): a must be 0 unless the datum is of type I
BiGaloisRep make_bigalois(const HopfAlgebraRep& H, const GammaElement& x, const Cyclo& a,
                          int kappa_cap = kKappaDimCap);

struct BiGaloisIsoWitness {
    std::vector<i64> mu;  // mu(1) = mu(g) = 0
    i64 L = 1;
    bool verified = false;  // bicolinear algebra isomorphism f(X) = X, f(T_h) = mu(h) T_h
};
std::optional<BiGaloisIsoWitness> bigalois_isomorphic(const HopfAlgebraRep& H, const GammaElement& x, const Cyclo& a,
                                                      const GammaElement& y, const Cyclo& b, bool verify = true);

struct ComposedIndex {
    GammaElement gamma;
    Cyclo c;  // c = tau(g,g)...tau(g,g^{d-1}) a + b
};
ComposedIndex cotensor_compose(const GammaGroup& Gam, const GammaElement& x, const Cyclo& a, const GammaElement& y,
                               const Cyclo& b);

struct CotensorReport {
    int ambient_dim = 0, kernel_dim = 0;
    bool closed_under_product = false;
    bool gamma_algebra_map = false, gamma_in_kernel = false, gamma_bijective = false;
    bool gamma_left_colinear = false, gamma_right_colinear = false;
    bool matches_index = false;  // the source of gamma is isomorphic to the canonical composed object
    ComposedIndex index;
    bool ok() const {
        return closed_under_product && gamma_algebra_map && gamma_in_kernel && gamma_bijective && gamma_left_colinear &&
               gamma_right_colinear && matches_index;
    }
};
constexpr int kCotensorAmbientCap = 144;
// kernel of (alpha_1 (x) id - id (x) beta_2) in Z1 (x) Z2, and the map
// gamma(X) = 1 (x) X + X (x) T_g, gamma(T_h) = T_{v(h)} (x) T_h from the composed object
CotensorReport cotensor_algebra(const HopfAlgebraRep& H, const GammaGroup& Gam, const BiGaloisRep& Z1,
                                const BiGaloisRep& Z2);

struct CompanionMapReport {
    int source_order = 0, target_order = 0;
    bool well_defined = false, injective = false, surjective = false, homomorphism = false;
    bool ok() const { return well_defined && injective && surjective && homomorphism; }
};
// Gamma(G_sigma) -> Gamma(G), (u, t) -> (u, (sigma o (u x u))^{-1} sigma t)
CompanionMapReport verify_companion_gamma_map(const GammaGroup& source, const GammaGroup& target, const Cocycle& sigma);

struct BiGalReport {
    DatumType type = DatumType::I;
    i64 M = 0;
    std::string computed_on;  // "G", "G_sigma" (type V) or "G_red" (type VI)
    GammaGroup gamma;         // Gamma of the datum itself
    bool scalar_factor = false;  // type I: semidirect with k, sampled
    std::vector<Cyclo> samples;
    std::vector<BiGaloisRep> generators;
    std::optional<BridgeReport> bridge;
    std::optional<CompanionMapReport> companion_map;
    std::optional<GammaGroup> reduced_gamma;  // Gamma of G_sigma (type V) or G_red (type VI)
    int cotensor_checked = 0;  // generator pairs composed inside Z1 (x) Z2
    bool cotensor_ok = true;
    bool all_verified() const;
};
BiGalReport bigalois_group(const GroupDatum& D, i64 M, const std::vector<Cyclo>& samples,
                           int kappa_cap = kKappaDimCap);

}  // namespace mh

#endif
