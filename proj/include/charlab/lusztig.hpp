#pragma once

#include <map>
#include <memory>
#include <optional>

#include "charlab/kl.hpp"
#include "charlab/weylchar.hpp"

namespace charlab {

/// Where E^1 on the reduced region comes from. The induction defines E^n
/// relative to E^1, so the provenance of the level-one characters is explicit:
/// a closed form (sl2), the lowest-alcove identity, the affine KL machinery,
/// or user-supplied tables.
enum class E1Mode {
    Sl2ClosedForm,
    LowestAlcove,
    KlEngine,
    UserTable,
};

const char* e1_mode_name(E1Mode m);
E1Mode e1_mode_from_name(const std::string& name);

class E1Source {
public:
    E1Source(const RootSystem& R, E1Mode mode, Int p);

    /// User-table source; every entry is validated (leading coefficient one,
    /// Weyl-invariant, lowest-alcove entries equal the Weyl character).
    static E1Source with_table(const RootSystem& R, Int p,
                               std::map<WeightVector, Character> table);

    const RootSystem& root_system() const { return *R_; }
    E1Mode mode() const { return mode_; }
    Int p() const { return p_; }

    /// E^1_lambda for lambda in the reduced region.
    Character e1_reduced(const WeightVector& lambda) const;

    /// E^1_lambda for any dominant lambda:
    /// E^1_lambda = E^1_{lambda_0} * (E^0_{sum_{j>=1} p^{j-1} lambda_j})^[1].
    Character e1_full(const WeightVector& lambda) const;

private:
    Character e1_kl_engine(const WeightVector& lambda) const;

    const RootSystem* R_;
    E1Mode mode_;
    Int p_;
    std::map<WeightVector, Character> table_;
    std::shared_ptr<KLContext> klctx_; // affine engine, built for KlEngine mode
};

struct LevelCharacter {
    WeightVector lambda;
    int level = 0;
    Int p = 2;
    Character character;
};

/// E^n_lambda by the inductive product
/// E^n = E^1_{l0} (E^1_{l1})^[1] ... (E^1_{l_{n-1}})^[n-1] (E^0_tail)^[n].
LevelCharacter e_n(const E1Source& src, const WeightVector& lambda, int level);

struct SteinbergWitness {
    bool equal = false;
    Character via_induction;
    Character via_product;
    WeightVector w_reduced; // w' = digit 0
    WeightVector w_tail;    // w'' with w = w' + p w''
};

/// Check E^n_w = E^n_{w'} * (E^{n-1}_{w''})^[1] for the digit split w = w' + p w''.
SteinbergWitness steinberg_check(const E1Source& src, const WeightVector& w, int level);

/// E^1_lambda = E^2_lambda = ... = E^{n_max}_lambda on the reduced region.
bool stabilization_check(const E1Source& src, const WeightVector& lambda, int n_max);

/// Pairing (lambda + rho, theta_vee) used by the lowest-alcove guard.
Int alcove_level(const RootSystem& R, const WeightVector& lambda);

namespace detail {
/// Dominant weights mu <= lambda lying in the p-dilated dot orbit of lambda,
/// with the Coxeter word of the alcove walk from the antidominant base alcove.
/// Exposed for tests.
struct DotOrbitPoint {
    WeightVector mu;
    CoxeterElement element; // alcove element (dominant-image coset representative)
    CoxeterElement minimal; // minimal-length representative of its W_f coset
};
std::vector<DotOrbitPoint> dominant_dot_orbit_below(const RootSystem& R, const WeightVector& lambda,
                                                    Int p, const CoxeterPresentation& aff);
bool regular_weight(const RootSystem& R, const WeightVector& lambda, Int p);

/// ch L(lambda) from affine KL data for a regular dominant weight, via the
/// antispherical decomposition numbers
///   [V(nu) : L(mu)] = sum_{u in W_f} (-1)^{l(u)} P_{u * xbar_nu, xbar_mu}(1)
/// and unitriangular inversion. Valid for simply-laced rank <= 2.
Character kl_irreducible_character(const RootSystem& R, Int p, const WeightVector& lambda,
                                   KLContext& ctx);
} // namespace detail

} // namespace charlab
