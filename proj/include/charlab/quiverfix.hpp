#pragma once

#include <vector>

#include "charlab/kl.hpp"
#include "charlab/weightlat.hpp"

namespace charlab {

/// Fixed-point component of T*Gr(w)^{(g0, zeta)}: base is the product of
/// Grassmannians Gr(v_s, w_s); the fiber is the space of maps with
/// x(W_s) c V_{s-1} and x(V) = 0, of dimension sum_s (w_s - v_s) v_{s-1}
/// (indices mod p).
struct FixedComponentDescriptor {
    Int p = 1;
    std::vector<Int> w; // eigenspace framings, length p
    std::vector<Int> v; // dimension labels, length p
    bool even = false;
    Int fiber_rank = 0;
};

/// All components for total framing w with p | w (each eigenspace has
/// dimension w/p).
std::vector<FixedComponentDescriptor> enumerate_components(Int w, Int p);

/// Gaussian binomial [n choose k]_q as an integer polynomial in q.
KLPolynomial gaussian_binomial(Int n, Int k);

/// Poincare polynomial of the component base in t: product of Gaussian
/// binomials [w_s choose v_s] evaluated at t^2. The affine fiber contributes
/// only the recorded degree shift, no new classes.
KLPolynomial poincare_polynomial(const FixedComponentDescriptor& d);

/// Poincare polynomial of a single T*Gr(v, w) in t.
KLPolynomial grassmannian_poincare(Int v, Int w);

struct EvenIsoReport {
    bool ok = false;
    struct Pair {
        Int v;
        KLPolynomial lhs; // even component of T*Gr(w)^{im alpha}
        KLPolynomial rhs; // product of p copies of T*Gr(w/p)
        Int lhs_fiber;
        Int rhs_fiber;
    };
    std::vector<Pair> pairs;
};

/// Betti-level check of the even-locus isomorphism
/// T*Gr(w)^{im alpha}|even = prod_p T*Gr(w/p)|even.
EvenIsoReport verify_A1_even_iso(Int w, Int p);

/// mu(v, w) = sum_k w_k varpi_k - sum_k v_k alpha_k in fundamental-weight
/// coordinates.
WeightVector weight_of_component(const RootSystem& R, const IVec& v, const IVec& w);

/// Uneven labels fall into free orbits of size p under cyclic rotation.
bool uneven_orbits_free(const std::vector<FixedComponentDescriptor>& components, Int p);

} // namespace charlab
