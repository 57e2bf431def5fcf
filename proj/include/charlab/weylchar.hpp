#pragma once

#include <map>
#include <mutex>

#include "charlab/weightlat.hpp"

namespace charlab {

/// Irreducible character chi_lambda by the rho-shifted alternating-sum formula,
/// evaluated by exact Laurent division. Memoized per (root system, lambda);
/// results are identical with a cold or warm cache.
Character weyl_character(const RootSystem& R, const WeightVector& lambda);

/// Weight multiplicities of L(lambda) by the Freudenthal recursion. This is
/// the independent oracle for weyl_character; the two must agree exactly.
std::map<WeightVector, Int> freudenthal_multiplicities(const RootSystem& R,
                                                       const WeightVector& lambda);

/// Character assembled from freudenthal_multiplicities.
Character freudenthal_character(const RootSystem& R, const WeightVector& lambda);

/// Exact dimension of L(lambda) by the Weyl dimension formula.
Int weyl_dimension(const RootSystem& R, const WeightVector& lambda);

/// Decompose a product of two irreducible characters into irreducibles by
/// iterated highest-term extraction. Inputs must be Weyl-invariant.
std::map<WeightVector, Int> tensor_decompose(const RootSystem& R, const Character& chi_lambda,
                                             const Character& chi_mu);

/// Per-root-system character cache (all E0 callers share it).
class DominantCharacterTable {
public:
    explicit DominantCharacterTable(const RootSystem& R) : R_(&R) {}

    const Character& get(const WeightVector& lambda);

    const RootSystem& root_system() const { return *R_; }

private:
    const RootSystem* R_;
    std::map<WeightVector, Character> entries_;
    std::mutex mutex_;
};

} // namespace charlab
