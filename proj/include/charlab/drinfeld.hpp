#pragma once

#include <optional>
#include <vector>

#include "charlab/weightlat.hpp"

namespace charlab {

/// Element of Z[eps]/(eps^p - 1), with an optional global sign, used for the
/// evaluation points. Exponents are reduced mod p on construction.
struct CyclotomicUnit {
    Int p = 0;        // 0 means "formal": exponent is an honest integer
    Int exponent = 0; // of eps
    int sign = 1;     // +1 or -1

    static CyclotomicUnit formal(Int exponent, int sign = 1) { return {0, exponent, sign}; }
    static CyclotomicUnit mod(Int p, Int exponent, int sign = 1) {
        CyclotomicUnit u{p, ((exponent % p) + p) % p, sign};
        return u;
    }
    friend bool operator==(const CyclotomicUnit& a, const CyclotomicUnit& b) {
        return a.p == b.p && a.exponent == b.exponent && a.sign == b.sign;
    }
    std::string str() const;
};

/// Type-A Drinfeld data for the evaluation module with highest weight lambda:
/// P_i has roots a^{-1} eps^{c_{i,j}}, stored as the exponent strings c_{i,j}
/// rather than expanded polynomials.
struct DrinfeldPolynomialSet {
    int n = 1;            // rank of sl_{n+1}
    WeightVector lambda;  // dominant, length n
    int sign = +1;        // the +/- evaluation family
    std::vector<std::vector<Int>> exponents; // exponents[i] = (c_{i+1,1}, ..., c_{i+1,lambda_i})
};

/// Exponent lists n^{(i)}_j in {0,...,p-1} defining the group homomorphism
/// gamma: q -> t, z^{(i)}_j -> t^{n^{(i)}_j}.
struct GammaData {
    Int p = 2;
    std::vector<std::vector<Int>> exponents;
};

/// varpi_i of sl_{n+1} in simple-root coordinates, exact rationals.
QVec fundamental_weight_vector(int n, int i);

/// c^{+-}_{i,j} = +-(sum_{k<i} l_k - sum_{k>i} l_k + i) + l_i - 2j + 1, j = 1..l_i.
std::vector<std::vector<Int>> c_exponents(int n, const WeightVector& lambda, int sign);

DrinfeldPolynomialSet drinfeld_polynomials(int n, const WeightVector& lambda, int sign);

/// Which reading of lambda_{varpi_i} to use in the evaluation points: the
/// formula as printed (all inner products (varpi_i, varpi_i), which cancel),
/// or the cross-pairing variant (varpi_j, varpi_i). Neither is asserted as
/// ground truth; the cross variant needs p with gcd(p, n+1) = 1 so that the
/// rational pairings make sense as exponents mod p.
enum class LambdaPairing { AsPrinted, Cross };

/// a^lambda_+ = a * eps^{-lambda_{varpi_1} + lambda_{varpi_n} + n} and the
/// minus twin; `a` is carried formally, only its eps-part is computed.
CyclotomicUnit eval_point(int n, const WeightVector& lambda, int sign,
                          LambdaPairing pairing = LambdaPairing::AsPrinted,
                          std::optional<Int> p = std::nullopt);

/// gamma from the Drinfeld data at base point a = 1: exponent lists are the
/// c-exponents reduced mod p. Requires gcd(p, n+1) = 1.
GammaData gamma_from_drinfeld(const DrinfeldPolynomialSet& d, Int p, bool base_point_is_one = true);

} // namespace charlab
