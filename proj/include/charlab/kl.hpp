#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "charlab/coxeter.hpp"
#include "charlab/rational.hpp"

namespace charlab {

/// Polynomial in q with integer coefficients, dense ascending storage.
class KLPolynomial {
public:
    KLPolynomial() = default;
    explicit KLPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static KLPolynomial zero() { return {}; }
    static KLPolynomial one() { return KLPolynomial({1}); }
    static KLPolynomial q_power(int k) {
        std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
        c.back() = 1;
        return KLPolynomial(std::move(c));
    }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : 0;
    }
    Int at_one() const {
        Int s = 0;
        for (Int v : c_) s = Rational::checked_add(s, v);
        return s;
    }

    friend KLPolynomial operator+(const KLPolynomial& a, const KLPolynomial& b);
    friend KLPolynomial operator-(const KLPolynomial& a, const KLPolynomial& b);
    friend KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b);
    friend bool operator==(const KLPolynomial& a, const KLPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const KLPolynomial& a, const KLPolynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// Kazhdan-Lusztig engine over one presentation. The memo table supports
/// concurrent readers; writes are serialized; results do not depend on call
/// order. Production path is the mu-recursion; r_polynomial/oracle_kl is the
/// independent brute-force route used by the tests.
class KLContext {
public:
    explicit KLContext(CoxeterPresentation P, int length_cap = 14)
        : P_(std::move(P)), cap_(length_cap) {}

    const CoxeterPresentation& presentation() const { return P_; }
    int length_cap() const { return cap_; }

    /// P_{x,w} by the mu-recursion; zero iff x is not Bruhat-below w.
    KLPolynomial kl_polynomial(const CoxeterElement& x, const CoxeterElement& w);

    /// mu(x,w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}.
    Int mu(const CoxeterElement& x, const CoxeterElement& w);

    /// R_{x,w} by its defining recursion (test oracle).
    KLPolynomial r_polynomial(const CoxeterElement& x, const CoxeterElement& w);

    /// P_{x,w} recovered from R-polynomials alone (test oracle; verifies the
    /// full inversion identity before returning).
    KLPolynomial oracle_kl(const CoxeterElement& x, const CoxeterElement& w);

    /// On-disk cache, binary format documented in the README. Returns the
    /// number of entries loaded/saved.
    std::size_t save_cache(const std::string& path) const;
    std::size_t load_cache(const std::string& path);

private:
    using Key = std::pair<CoxeterElement, CoxeterElement>;

    KLPolynomial kl_impl(const CoxeterElement& x, const CoxeterElement& w);
    std::optional<KLPolynomial> memo_get(const Key& k) const;
    void memo_put(const Key& k, const KLPolynomial& v);

    CoxeterPresentation P_;
    int cap_;
    mutable std::shared_mutex mutex_;
    std::map<Key, KLPolynomial> memo_;
    std::map<Key, KLPolynomial> rmemo_;
};

} // namespace charlab
