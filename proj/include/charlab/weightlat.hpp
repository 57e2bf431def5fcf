#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "charlab/error.hpp"
#include "charlab/rational.hpp"

namespace charlab {

using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Weight-lattice point in fundamental-weight coordinates:
/// lambda = sum_i coords[i] * varpi_i, so (alpha_i^vee, lambda) = coords[i].
struct WeightVector {
    IVec coords;

    WeightVector() = default;
    explicit WeightVector(IVec c) : coords(std::move(c)) {}
    explicit WeightVector(std::initializer_list<Int> c) {
        coords.resize(static_cast<Eigen::Index>(c.size()));
        Eigen::Index i = 0;
        for (Int v : c) coords[i++] = v;
    }

    Eigen::Index rank() const { return coords.size(); }
    bool is_zero() const { return coords.size() == 0 || (coords.array() == 0).all(); }
    bool is_dominant() const { return (coords.array() >= 0).all(); }

    friend bool operator==(const WeightVector& x, const WeightVector& y) {
        return x.coords.size() == y.coords.size() && (x.coords.array() == y.coords.array()).all();
    }
    friend bool operator!=(const WeightVector& x, const WeightVector& y) { return !(x == y); }

    // canonical total order: lexicographic on coordinates
    friend bool operator<(const WeightVector& x, const WeightVector& y) {
        if (x.coords.size() != y.coords.size()) return x.coords.size() < y.coords.size();
        for (Eigen::Index i = 0; i < x.coords.size(); ++i)
            if (x.coords[i] != y.coords[i]) return x.coords[i] < y.coords[i];
        return false;
    }

    friend WeightVector operator+(const WeightVector& x, const WeightVector& y) {
        return WeightVector(IVec(x.coords + y.coords));
    }
    friend WeightVector operator-(const WeightVector& x, const WeightVector& y) {
        return WeightVector(IVec(x.coords - y.coords));
    }
    friend WeightVector operator*(Int k, const WeightVector& x) {
        return WeightVector(IVec(k * x.coords));
    }

    std::string str() const;
};

/// Finite-type root datum. Cartan convention: C(i,j) = <alpha_j, alpha_i^vee>,
/// so the simple root alpha_j has fundamental-weight coordinates C.col(j).
class RootSystem {
public:
    /// Construct from a name: "A1".."A4", "B2".."B4", "C2".."C4", "D4", "F4", "G2".
    static RootSystem from_name(const std::string& name, int max_rank = 4);
    /// Construct from an explicit Cartan matrix (validated).
    static RootSystem from_cartan(std::string label, IMat cartan, int max_rank = 4);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    const IMat& cartan() const { return cartan_; }
    bool simply_laced() const { return simply_laced_; }

    /// alpha_j in fundamental-weight coordinates.
    WeightVector simple_root(int j) const { return WeightVector(IVec(cartan_.col(j))); }

    /// Simple reflection s_i acting on fundamental-weight coordinates.
    const IMat& simple_reflection(int i) const { return refl_[static_cast<size_t>(i)]; }

    WeightVector reflect(int i, const WeightVector& mu) const {
        return WeightVector(IVec(refl_[static_cast<size_t>(i)] * mu.coords));
    }

    WeightVector rho() const { return WeightVector(IVec(IVec::Ones(rank_))); }

    /// Invariant bilinear form normalized so short roots have squared length 2.
    Rational form(const WeightVector& x, const WeightVector& y) const;

    /// <mu, alpha^vee> for a (not necessarily simple) root alpha, exact integer.
    Int pairing_with_coroot(const WeightVector& mu, const WeightVector& root) const;

    /// Positive roots in fundamental-weight coordinates, sorted by height.
    const std::vector<WeightVector>& positive_roots() const { return pos_roots_; }

    /// Highest root.
    const WeightVector& highest_root() const { return highest_root_; }

    /// Root coordinates of a root-lattice element: solve C * c = mu. Throws if
    /// mu is not in the root lattice.
    IVec root_coordinates(const WeightVector& mu) const;

    /// Unique dominant Weyl-orbit representative.
    WeightVector dominant_representative(const WeightVector& mu) const;

    /// All elements of the finite Weyl group as weight-lattice automorphisms,
    /// identity first, each with its length. Throws a resource error past the
    /// configured rank cap.
    struct WeylElement {
        IMat matrix;
        int length;
    };
    const std::vector<WeylElement>& weyl_group() const { return weyl_; }

    std::size_t weyl_order() const { return weyl_group().size(); }

    /// Full Weyl orbit of a weight (as a deduplicated set).
    std::vector<WeightVector> weyl_orbit(const WeightVector& mu) const;

private:
    RootSystem() = default;
    void finish_setup(int max_rank);
    void build_weyl_group();

    std::string name_;
    int rank_ = 0;
    int max_rank_ = 4;
    IMat cartan_;
    bool simply_laced_ = true;
    std::vector<IMat> refl_;
    std::vector<Int> symmetrizer_; // d_i with d_i C_ij = d_j C_ji
    QMat gram_;                    // (varpi_i | varpi_j)
    QMat cartan_inv_;
    std::vector<WeightVector> pos_roots_;
    WeightVector highest_root_;
    std::vector<WeylElement> weyl_;
};

/// Element of Z[X]: finitely supported integer-valued function on the weight
/// lattice. Multiplication is support convolution; no zero coefficients stored.
class Character {
public:
    using Terms = std::map<WeightVector, Int>;

    Character() = default;
    static Character zero() { return {}; }
    static Character one(int rank) {
        Character c;
        c.add_term(WeightVector(IVec(IVec::Zero(rank))), 1);
        return c;
    }
    static Character monomial(const WeightVector& mu, Int coeff = 1) {
        Character c;
        c.add_term(mu, coeff);
        return c;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Int coeff(const WeightVector& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const WeightVector& mu, Int c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(mu, c);
        if (!inserted) {
            it->second = Rational::checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Sum of coefficients (the dimension, for a module character).
    Int dimension() const {
        Int d = 0;
        for (auto& [mu, c] : terms_) d = Rational::checked_add(d, c);
        return d;
    }

    friend Character operator+(const Character& x, const Character& y) {
        Character r = x;
        for (auto& [mu, c] : y.terms_) r.add_term(mu, c);
        return r;
    }
    friend Character operator-(const Character& x, const Character& y) {
        Character r = x;
        for (auto& [mu, c] : y.terms_) r.add_term(mu, -c);
        return r;
    }
    friend Character operator*(const Character& x, const Character& y) {
        Character r;
        for (auto& [mu, c] : x.terms_)
            for (auto& [nu, d] : y.terms_) r.add_term(mu + nu, Rational::checked_mul(c, d));
        return r;
    }
    friend Character operator*(Int k, const Character& x) {
        Character r;
        for (auto& [mu, c] : x.terms_) r.add_term(mu, Rational::checked_mul(k, c));
        return r;
    }
    Character& operator+=(const Character& o) { return *this = *this + o; }
    Character& operator-=(const Character& o) { return *this = *this - o; }
    Character& operator*=(const Character& o) { return *this = *this * o; }

    Character pow(int n) const {
        if (n < 0) throw_domain("negative character power");
        int rank = terms_.empty() ? 0 : static_cast<int>(terms_.begin()->first.rank());
        Character r = Character::one(rank);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Character& x, const Character& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Character& x, const Character& y) { return !(x == y); }

    bool weyl_invariant(const RootSystem& R) const;

    std::string str() const;

private:
    Terms terms_;
};

/// Base-p digits of a dominant weight: lambda = sum_i p^i lambda_i with every
/// lambda_i in the reduced region X+_red. Trailing zero digits trimmed; the
/// zero weight decomposes to an empty list.
std::vector<WeightVector> p_adic_decompose(const WeightVector& lambda, Int p);

/// True iff every coordinate of the dominant weight lies in [0, p).
bool in_reduced_region(const WeightVector& lambda, Int p);

/// xi^[t]: scale every weight in the support by p^t.
Character frobenius_twist(const Character& xi, int t, Int p);

} // namespace charlab
