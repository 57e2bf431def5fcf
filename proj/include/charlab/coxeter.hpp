#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "charlab/error.hpp"
#include "charlab/quadext.hpp"

namespace charlab {

using QXMat = Eigen::Matrix<QuadExt, Eigen::Dynamic, Eigen::Dynamic>;
using QXVec = Eigen::Matrix<QuadExt, Eigen::Dynamic, 1>;

/// Coxeter matrix presentation, finite or affine. Off-diagonal orders are
/// restricted to {2,3,4,6,inf} so the Tits reflection representation stays in
/// Z[sqrt2, sqrt3]. Use order 0 to encode infinity.
class CoxeterPresentation {
public:
    static constexpr int infinity = 0;

    /// Names: finite "A1".."A9", "B2".., "C2".., "D4".., "F4", "G2", and the
    /// affine series "A1~", "A2~", ....
    static CoxeterPresentation from_name(const std::string& name);
    static CoxeterPresentation from_matrix(std::string label, Eigen::MatrixXi m);

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const Eigen::MatrixXi& matrix() const { return m_; }

    /// FNV-1a hash of the Coxeter matrix; keys the on-disk KL cache.
    std::uint64_t hash() const;

    /// sigma_s acting on the reflection representation, exact.
    const QXMat& reflection(int s) const { return refl_[static_cast<size_t>(s)]; }

    /// Apply sigma_s to a vector in place (cheaper than the matrix product).
    void apply_reflection(int s, QXVec& v) const;

private:
    void setup();

    std::string name_;
    int rank_ = 0;
    Eigen::MatrixXi m_;
    std::vector<QXMat> refl_;
    QXMat two_b_; // 2*B(e_s, e_t) Gram table
};

/// Group element as its ShortLex-minimal reduced word. Normal forms are
/// maintained by exchange-condition rewriting in the reflection representation.
class CoxeterElement {
public:
    CoxeterElement() = default;

    static CoxeterElement identity() { return {}; }

    /// Normalize an arbitrary word (not assumed reduced).
    static CoxeterElement from_word(const CoxeterPresentation& P, const std::vector<int>& word);

    const std::vector<std::uint8_t>& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    bool is_identity() const { return word_.empty(); }

    friend bool operator==(const CoxeterElement& x, const CoxeterElement& y) {
        return x.word_ == y.word_;
    }
    friend bool operator!=(const CoxeterElement& x, const CoxeterElement& y) { return !(x == y); }
    friend bool operator<(const CoxeterElement& x, const CoxeterElement& y) {
        if (x.word_.size() != y.word_.size()) return x.word_.size() < y.word_.size();
        return x.word_ < y.word_;
    }

    std::string str() const;

private:
    friend CoxeterElement multiply(const CoxeterPresentation&, const CoxeterElement&, int);
    friend CoxeterElement multiply_left(const CoxeterPresentation&, int, const CoxeterElement&);
    std::vector<std::uint8_t> word_;
};

/// x * s, with the length changing by exactly one.
CoxeterElement multiply(const CoxeterPresentation& P, const CoxeterElement& x, int s);
/// s * x.
CoxeterElement multiply_left(const CoxeterPresentation& P, int s, const CoxeterElement& x);

CoxeterElement inverse(const CoxeterPresentation& P, const CoxeterElement& x);

/// True iff l(xs) > l(x).
bool right_ascent(const CoxeterPresentation& P, const CoxeterElement& x, int s);
/// True iff l(sx) > l(x).
bool left_ascent(const CoxeterPresentation& P, const CoxeterElement& x, int s);

/// Bruhat order by the subword criterion (recursive descent form).
bool bruhat_leq(const CoxeterPresentation& P, const CoxeterElement& x, const CoxeterElement& w);

/// All z <= w, generated from reduced subwords of the normal form of w.
std::vector<CoxeterElement> bruhat_interval_below(const CoxeterPresentation& P,
                                                  const CoxeterElement& w);

/// Matrix of the element in the reflection representation (the oracle for
/// normal-form arithmetic).
QXMat reflection_matrix(const CoxeterPresentation& P, const CoxeterElement& x);

} // namespace charlab
