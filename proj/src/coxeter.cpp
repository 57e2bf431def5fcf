#include "charlab/coxeter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace charlab {

namespace {

// 2*cos(pi/m) for the supported orders; m = 0 encodes infinity.
QuadExt two_cos(int m) {
    switch (m) {
        case 2: return QuadExt(0);
        case 3: return QuadExt(1);
        case 4: return QuadExt::sqrt2();
        case 6: return QuadExt::sqrt3();
        case CoxeterPresentation::infinity: return QuadExt(2);
        default:
            throw_unsupported("Coxeter order m=" + std::to_string(m) +
                              " not supported (need m in {2,3,4,6,inf})", "coxeter");
    }
}

Eigen::MatrixXi coxeter_matrix_from_name(const std::string& name) {
    bool affine = !name.empty() && name.back() == '~';
    std::string base = affine ? name.substr(0, name.size() - 1) : name;
    if (base.size() < 2) throw_domain("bad Coxeter name '" + name + "'", "coxeter");
    char fam = base[0];
    int n = 0;
    try {
        n = std::stoi(base.substr(1));
    } catch (...) {
        throw_domain("bad Coxeter name '" + name + "'", "coxeter");
    }
    if (n <= 0 || n > 9) throw_domain("bad rank in '" + name + "'", "coxeter");

    auto finite = [&](char f, int r) {
        Eigen::MatrixXi m = Eigen::MatrixXi::Constant(r, r, 2);
        for (int i = 0; i < r; ++i) m(i, i) = 1;
        auto bond = [&](int i, int j, int v) { m(i, j) = v; m(j, i) = v; };
        switch (f) {
            case 'A':
                for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, 3);
                break;
            case 'B':
            case 'C':
                if (r < 2) throw_domain("B/C needs rank >= 2", "coxeter");
                for (int i = 0; i + 1 < r; ++i) bond(i, i + 1, 3);
                bond(r - 2, r - 1, 4);
                break;
            case 'D':
                if (r < 4) throw_domain("D needs rank >= 4", "coxeter");
                for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1, 3);
                bond(r - 3, r - 1, 3);
                break;
            case 'F':
                if (r != 4) throw_domain("F needs rank 4", "coxeter");
                bond(0, 1, 3); bond(1, 2, 4); bond(2, 3, 3);
                break;
            case 'G':
                if (r != 2) throw_domain("G needs rank 2", "coxeter");
                bond(0, 1, 6);
                break;
            default:
                throw_domain("unknown Coxeter family '" + std::string(1, f) + "'", "coxeter");
        }
        return m;
    };

    if (!affine) return finite(fam, n);

    if (fam != 'A') throw_unsupported("affine series implemented for type A only", "coxeter");
    if (n == 1) {
        Eigen::MatrixXi m(2, 2);
        m << 1, CoxeterPresentation::infinity, CoxeterPresentation::infinity, 1;
        return m;
    }
    // affine A_n: (n+1)-cycle with all bonds 3
    int r = n + 1;
    Eigen::MatrixXi m = Eigen::MatrixXi::Constant(r, r, 2);
    for (int i = 0; i < r; ++i) m(i, i) = 1;
    for (int i = 0; i < r; ++i) {
        int j = (i + 1) % r;
        m(i, j) = 3;
        m(j, i) = 3;
    }
    return m;
}

} // namespace

CoxeterPresentation CoxeterPresentation::from_name(const std::string& name) {
    return from_matrix(name, coxeter_matrix_from_name(name));
}

CoxeterPresentation CoxeterPresentation::from_matrix(std::string label, Eigen::MatrixXi m) {
    if (m.rows() != m.cols()) throw_domain("Coxeter matrix not square", "coxeter");
    CoxeterPresentation P;
    P.name_ = std::move(label);
    P.rank_ = static_cast<int>(m.rows());
    P.m_ = std::move(m);
    P.setup();
    return P;
}

void CoxeterPresentation::setup() {
    const int n = rank_;
    if (n <= 0 || n > 16) throw_resource("Coxeter rank out of range", "coxeter");
    for (int i = 0; i < n; ++i) {
        if (m_(i, i) != 1) throw_domain("Coxeter diagonal must be 1", "coxeter");
        for (int j = i + 1; j < n; ++j) {
            if (m_(i, j) != m_(j, i)) throw_domain("Coxeter matrix must be symmetric", "coxeter");
            int v = m_(i, j);
            if (v != infinity && v < 2)
                throw_domain("Coxeter off-diagonal must be >= 2 or inf", "coxeter");
        }
    }
    two_b_ = QXMat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            two_b_(i, j) = (i == j) ? QuadExt(2) : -two_cos(m_(i, j));
    refl_.clear();
    for (int s = 0; s < n; ++s) {
        QXMat m = QXMat(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = QuadExt(i == j ? 1 : 0);
        // sigma_s(e_t) = e_t - 2B(e_s,e_t) e_s
        for (int t = 0; t < n; ++t) m(s, t) -= two_b_(s, t);
        refl_.push_back(std::move(m));
    }
}

std::uint64_t CoxeterPresentation::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) mix(static_cast<std::uint64_t>(m_(i, j) + 1));
    return h;
}

void CoxeterPresentation::apply_reflection(int s, QXVec& v) const {
    // v -> v - <2B(e_s, .), v> e_s
    QuadExt coef;
    for (int t = 0; t < rank_; ++t) coef += two_b_(s, t) * v[t];
    v[s] -= coef;
}

namespace {

// x(alpha_s) as a vector in the reflection representation; positive roots have
// all coordinates >= 0, negative roots all <= 0.
QXVec root_image(const CoxeterPresentation& P, const std::vector<std::uint8_t>& word, int s) {
    QXVec v = QXVec::Constant(P.rank(), QuadExt(0));
    v[s] = QuadExt(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) P.apply_reflection(*it, v);
    return v;
}

bool is_negative_root(const QXVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        int sg = v[i].sign();
        if (sg > 0) return false;
        if (sg < 0) return true;
    }
    throw_domain("zero vector is not a root");
}

bool simple_root_match(const CoxeterPresentation& P, const QXVec& v, int s) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        QuadExt want(i == s ? 1 : 0);
        if (v[i] != want) return false;
    }
    (void)P;
    return true;
}

// w s with l(ws) = l(w) - 1: delete the exchange-condition letter.
std::vector<std::uint8_t> right_delete(const CoxeterPresentation& P,
                                       const std::vector<std::uint8_t>& word, int s) {
    // find i with (s_{i+1} ... s_k)(alpha_s) = alpha_{s_i}
    QXVec gamma = QXVec::Constant(P.rank(), QuadExt(0));
    gamma[s] = QuadExt(1);
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
        if (simple_root_match(P, gamma, word[static_cast<size_t>(i)])) {
            std::vector<std::uint8_t> out;
            out.reserve(word.size() - 1);
            for (int j = 0; j < static_cast<int>(word.size()); ++j)
                if (j != i) out.push_back(word[static_cast<size_t>(j)]);
            return out;
        }
        P.apply_reflection(word[static_cast<size_t>(i)], gamma);
    }
    throw_domain("exchange condition failed (word was not reduced)");
}

// s w with l(sw) = l(w) - 1.
std::vector<std::uint8_t> left_delete(const CoxeterPresentation& P,
                                      const std::vector<std::uint8_t>& word, int s) {
    QXVec delta = QXVec::Constant(P.rank(), QuadExt(0));
    delta[s] = QuadExt(1);
    for (size_t i = 0; i < word.size(); ++i) {
        if (simple_root_match(P, delta, word[i])) {
            std::vector<std::uint8_t> out;
            out.reserve(word.size() - 1);
            for (size_t j = 0; j < word.size(); ++j)
                if (j != i) out.push_back(word[j]);
            return out;
        }
        P.apply_reflection(word[i], delta);
    }
    throw_domain("exchange condition failed (word was not reduced)");
}

// ShortLex normal form of a reduced word: repeatedly take the smallest left
// descent. The set of first letters of reduced words is the left descent set,
// so the greedy choice is the lexicographically least reduced word.
std::vector<std::uint8_t> shortlex_normalize(const CoxeterPresentation& P,
                                             std::vector<std::uint8_t> word) {
    std::vector<std::uint8_t> out;
    out.reserve(word.size());
    while (!word.empty()) {
        int pick = -1;
        for (int s = 0; s < P.rank(); ++s) {
            // l(s w) < l(w) iff w^-1(alpha_s) < 0; w^-1 is the reversed word
            std::vector<std::uint8_t> rev(word.rbegin(), word.rend());
            QXVec v = root_image(P, rev, s);
            if (is_negative_root(v)) { pick = s; break; }
        }
        if (pick < 0) throw_domain("no left descent on a nonempty reduced word");
        out.push_back(static_cast<std::uint8_t>(pick));
        word = left_delete(P, word, pick);
    }
    return out;
}

} // namespace

CoxeterElement CoxeterElement::from_word(const CoxeterPresentation& P,
                                         const std::vector<int>& word) {
    CoxeterElement e;
    for (int s : word) {
        if (s < 0 || s >= P.rank()) throw_domain("generator index out of range", "word");
        e = multiply(P, e, s);
    }
    return e;
}

std::string CoxeterElement::str() const {
    if (word_.empty()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < word_.size(); ++i) {
        if (i) os << " ";
        os << static_cast<int>(word_[i]) + 1; // 1-based for display
    }
    return os.str();
}

bool right_ascent(const CoxeterPresentation& P, const CoxeterElement& x, int s) {
    QXVec v = root_image(P, x.word(), s);
    return !is_negative_root(v);
}

bool left_ascent(const CoxeterPresentation& P, const CoxeterElement& x, int s) {
    std::vector<std::uint8_t> rev(x.word().rbegin(), x.word().rend());
    QXVec v = root_image(P, rev, s);
    return !is_negative_root(v);
}

CoxeterElement multiply(const CoxeterPresentation& P, const CoxeterElement& x, int s) {
    if (s < 0 || s >= P.rank()) throw_domain("generator index out of range", "word");
    CoxeterElement out;
    if (right_ascent(P, x, s)) {
        std::vector<std::uint8_t> w = x.word_;
        w.push_back(static_cast<std::uint8_t>(s));
        out.word_ = shortlex_normalize(P, std::move(w));
    } else {
        out.word_ = shortlex_normalize(P, right_delete(P, x.word_, s));
    }
    return out;
}

CoxeterElement multiply_left(const CoxeterPresentation& P, int s, const CoxeterElement& x) {
    if (s < 0 || s >= P.rank()) throw_domain("generator index out of range", "word");
    CoxeterElement out;
    if (left_ascent(P, x, s)) {
        std::vector<std::uint8_t> w;
        w.reserve(x.word_.size() + 1);
        w.push_back(static_cast<std::uint8_t>(s));
        w.insert(w.end(), x.word_.begin(), x.word_.end());
        out.word_ = shortlex_normalize(P, std::move(w));
    } else {
        out.word_ = shortlex_normalize(P, left_delete(P, x.word_, s));
    }
    return out;
}

CoxeterElement inverse(const CoxeterPresentation& P, const CoxeterElement& x) {
    std::vector<int> rev;
    rev.reserve(x.word().size());
    for (auto it = x.word().rbegin(); it != x.word().rend(); ++it) rev.push_back(*it);
    return CoxeterElement::from_word(P, rev);
}

bool bruhat_leq(const CoxeterPresentation& P, const CoxeterElement& x, const CoxeterElement& w) {
    if (x.length() > w.length()) return false;
    if (x == w) return true;
    if (w.is_identity()) return false;
    // take s with ws < w (the last letter of the normal form works)
    int s = w.word().back();
    CoxeterElement ws = multiply(P, w, s);
    if (!right_ascent(P, x, s)) return bruhat_leq(P, multiply(P, x, s), ws);
    return bruhat_leq(P, x, ws);
}

std::vector<CoxeterElement> bruhat_interval_below(const CoxeterPresentation& P,
                                                  const CoxeterElement& w) {
    // reduced subwords of any fixed reduced word of w give exactly [e, w]
    std::set<CoxeterElement> cur{CoxeterElement::identity()};
    for (int s : std::vector<std::uint8_t>(w.word().begin(), w.word().end())) {
        std::set<CoxeterElement> next = cur;
        for (auto& z : cur)
            if (right_ascent(P, z, s)) next.insert(multiply(P, z, s));
        cur = std::move(next);
    }
    return {cur.begin(), cur.end()};
}

QXMat reflection_matrix(const CoxeterPresentation& P, const CoxeterElement& x) {
    const int n = P.rank();
    QXMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = QuadExt(i == j ? 1 : 0);
    for (int s : std::vector<std::uint8_t>(x.word().begin(), x.word().end()))
        m = P.reflection(s) * m;
    return m;
}

} // namespace charlab
