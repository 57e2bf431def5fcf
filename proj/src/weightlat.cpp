#include "charlab/weightlat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace charlab {

namespace {

IMat cartan_from_type(char family, int n) {
    IMat C = IMat::Zero(n, n);
    for (int i = 0; i < n; ++i) C(i, i) = 2;
    auto link = [&](int i, int j) { C(i, j) = -1; C(j, i) = -1; };
    switch (family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B': // alpha_n short: C(n-1,n-2) = -2
            if (n < 2) throw_domain("B requires rank >= 2", "type");
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            C(n - 1, n - 2) = -2;
            break;
        case 'C': // alpha_n long
            if (n < 2) throw_domain("C requires rank >= 2", "type");
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            C(n - 2, n - 1) = -2;
            break;
        case 'D':
            if (n < 4) throw_domain("D requires rank >= 4", "type");
            for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'F':
            if (n != 4) throw_domain("F requires rank 4", "type");
            link(0, 1); link(2, 3); link(1, 2);
            C(2, 1) = -2; C(1, 2) = -1;
            break;
        case 'G':
            if (n != 2) throw_domain("G requires rank 2", "type");
            C(0, 1) = -1; C(1, 0) = -3;
            break;
        case 'E':
            throw_unsupported("type E exceeds the desk-scale rank cap", "type");
        default:
            throw_domain("unknown family '" + std::string(1, family) + "'", "type");
    }
    return C;
}

Rational det_rational(QMat m) {
    // Gauss elimination with exact rationals
    const Eigen::Index n = m.rows();
    Rational det(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!m(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            det = -det;
        }
        det = det * m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            Rational f = m(r, col) / m(col, col);
            for (Eigen::Index c = col; c < n; ++c) m(r, c) = m(r, c) - f * m(col, c);
        }
    }
    return det;
}

QMat invert_rational(const QMat& a) {
    const Eigen::Index n = a.rows();
    QMat m = a;
    QMat inv = QMat::Constant(n, n, Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = Rational(1);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!m(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw_domain("singular matrix");
        if (piv != col) {
            m.row(piv).swap(m.row(col));
            inv.row(piv).swap(inv.row(col));
        }
        Rational f = m(col, col);
        for (Eigen::Index c = 0; c < n; ++c) {
            m(col, c) = m(col, c) / f;
            inv(col, c) = inv(col, c) / f;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || m(r, col).is_zero()) continue;
            Rational g = m(r, col);
            for (Eigen::Index c = 0; c < n; ++c) {
                m(r, c) = m(r, c) - g * m(col, c);
                inv(r, c) = inv(r, c) - g * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace

std::string WeightVector::str() const {
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

RootSystem RootSystem::from_name(const std::string& name, int max_rank) {
    if (name.size() < 2) throw_domain("bad root system name '" + name + "'", "type");
    char fam = name[0];
    int n = 0;
    try {
        n = std::stoi(name.substr(1));
    } catch (...) {
        throw_domain("bad root system name '" + name + "'", "type");
    }
    if (n <= 0) throw_domain("bad rank in '" + name + "'", "type");
    if (n > max_rank)
        throw_resource("rank " + std::to_string(n) + " exceeds configured cap " +
                       std::to_string(max_rank), "type");
    RootSystem R;
    R.name_ = name;
    R.rank_ = n;
    R.cartan_ = cartan_from_type(fam, n);
    R.finish_setup(max_rank);
    return R;
}

RootSystem RootSystem::from_cartan(std::string label, IMat cartan, int max_rank) {
    if (cartan.rows() != cartan.cols()) throw_domain("Cartan matrix not square", "cartan");
    if (cartan.rows() > max_rank)
        throw_resource("rank exceeds configured cap", "cartan");
    RootSystem R;
    R.name_ = std::move(label);
    R.rank_ = static_cast<int>(cartan.rows());
    R.cartan_ = std::move(cartan);
    R.finish_setup(max_rank);
    return R;
}

void RootSystem::finish_setup(int max_rank) {
    max_rank_ = max_rank;
    const int n = rank_;
    // basic Cartan axioms
    for (int i = 0; i < n; ++i) {
        if (cartan_(i, i) != 2) throw_domain("Cartan diagonal must be 2", "cartan");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cartan_(i, j) > 0) throw_domain("Cartan off-diagonal must be <= 0", "cartan");
            if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0))
                throw_domain("Cartan zero pattern must be symmetric", "cartan");
            if (cartan_(i, j) < -1) simply_laced_ = false;
        }
    }

    // symmetrizer d_i: d_i C_ij = d_j C_ji, by graph traversal with rationals
    std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (!d[static_cast<size_t>(start)].is_zero()) continue;
        d[static_cast<size_t>(start)] = Rational(1);
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (cartan_(i, j) == 0 || i == j) continue;
                Rational dj = d[static_cast<size_t>(i)] * Rational(cartan_(i, j), cartan_(j, i));
                if (d[static_cast<size_t>(j)].is_zero()) {
                    d[static_cast<size_t>(j)] = dj;
                    stack.push_back(j);
                } else if (d[static_cast<size_t>(j)] != dj) {
                    throw_domain("Cartan matrix is not symmetrizable", "cartan");
                }
            }
        }
    }
    // scale to smallest positive integers
    Int lcm_den = 1;
    for (auto& x : d) lcm_den = std::lcm(lcm_den, x.den());
    Int gcd_num = 0;
    for (auto& x : d) gcd_num = std::gcd(gcd_num, (x * Rational(lcm_den)).to_integer());
    symmetrizer_.clear();
    for (auto& x : d)
        symmetrizer_.push_back((x * Rational(lcm_den, gcd_num)).to_integer());

    // positive definiteness of the symmetrization via leading principal minors
    QMat sym = QMat::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym(i, j) = Rational(symmetrizer_[static_cast<size_t>(i)] * cartan_(i, j));
    for (int k = 1; k <= n; ++k) {
        QMat lead = sym.topLeftCorner(k, k);
        if (det_rational(lead).sign() <= 0)
            throw_domain("Cartan matrix is not of finite type", "cartan");
    }

    // Cartan inverse and fundamental-weight Gram matrix
    QMat qc = QMat::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) qc(i, j) = Rational(cartan_(i, j));
    cartan_inv_ = invert_rational(qc);
    gram_ = QMat::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram_(i, j) = Rational(symmetrizer_[static_cast<size_t>(j)]) * cartan_inv_(j, i);

    // simple reflections: s_i(mu) = mu - mu_i * alpha_i
    refl_.clear();
    for (int i = 0; i < n; ++i) {
        IMat m = IMat::Identity(n, n);
        for (int r = 0; r < n; ++r) m(r, i) -= cartan_(r, i);
        refl_.push_back(std::move(m));
    }

    // positive roots: close the simple roots under simple reflections
    std::set<WeightVector> roots;
    std::vector<WeightVector> frontier;
    for (int i = 0; i < n; ++i) {
        roots.insert(simple_root(i));
        frontier.push_back(simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<WeightVector> next;
        for (auto& r : frontier)
            for (int i = 0; i < n; ++i) {
                WeightVector im = reflect(i, r);
                if (roots.insert(im).second) next.push_back(im);
            }
        frontier = std::move(next);
    }
    pos_roots_.clear();
    for (auto& r : roots) {
        IVec rc(n);
        QVec q = cartan_inv_ * r.coords.cast<Rational>();
        bool pos = true;
        for (int i = 0; i < n; ++i) {
            if (q[i].sign() < 0) { pos = false; break; }
            rc[i] = q[i].to_integer();
        }
        if (pos) pos_roots_.push_back(r);
    }
    std::sort(pos_roots_.begin(), pos_roots_.end(), [&](const WeightVector& x, const WeightVector& y) {
        Int hx = (cartan_inv_ * x.coords.cast<Rational>()).sum().to_integer();
        Int hy = (cartan_inv_ * y.coords.cast<Rational>()).sum().to_integer();
        if (hx != hy) return hx < hy;
        return x < y;
    });
    highest_root_ = pos_roots_.back();

    build_weyl_group();
}

Rational RootSystem::form(const WeightVector& x, const WeightVector& y) const {
    Rational r(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            r += Rational(x.coords[i]) * gram_(i, j) * Rational(y.coords[j]);
    return r;
}

Int RootSystem::pairing_with_coroot(const WeightVector& mu, const WeightVector& root) const {
    Rational v = form(mu, root) * Rational(2) / form(root, root);
    return v.to_integer();
}

IVec RootSystem::root_coordinates(const WeightVector& mu) const {
    QVec q = cartan_inv_ * mu.coords.cast<Rational>();
    IVec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = q[i].to_integer();
    return out;
}

WeightVector RootSystem::dominant_representative(const WeightVector& mu) const {
    WeightVector cur = mu;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank_; ++i)
            if (cur.coords[i] < 0) {
                cur = reflect(i, cur);
                changed = true;
            }
    }
    return cur;
}

void RootSystem::build_weyl_group() {
    if (rank_ > max_rank_)
        throw_resource("Weyl enumeration beyond rank cap", "rank");
    const std::size_t order_cap = 2'000'000;
    std::map<std::vector<Int>, std::size_t> seen;
    auto key_of = [&](const IMat& m) {
        std::vector<Int> k(static_cast<size_t>(rank_ * rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) k[static_cast<size_t>(i * rank_ + j)] = m(i, j);
        return k;
    };
    std::vector<WeylElement> elems;
    elems.push_back({IMat::Identity(rank_, rank_), 0});
    seen.emplace(key_of(elems[0].matrix), 0);
    std::size_t head = 0;
    while (head < elems.size()) {
        IMat base = elems[head].matrix;
        int len = elems[head].length;
        ++head;
        for (int i = 0; i < rank_; ++i) {
            IMat next = refl_[static_cast<size_t>(i)] * base;
            auto k = key_of(next);
            if (seen.emplace(std::move(k), elems.size()).second) {
                elems.push_back({std::move(next), len + 1});
                if (elems.size() > order_cap)
                    throw_resource("Weyl group order exceeds cap", "rank");
            }
        }
    }
    weyl_ = std::move(elems);
}

std::vector<WeightVector> RootSystem::weyl_orbit(const WeightVector& mu) const {
    std::set<WeightVector> orbit;
    std::vector<WeightVector> frontier{mu};
    orbit.insert(mu);
    while (!frontier.empty()) {
        std::vector<WeightVector> next;
        for (auto& x : frontier)
            for (int i = 0; i < rank_; ++i) {
                WeightVector im = reflect(i, x);
                if (orbit.insert(im).second) next.push_back(im);
            }
        frontier = std::move(next);
    }
    return {orbit.begin(), orbit.end()};
}

bool Character::weyl_invariant(const RootSystem& R) const {
    for (int i = 0; i < R.rank(); ++i)
        for (auto& [mu, c] : terms_)
            if (coeff(R.reflect(i, mu)) != c) return false;
    return true;
}

std::string Character::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [mu, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = c > 0 ? c : -c;
        if (a != 1) os << a << "*";
        os << "e" << mu.str();
        first = false;
    }
    return os.str();
}

std::vector<WeightVector> p_adic_decompose(const WeightVector& lambda, Int p) {
    if (!lambda.is_dominant()) throw_domain("p-adic decomposition needs a dominant weight", "weight");
    if (p < 2) throw_domain("p must be at least 2", "p");
    std::vector<WeightVector> digits;
    IVec rest = lambda.coords;
    while ((rest.array() != 0).any()) {
        IVec digit(rest.size());
        for (Eigen::Index i = 0; i < rest.size(); ++i) {
            digit[i] = rest[i] % p;
            rest[i] /= p;
        }
        digits.emplace_back(std::move(digit));
    }
    return digits;
}

bool in_reduced_region(const WeightVector& lambda, Int p) {
    return lambda.is_dominant() && (lambda.coords.array() < p).all();
}

Character frobenius_twist(const Character& xi, int t, Int p) {
    if (t < 0) throw_domain("twist exponent must be nonnegative", "t");
    if (t == 0) return xi;
    Int f = checked_pow(p, t);
    Character out;
    for (auto& [mu, c] : xi.terms()) out.add_term(f * mu, c);
    return out;
}

} // namespace charlab
