#include "charlab/qchar.hpp"

#include <algorithm>
#include <sstream>

#include "charlab/weylchar.hpp"

namespace charlab {

Param param_shift(const ParamSpace& space, const Param& a, Int steps) {
    Param out = a;
    if (space.generic) {
        out[0] += steps;
    } else {
        if (space.level == 0)
            throw_domain("no eps-shift on the trivial parameter group", "param");
        out[0] = ((out[0] + steps) % space.p + space.p) % space.p;
    }
    return out;
}

namespace {

void check_param(const ParamSpace& space, const Param& a) {
    if (space.generic) {
        if (a.size() != 1) throw_domain("generic parameter must have one coordinate", "param");
        return;
    }
    if (static_cast<int>(a.size()) != space.level)
        throw_domain("parameter tuple has wrong length", "param");
    for (Int c : a)
        if (c < 0 || c >= space.p) throw_domain("parameter coordinate out of range", "param");
}

} // namespace

void EpsTChar::add_term(Int t_exp, QMonomial m, Int coeff) {
    if (coeff == 0) return;
    for (auto& [key, e] : m) {
        if (e < 0) throw_domain("negative variable exponent", "monomial");
        check_param(space_, key.a);
    }
    // drop zero exponents
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
    TermKey key{t_exp, std::move(m)};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second = Rational::checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

EpsTChar operator+(const EpsTChar& x, const EpsTChar& y) {
    if (x.space_ != y.space_) throw_domain("parameter space mismatch in +", "space");
    EpsTChar r = x;
    for (auto& [key, c] : y.terms_) r.add_term(key.first, key.second, c);
    return r;
}

EpsTChar operator*(const EpsTChar& x, const EpsTChar& y) {
    if (x.space_ != y.space_) throw_domain("parameter space mismatch in *", "space");
    EpsTChar r(x.space_);
    for (auto& [kx, cx] : x.terms_)
        for (auto& [ky, cy] : y.terms_) {
            QMonomial m = kx.second;
            for (auto& [var, e] : ky.second) {
                auto [it, inserted] = m.emplace(var, e);
                if (!inserted) it->second += e;
            }
            r.add_term(kx.first + ky.first, std::move(m), Rational::checked_mul(cx, cy));
        }
    return r;
}

std::string EpsTChar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (auto& [key, c] : terms_) {
        if (!first_term) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = c > 0 ? c : -c;
        bool need_star = false;
        if (a != 1 || (key.first == 0 && key.second.empty())) {
            os << a;
            need_star = true;
        }
        if (key.first != 0) {
            if (need_star) os << "*";
            os << "t";
            if (key.first != 1) os << "^" << key.first;
            need_star = true;
        }
        for (auto& [var, e] : key.second) {
            if (need_star) os << "*";
            os << (var.kind == VarKey::W ? "W" : "V") << "[" << var.node + 1 << ";";
            for (size_t i = 0; i < var.a.size(); ++i) {
                if (i) os << ",";
                os << var.a[i];
            }
            os << "]";
            if (e != 1) os << "^" << e;
            need_star = true;
        }
        first_term = false;
    }
    return os.str();
}

Character pi_collapse(const EpsTChar& x, const RootSystem& R) {
    const int n = R.rank();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && R.cartan()(i, j) < -1)
                throw_unsupported("pi collapse assumes a simply-laced Cartan matrix", "type");
    Character out;
    for (auto& [key, c] : x.terms()) {
        // sum over a of u^{i,a} = W_i - 2 V_i + sum_{j ~ i} V_j, independent of
        // the eps-shift
        IVec wtot = IVec::Zero(n), vtot = IVec::Zero(n);
        for (auto& [var, e] : key.second) {
            if (var.node < 0 || var.node >= n) throw_domain("node out of range", "monomial");
            if (var.kind == VarKey::W) wtot[var.node] += e;
            else vtot[var.node] += e;
        }
        IVec u = wtot;
        for (int i = 0; i < n; ++i) {
            u[i] -= 2 * vtot[i];
            for (int j = 0; j < n; ++j)
                if (j != i && R.cartan()(j, i) == -1) u[i] += vtot[j];
        }
        out.add_term(WeightVector(u), c); // t -> 1
    }
    return out;
}

EpsTChar twist_hat(const EpsTChar& x, int t) {
    if (t < 0) throw_domain("twist exponent must be nonnegative", "t");
    if (x.space().generic) throw_domain("twist needs a finite parameter group", "space");
    if (t == 0) return x;
    const Int p = x.space().p;
    const int src_level = x.space().level;
    ParamSpace target = ParamSpace::group(p, src_level + t);

    // all xi in (Z/p)^t
    std::vector<Param> cosets;
    Param xi(static_cast<size_t>(t), 0);
    while (true) {
        cosets.push_back(xi);
        int k = 0;
        while (k < t) {
            if (++xi[static_cast<size_t>(k)] < p) break;
            xi[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == t) break;
    }

    EpsTChar out(target);
    for (auto& [key, c] : x.terms()) {
        QMonomial m;
        for (auto& [var, e] : key.second)
            for (auto& coset : cosets) {
                VarKey nk = var;
                nk.a.insert(nk.a.end(), coset.begin(), coset.end());
                m[nk] += e;
            }
        out.add_term(key.first, std::move(m), c);
    }
    return out;
}

EpsTChar reduce_to_group(const EpsTChar& x, Int p, int level) {
    if (!x.space().generic) throw_domain("reduce_to_group expects a generic-lattice input", "space");
    if (level < 1) throw_domain("target level must be >= 1", "level");
    EpsTChar out(ParamSpace::group(p, level));
    for (auto& [key, c] : x.terms()) {
        QMonomial m;
        for (auto& [var, e] : key.second) {
            VarKey nk = var;
            nk.a.assign(static_cast<size_t>(level), 0);
            nk.a[0] = ((var.a[0] % p) + p) % p;
            m[nk] += e;
        }
        out.add_term(key.first, std::move(m), c);
    }
    return out;
}

EpsTChar lift_level(const EpsTChar& x, int level) {
    if (x.space().generic) throw_domain("lift_level expects a group-space input", "space");
    if (level < x.space().level) throw_domain("cannot lift to a lower level", "level");
    if (level == x.space().level) return x;
    EpsTChar out(ParamSpace::group(x.space().p, level));
    for (auto& [key, c] : x.terms()) {
        QMonomial m;
        for (auto& [var, e] : key.second) {
            VarKey nk = var;
            nk.a.resize(static_cast<size_t>(level), 0);
            m[nk] += e;
        }
        out.add_term(key.first, std::move(m), c);
    }
    return out;
}

QMonomial sl2_string_monomial(Int a, Int m) {
    QMonomial out;
    for (Int j = 0; j < m; ++j) out[VarKey{VarKey::W, 0, Param{a + 2 * j}}] = 1;
    return out;
}

QMonomial fundamental_monomial(int node, Int a) {
    return {{VarKey{VarKey::W, node - 1, Param{a}}, 1}};
}

namespace {

// the (m+1)-monomial ladder of an sl2 string module
EpsTChar expand_sl2_string(Int a, Int m) {
    EpsTChar out(ParamSpace::free_lattice());
    for (Int k = 0; k <= m; ++k) {
        QMonomial mono = sl2_string_monomial(a, m);
        for (Int r = 1; r <= k; ++r) mono[VarKey{VarKey::V, 0, Param{a + 2 * (m - r) + 1}}] += 1;
        out.add_term(2 * k, std::move(mono), 1); // t-degree: twice the V-depth
    }
    return out;
}

// minuscule path model for the i-th fundamental of sl_{n+1}: monomials are
// indexed by i-subsets of {1..n+1}; moving entry k -> s_k multiplies by
// V_{j, a eps^j} for each j it passes through
EpsTChar expand_type_a_fundamental(int n, int node, Int a, std::size_t step_cap) {
    EpsTChar out(ParamSpace::free_lattice());
    std::vector<int> subset(static_cast<size_t>(node));
    for (int k = 0; k < node; ++k) subset[static_cast<size_t>(k)] = k + 1;
    std::size_t count = 0;
    while (true) {
        QMonomial mono;
        mono[VarKey{VarKey::W, node - 1, Param{a}}] = 1;
        Int depth = 0;
        for (int k = 1; k <= node; ++k)
            for (int j = k; j < subset[static_cast<size_t>(k - 1)]; ++j) {
                mono[VarKey{VarKey::V, j - 1, Param{a + j}}] += 1;
                ++depth;
            }
        out.add_term(2 * depth, std::move(mono), 1);
        if (++count > step_cap) throw_resource("expansion step cap exceeded", "step-cap");
        // next i-subset of {1..n+1} in lexicographic order
        int k = node - 1;
        while (k >= 0 && subset[static_cast<size_t>(k)] == n + 1 - (node - 1 - k)) --k;
        if (k < 0) break;
        ++subset[static_cast<size_t>(k)];
        for (int l = k + 1; l < node; ++l)
            subset[static_cast<size_t>(l)] = subset[static_cast<size_t>(l - 1)] + 1;
    }
    return out;
}

} // namespace

EpsTChar fm_expand(const RootSystem& R, const QMonomial& highest, std::size_t step_cap) {
    if (highest.empty()) return EpsTChar::one(ParamSpace::free_lattice());
    // all variables must be W's with exponent 1 in the generic lattice
    for (auto& [var, e] : highest) {
        if (var.kind != VarKey::W)
            throw_unsupported("highest monomial must be a product of W variables", "monomial");
        if (e != 1)
            throw_unsupported("highest monomial must be multiplicity-free", "monomial");
        if (var.a.size() != 1)
            throw_unsupported("expansion runs in the generic parameter lattice", "monomial");
    }

    if (R.rank() == 1) {
        // sl2 string: parameters a, a+2, ..., a+2(m-1) at node 1
        std::vector<Int> shifts;
        for (auto& [var, e] : highest) {
            if (var.node != 0) throw_domain("node out of range for A1", "monomial");
            shifts.push_back(var.a[0]);
        }
        std::sort(shifts.begin(), shifts.end());
        for (size_t j = 1; j < shifts.size(); ++j)
            if (shifts[j] != shifts[j - 1] + 2)
                throw_unsupported("A1 highest monomial must be a single string "
                                  "(consecutive eps^2 shifts)", "monomial");
        return expand_sl2_string(shifts.front(), static_cast<Int>(shifts.size()));
    }

    if (R.name().size() >= 1 && R.name()[0] == 'A' && highest.size() == 1) {
        auto& [var, e] = *highest.begin();
        (void)e;
        return expand_type_a_fundamental(R.rank(), var.node + 1, var.a[0], step_cap);
    }

    throw_unsupported("expansion is guarded to sl2 strings and type-A fundamental modules",
                      "monomial");
}

EpsTChar character_to_eps(const RootSystem& R, const WeightVector& lambda, const Character& chi,
                          Int p, int level) {
    if (level < 0) throw_domain("level must be nonnegative", "level");
    EpsTChar out(ParamSpace::group(p, level));
    Param base(static_cast<size_t>(level), 0);
    for (auto& [mu, c] : chi.terms()) {
        IVec v = R.root_coordinates(lambda - mu);
        QMonomial m;
        Int depth = 0;
        for (int i = 0; i < R.rank(); ++i) {
            if (v[i] < 0) throw_domain("character support above lambda", "character");
            if (lambda.coords[i] > 0) m[VarKey{VarKey::W, i, base}] = lambda.coords[i];
            if (v[i] > 0) m[VarKey{VarKey::V, i, base}] = v[i];
            depth += v[i];
        }
        out.add_term(2 * depth, std::move(m), c);
    }
    return out;
}

EpsTChar assemble_ch_et(const RootSystem& R, const std::vector<WeightVector>& digits,
                        const WeightVector& tail, Int p, int level) {
    if (level < 0) throw_domain("level must be nonnegative", "level");
    if (static_cast<int>(digits.size()) > level)
        throw_domain("more digits than the level admits", "digits");
    for (auto& d : digits)
        if (!in_reduced_region(d, p))
            throw_domain("digit " + d.str() + " outside the reduced region", "digits");
    if (!tail.is_dominant()) throw_domain("tail weight must be dominant", "tail");

    // (E0_{tail})^[level]
    EpsTChar acc = twist_hat(
        character_to_eps(R, tail, weyl_character(R, tail), p, 0), level);

    for (std::size_t i = 0; i < digits.size(); ++i) {
        const WeightVector& d = digits[i];
        EpsTChar factor(ParamSpace::free_lattice());
        if (d.is_zero()) {
            factor = EpsTChar::one(ParamSpace::free_lattice());
        } else if (R.rank() == 1) {
            factor = fm_expand(R, sl2_string_monomial(0, d.coords[0]));
        } else {
            int node = -1;
            bool fundamental = true;
            for (int k = 0; k < R.rank(); ++k) {
                if (d.coords[k] == 0) continue;
                if (d.coords[k] == 1 && node < 0) node = k;
                else fundamental = false;
            }
            if (!fundamental || node < 0)
                throw_unsupported("digit " + d.str() +
                                  " has no guarded level-one expansion (A1 strings and type-A "
                                  "fundamentals only)", "digits");
            factor = fm_expand(R, fundamental_monomial(node + 1, 0));
        }
        EpsTChar grouped = reduce_to_group(factor, p, 1);
        acc *= twist_hat(lift_level(grouped, level - static_cast<int>(i)), static_cast<int>(i));
    }
    return acc;
}

} // namespace charlab
