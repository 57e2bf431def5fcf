#include "charlab/lusztig.hpp"

#include <algorithm>
#include <cstring>

namespace charlab {

const char* e1_mode_name(E1Mode m) {
    switch (m) {
        case E1Mode::Sl2ClosedForm: return "sl2";
        case E1Mode::LowestAlcove: return "lowest-alcove";
        case E1Mode::KlEngine: return "kl";
        case E1Mode::UserTable: return "table";
    }
    return "?";
}

E1Mode e1_mode_from_name(const std::string& name) {
    if (name == "sl2") return E1Mode::Sl2ClosedForm;
    if (name == "lowest-alcove") return E1Mode::LowestAlcove;
    if (name == "kl") return E1Mode::KlEngine;
    if (name == "table") return E1Mode::UserTable;
    throw_domain("unknown e1 source '" + name + "'", "e1-source");
}

Int alcove_level(const RootSystem& R, const WeightVector& lambda) {
    return R.pairing_with_coroot(lambda + R.rho(), R.highest_root());
}

namespace detail {

bool regular_weight(const RootSystem& R, const WeightVector& lambda, Int p) {
    WeightVector shifted = lambda + R.rho();
    for (auto& alpha : R.positive_roots())
        if (R.pairing_with_coroot(shifted, alpha) % p == 0) return false;
    return true;
}

namespace {

// Affine reflection in the wall (mu, theta_vee) = -p; together with the finite
// simple reflections this generates W semidirect p * (root lattice) for the
// simply-laced types this engine is guarded to.
WeightVector affine_reflect(const RootSystem& R, const WeightVector& mu, Int p) {
    Int k = R.pairing_with_coroot(mu, R.highest_root());
    return mu - (k + p) * R.highest_root();
}

bool in_base_alcove(const RootSystem& R, const WeightVector& mu, Int p) {
    for (int i = 0; i < R.rank(); ++i)
        if (mu.coords[i] >= 0) return false;
    return R.pairing_with_coroot(mu, R.highest_root()) > -p;
}

// Walk a regular rho-shifted weight into the antidominant base alcove; the
// generators applied, in order, form a reduced word for the alcove element.
std::pair<WeightVector, std::vector<int>> walk_to_base(const RootSystem& R, WeightVector mu,
                                                       Int p) {
    std::vector<int> word;
    const int affine_gen = R.rank();
    std::size_t guard = 0;
    while (!in_base_alcove(R, mu, p)) {
        if (++guard > 100000) throw_resource("alcove walk did not terminate");
        bool stepped = false;
        for (int i = 0; i < R.rank(); ++i)
            if (mu.coords[i] > 0) {
                mu = R.reflect(i, mu);
                word.push_back(i);
                stepped = true;
                break;
            }
        if (stepped) continue;
        if (R.pairing_with_coroot(mu, R.highest_root()) < -p) {
            mu = affine_reflect(R, mu, p);
            word.push_back(affine_gen);
            continue;
        }
        throw_domain("alcove walk stuck on a wall (weight not regular)");
    }
    return {mu, word};
}

} // namespace

std::vector<DotOrbitPoint> dominant_dot_orbit_below(const RootSystem& R, const WeightVector& lambda,
                                                    Int p, const CoxeterPresentation& aff) {
    const WeightVector rho = R.rho();
    auto [base, lam_word] = walk_to_base(R, lambda + rho, p);

    std::vector<DotOrbitPoint> out;
    // enumerate dominant mu = lambda - C*c with c in the nonnegative box
    const int n = R.rank();
    std::vector<Int> bound(static_cast<size_t>(n), 0);
    {
        // c = C^-1 (lambda - mu) and C^-1 mu >= 0 entrywise for dominant mu
        QVec q = lambda.coords.cast<Rational>();
        // bound_i = floor((C^-1 lambda)_i)
        QMat qc = QMat::Constant(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) qc(i, j) = Rational(R.cartan()(i, j));
        // gaussian solve qc * x = lambda
        QVec rhs = q;
        QMat m = qc;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!m(r, col).is_zero()) { piv = r; break; }
            m.row(piv).swap(m.row(col));
            std::swap(rhs[piv], rhs[col]);
            Rational f = m(col, col);
            for (int c = 0; c < n; ++c) m(col, c) = m(col, c) / f;
            rhs[col] = rhs[col] / f;
            for (int r = 0; r < n; ++r) {
                if (r == col || m(r, col).is_zero()) continue;
                Rational g = m(r, col);
                for (int c = 0; c < n; ++c) m(r, c) = m(r, c) - g * m(col, c);
                rhs[r] = rhs[r] - g * rhs[col];
            }
        }
        for (int i = 0; i < n; ++i) {
            Rational f = rhs[i];
            Int fl = f.num() >= 0 ? f.num() / f.den() : -((-f.num() + f.den() - 1) / f.den());
            bound[static_cast<size_t>(i)] = std::max<Int>(fl, 0);
        }
    }
    std::vector<Int> c(static_cast<size_t>(n), 0);
    while (true) {
        IVec shift = IVec::Zero(n);
        for (int i = 0; i < n; ++i) shift += c[static_cast<size_t>(i)] * R.cartan().col(i);
        WeightVector mu(IVec(lambda.coords - shift));
        if (mu.is_dominant() && regular_weight(R, mu, p)) {
            auto [mbase, mword] = walk_to_base(R, mu + rho, p);
            if (mbase == base) {
                CoxeterElement x = CoxeterElement::from_word(aff, mword);
                // minimal representative of W_f x: strip finite left descents
                CoxeterElement xbar = x;
                bool stripped = true;
                while (stripped && !xbar.is_identity()) {
                    stripped = false;
                    for (int s = 0; s < n; ++s)
                        if (!left_ascent(aff, xbar, s)) {
                            xbar = multiply_left(aff, s, xbar);
                            stripped = true;
                            break;
                        }
                }
                out.push_back({mu, std::move(x), std::move(xbar)});
            }
        }
        int k = 0;
        while (k < n) {
            if (++c[static_cast<size_t>(k)] <= bound[static_cast<size_t>(k)]) break;
            c[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(out.begin(), out.end(), [&lambda](const DotOrbitPoint& a, const DotOrbitPoint& b) {
        if (a.minimal.length() != b.minimal.length())
            return a.minimal.length() < b.minimal.length();
        bool a_is_top = a.mu == lambda, b_is_top = b.mu == lambda;
        if (a_is_top != b_is_top) return b_is_top;
        return a.mu < b.mu;
    });
    return out;
}

Character kl_irreducible_character(const RootSystem& R, Int p, const WeightVector& lambda,
                                   KLContext& ctx) {
    if (!regular_weight(R, lambda, p))
        throw_unsupported("kl e1 source handles regular weights only; " + lambda.str() +
                          " lies on a wall", "weight");
    const CoxeterPresentation& aff = ctx.presentation();
    auto points = dominant_dot_orbit_below(R, lambda, p, aff);
    const std::size_t m = points.size();
    if (m == 0 || !(points[m - 1].mu == lambda))
        throw_domain("internal: dot orbit enumeration lost lambda");

    // finite Weyl group inside the affine presentation (generators 0..rank-1)
    std::vector<CoxeterElement> finite{CoxeterElement::identity()};
    for (std::size_t head = 0; head < finite.size(); ++head)
        for (int s = 0; s < R.rank(); ++s) {
            CoxeterElement u = multiply_left(aff, s, finite[head]);
            if (std::find(finite.begin(), finite.end(), u) == finite.end()) finite.push_back(u);
        }

    auto antispherical = [&](const CoxeterElement& xbar, const CoxeterElement& wbar) -> Int {
        Int n = 0;
        for (auto& u : finite) {
            CoxeterElement ux = xbar;
            for (auto it = u.word().rbegin(); it != u.word().rend(); ++it)
                ux = multiply_left(aff, *it, ux);
            Int term = ctx.kl_polynomial(ux, wbar).at_one();
            n = Rational::checked_add(n, (u.length() % 2 == 0) ? term : -term);
        }
        return n;
    };

    // d[i][j] = [V(mu_i) : L(mu_j)]; upper triangular with unit diagonal
    std::vector<std::vector<Int>> d(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j)
            d[i][j] = antispherical(points[i].minimal, points[j].minimal);
        if (d[i][i] != 1) throw_domain("decomposition matrix diagonal is not 1");
    }
    std::vector<std::vector<Int>> inv(m, std::vector<Int>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        inv[j][j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            Int s = 0;
            for (std::size_t k = i + 1; k <= j; ++k)
                s = Rational::checked_add(s, Rational::checked_mul(d[i][k], inv[k][j]));
            inv[i][j] = -s;
        }
    }
    Character out;
    for (std::size_t i = 0; i < m; ++i) {
        if (inv[i][m - 1] == 0) continue;
        out += inv[i][m - 1] * weyl_character(R, points[i].mu);
    }
    return out;
}

} // namespace detail

E1Source::E1Source(const RootSystem& R, E1Mode mode, Int p) : R_(&R), mode_(mode), p_(p) {
    if (p < 2) throw_domain("p must be a prime >= 2", "p");
    if (mode == E1Mode::Sl2ClosedForm && R.name() != "A1")
        throw_unsupported("sl2 closed form needs type A1", "e1-source");
    if (mode == E1Mode::UserTable)
        throw_domain("user-table source needs a table; use with_table", "e1-source");
    if (mode == E1Mode::KlEngine) {
        if (R.name() != "A1" && R.name() != "A2")
            throw_unsupported("kl e1 source implemented for simply-laced rank <= 2 (A1, A2)",
                              "e1-source");
        Int coxeter_number = R.rank() + 1; // type A
        if (p < coxeter_number)
            throw_unsupported("kl e1 source needs p >= Coxeter number", "p");
        klctx_ = std::make_shared<KLContext>(
            CoxeterPresentation::from_name(R.name() + "~"), 24);
    }
}

E1Source E1Source::with_table(const RootSystem& R, Int p,
                              std::map<WeightVector, Character> table) {
    E1Source src(R, E1Mode::LowestAlcove, p);
    src.mode_ = E1Mode::UserTable;
    for (auto& [lambda, chi] : table) {
        if (!in_reduced_region(lambda, p))
            throw_domain("table weight " + lambda.str() + " outside the reduced region", "table");
        if (chi.coeff(lambda) != 1)
            throw_domain("table character at " + lambda.str() + " has leading coefficient != 1",
                         "table");
        if (!chi.weyl_invariant(R))
            throw_domain("table character at " + lambda.str() + " is not Weyl-invariant", "table");
        if (alcove_level(R, lambda) <= p && chi != weyl_character(R, lambda))
            throw_domain("table character at lowest-alcove weight " + lambda.str() +
                         " must equal the Weyl character", "table");
    }
    src.table_ = std::move(table);
    return src;
}

Character E1Source::e1_reduced(const WeightVector& lambda) const {
    if (!in_reduced_region(lambda, p_))
        throw_domain("weight " + lambda.str() + " is not in the reduced region for p = " +
                     std::to_string(p_), "weight");
    switch (mode_) {
        case E1Mode::Sl2ClosedForm:
            return weyl_character(*R_, lambda);
        case E1Mode::LowestAlcove: {
            if (alcove_level(*R_, lambda) > p_)
                throw_unsupported("weight " + lambda.str() +
                                  " is outside the lowest alcove; choose another e1 source",
                                  "weight");
            return weyl_character(*R_, lambda);
        }
        case E1Mode::KlEngine:
            return e1_kl_engine(lambda);
        case E1Mode::UserTable: {
            auto it = table_.find(lambda);
            if (it == table_.end())
                throw_domain("weight " + lambda.str() + " missing from the e1 table", "weight");
            return it->second;
        }
    }
    throw_domain("bad e1 mode");
}

Character E1Source::e1_kl_engine(const WeightVector& lambda) const {
    return detail::kl_irreducible_character(*R_, p_, lambda, *klctx_);
}

Character E1Source::e1_full(const WeightVector& lambda) const {
    if (!lambda.is_dominant()) throw_domain("e1 needs a dominant weight", "weight");
    auto digits = p_adic_decompose(lambda, p_);
    if (digits.empty()) return Character::one(R_->rank());
    WeightVector tail(IVec(IVec::Zero(R_->rank())));
    Int f = 1;
    for (std::size_t j = 1; j < digits.size(); ++j) {
        tail = tail + f * digits[j];
        f *= p_;
    }
    Character head = e1_reduced(digits[0]);
    if (tail.is_zero()) return head;
    return head * frobenius_twist(weyl_character(*R_, tail), 1, p_);
}

LevelCharacter e_n(const E1Source& src, const WeightVector& lambda, int level) {
    if (level < 0) throw_domain("level must be nonnegative", "level");
    if (!lambda.is_dominant()) throw_domain("e_n needs a dominant weight", "weight");
    const RootSystem& R = src.root_system();
    const Int p = src.p();
    LevelCharacter out;
    out.lambda = lambda;
    out.level = level;
    out.p = p;
    if (level == 0) {
        out.character = weyl_character(R, lambda);
        return out;
    }
    auto digits = p_adic_decompose(lambda, p);
    Character acc = Character::one(R.rank());
    for (int i = 0; i < level && i < static_cast<int>(digits.size()); ++i)
        acc *= frobenius_twist(src.e1_reduced(digits[static_cast<size_t>(i)]), i, p);
    // tail sum_{j >= level} p^{j-level} lambda_j
    WeightVector tail(IVec(IVec::Zero(R.rank())));
    Int f = 1;
    for (std::size_t j = static_cast<size_t>(level); j < digits.size(); ++j) {
        tail = tail + f * digits[j];
        f *= p;
    }
    if (!tail.is_zero())
        acc *= frobenius_twist(weyl_character(R, tail), level, p);
    out.character = std::move(acc);
    return out;
}

SteinbergWitness steinberg_check(const E1Source& src, const WeightVector& w, int level) {
    if (level < 1) throw_domain("steinberg check needs level >= 1", "level");
    const RootSystem& R = src.root_system();
    const Int p = src.p();
    SteinbergWitness out;
    auto digits = p_adic_decompose(w, p);
    WeightVector wred = digits.empty() ? WeightVector(IVec(IVec::Zero(R.rank()))) : digits[0];
    WeightVector wtail(IVec((w - wred).coords / p));
    out.w_reduced = wred;
    out.w_tail = wtail;
    out.via_induction = e_n(src, w, level).character;
    Character left = e_n(src, wred, level).character;
    Character right = frobenius_twist(e_n(src, wtail, level - 1).character, 1, p);
    out.via_product = left * right;
    out.equal = out.via_induction == out.via_product;
    return out;
}

bool stabilization_check(const E1Source& src, const WeightVector& lambda, int n_max) {
    if (!in_reduced_region(lambda, src.p()))
        throw_domain("stabilization check needs a reduced-region weight", "weight");
    Character first = e_n(src, lambda, 1).character;
    for (int n = 2; n <= n_max; ++n)
        if (e_n(src, lambda, n).character != first) return false;
    return true;
}

} // namespace charlab
