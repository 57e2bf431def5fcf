#include "charlab/weylchar.hpp"

#include <algorithm>

namespace charlab {

namespace {

// Height functional <mu, rho_vee> as a rational; strictly maximal on the
// dominant regular member of each Weyl orbit, which makes it a valid leading
// term order for the alternating-sum division.
struct HeightOrder {
    QVec rho_vee; // coefficients c with <mu, rho_vee> = sum_i c_i mu_i

    explicit HeightOrder(const RootSystem& R) {
        const int n = R.rank();
        QMat ct = QMat::Constant(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ct(i, j) = Rational(R.cartan()(j, i));
        // rho_vee = C^-T * ones: <alpha_i, rho_vee> = 1 for all i
        QVec ones = QVec::Constant(n, Rational(1));
        // solve ct * x = ones by Gauss elimination
        QMat m = ct;
        QVec b = ones;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!m(r, col).is_zero()) { piv = r; break; }
            m.row(piv).swap(m.row(col));
            std::swap(b[piv], b[col]);
            Rational f = m(col, col);
            for (int c = 0; c < n; ++c) m(col, c) = m(col, c) / f;
            b[col] = b[col] / f;
            for (int r = 0; r < n; ++r) {
                if (r == col || m(r, col).is_zero()) continue;
                Rational g = m(r, col);
                for (int c = 0; c < n; ++c) m(r, c) = m(r, c) - g * m(col, c);
                b[r] = b[r] - g * b[col];
            }
        }
        rho_vee = b;
    }

    Rational height(const WeightVector& mu) const {
        Rational h(0);
        for (Eigen::Index i = 0; i < mu.coords.size(); ++i)
            h += rho_vee[i] * Rational(mu.coords[i]);
        return h;
    }

    // true if x is a "larger" term than y
    bool greater(const WeightVector& x, const WeightVector& y) const {
        Rational hx = height(x), hy = height(y);
        if (hx != hy) return hy < hx;
        return y < x;
    }

    const WeightVector* leading(const Character& c) const {
        const WeightVector* best = nullptr;
        for (auto& [mu, coeff] : c.terms())
            if (!best || greater(mu, *best)) best = &mu;
        return best;
    }
};

Character alternating_sum(const RootSystem& R, const WeightVector& nu) {
    Character out;
    for (auto& w : R.weyl_group()) {
        WeightVector img(IVec(w.matrix * nu.coords));
        out.add_term(img, (w.length % 2 == 0) ? 1 : -1);
    }
    return out;
}

} // namespace

Character weyl_character(const RootSystem& R, const WeightVector& lambda) {
    if (!lambda.is_dominant()) throw_domain("weyl_character needs a dominant weight", "weight");
    static std::mutex memo_mutex;
    static std::map<std::pair<std::string, WeightVector>, Character> memo;
    const std::pair<std::string, WeightVector> key{R.name(), lambda};
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    HeightOrder ord(R);
    const WeightVector rho = R.rho();
    Character num = alternating_sum(R, lambda + rho);
    Character den = alternating_sum(R, rho);
    Character quot;
    std::size_t steps = 0;
    const WeightVector* lt_den = ord.leading(den); // = e^rho, coefficient 1
    while (!num.is_zero()) {
        if (++steps > 5'000'000) throw_resource("Laurent division did not terminate");
        const WeightVector* lt = ord.leading(num);
        Int c = num.coeff(*lt);
        WeightVector mu = *lt - *lt_den;
        quot.add_term(mu, c);
        num -= c * (Character::monomial(mu) * den);
    }

    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(key, quot);
    }
    return quot;
}

std::map<WeightVector, Int> freudenthal_multiplicities(const RootSystem& R,
                                                       const WeightVector& lambda) {
    if (!lambda.is_dominant()) throw_domain("freudenthal needs a dominant weight", "weight");
    const int n = R.rank();
    const WeightVector rho = R.rho();
    const Rational top_norm = R.form(lambda + rho, lambda + rho);

    // Dominant weights mu = lambda - C*c over the box 0 <= c_i <= (C^-1 lambda)_i.
    // The bound holds because C^-1 mu is entrywise nonnegative for dominant mu.
    std::vector<Int> bound(static_cast<size_t>(n));
    {
        QMat qc = QMat::Constant(n, n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) qc(i, j) = Rational(R.cartan()(i, j));
        QVec rhs = lambda.coords.cast<Rational>();
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

    struct Candidate {
        WeightVector mu;
        Int height; // sum of root coordinates of lambda - mu
    };
    std::vector<Candidate> dominant;
    std::vector<Int> c(static_cast<size_t>(n), 0);
    while (true) {
        IVec shift = IVec::Zero(n);
        Int ht = 0;
        for (int i = 0; i < n; ++i) {
            shift += c[static_cast<size_t>(i)] * R.cartan().col(i);
            ht += c[static_cast<size_t>(i)];
        }
        WeightVector mu(IVec(lambda.coords - shift));
        if (mu.is_dominant()) dominant.push_back({mu, ht});
        int k = 0;
        while (k < n) {
            if (++c[static_cast<size_t>(k)] <= bound[static_cast<size_t>(k)]) break;
            c[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(dominant.begin(), dominant.end(), [](const Candidate& a, const Candidate& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.mu < b.mu;
    });

    std::map<WeightVector, Int> mult;
    auto mult_of = [&](const WeightVector& nu) -> Int {
        WeightVector dom = R.dominant_representative(nu);
        auto it = mult.find(dom);
        return it == mult.end() ? 0 : it->second;
    };

    // top-down recursion; weights along a root string form an unbroken
    // interval, so the k-walk stops at the first zero multiplicity
    for (auto& cand : dominant) {
        if (cand.height == 0) {
            mult[cand.mu] = 1;
            continue;
        }
        const WeightVector& mu = cand.mu;
        Rational denom = top_norm - R.form(mu + rho, mu + rho);
        if (denom.sign() <= 0) throw_domain("Freudenthal denominator not positive");
        Rational numer(0);
        for (auto& alpha : R.positive_roots()) {
            for (Int k = 1;; ++k) {
                WeightVector nu = mu + k * alpha;
                Int m = mult_of(nu);
                if (m == 0) break;
                numer += Rational(2) * R.form(nu, alpha) * Rational(m);
            }
        }
        Rational q = numer / denom;
        if (!q.is_integer()) throw_domain("Freudenthal produced a non-integer multiplicity");
        if (q.num() != 0) mult[mu] = q.to_integer();
    }
    return mult;
}

Character freudenthal_character(const RootSystem& R, const WeightVector& lambda) {
    auto mult = freudenthal_multiplicities(R, lambda);
    Character out;
    for (auto& [mu, m] : mult)
        for (auto& nu : R.weyl_orbit(mu)) out.add_term(nu, m);
    return out;
}

Int weyl_dimension(const RootSystem& R, const WeightVector& lambda) {
    if (!lambda.is_dominant()) throw_domain("weyl_dimension needs a dominant weight", "weight");
    const WeightVector rho = R.rho();
    Rational dim(1);
    for (auto& alpha : R.positive_roots())
        dim *= R.form(lambda + rho, alpha) / R.form(rho, alpha);
    return dim.to_integer();
}

std::map<WeightVector, Int> tensor_decompose(const RootSystem& R, const Character& chi_lambda,
                                             const Character& chi_mu) {
    if (!chi_lambda.weyl_invariant(R) || !chi_mu.weyl_invariant(R))
        throw_domain("tensor_decompose inputs must be Weyl-invariant characters");
    HeightOrder ord(R);
    Character rest = chi_lambda * chi_mu;
    std::map<WeightVector, Int> out;
    while (!rest.is_zero()) {
        const WeightVector* lt = ord.leading(rest);
        if (!lt->is_dominant()) throw_domain("highest-term extraction hit a non-dominant leader");
        Int m = rest.coeff(*lt);
        if (m < 0) throw_domain("negative multiplicity in tensor decomposition");
        out[*lt] = m;
        rest -= m * weyl_character(R, *lt);
    }
    return out;
}

const Character& DominantCharacterTable::get(const WeightVector& lambda) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(lambda);
    if (it == entries_.end()) it = entries_.emplace(lambda, weyl_character(*R_, lambda)).first;
    return it->second;
}

} // namespace charlab
