#include "charlab/quiverfix.hpp"

#include <algorithm>
#include <map>

namespace charlab {

std::vector<FixedComponentDescriptor> enumerate_components(Int w, Int p) {
    if (p < 1) throw_domain("p must be positive", "p");
    if (w < 0 || w % p != 0) throw_domain("p must divide the total framing w", "w");
    const Int wp = w / p;
    std::vector<FixedComponentDescriptor> out;
    std::vector<Int> v(static_cast<size_t>(p), 0);
    while (true) {
        FixedComponentDescriptor d;
        d.p = p;
        d.w.assign(static_cast<size_t>(p), wp);
        d.v = v;
        d.even = std::all_of(v.begin(), v.end(), [&](Int x) { return x == v[0]; });
        d.fiber_rank = 0;
        for (Int s = 0; s < p; ++s) {
            Int prev = v[static_cast<size_t>((s - 1 + p) % p)];
            d.fiber_rank += (wp - v[static_cast<size_t>(s)]) * prev;
        }
        out.push_back(std::move(d));
        int k = 0;
        while (k < p) {
            if (++v[static_cast<size_t>(k)] <= wp) break;
            v[static_cast<size_t>(k)] = 0;
            ++k;
        }
        if (k == p) break;
    }
    return out;
}

KLPolynomial gaussian_binomial(Int n, Int k) {
    if (k < 0 || k > n) return KLPolynomial::zero();
    // prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i), by exact division
    auto one_minus_q = [](Int e) {
        std::vector<Int> c(static_cast<size_t>(e) + 1, 0);
        c[0] = 1;
        c[static_cast<size_t>(e)] = -1;
        return KLPolynomial(std::move(c));
    };
    KLPolynomial num = KLPolynomial::one();
    KLPolynomial den = KLPolynomial::one();
    for (Int i = 1; i <= k; ++i) {
        num = num * one_minus_q(n - k + i);
        den = den * one_minus_q(i);
    }
    // exact polynomial division num / den
    std::vector<Int> r(num.coeffs());
    const auto& dv = den.coeffs();
    std::vector<Int> q(r.size() >= dv.size() ? r.size() - dv.size() + 1 : 0, 0);
    for (size_t i = q.size(); i-- > 0;) {
        Int top = r[i + dv.size() - 1];
        if (top % dv.back() != 0) throw_domain("Gaussian binomial division not exact");
        Int f = top / dv.back();
        q[i] = f;
        for (size_t j = 0; j < dv.size(); ++j) r[i + j] -= f * dv[j];
    }
    for (Int c : r)
        if (c != 0) throw_domain("Gaussian binomial division left a remainder");
    return KLPolynomial(std::move(q));
}

namespace {

KLPolynomial in_t_squared(const KLPolynomial& f) {
    std::vector<Int> c(static_cast<size_t>(2 * std::max(0, f.degree())) + 1, 0);
    for (int k = 0; k <= f.degree(); ++k) c[static_cast<size_t>(2 * k)] = f.coeff(k);
    return KLPolynomial(std::move(c));
}

} // namespace

KLPolynomial poincare_polynomial(const FixedComponentDescriptor& d) {
    KLPolynomial out = KLPolynomial::one();
    for (size_t s = 0; s < d.w.size(); ++s)
        out = out * gaussian_binomial(d.w[s], d.v[s]);
    return in_t_squared(out);
}

KLPolynomial grassmannian_poincare(Int v, Int w) {
    return in_t_squared(gaussian_binomial(w, v));
}

EvenIsoReport verify_A1_even_iso(Int w, Int p) {
    EvenIsoReport report;
    auto comps = enumerate_components(w, p);
    report.ok = true;
    for (auto& d : comps) {
        if (!d.even) continue;
        Int v = d.v[0];
        EvenIsoReport::Pair pair;
        pair.v = v;
        pair.lhs = poincare_polynomial(d);
        // product of p copies of T*Gr(v, w/p)
        KLPolynomial rhs = KLPolynomial::one();
        for (Int s = 0; s < p; ++s) rhs = rhs * grassmannian_poincare(v, w / p);
        pair.rhs = rhs;
        pair.lhs_fiber = d.fiber_rank;
        pair.rhs_fiber = p * (w / p - v) * v;
        if (pair.lhs != pair.rhs || pair.lhs_fiber != pair.rhs_fiber) report.ok = false;
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

WeightVector weight_of_component(const RootSystem& R, const IVec& v, const IVec& w) {
    if (v.size() != R.rank() || w.size() != R.rank())
        throw_domain("dimension vectors must match the rank", "v");
    IVec mu = w;
    for (int k = 0; k < R.rank(); ++k) mu -= v[k] * R.cartan().col(k);
    return WeightVector(mu);
}

bool uneven_orbits_free(const std::vector<FixedComponentDescriptor>& components, Int p) {
    std::map<std::vector<Int>, int> index;
    for (size_t i = 0; i < components.size(); ++i) index[components[i].v] = static_cast<int>(i);
    for (auto& d : components) {
        if (d.even) continue;
        // rotate the label; the orbit must have exactly p distinct members
        std::vector<Int> cur = d.v;
        for (Int step = 1; step < p; ++step) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (index.find(cur) == index.end()) return false;
            if (cur == d.v) return false; // orbit collapsed early
        }
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur != d.v) return false; // rotation of order p
    }
    return true;
}

} // namespace charlab
