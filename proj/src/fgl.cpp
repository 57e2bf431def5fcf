#include "charlab/fgl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace charlab {

Ring Ring::p_adics(Int p, int prec) {
    if (p < 2 || prec < 1) throw_domain("p-adic ring needs p >= 2 and precision >= 1", "ring");
    return {Kind::Zp, p, prec};
}
Ring Ring::cyclotomic(Int p) {
    if (p < 2) throw_domain("cyclotomic ring needs a prime p >= 2", "ring");
    return {Kind::Cyclotomic, p, 0};
}
Ring Ring::q_cyclotomic(Int p) {
    if (p < 2) throw_domain("cyclotomic ring needs a prime p >= 2", "ring");
    return {Kind::QCyclotomic, p, 0};
}

std::string Ring::descriptor() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Zp: return "Z_" + std::to_string(p) + "^" + std::to_string(prec);
        case Kind::Cyclotomic: return "Z[z]/Phi_" + std::to_string(p);
        case Kind::QCyclotomic: return "Q[z]/Phi_" + std::to_string(p);
    }
    return "?";
}

namespace {

std::size_t ring_dim(const Ring& r) {
    switch (r.kind) {
        case Ring::Kind::Cyclotomic:
        case Ring::Kind::QCyclotomic:
            return static_cast<std::size_t>(r.p - 1);
        default:
            return 1;
    }
}

Int pow_int(Int b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r = Rational::checked_mul(r, b);
    return r;
}

Rational mod_reduce(const Rational& x, Int modulus) {
    if (!x.is_integer()) throw_domain("non-integer value in an integer ring");
    Int v = x.num() % modulus;
    if (v < 0) v += modulus;
    return Rational(v);
}

} // namespace

RingElem::RingElem(Ring ring, std::vector<Rational> coords) : ring_(ring), c_(std::move(coords)) {
    if (c_.size() != ring_dim(ring_)) throw_domain("ring element has wrong dimension", "ring");
    reduce();
}

void RingElem::reduce() {
    switch (ring_.kind) {
        case Ring::Kind::Z:
        case Ring::Kind::Cyclotomic:
            for (auto& x : c_)
                if (!x.is_integer()) throw_domain("non-integer value in an integer ring");
            break;
        case Ring::Kind::Zp: {
            Int m = pow_int(ring_.p, ring_.prec);
            for (auto& x : c_) x = mod_reduce(x, m);
            break;
        }
        default:
            break;
    }
}

RingElem RingElem::from_int(const Ring& ring, Int n) {
    std::vector<Rational> c(ring_dim(ring), Rational(0));
    c[0] = Rational(n);
    return RingElem(ring, std::move(c));
}

RingElem RingElem::z_power(const Ring& ring, Int k) {
    if (ring.kind != Ring::Kind::Cyclotomic && ring.kind != Ring::Kind::QCyclotomic)
        throw_domain("z lives in the cyclotomic rings only", "ring");
    Int p = ring.p;
    Int kk = ((k % p) + p) % p;
    std::vector<Rational> c(ring_dim(ring), Rational(0));
    if (kk < p - 1) {
        c[static_cast<size_t>(kk)] = Rational(1);
    } else {
        // z^{p-1} = -(1 + z + ... + z^{p-2})
        for (auto& x : c) x = Rational(-1);
    }
    return RingElem(ring, std::move(c));
}

bool RingElem::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
    if (a.ring_ != b.ring_) throw_domain("ring mismatch in +", "ring");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return RingElem(a.ring_, std::move(c));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    if (a.ring_ != b.ring_) throw_domain("ring mismatch in -", "ring");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return RingElem(a.ring_, std::move(c));
}

RingElem RingElem::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
    return RingElem(ring_, std::move(c));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    if (a.ring_ != b.ring_) throw_domain("ring mismatch in *", "ring");
    const Ring& R = a.ring_;
    if (ring_dim(R) == 1)
        return RingElem(R, {a.c_[0] * b.c_[0]});
    // polynomial product reduced mod Phi_p: z^{p-1} = -(1 + ... + z^{p-2})
    const std::size_t d = ring_dim(R);
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    for (size_t deg = 2 * d - 2; deg >= d; --deg) {
        Rational c = prod[deg];
        if (c.is_zero()) continue;
        prod[deg] = Rational(0);
        for (size_t j = 0; j < d; ++j) prod[deg - d + j] -= c;
    }
    prod.resize(d);
    return RingElem(R, std::move(prod));
}

bool RingElem::try_invert(RingElem& out) const {
    switch (ring_.kind) {
        case Ring::Kind::Q: {
            if (c_[0].is_zero()) return false;
            out = RingElem(ring_, {Rational(1) / c_[0]});
            return true;
        }
        case Ring::Kind::Z: {
            if (c_[0] != Rational(1) && c_[0] != Rational(-1)) return false;
            out = *this;
            return true;
        }
        case Ring::Kind::Zp: {
            Int m = pow_int(ring_.p, ring_.prec);
            Int v = c_[0].to_integer() % m;
            if (v % ring_.p == 0) return false;
            Int t = 0, newt = 1, r = m, newr = v;
            while (newr != 0) {
                Int q = r / newr;
                Int t2 = t - q * newt;
                t = newt;
                newt = t2;
                Int r2 = r - q * newr;
                r = newr;
                newr = r2;
            }
            if (r != 1 && r != -1) return false;
            if (r == -1) t = -t;
            out = RingElem(ring_, {Rational(((t % m) + m) % m)});
            return true;
        }
        case Ring::Kind::Cyclotomic:
        case Ring::Kind::QCyclotomic: {
            // invert in Q[z]/Phi_p by extended Euclid, then check integrality
            // for the integral ring
            const Int p = ring_.p;
            const int d = static_cast<int>(p - 1);
            auto trim = [](std::vector<Rational>& v) {
                while (!v.empty() && v.back().is_zero()) v.pop_back();
            };
            std::vector<Rational> phi(static_cast<size_t>(d) + 1, Rational(1)); // Phi_p
            std::vector<Rational> f(c_.begin(), c_.end());
            trim(f);
            if (f.empty()) return false;
            // extended euclid: s*f + t*phi = gcd
            std::vector<Rational> r0 = phi, r1 = f;
            std::vector<Rational> s0 = {Rational(0)}, s1 = {Rational(1)};
            auto polysub = [&](std::vector<Rational> a, const std::vector<Rational>& b,
                               const Rational& coef, size_t shift) {
                if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
                for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= coef * b[i];
                return a;
            };
            while (!r1.empty()) {
                // divide r0 by r1
                std::vector<Rational> q(static_cast<size_t>(
                                            std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(
                                                                            r0.size()) -
                                                                            static_cast<std::ptrdiff_t>(
                                                                                r1.size()) +
                                                                            1)),
                                        Rational(0));
                std::vector<Rational> rem = r0;
                while (rem.size() >= r1.size() && !rem.empty()) {
                    trim(rem);
                    if (rem.size() < r1.size()) break;
                    Rational coef = rem.back() / r1.back();
                    size_t shift = rem.size() - r1.size();
                    q[shift] = q[shift] + coef;
                    rem = polysub(std::move(rem), r1, coef, shift);
                    trim(rem);
                }
                // s2 = s0 - q*s1
                std::vector<Rational> qs1(q.size() + s1.size(), Rational(0));
                for (size_t i = 0; i < q.size(); ++i)
                    for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] += q[i] * s1[j];
                std::vector<Rational> s2 = s0;
                if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rational(0));
                for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
                trim(s2);
                r0 = r1;
                r1 = rem;
                s0 = s1;
                s1 = s2;
            }
            // r0 = gcd (a nonzero constant since Phi_p is irreducible over Q)
            trim(r0);
            if (r0.size() != 1) return false;
            Rational g = r0[0];
            std::vector<Rational> buf(s0.size(), Rational(0));
            for (size_t i = 0; i < s0.size(); ++i) buf[i] = s0[i] / g;
            // reduce mod Phi_p: z^{p-1} = -(1 + z + ... + z^{p-2})
            for (size_t deg = buf.size(); deg-- > static_cast<size_t>(d);) {
                Rational c = buf[deg];
                if (c.is_zero()) continue;
                buf[deg] = Rational(0);
                for (size_t j = 0; j < static_cast<size_t>(d); ++j)
                    buf[deg - static_cast<size_t>(d) + j] -= c;
            }
            buf.resize(static_cast<size_t>(d), Rational(0));
            if (ring_.kind == Ring::Kind::Cyclotomic)
                for (auto& x : buf)
                    if (!x.is_integer()) return false;
            out = RingElem(ring_, std::move(buf));
            if (!((*this) * out == RingElem::one(ring_))) return false;
            return true;
        }
    }
    return false;
}

bool RingElem::unit_mod_maximal_ideal() const {
    switch (ring_.kind) {
        case Ring::Kind::Q:
        case Ring::Kind::QCyclotomic:
            return !is_zero();
        case Ring::Kind::Zp:
            return c_[0].to_integer() % ring_.p != 0;
        case Ring::Kind::Cyclotomic: {
            // maximal ideal (1-z, p): reduce at z = 1 then mod p
            Rational at1(0);
            for (auto& x : c_) at1 += x;
            return at1.to_integer() % ring_.p != 0;
        }
        case Ring::Kind::Z:
            throw_unsupported("Z has no distinguished maximal ideal for Weierstrass degrees",
                              "ring");
    }
    return false;
}

std::string RingElem::str() const {
    if (ring_dim(ring_) == 1) return c_[0].str();
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << (c_[k].sign() > 0 ? "+" : "-");
        else if (c_[k].sign() < 0) os << "-";
        Rational a = c_[k].sign() < 0 ? -c_[k] : c_[k];
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k >= 1) {
            if (a != Rational(1)) os << "*";
            os << "z";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

TruncatedSeries::TruncatedSeries(Ring ring, int nvars, int order)
    : ring_(ring), nvars_(nvars), order_(order) {
    if (nvars < 1 || order < 1) throw_domain("series needs nvars >= 1 and order >= 1", "series");
}

TruncatedSeries TruncatedSeries::variable(const Ring& ring, int nvars, int order, int index) {
    TruncatedSeries s(ring, nvars, order);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(index)] = 1;
    s.add_term(std::move(e), RingElem::one(ring));
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Ring& ring, int nvars, int order,
                                          const RingElem& c) {
    TruncatedSeries s(ring, nvars, order);
    s.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
    return s;
}

RingElem TruncatedSeries::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? RingElem::zero(ring_) : it->second;
}

void TruncatedSeries::add_term(std::vector<int> expo, const RingElem& c) {
    if (static_cast<int>(expo.size()) != nvars_) throw_domain("exponent arity mismatch", "series");
    int total = 0;
    for (int e : expo) {
        if (e < 0) throw_domain("negative exponent in a power series", "series");
        total += e;
    }
    if (total >= order_) return; // truncated away
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(expo), c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ring_ != b.ring_ || a.nvars_ != b.nvars_)
        throw_domain("series shape mismatch in +", "series");
    TruncatedSeries r(a.ring_, a.nvars_, std::min(a.order_, b.order_));
    for (auto& [e, c] : a.terms_) r.add_term(e, c);
    for (auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ring_ != b.ring_ || a.nvars_ != b.nvars_)
        throw_domain("series shape mismatch in -", "series");
    TruncatedSeries r(a.ring_, a.nvars_, std::min(a.order_, b.order_));
    for (auto& [e, c] : a.terms_) r.add_term(e, c);
    for (auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.ring_ != b.ring_ || a.nvars_ != b.nvars_)
        throw_domain("series shape mismatch in *", "series");
    TruncatedSeries r(a.ring_, a.nvars_, std::min(a.order_, b.order_));
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.order_ == b.order_ &&
           a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::substitute(const std::vector<TruncatedSeries>& args) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw_domain("substitution arity mismatch", "series");
    for (auto& a : args)
        if (a.ring_ != ring_) throw_domain("substitution ring mismatch", "series");
    const int out_vars = args.empty() ? 1 : args[0].nvars_;
    int out_order = order_;
    for (auto& a : args) out_order = std::min(out_order, a.order_);

    // power tables per variable
    std::vector<std::vector<TruncatedSeries>> powers(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i)
        powers[static_cast<size_t>(i)].push_back(
            TruncatedSeries::constant(ring_, out_vars, out_order, RingElem::one(ring_)));

    auto power_of = [&](int var, int e) -> const TruncatedSeries& {
        auto& tab = powers[static_cast<size_t>(var)];
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * args[static_cast<size_t>(var)]);
        return tab[static_cast<size_t>(e)];
    };

    TruncatedSeries out(ring_, out_vars, out_order);
    for (auto& [e, c] : terms_) {
        TruncatedSeries term = TruncatedSeries::constant(ring_, out_vars, out_order, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[static_cast<size_t>(i)] > 0) term = term * power_of(i, e[static_cast<size_t>(i)]);
        out = out + term;
    }
    return out;
}

std::string TruncatedSeries::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << var_names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

FormalGroupLaw FormalGroupLaw::additive(const Ring& ring, int order) {
    TruncatedSeries x = TruncatedSeries::variable(ring, 2, order, 0);
    TruncatedSeries y = TruncatedSeries::variable(ring, 2, order, 1);
    FormalGroupLaw f{x + y};
    f.check_axioms();
    return f;
}

FormalGroupLaw FormalGroupLaw::multiplicative(const Ring& ring, int order) {
    TruncatedSeries x = TruncatedSeries::variable(ring, 2, order, 0);
    TruncatedSeries y = TruncatedSeries::variable(ring, 2, order, 1);
    FormalGroupLaw f{x + y - x * y};
    f.check_axioms();
    return f;
}

FormalGroupLaw FormalGroupLaw::honda(const Ring& ring, Int p, int height, int order) {
    if (height < 1) throw_domain("height must be >= 1", "height");
    if (ring.kind == Ring::Kind::Zp && ring.p != p)
        throw_domain("ring prime and law prime disagree", "ring");
    if (ring.kind != Ring::Kind::Zp && ring.kind != Ring::Kind::Q)
        throw_unsupported("Honda laws are provided over Z_p or Q", "ring");
    Ring q = Ring::rationals();

    // log(x) = sum_i x^{p^{h i}} / p^i, truncated
    TruncatedSeries log1(q, 1, order);
    Int denom = 1;
    Int expo = 1;
    for (int i = 0;; ++i) {
        if (expo >= order) break;
        log1.add_term({static_cast<int>(expo)}, RingElem(q, {Rational(1, denom)}));
        expo = Rational::checked_mul(expo, pow_int(p, height));
        denom = Rational::checked_mul(denom, p);
    }

    // functional inverse: exp = y - (log - id)(exp), iterated to the order
    TruncatedSeries yvar = TruncatedSeries::variable(q, 1, order, 0);
    TruncatedSeries logm = log1 - yvar; // degree >= p^h part
    TruncatedSeries exp1 = yvar;
    for (int it = 0; it < order; ++it) exp1 = yvar - logm.substitute({exp1});

    // F(x,y) = exp(log x + log y)
    TruncatedSeries x2 = TruncatedSeries::variable(q, 2, order, 0);
    TruncatedSeries y2 = TruncatedSeries::variable(q, 2, order, 1);
    TruncatedSeries logs = log1.substitute({x2}) + log1.substitute({y2});
    TruncatedSeries Fq = exp1.substitute({logs});

    TruncatedSeries F(ring, 2, order);
    for (auto& [e, c] : Fq.terms()) {
        Rational v = c.coords()[0];
        if (ring.kind == Ring::Kind::Q) {
            F.add_term(e, c);
        } else {
            // p-integral by construction; map into Z/p^prec
            if (v.den() % p == 0) throw_domain("Honda coefficient not p-integral");
            Int m = pow_int(ring.p, ring.prec);
            Int den = ((v.den() % m) + m) % m;
            RingElem d = RingElem(ring, {Rational(den)});
            RingElem dinv;
            if (!d.try_invert(dinv)) throw_domain("Honda denominator not invertible mod p^m");
            RingElem num = RingElem(ring, {Rational(((v.num() % m) + m) % m)});
            F.add_term(e, num * dinv);
        }
    }
    FormalGroupLaw f{F};
    f.check_axioms();
    return f;
}

void FormalGroupLaw::check_axioms() const {
    const Ring& ring = F.ring();
    const int order = F.order();
    TruncatedSeries x2 = TruncatedSeries::variable(ring, 2, order, 0);
    TruncatedSeries y2 = TruncatedSeries::variable(ring, 2, order, 1);
    TruncatedSeries zero2(ring, 2, order);
    if (F.substitute({x2, zero2}) != x2) throw_domain("FGL unitality failed in x");
    if (F.substitute({zero2, y2}) != y2) throw_domain("FGL unitality failed in y");
    if (F.substitute({y2, x2}) != F) throw_domain("FGL commutativity failed");
    // associativity in three variables
    TruncatedSeries x3 = TruncatedSeries::variable(ring, 3, order, 0);
    TruncatedSeries y3 = TruncatedSeries::variable(ring, 3, order, 1);
    TruncatedSeries z3 = TruncatedSeries::variable(ring, 3, order, 2);
    TruncatedSeries fxy = F.substitute({x3, y3});
    TruncatedSeries fyz = F.substitute({y3, z3});
    if (F.substitute({fxy, z3}) != F.substitute({x3, fyz}))
        throw_domain("FGL associativity failed");
}

TruncatedSeries p_series(const FormalGroupLaw& F, Int n) {
    if (n < 1) throw_domain("p-series needs n >= 1", "p");
    const Ring& ring = F.F.ring();
    const int order = F.F.order();
    TruncatedSeries x = TruncatedSeries::variable(ring, 1, order, 0);
    TruncatedSeries acc = x;
    for (Int k = 1; k < n; ++k) acc = F.F.substitute({acc, x});
    return acc;
}

TruncatedSeries c1_tensor(const FormalGroupLaw& F, const TruncatedSeries& u,
                          const TruncatedSeries& v) {
    std::vector<int> zero(static_cast<size_t>(u.nvars()), 0);
    if (!u.coeff(zero).is_zero() || !v.coeff(zero).is_zero())
        throw_domain("c1 substitution needs zero constant terms", "series");
    return F.F.substitute({u, v});
}

TorsionCount torsion_count(const FormalGroupLaw& F, Int p) {
    const Ring& ring = F.F.ring();
    TruncatedSeries ps = p_series(F, p);
    TorsionCount out;

    // Weierstrass degree where a local structure exists
    if (ring.kind == Ring::Kind::Zp || ring.kind == Ring::Kind::Cyclotomic) {
        int deg = -1;
        for (auto& [e, c] : ps.terms())
            if (c.unit_mod_maximal_ideal()) { deg = e[0]; break; }
        if (deg < 0)
            throw_unsupported("no unit coefficient below the truncation order; "
                              "raise the order", "order");
        out.weierstrass_degree = deg;
        out.count = deg;
    }

    // root enumeration over the rings where candidates are exact
    if (ring.kind == Ring::Kind::Q || ring.kind == Ring::Kind::Z ||
        ring.kind == Ring::Kind::Cyclotomic || ring.kind == Ring::Kind::QCyclotomic) {
        // the p-series of the provided laws is an exact polynomial of degree
        // <= p; demand enough order to see all of it
        if (F.F.order() <= static_cast<int>(p))
            throw_unsupported("truncation order too small to enumerate p-torsion", "order");
        std::vector<RingElem> candidates;
        candidates.push_back(RingElem::zero(ring));
        if (ring.kind == Ring::Kind::Cyclotomic || ring.kind == Ring::Kind::QCyclotomic) {
            for (Int k = 1; k < p; ++k)
                candidates.push_back(RingElem::one(ring) - RingElem::z_power(ring, k));
        } else if (p == 2) {
            candidates.push_back(RingElem::from_int(ring, 2)); // 1 - (-1)
        }
        std::vector<RingElem> roots;
        for (auto& cand : candidates) {
            // evaluate the 1-variable polynomial at cand
            RingElem val = RingElem::zero(ring);
            for (auto& [e, c] : ps.terms()) {
                RingElem pw = RingElem::one(ring);
                for (int i = 0; i < e[0]; ++i) pw = pw * cand;
                val = val + c * pw;
            }
            if (val.is_zero() &&
                std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
        Int n_roots = static_cast<Int>(roots.size());
        if (out.weierstrass_degree >= 0 && out.count != n_roots)
            throw_domain("Weierstrass degree and verified root count disagree");
        out.count = n_roots;
        out.roots = std::move(roots);
    }

    if (out.weierstrass_degree < 0 && out.roots.empty() && out.count == 0)
        throw_unsupported("torsion counting is not provided over " + ring.descriptor(), "ring");
    return out;
}

CyclotomicData cyclotomic_ring_K(Int p) {
    if (p < 2) throw_domain("p must be a prime >= 2", "p");
    CyclotomicData out;
    out.ring = Ring::cyclotomic(p);
    Ring q = Ring::q_cyclotomic(p);

    RingElem prod = RingElem::one(out.ring);
    for (Int k = 1; k < p; ++k) {
        RingElem u = RingElem::one(out.ring) - RingElem::z_power(out.ring, k);
        prod = prod * u;
        // inverse in Q[z]/Phi_p; p * inverse must be integral
        RingElem uq(q, u.coords());
        RingElem invq;
        if (!uq.try_invert(invq)) throw_domain("1 - z^k failed to invert over Q(zeta)");
        std::vector<Rational> scaled(invq.coords());
        for (auto& x : scaled) x *= Rational(p);
        RingElem witness(out.ring, scaled); // throws if not integral
        // verify (1 - z^k) * witness == p
        if (!(u * witness == RingElem::from_int(out.ring, p)))
            throw_domain("unit witness failed verification");
        out.witnesses.push_back({k, witness, 1});
    }
    out.certificate_ok = prod == RingElem::from_int(out.ring, p);
    if (!out.certificate_ok) throw_domain("cyclotomic certificate prod(1-z^k) = p failed");
    return out;
}

HomEnumeration enumerate_hom(int n, Int p, const std::vector<Int>& invariant_factors) {
    if (n < 0) throw_domain("n must be nonnegative", "n");
    if (p < 2) throw_domain("p must be a prime >= 2", "p");
    for (Int d : invariant_factors)
        if (d < 1) throw_domain("invariant factors must be positive", "G");
    // p-torsion elements per factor
    std::vector<std::vector<Int>> torsion_per_factor;
    for (Int d : invariant_factors) {
        std::vector<Int> t;
        if (d % p == 0)
            for (Int j = 0; j < p; ++j) t.push_back(j * (d / p));
        else
            t.push_back(0);
        torsion_per_factor.push_back(std::move(t));
    }
    // all p-torsion elements of G
    std::vector<std::vector<Int>> gp{{}};
    for (auto& t : torsion_per_factor) {
        std::vector<std::vector<Int>> next;
        for (auto& base : gp)
            for (Int v : t) {
                auto e = base;
                e.push_back(v);
                next.push_back(std::move(e));
            }
        gp = std::move(next);
    }
    HomEnumeration out;
    out.count = 1;
    for (int i = 0; i < n; ++i)
        out.count = Rational::checked_mul(out.count, static_cast<Int>(gp.size()));
    if (out.count > 200000)
        throw_resource("homomorphism enumeration exceeds the desk-scale cap", "n");
    // homs = tuples of generator images
    out.homs.push_back({});
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::vector<Int>>> next;
        for (auto& h : out.homs)
            for (auto& img : gp) {
                auto e = h;
                e.push_back(img);
                next.push_back(std::move(e));
            }
        out.homs = std::move(next);
    }
    return out;
}

} // namespace charlab
