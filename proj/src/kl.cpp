#include "charlab/kl.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

namespace charlab {

KLPolynomial operator+(const KLPolynomial& a, const KLPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = Rational::checked_add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return KLPolynomial(std::move(c));
}

KLPolynomial operator-(const KLPolynomial& a, const KLPolynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = Rational::checked_sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return KLPolynomial(std::move(c));
}

KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return KLPolynomial::zero();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = Rational::checked_add(c[i + j], Rational::checked_mul(a.c_[i], b.c_[j]));
    return KLPolynomial(std::move(c));
}

std::string KLPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << (c_[k] > 0 ? " + " : " - ");
        else if (c_[k] < 0) os << "-";
        Int a = c_[k] > 0 ? c_[k] : -c_[k];
        if (a != 1 || k == 0) os << a;
        if (k >= 1) {
            if (a != 1) os << "*";
            os << "q";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::optional<KLPolynomial> KLContext::memo_get(const Key& k) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(k);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

void KLContext::memo_put(const Key& k, const KLPolynomial& v) {
    std::unique_lock lock(mutex_);
    memo_.emplace(k, v);
}

KLPolynomial KLContext::kl_polynomial(const CoxeterElement& x, const CoxeterElement& w) {
    if (w.length() > cap_)
        throw_resource("l(w) = " + std::to_string(w.length()) + " exceeds the KL length cap " +
                       std::to_string(cap_), "w");
    return kl_impl(x, w);
}

KLPolynomial KLContext::kl_impl(const CoxeterElement& x, const CoxeterElement& w) {
    if (!bruhat_leq(P_, x, w)) return KLPolynomial::zero();
    if (x == w) return KLPolynomial::one();
    Key key{x, w};
    if (auto hit = memo_get(key)) return *hit;

    // left-multiplication form of the recursion: s with sw < w is the first
    // letter of the normal form
    const int s = w.word().front();
    const CoxeterElement sw = multiply_left(P_, s, w);
    const CoxeterElement sx = multiply_left(P_, s, x);
    const bool x_desc = sx.length() < x.length(); // c = 1 case

    KLPolynomial result;
    if (x_desc)
        result = kl_impl(sx, sw) + KLPolynomial::q_power(1) * kl_impl(x, sw);
    else
        result = KLPolynomial::q_power(1) * kl_impl(sx, sw) + kl_impl(x, sw);

    for (auto& z : bruhat_interval_below(P_, sw)) {
        if (!(multiply_left(P_, s, z).length() < z.length())) continue;
        if (!bruhat_leq(P_, x, z)) continue;
        Int m = mu(z, sw);
        if (m == 0) continue;
        int e = (w.length() - z.length()) / 2;
        result = result - KLPolynomial({m}) * KLPolynomial::q_power(e) * kl_impl(x, z);
    }

    // degree guard from the definition
    if (!result.is_zero() && 2 * result.degree() > w.length() - x.length() - 1)
        throw_domain("KL recursion produced an over-degree polynomial");
    memo_put(key, result);
    return result;
}

Int KLContext::mu(const CoxeterElement& x, const CoxeterElement& w) {
    int d = w.length() - x.length() - 1;
    if (d < 0 || d % 2 != 0) return 0;
    return kl_impl(x, w).coeff(d / 2);
}

KLPolynomial KLContext::r_polynomial(const CoxeterElement& x, const CoxeterElement& w) {
    if (x == w) return KLPolynomial::one();
    if (!bruhat_leq(P_, x, w)) return KLPolynomial::zero();
    Key key{x, w};
    {
        std::shared_lock lock(mutex_);
        auto it = rmemo_.find(key);
        if (it != rmemo_.end()) return it->second;
    }
    const int s = w.word().back(); // ws < w
    const CoxeterElement ws = multiply(P_, w, s);
    const CoxeterElement xs = multiply(P_, x, s);
    KLPolynomial result;
    if (xs.length() < x.length()) {
        result = r_polynomial(xs, ws);
    } else {
        // (q-1) R_{x,ws} + q R_{xs,ws}
        result = KLPolynomial({-1, 1}) * r_polynomial(x, ws) +
                 KLPolynomial::q_power(1) * r_polynomial(xs, ws);
    }
    std::unique_lock lock(mutex_);
    rmemo_.emplace(key, result);
    return result;
}

KLPolynomial KLContext::oracle_kl(const CoxeterElement& x, const CoxeterElement& w) {
    if (!bruhat_leq(P_, x, w)) return KLPolynomial::zero();
    // all y in [x, w], processed by descending length
    std::vector<CoxeterElement> interval;
    for (auto& y : bruhat_interval_below(P_, w))
        if (bruhat_leq(P_, x, y)) interval.push_back(y);
    std::sort(interval.begin(), interval.end(),
              [](const CoxeterElement& a, const CoxeterElement& b) {
                  if (a.length() != b.length()) return a.length() > b.length();
                  return a < b;
              });

    std::map<CoxeterElement, KLPolynomial> table;
    for (auto& y : interval) {
        if (y == w) {
            table[y] = KLPolynomial::one();
            continue;
        }
        // q^l * Pbar_{y,w}(1/q) - P_{y,w} = sum_{y < u <= w} R_{y,u} P_{u,w}
        KLPolynomial rhs;
        for (auto& u : interval) {
            if (u == y || u.length() <= y.length()) continue;
            if (!bruhat_leq(P_, y, u)) continue;
            rhs = rhs + r_polynomial(y, u) * table.at(u);
        }
        const int l = w.length() - y.length();
        std::vector<Int> p(static_cast<size_t>((l - 1) / 2) + 1, 0);
        for (int j = 0; j <= (l - 1) / 2; ++j) p[static_cast<size_t>(j)] = rhs.coeff(l - j);
        KLPolynomial cand(std::move(p));
        // verify the full identity, not just the coefficient extraction
        std::vector<Int> lhs_coeffs(static_cast<size_t>(l) + 1, 0);
        for (int j = 0; j <= cand.degree(); ++j)
            lhs_coeffs[static_cast<size_t>(l - j)] = cand.coeff(j);
        KLPolynomial lhs = KLPolynomial(std::move(lhs_coeffs)) - cand;
        if (lhs != rhs) throw_domain("R-polynomial inversion identity failed");
        table[y] = cand;
    }
    return table.at(x);
}

namespace {

void write_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_u64(std::ostream& os, std::uint64_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
void write_i64(std::ostream& os, std::int64_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
std::uint32_t read_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}
std::uint64_t read_u64(std::istream& is) {
    std::uint64_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}
std::int64_t read_i64(std::istream& is) {
    std::int64_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof(v));
    return v;
}

constexpr std::uint32_t kCacheMagic = 0x4B4C4331; // "KLC1"
constexpr std::uint32_t kCacheVersion = 1;

} // namespace

std::size_t KLContext::save_cache(const std::string& path) const {
    std::shared_lock lock(mutex_);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw_resource("cannot open cache file for writing: " + path, "cache");
    write_u32(os, kCacheMagic);
    write_u32(os, kCacheVersion);
    write_u64(os, P_.hash());
    write_u64(os, memo_.size());
    for (auto& [key, poly] : memo_) {
        auto write_word = [&](const CoxeterElement& e) {
            write_u32(os, static_cast<std::uint32_t>(e.word().size()));
            for (auto s : e.word()) os.put(static_cast<char>(s));
        };
        write_word(key.first);
        write_word(key.second);
        write_u32(os, static_cast<std::uint32_t>(poly.coeffs().size()));
        for (Int c : poly.coeffs()) write_i64(os, c);
    }
    return memo_.size();
}

std::size_t KLContext::load_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return 0;
    if (read_u32(is) != kCacheMagic) throw_domain("bad KL cache magic", "cache");
    if (read_u32(is) != kCacheVersion) throw_domain("unsupported KL cache version", "cache");
    if (read_u64(is) != P_.hash())
        throw_domain("KL cache belongs to a different presentation", "cache");
    std::uint64_t count = read_u64(is);
    std::unique_lock lock(mutex_);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto read_word = [&]() {
            std::uint32_t len = read_u32(is);
            std::vector<int> w(len);
            for (auto& s : w) s = is.get();
            return CoxeterElement::from_word(P_, w);
        };
        CoxeterElement x = read_word();
        CoxeterElement w = read_word();
        std::uint32_t ncoeff = read_u32(is);
        std::vector<Int> c(ncoeff);
        for (auto& v : c) v = read_i64(is);
        if (!is) throw_domain("truncated KL cache", "cache");
        memo_.emplace(Key{x, w}, KLPolynomial(std::move(c)));
    }
    return static_cast<std::size_t>(count);
}

} // namespace charlab
