#include "charlab/drinfeld.hpp"

#include <numeric>
#include <sstream>

namespace charlab {

std::string CyclotomicUnit::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    os << "a";
    if (exponent != 0) os << "*eps^" << exponent;
    return os.str();
}

QVec fundamental_weight_vector(int n, int i) {
    if (i < 1 || i > n) throw_domain("node index out of range", "node");
    QVec out = QVec::Constant(n, Rational(0));
    for (int k = 1; k <= i; ++k) out[k - 1] = Rational((n - i + 1) * k, n + 1);
    for (int k = i + 1; k <= n; ++k) out[k - 1] = Rational(i * (n - k + 1), n + 1);
    return out;
}

std::vector<std::vector<Int>> c_exponents(int n, const WeightVector& lambda, int sign) {
    if (lambda.rank() != n) throw_domain("weight rank mismatch", "weight");
    if (!lambda.is_dominant()) throw_domain("weight must be dominant", "weight");
    if (sign != 1 && sign != -1) throw_domain("sign must be +1 or -1", "sign");
    std::vector<std::vector<Int>> out(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Int bracket = 0;
        for (int k = 1; k < i; ++k) bracket += lambda.coords[k - 1];
        for (int k = i + 1; k <= n; ++k) bracket -= lambda.coords[k - 1];
        bracket += i;
        Int li = lambda.coords[i - 1];
        auto& row = out[static_cast<size_t>(i - 1)];
        for (Int j = 1; j <= li; ++j) row.push_back(sign * bracket + li - 2 * j + 1);
    }
    return out;
}

DrinfeldPolynomialSet drinfeld_polynomials(int n, const WeightVector& lambda, int sign) {
    DrinfeldPolynomialSet d;
    d.n = n;
    d.lambda = lambda;
    d.sign = sign;
    d.exponents = c_exponents(n, lambda, sign);
    return d;
}

CyclotomicUnit eval_point(int n, const WeightVector& lambda, int sign, LambdaPairing pairing,
                          std::optional<Int> p) {
    if (lambda.rank() != n) throw_domain("weight rank mismatch", "weight");
    // lambda_{varpi_1} and lambda_{varpi_n} terms
    Rational l1(0), ln(0);
    if (pairing == LambdaPairing::AsPrinted) {
        // lambda_{varpi_i} = sum_j lambda_j (varpi_i, varpi_i); the two norms
        // (varpi_1, varpi_1) = (varpi_n, varpi_n) coincide, so the difference
        // cancels identically
        Rational norm1(0), normn(0);
        QVec w1 = fundamental_weight_vector(n, 1);
        QVec wn = fundamental_weight_vector(n, n);
        // (varpi_i, varpi_i) with (alpha_k, alpha_l) the A_n Gram matrix
        auto inner = [&](const QVec& x, const QVec& y) {
            Rational s(0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Int g = (k == l) ? 2 : (std::abs(k - l) == 1 ? -1 : 0);
                    s += x[k] * Rational(g) * y[l];
                }
            return s;
        };
        norm1 = inner(w1, w1);
        normn = inner(wn, wn);
        Int total = 0;
        for (int j = 0; j < n; ++j) total += lambda.coords[j];
        l1 = Rational(total) * norm1;
        ln = Rational(total) * normn;
    } else {
        // cross variant: lambda_{varpi_i} = sum_j lambda_j (varpi_j, varpi_i)
        QVec w1 = fundamental_weight_vector(n, 1);
        QVec wn = fundamental_weight_vector(n, n);
        auto inner = [&](const QVec& x, const QVec& y) {
            Rational s(0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Int g = (k == l) ? 2 : (std::abs(k - l) == 1 ? -1 : 0);
                    s += x[k] * Rational(g) * y[l];
                }
            return s;
        };
        for (int j = 1; j <= n; ++j) {
            QVec wj = fundamental_weight_vector(n, j);
            l1 += Rational(lambda.coords[j - 1]) * inner(wj, w1);
            ln += Rational(lambda.coords[j - 1]) * inner(wj, wn);
        }
    }

    Rational expo = (sign > 0) ? (-l1 + ln + Rational(n)) : (l1 - ln + Rational(2 * n + 1));
    int unit_sign = (sign > 0) ? 1 : ((n + 1) % 2 == 0 ? 1 : -1);

    if (!p.has_value()) {
        if (!expo.is_integer())
            throw_unsupported("fractional eps-exponent needs a prime p with gcd(p, n+1) = 1 "
                              "to reduce modulo p", "p");
        return CyclotomicUnit::formal(expo.to_integer(), unit_sign);
    }
    Int pp = *p;
    if (std::gcd(pp, static_cast<Int>(n + 1)) != 1)
        throw_domain("gcd(p, n+1) must be 1", "p");
    // reduce num/den mod p: den is a power-of-(n+1) divisor, invertible mod p
    Int num = ((expo.num() % pp) + pp) % pp;
    Int den = ((expo.den() % pp) + pp) % pp;
    // modular inverse by Fermat
    Int inv = 1, base = den, e = pp - 2;
    while (e > 0) {
        if (e & 1) inv = (inv * base) % pp;
        base = (base * base) % pp;
        e >>= 1;
    }
    return CyclotomicUnit::mod(pp, (num * inv) % pp, unit_sign);
}

GammaData gamma_from_drinfeld(const DrinfeldPolynomialSet& d, Int p, bool base_point_is_one) {
    if (!base_point_is_one)
        throw_unsupported("gamma extraction is defined at base point a = 1", "a");
    if (p < 2) throw_domain("p must be a prime >= 2", "p");
    if (std::gcd(p, static_cast<Int>(d.n + 1)) != 1)
        throw_domain("gcd(p, n+1) must be 1", "p");
    GammaData g;
    g.p = p;
    g.exponents.reserve(d.exponents.size());
    for (auto& row : d.exponents) {
        std::vector<Int> reduced;
        reduced.reserve(row.size());
        for (Int c : row) reduced.push_back(((c % p) + p) % p);
        g.exponents.push_back(std::move(reduced));
    }
    return g;
}

} // namespace charlab
