#include "graphzeta/poly.hpp"
#include "graphzeta/errors.hpp"

#include <algorithm>

namespace graphzeta {

namespace {
const Rational kZero(0);
}

ExactPoly::ExactPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

ExactPoly ExactPoly::constant(Rational c) {
    std::vector<Rational> v;
    if (c != 0) v.push_back(std::move(c));
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::monomial(Rational c, int k) {
    if (c == 0) return ExactPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return ExactPoly(std::move(v));
}

void ExactPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& ExactPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational ExactPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

ExactPoly ExactPoly::operator+(const ExactPoly& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-(const ExactPoly& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const ExactPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ExactPoly();
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator*(const Rational& scalar) const {
    if (scalar == 0) return ExactPoly();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c *= scalar;
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::operator-() const {
    return *this * Rational(-1);
}

ExactPoly ExactPoly::derivative() const {
    if (coeffs_.size() <= 1) return ExactPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::pow(unsigned exponent) const {
    ExactPoly result = ExactPoly::one();
    ExactPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

ExactPoly ExactPoly::dilate(int k) const {
    if (k < 1) throw DomainError("dilate requires k >= 1");
    if (is_zero()) return ExactPoly();
    std::vector<Rational> v(static_cast<std::size_t>(degree()) * k + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational ExactPoly::evaluate(const Rational& u) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + *it;
    return acc;
}

std::complex<double> ExactPoly::evaluate(std::complex<double> u) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + std::complex<double>(it->get_d(), 0.0);
    return acc;
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < divisor.degree()) return {ExactPoly(), *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree()) + 1,
                               Rational(0));
    const Rational lead_inv = 1 / divisor.leading();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + divisor.degree())] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

ExactPoly ExactPoly::operator/(const ExactPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

ExactPoly ExactPoly::gcd(ExactPoly a, ExactPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

ExactPoly SquarefreeFactorization::expand() const {
    ExactPoly p = ExactPoly::constant(unit);
    for (const auto& f : factors)
        p = p * f.factor.pow(static_cast<unsigned>(f.exponent));
    return p;
}

SquarefreeFactorization squarefree_factor(const ExactPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree_factor of zero polynomial");
    SquarefreeFactorization out;
    out.unit = p.leading();
    if (p.degree() == 0) return out;

    // Yun's algorithm over Q with monic gcds.
    const ExactPoly f = p.monic();
    const ExactPoly fp = f.derivative();
    ExactPoly d = ExactPoly::gcd(f, fp);
    if (d.degree() == 0) {
        out.factors.push_back({f, 1});
        return out;
    }
    ExactPoly b = f / d;
    ExactPoly c = fp / d;
    ExactPoly z = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        ExactPoly a = ExactPoly::gcd(b, z);
        if (a.degree() > 0) out.factors.push_back({a, i});
        b = b / a;
        c = z / a;
        z = c - b.derivative();
        ++i;
    }
    return out;
}

ExactPoly det_one_minus_uT(std::span<const Rational> traces, int dimension) {
    if (dimension < 0) throw DomainError("negative operator dimension");
    if (static_cast<int>(traces.size()) < dimension)
        throw DomainError("det_one_minus_uT: need at least `dimension` traces");
    // With c_k = (-1)^k e_k the Newton recurrence becomes
    //   k c_k = -(p_1 c_{k-1} + p_2 c_{k-2} + ... + p_k c_0).
    std::vector<Rational> c(static_cast<std::size_t>(dimension) + 1, Rational(0));
    c[0] = 1;
    for (int k = 1; k <= dimension; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += traces[static_cast<std::size_t>(i - 1)] * c[static_cast<std::size_t>(k - i)];
        c[static_cast<std::size_t>(k)] = -acc / Rational(k);
    }
    return ExactPoly(std::move(c));
}

} // namespace graphzeta
