#include "graphzeta/series.hpp"
#include "graphzeta/errors.hpp"

namespace graphzeta {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    a_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : TruncatedSeries(order) {
    const std::size_t n = std::min(coeffs.size(), a_.size());
    for (std::size_t i = 0; i < n; ++i) a_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.a_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const ExactPoly& p, int order) {
    return TruncatedSeries(order, p.coeffs());
}

const Rational& TruncatedSeries::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k > order_) return zero;
    return a_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Rational value) {
    if (k < 0 || k > order_) throw DomainError("series coefficient index out of range");
    a_[static_cast<std::size_t>(k)] = std::move(value);
}

void TruncatedSeries::check_same_order(const TruncatedSeries& rhs) const {
    if (order_ != rhs.order_)
        throw DomainError("series operation on mismatched truncation orders");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries s(order_);
    for (int k = 0; k <= order_; ++k) s.a_[k] = a_[k] + rhs.a_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries s(order_);
    for (int k = 0; k <= order_; ++k) s.a_[k] = a_[k] - rhs.a_[k];
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    check_same_order(rhs);
    TruncatedSeries s(order_);
    for (int i = 0; i <= order_; ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (rhs.a_[j] == 0) continue;
            s.a_[i + j] += a_[i] * rhs.a_[j];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
    TruncatedSeries s(order_);
    for (int k = 0; k <= order_; ++k) s.a_[k] = a_[k] * scalar;
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (a_[0] == 0) throw DomainError("series inverse requires a_0 != 0");
    TruncatedSeries s(order_);
    const Rational inv0 = 1 / a_[0];
    s.a_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += a_[k] * s.a_[n - k];
        s.a_[n] = -inv0 * acc;
    }
    return s;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (a_[0] != 0) throw DomainError("series exp requires a_0 = 0");
    // e' = s' e  =>  n e_n = sum_{k=1..n} k s_k e_{n-k}
    TruncatedSeries e(order_);
    e.a_[0] = 1;
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k)
            acc += Rational(k) * a_[k] * e.a_[n - k];
        e.a_[n] = acc / Rational(n);
    }
    return e;
}

TruncatedSeries TruncatedSeries::log() const {
    if (a_[0] != 1) throw DomainError("series log requires a_0 = 1");
    // l' = s'/s, integrated termwise with l_0 = 0.
    TruncatedSeries l(order_);
    const TruncatedSeries q = *this;
    const TruncatedSeries qinv = q.inverse();
    // derivative of s as a series of the same order (top coefficient unknown,
    // harmless: it only feeds the u^order term of l via division by order).
    TruncatedSeries ds(order_);
    for (int k = 1; k <= order_; ++k) ds.a_[k - 1] = Rational(k) * a_[k];
    const TruncatedSeries ratio = ds * qinv;
    for (int n = 1; n <= order_; ++n) l.a_[n] = ratio.a_[n - 1] / Rational(n);
    return l;
}

ExactPoly TruncatedSeries::to_poly() const {
    return ExactPoly(a_);
}

} // namespace graphzeta
