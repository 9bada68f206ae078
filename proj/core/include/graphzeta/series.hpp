#ifndef GRAPHZETA_SERIES_HPP
#define GRAPHZETA_SERIES_HPP

#include "graphzeta/poly.hpp"
#include "graphzeta/rational.hpp"

#include <vector>

namespace graphzeta {

/// Power series with exact rational coefficients a_0..a_N, i.e. values
/// modulo u^(N+1). Binary operations require matching orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries one(int order);
    static TruncatedSeries from_poly(const ExactPoly& p, int order);

    int order() const { return order_; }
    const Rational& coeff(int k) const;
    void set_coeff(int k, Rational value);
    const std::vector<Rational>& coeffs() const { return a_; }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const Rational& scalar) const;
    bool operator==(const TruncatedSeries& rhs) const = default;

    /// Multiplicative inverse; requires a_0 != 0.
    TruncatedSeries inverse() const;
    /// Formal exponential; requires a_0 = 0.
    TruncatedSeries exp() const;
    /// Formal logarithm; requires a_0 = 1.
    TruncatedSeries log() const;

    /// Drops the truncation marker; trailing zeros trimmed.
    ExactPoly to_poly() const;

private:
    void check_same_order(const TruncatedSeries& rhs) const;
    int order_;
    std::vector<Rational> a_;
};

} // namespace graphzeta

#endif
