#ifndef GRAPHZETA_POLY_HPP
#define GRAPHZETA_POLY_HPP

#include "graphzeta/rational.hpp"

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace graphzeta {

/// Polynomial in the formal variable u with exact rational coefficients.
/// Trailing zero coefficients are trimmed; the zero polynomial has an empty
/// coefficient vector and degree() == -1.
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rational> coeffs);

    static ExactPoly zero() { return ExactPoly(); }
    static ExactPoly one() { return constant(Rational(1)); }
    static ExactPoly constant(Rational c);
    /// c * u^k
    static ExactPoly monomial(Rational c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of u^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    ExactPoly operator+(const ExactPoly& rhs) const;
    ExactPoly operator-(const ExactPoly& rhs) const;
    ExactPoly operator*(const ExactPoly& rhs) const;
    ExactPoly operator*(const Rational& scalar) const;
    ExactPoly operator-() const;
    bool operator==(const ExactPoly& rhs) const = default;

    ExactPoly derivative() const;
    ExactPoly pow(unsigned exponent) const;
    /// Substitutes u -> u^k (spreads the coefficients), k >= 1.
    ExactPoly dilate(int k) const;
    /// Divides leading coefficient out; zero polynomial throws DomainError.
    ExactPoly monic() const;

    Rational evaluate(const Rational& u) const;
    std::complex<double> evaluate(std::complex<double> u) const;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& divisor) const;
    /// Exact quotient; throws DomainError if the remainder is nonzero.
    ExactPoly operator/(const ExactPoly& divisor) const;

    /// Monic greatest common divisor; gcd(p, 0) = monic(p).
    static ExactPoly gcd(ExactPoly a, ExactPoly b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline ExactPoly operator*(const Rational& scalar, const ExactPoly& p) { return p * scalar; }

struct SquarefreeFactor {
    ExactPoly factor; ///< monic and square-free
    int exponent;
};

struct SquarefreeFactorization {
    Rational unit; ///< input = unit * prod factor_i^exponent_i
    std::vector<SquarefreeFactor> factors;
    ExactPoly expand() const;
};

/// Yun's square-free decomposition over the rationals. Factors are monic,
/// pairwise coprime and square-free; exponents strictly increase.
/// Throws DomainError on the zero polynomial.
SquarefreeFactorization squarefree_factor(const ExactPoly& p);

/// Reversed characteristic polynomial det(1 - uT) of a d-dimensional
/// operator from the exact power traces p_k = tr T^k, k = 1..d, via the
/// Newton-identity recurrence k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
/// with det(1 - uT) = sum_k (-1)^k e_k u^k.
/// Throws DomainError if fewer than d traces are supplied.
ExactPoly det_one_minus_uT(std::span<const Rational> traces, int dimension);

} // namespace graphzeta

#endif
