#ifndef IDPOLY_POLYNOMIAL_HPP
#define IDPOLY_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace idpoly {

using BigInt = boost::multiprecision::cpp_int;

// Univariate polynomial over arbitrary-precision signed integers,
// coefficients stored in ascending degree. Canonical form: no trailing
// zero coefficient; the zero polynomial is the empty sequence.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return constant(1); }
    static Polynomial constant(BigInt c);
    // c * x^k
    static Polynomial monomial(BigInt c, std::size_t k);
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Callers must check is_zero() first; the zero polynomial has no degree.
    std::size_t degree() const;
    // Lowest degree with a nonzero coefficient (requires !is_zero()).
    std::size_t min_degree() const;

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    // Coefficient of x^k; zero beyond the degree.
    BigInt coeff(std::size_t k) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const = default;

    Polynomial pow(unsigned k) const;

    // p(x^r): moves the coefficient of x^k to x^{rk}. Requires r >= 1.
    Polynomial substitute_power(unsigned r) const;

    // Exact Horner evaluation.
    BigInt evaluate(const BigInt& t) const;

    // Human-readable form, e.g. "x + 2*x^2"; "0" for the zero polynomial.
    std::string to_string() const;
    // Ascending decimal coefficient strings (exact serialization).
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// (1-x)^m expanded with exact signed coefficients.
Polynomial one_minus_x_pow(std::size_t m);

// sum_{k=0}^{n} i_k x^k id_h^{n-k}, where i_k are ind_g's coefficients.
// The polynomial form of id_h^n * ind_g(x / id_h); no rational function
// is ever formed. Requires deg(ind_g) <= n and id_h nonzero.
Polynomial corona_compose(const Polynomial& ind_g, const Polynomial& id_h, std::size_t n);

// Termwise sum_k i_k x^{k + r(n-k)}: the edgeless-corona special case of
// corona_compose with id_h = x^r, evaluated without negative exponents.
Polynomial corona_edgeless_compose(const Polynomial& ind_g, std::size_t n, unsigned r);

} // namespace idpoly

#endif
