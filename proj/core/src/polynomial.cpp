#include "idpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace idpoly {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(BigInt c, std::size_t k) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

std::size_t Polynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

std::size_t Polynomial::min_degree() const {
    if (is_zero()) throw std::logic_error("min_degree of the zero polynomial is undefined");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

BigInt Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial r = *this;
    r += rhs;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial r = *this;
    r -= rhs;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute_power(unsigned r) const {
    if (r < 1) throw std::invalid_argument("substitute_power requires r >= 1");
    if (r == 1 || is_zero()) return *this;
    std::vector<BigInt> out((coeffs_.size() - 1) * r + 1, BigInt(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k * r] = coeffs_[k];
    return Polynomial(std::move(out));
}

BigInt Polynomial::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<std::string> Polynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

Polynomial one_minus_x_pow(std::size_t m) {
    // Binomial expansion; coefficient of x^k is (-1)^k C(m,k).
    std::vector<BigInt> out(m + 1);
    BigInt binom = 1;
    for (std::size_t k = 0; k <= m; ++k) {
        out[k] = (k % 2 == 0) ? binom : -binom;
        binom = binom * BigInt(m - k) / BigInt(k + 1);
    }
    return Polynomial(std::move(out));
}

Polynomial corona_compose(const Polynomial& ind_g, const Polynomial& id_h, std::size_t n) {
    if (id_h.is_zero()) throw std::invalid_argument("corona_compose: id_h must be nonzero");
    if (!ind_g.is_zero() && ind_g.degree() > n)
        throw std::invalid_argument("corona_compose: ind_g has a term of degree > n");
    Polynomial acc;
    std::vector<Polynomial> h_pow(n + 1);
    h_pow[0] = Polynomial::one();
    for (std::size_t i = 1; i <= n; ++i) h_pow[i] = h_pow[i - 1] * id_h;
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt ik = ind_g.coeff(k);
        if (ik != 0) acc += Polynomial::monomial(ik, k) * h_pow[n - k];
    }
    return acc;
}

Polynomial corona_edgeless_compose(const Polynomial& ind_g, std::size_t n, unsigned r) {
    if (r < 1) throw std::invalid_argument("corona_edgeless_compose requires r >= 1");
    if (!ind_g.is_zero() && ind_g.degree() > n)
        throw std::invalid_argument("corona_edgeless_compose: ind_g has a term of degree > n");
    Polynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt ik = ind_g.coeff(k);
        if (ik != 0) acc += Polynomial::monomial(ik, k + static_cast<std::size_t>(r) * (n - k));
    }
    return acc;
}

} // namespace idpoly
