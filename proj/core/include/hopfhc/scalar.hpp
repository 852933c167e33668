#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hopfhc {

/// Dense univariate polynomial over Q in the indeterminate q.
///
/// Coefficients are canonicalized mpq_class values with no trailing zero:
/// two polynomials are equal iff their coefficient vectors are identical.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpq_class& constant);
    static Poly variable();                       // the polynomial q
    static Poly monomial(const mpq_class& c, int degree);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; } // -1 for zero
    const mpq_class& leading() const;
    mpq_class coefficient(int degree) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const = default;

    /// Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);
    Poly monic_scaled() const; // divide by the leading coefficient

    std::string str() const;

private:
    void trim();
    std::vector<mpq_class> coeff_; // coeff_[i] multiplies q^i
};

/// Exact element of the ground field: Q, or the rational functions Q(q).
///
/// Canonical form makes equality a syntactic check: a value is stored as a
/// plain rational unless it genuinely involves q, and the rational-function
/// representation keeps numerator/denominator coprime with the denominator
/// monic. Arithmetic promotes and demotes between the two states as needed.
class Scalar {
public:
    Scalar() : rational_(0) {}
    Scalar(long num) : rational_(num) {}
    Scalar(long num, unsigned long den);
    explicit Scalar(const mpq_class& r);
    /// num/den as polynomials in q; reduced and demoted to rational if constant.
    Scalar(const Poly& num, const Poly& den);

    static Scalar q();                       // the indeterminate
    static Scalar q_power(long e);           // q^e, e may be negative
    static Scalar from_string(const std::string& text); // "2", "-1/3"

    bool is_zero() const;
    bool is_rational() const { return is_rat_; }
    const mpq_class& rational() const { return rational_; } // valid when is_rational()
    const Poly& num() const { return num_; }                // valid when !is_rational()
    const Poly& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;        // throws std::domain_error on zero
    Scalar pow(long e) const;

    std::string str() const;

private:
    void reduce_ratfun();          // also demotes constants to rational state
    static void promote(const Scalar& s, Poly& num, Poly& den);

    bool is_rat_ = true;
    mpq_class rational_;           // meaningful when is_rat_
    Poly num_, den_;               // meaningful when !is_rat_
};

} // namespace hopfhc
