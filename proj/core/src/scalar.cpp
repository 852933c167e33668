#include "hopfhc/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfhc {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const mpq_class& constant) {
    if (constant != 0) {
        coeff_.push_back(constant);
        coeff_.back().canonicalize();
    }
}

Poly Poly::variable() { return monomial(1, 1); }

Poly Poly::monomial(const mpq_class& c, int degree) {
    Poly p;
    if (c != 0) {
        p.coeff_.assign(static_cast<size_t>(degree) + 1, mpq_class(0));
        p.coeff_.back() = c;
        p.coeff_.back().canonicalize();
    }
    return p;
}

const mpq_class& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeff_.back();
}

mpq_class Poly::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeff_.size())) return {0};
    return coeff_[static_cast<size_t>(degree)];
}

void Poly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeff_.resize(std::max(coeff_.size(), o.coeff_.size()), mpq_class(0));
    for (size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    for (auto& c : r.coeff_) c.canonicalize();
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
        for (size_t j = 0; j < o.coeff_.size(); ++j)
            r.coeff_[i + j] += coeff_[i] * o.coeff_[j];
    for (auto& c : r.coeff_) c.canonicalize();
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r = *this;
    const int dd = divisor.degree();
    const mpq_class& lc = divisor.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        mpq_class c = r.leading() / lc;
        c.canonicalize();
        int shift = r.degree() - dd;
        Poly term = monomial(c, shift);
        q = q + term;
        r = r - term * divisor;
    }
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic_scaled();
}

Poly Poly::monic_scaled() const {
    if (is_zero()) return {};
    Poly r = *this;
    const mpq_class lc = r.coeff_.back();
    for (auto& c : r.coeff_) {
        c /= lc;
        c.canonicalize();
    }
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpq_class c = coefficient(d);
        if (c == 0) continue;
        mpq_class a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1 && d > 0);
        if (!unit) os << a.get_str();
        if (d > 0) {
            if (!unit) os << "*";
            os << "q";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long num, unsigned long den) : rational_(num, den) {
    rational_.canonicalize();
}

Scalar::Scalar(const mpq_class& r) : rational_(r) { rational_.canonicalize(); }

Scalar::Scalar(const Poly& num, const Poly& den) : is_rat_(false), num_(num), den_(den) {
    reduce_ratfun();
}

Scalar Scalar::q() { return Scalar(Poly::variable(), Poly(mpq_class(1))); }

Scalar Scalar::q_power(long e) {
    if (e >= 0) return Scalar(Poly::monomial(1, static_cast<int>(e)), Poly(mpq_class(1)));
    return Scalar(Poly(mpq_class(1)), Poly::monomial(1, static_cast<int>(-e)));
}

Scalar Scalar::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational literal: " + text);
    v.canonicalize();
    return Scalar(v);
}

void Scalar::reduce_ratfun() {
    if (is_rat_) return;
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        is_rat_ = true;
        rational_ = 0;
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // make the denominator monic
    mpq_class lc = den_.leading();
    if (lc != 1) {
        Poly scale(mpq_class(1) / lc);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }
    if (num_.degree() <= 0 && den_.degree() == 0) {
        is_rat_ = true;
        rational_ = num_.coefficient(0);
        rational_.canonicalize();
    }
}

void Scalar::promote(const Scalar& s, Poly& num, Poly& den) {
    if (s.is_rat_) {
        num = Poly(s.rational_);
        den = Poly(mpq_class(1));
    } else {
        num = s.num_;
        den = s.den_;
    }
}

bool Scalar::is_zero() const { return is_rat_ && rational_ == 0; }

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rat_ && o.is_rat_) return Scalar(mpq_class(rational_ + o.rational_));
    Poly an, ad, bn, bd;
    promote(*this, an, ad);
    promote(o, bn, bd);
    return Scalar(an * bd + bn * ad, ad * bd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (is_rat_) return Scalar(mpq_class(-rational_));
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (is_rat_ && o.is_rat_) return Scalar(mpq_class(rational_ * o.rational_));
    Poly an, ad, bn, bd;
    promote(*this, an, ad);
    promote(o, bn, bd);
    return Scalar(an * bn, ad * bd);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (is_rat_ != o.is_rat_) return false;
    if (is_rat_) return rational_ == o.rational_;
    return num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    if (is_rat_) return Scalar(mpq_class(1 / rational_));
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inverse() : *this;
    long n = e < 0 ? -e : e;
    Scalar acc(1);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (is_rat_) return rational_.get_str();
    std::string n = num_.str();
    if (den_.degree() == 0) return n; // monic degree-0 denominator is 1
    return "(" + n + ")/(" + den_.str() + ")";
}

} // namespace hopfhc
