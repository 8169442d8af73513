#ifndef ZLAB_POLY_HPP
#define ZLAB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "zlab/monomial.hpp"
#include "zlab/rational.hpp"

namespace zlab {

/// Bivariate polynomial over exact rationals, kept in canonical form:
/// no zero coefficients are stored and terms are ordered graded-lex with
/// x > y, so equality is structural.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly monomial(Monomial m, Rational c = Rational(1));
    static Poly var_x() { return monomial({1, 0}); }
    static Poly var_y() { return monomial({0, 1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Unit of the local ring: nonzero constant term.
    bool is_unit() const { return terms_.count({0, 0}) != 0; }

    Rational coeff(const Monomial& m) const;

    // Minimum total degree over the terms; throws OrderOfZeroError on zero.
    int order() const;
    // Maximum total degree; -1 for the zero polynomial.
    int degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);

    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Monomial& m) const;

    // Terms of total degree < bound.
    Poly truncated(int bound) const;

    bool operator==(const Poly&) const = default;
    bool operator<(const Poly& q) const;  // arbitrary total order, for containers

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

Poly operator*(const Rational& c, const Poly& p);

}  // namespace zlab

#endif
