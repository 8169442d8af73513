#ifndef ZLAB_MONOMIAL_HPP
#define ZLAB_MONOMIAL_HPP

#include <string>

namespace zlab {

// x^a y^b with a, b >= 0.
struct Monomial {
    int a = 0;
    int b = 0;

    int degree() const { return a + b; }

    bool divides(const Monomial& m) const { return a <= m.a && b <= m.b; }

    Monomial operator*(const Monomial& m) const { return {a + m.a, b + m.b}; }

    friend Monomial lcm(const Monomial& u, const Monomial& v) {
        return {u.a > v.a ? u.a : v.a, u.b > v.b ? u.b : v.b};
    }

    // Quotient by a divisor, exponents clamped at zero: the generator of (this : m).
    Monomial colon_by(const Monomial& m) const {
        return {a > m.a ? a - m.a : 0, b > m.b ? b - m.b : 0};
    }

    bool operator==(const Monomial&) const = default;

    // Graded lexicographic with x > y; total order used for canonical term maps.
    bool operator<(const Monomial& m) const {
        if (degree() != m.degree()) return degree() < m.degree();
        return a < m.a;
    }

    std::string str() const;
};

inline std::string Monomial::str() const {
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a == 1)
        s += "x";
    else if (a > 1)
        s += "x^" + std::to_string(a);
    if (b == 1)
        s += "y";
    else if (b > 1)
        s += "y^" + std::to_string(b);
    return s;
}

}  // namespace zlab

#endif
