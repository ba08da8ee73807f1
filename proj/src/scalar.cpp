#include "cqs/scalar.hpp"

#include <stdexcept>

namespace cqs {

Int pow_int(const Int& base, long exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int acc(1);
    Int b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rat pow_rat(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("pow_rat: 0^negative");
        return Rat(1) / pow_rat(base, -exp);
    }
    Rat acc(1);
    Rat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::invalid_argument("GaussRat: division by zero");
    Rat n = o.re * o.re + o.im * o.im;
    Rat r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

GaussRat pow_gauss(const GaussRat& base, long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw std::invalid_argument("pow_gauss: 0^negative");
        return GaussRat(1) / pow_gauss(base, -exp);
    }
    GaussRat acc(1);
    GaussRat b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string to_string(const Rat& r) {
    return r.str();
}

std::string to_string(const GaussRat& g) {
    if (g.is_zero()) return "0";
    if (g.im == 0) return to_string(g.re);
    std::string imag = (g.im == 1)    ? "i"
                       : (g.im == -1) ? "-i"
                                      : to_string(g.im) + "*i";
    if (g.re == 0) return imag;
    if (g.im > 0 && imag[0] != '-') return to_string(g.re) + "+" + imag;
    if (imag[0] == '-') return to_string(g.re) + imag;
    return to_string(g.re) + "+" + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
    return os << to_string(g);
}

}  // namespace cqs
