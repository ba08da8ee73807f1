#ifndef CQS_SCALAR_HPP
#define CQS_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <ostream>
#include <string>

namespace cqs {

// Exact arithmetic substrate. Expression templates are disabled so the
// types behave as plain value scalars inside Eigen containers.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

Int pow_int(const Int& base, long exp);
Rat pow_rat(const Rat& base, long exp);

/// Gaussian rational a + b*i. The only non-rational constant any of the
/// curve parametrizations needs is i, so this field is closed under
/// everything the jet algebra does.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(int v) : re(v), im(0) {}                 // NOLINT(google-explicit-constructor)
    GaussRat(const Rat& r) : re(r), im(0) {}          // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

GaussRat pow_gauss(const GaussRat& base, long exp);

/// Canonical lowest-terms rendering: "p/q" (bare "p" for integers).
std::string to_string(const Rat& r);
/// "p/q", "r/s*i" or "p/q+r/s*i" / "p/q-r/s*i"; "0" for zero.
std::string to_string(const GaussRat& g);

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using GaussMat = Eigen::Matrix<GaussRat, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace cqs

namespace Eigen {

template <>
struct NumTraits<cqs::GaussRat> {
    using Real = cqs::Rat;
    using NonInteger = cqs::GaussRat;
    using Literal = cqs::GaussRat;
    using Nested = cqs::GaussRat;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // CQS_SCALAR_HPP
