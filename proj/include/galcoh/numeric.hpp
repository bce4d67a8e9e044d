#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "galcoh/poly.hpp"

namespace galcoh {

/// Owning wrapper around an mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real from_rational(const BigRational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static Real from_double(double d, mpfr_prec_t prec);
    /// 2^e, exactly.
    static Real pow2(long e, mpfr_prec_t prec);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

struct Complex {
    Real re, im;
    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
};

/// Disk {z : |z - mid| <= rad}. The radius is maintained as a rigorous upper
/// bound including rounding of the midpoint operations.
struct ComplexBall {
    Complex mid;
    Real rad;
    explicit ComplexBall(mpfr_prec_t prec = 128) : mid(prec), rad(prec) {}

    mpfr_prec_t prec() const { return mid.re.prec(); }
    static ComplexBall exact(const BigRational& re, const BigRational& im, mpfr_prec_t prec);
    /// Upper bound on sup |z| over the ball.
    Real abs_upper() const;
    bool radius_at_most_pow2(long e) const;
    bool is_real() const;
    std::string to_string(int digits = 20) const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
/// Throws if the ball contains zero.
ComplexBall inverse(const ComplexBall& a);
ComplexBall conj(const ComplexBall& a);
ComplexBall eval(const RationalPoly& f, const ComplexBall& z);

bool overlaps(const ComplexBall& a, const ComplexBall& b);
/// inner is a subset of outer.
bool contains(const ComplexBall& outer, const ComplexBall& inner);

/// Certified isolating disks for the roots of a squarefree polynomial, one per
/// root, pairwise disjoint, each of radius <= 2^-precision_bits. Working
/// precision starts at 128 bits and doubles (cap 8192). Real roots come back
/// with zero imaginary midpoint; nonreal roots in exact conjugate pairs.
/// Order: ascending real part, then imaginary part.
std::vector<ComplexBall> numeric_roots(const RationalPoly& f, int precision_bits = 128);

}  // namespace galcoh
