#include "galcoh/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "galcoh/errors.hpp"

namespace galcoh {

// ---------------------------------------------------------------- Real

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_rational(const BigRational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Real Real::from_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    std::unique_ptr<char[]> buf(new char[static_cast<std::size_t>(digits) + 64]);
    mpfr_snprintf(buf.get(), static_cast<std::size_t>(digits) + 64, "%.*Re", digits - 1, v_);
    return buf.get();
}

// ---------------------------------------------------------------- helpers

namespace {

constexpr mpfr_rnd_t N = MPFR_RNDN;
constexpr mpfr_rnd_t U = MPFR_RNDU;
constexpr mpfr_rnd_t D = MPFR_RNDD;

Real abs_up(const Complex& z) {
    Real r(z.re.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), U);
    return r;
}

Real abs_down(const Complex& z) {
    Real r(z.re.prec());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), D);
    return r;
}

/// magnitude * k * 2^-prec, rounded up.
Real rounding_err(const Real& magnitude, unsigned long k, mpfr_prec_t prec) {
    Real r(magnitude.prec());
    mpfr_mul_ui(r.get(), magnitude.get(), k, U);
    mpfr_div_2si(r.get(), r.get(), prec, U);
    return r;
}

Complex cadd(const Complex& a, const Complex& b) {
    Complex r(a.re.prec());
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), N);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), N);
    return r;
}

Complex csub(const Complex& a, const Complex& b) {
    Complex r(a.re.prec());
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), N);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), N);
    return r;
}

Complex cmul(const Complex& a, const Complex& b) {
    Complex r(a.re.prec());
    Real t(a.re.prec());
    mpfr_mul(r.re.get(), a.re.get(), b.re.get(), N);
    mpfr_mul(t.get(), a.im.get(), b.im.get(), N);
    mpfr_sub(r.re.get(), r.re.get(), t.get(), N);
    mpfr_mul(r.im.get(), a.re.get(), b.im.get(), N);
    mpfr_mul(t.get(), a.im.get(), b.re.get(), N);
    mpfr_add(r.im.get(), r.im.get(), t.get(), N);
    return r;
}

Complex cdiv(const Complex& a, const Complex& b) {
    const auto p = a.re.prec();
    Real den(p), t(p);
    mpfr_sqr(den.get(), b.re.get(), N);
    mpfr_sqr(t.get(), b.im.get(), N);
    mpfr_add(den.get(), den.get(), t.get(), N);
    Complex conjb(p);
    mpfr_set(conjb.re.get(), b.re.get(), N);
    mpfr_neg(conjb.im.get(), b.im.get(), N);
    Complex r = cmul(a, conjb);
    mpfr_div(r.re.get(), r.re.get(), den.get(), N);
    mpfr_div(r.im.get(), r.im.get(), den.get(), N);
    return r;
}

Complex cset_prec(const Complex& z, mpfr_prec_t p) {
    Complex r(p);
    mpfr_set(r.re.get(), z.re.get(), N);
    mpfr_set(r.im.get(), z.im.get(), N);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- balls

ComplexBall ComplexBall::exact(const BigRational& re, const BigRational& im, mpfr_prec_t prec) {
    ComplexBall b(prec);
    b.mid.re = Real::from_rational(re, prec);
    b.mid.im = Real::from_rational(im, prec);
    // Each conversion is off by at most half an ulp.
    Real err = rounding_err(abs_up(b.mid), 2, prec);
    b.rad = err;
    return b;
}

Real ComplexBall::abs_upper() const {
    Real r = abs_up(mid);
    mpfr_add(r.get(), r.get(), rad.get(), U);
    return r;
}

bool ComplexBall::radius_at_most_pow2(long e) const {
    Real bound = Real::pow2(e, prec());
    return mpfr_lessequal_p(rad.get(), bound.get());
}

bool ComplexBall::is_real() const { return mpfr_zero_p(mid.im.get()); }

std::string ComplexBall::to_string(int digits) const {
    return "[" + mid.re.to_string(digits) + " + " + mid.im.to_string(digits) + "i +/- " +
           rad.to_string(3) + "]";
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    const auto p = std::min(a.prec(), b.prec());
    ComplexBall r(p);
    r.mid = cadd(a.mid, b.mid);
    Real mag = abs_up(r.mid);
    mpfr_add(r.rad.get(), a.rad.get(), b.rad.get(), U);
    Real e = rounding_err(mag, 2, p);
    mpfr_add(r.rad.get(), r.rad.get(), e.get(), U);
    return r;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    ComplexBall nb = b;
    mpfr_neg(nb.mid.re.get(), nb.mid.re.get(), N);
    mpfr_neg(nb.mid.im.get(), nb.mid.im.get(), N);
    return a + nb;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    const auto p = std::min(a.prec(), b.prec());
    ComplexBall r(p);
    r.mid = cmul(a.mid, b.mid);
    Real ma = abs_up(a.mid), mb = abs_up(b.mid), t(p);
    // |a| s + |b| r + r s
    mpfr_mul(r.rad.get(), ma.get(), b.rad.get(), U);
    mpfr_mul(t.get(), mb.get(), a.rad.get(), U);
    mpfr_add(r.rad.get(), r.rad.get(), t.get(), U);
    mpfr_mul(t.get(), a.rad.get(), b.rad.get(), U);
    mpfr_add(r.rad.get(), r.rad.get(), t.get(), U);
    mpfr_mul(t.get(), ma.get(), mb.get(), U);
    Real e = rounding_err(t, 8, p);
    mpfr_add(r.rad.get(), r.rad.get(), e.get(), U);
    return r;
}

ComplexBall inverse(const ComplexBall& a) {
    const auto p = a.prec();
    Real lo = abs_down(a.mid);
    Real gap(p);
    mpfr_sub(gap.get(), lo.get(), a.rad.get(), D);
    if (mpfr_sgn(gap.get()) <= 0) throw InvalidInput("inverse of a ball containing zero");
    ComplexBall r(p);
    Complex one(p);
    mpfr_set_ui(one.re.get(), 1, N);
    r.mid = cdiv(one, a.mid);
    // |1/(m+e) - 1/m| <= r / (|m| (|m| - r))
    Real den(p);
    mpfr_mul(den.get(), lo.get(), gap.get(), D);
    mpfr_div(r.rad.get(), a.rad.get(), den.get(), U);
    Real inv_mag(p);
    mpfr_ui_div(inv_mag.get(), 1, lo.get(), U);
    Real e = rounding_err(inv_mag, 16, p);
    mpfr_add(r.rad.get(), r.rad.get(), e.get(), U);
    return r;
}

ComplexBall conj(const ComplexBall& a) {
    ComplexBall r = a;
    mpfr_neg(r.mid.im.get(), r.mid.im.get(), N);
    return r;
}

ComplexBall eval(const RationalPoly& f, const ComplexBall& z) {
    const auto p = z.prec();
    ComplexBall acc = ComplexBall::exact(0, 0, p);
    for (int i = f.degree(); i >= 0; --i) acc = acc * z + ComplexBall::exact(f.coeff(i), 0, p);
    return acc;
}

bool overlaps(const ComplexBall& a, const ComplexBall& b) {
    const auto p = std::max(a.prec(), b.prec());
    Complex d = csub(cset_prec(a.mid, p), cset_prec(b.mid, p));
    Real dist = abs_down(d);
    Real sum(p);
    mpfr_add(sum.get(), a.rad.get(), b.rad.get(), U);
    Real slack = rounding_err(dist, 4, p);
    mpfr_add(sum.get(), sum.get(), slack.get(), U);
    return mpfr_lessequal_p(dist.get(), sum.get());
}

bool contains(const ComplexBall& outer, const ComplexBall& inner) {
    const auto p = std::max(outer.prec(), inner.prec());
    Complex d = csub(cset_prec(outer.mid, p), cset_prec(inner.mid, p));
    Real dist = abs_up(d);
    Real slack = rounding_err(dist, 4, p);
    mpfr_add(dist.get(), dist.get(), slack.get(), U);
    mpfr_add(dist.get(), dist.get(), inner.rad.get(), U);
    return mpfr_lessequal_p(dist.get(), outer.rad.get());
}

// ---------------------------------------------------------------- roots

namespace {

Complex horner(const std::vector<Complex>& c, const Complex& z) {
    Complex acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = cadd(cmul(acc, z), c[i]);
    return acc;
}

/// Aberth-Ehrlich iteration on the monic polynomial with coefficients c.
void aberth(const std::vector<Complex>& c, const std::vector<Complex>& dc, std::vector<Complex>& z,
            mpfr_prec_t prec) {
    const std::size_t n = z.size();
    Real tol = Real::pow2(-static_cast<long>(prec) + 12, prec);
    Complex one(prec);
    mpfr_set_ui(one.re.get(), 1, N);
    for (int iter = 0; iter < 2000; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Complex fz = horner(c, z[i]);
            if (mpfr_zero_p(fz.re.get()) && mpfr_zero_p(fz.im.get())) continue;
            Complex ratio = cdiv(fz, horner(dc, z[i]));
            Complex sum(prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                sum = cadd(sum, cdiv(one, csub(z[i], z[j])));
            }
            Complex corr = cdiv(ratio, csub(one, cmul(ratio, sum)));
            z[i] = csub(z[i], corr);
            Real mag = abs_up(corr), scale = abs_up(z[i]);
            if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, N);
            mpfr_mul(scale.get(), scale.get(), tol.get(), U);
            if (mpfr_greater_p(mag.get(), scale.get())) converged = false;
        }
        if (converged) return;
    }
}

struct Certificate {
    bool ok = false;
    std::vector<Real> radius;
};

Certificate certify(const std::vector<BigRational>& exact, const std::vector<Complex>& c,
                    const std::vector<Complex>& z, mpfr_prec_t prec) {
    const std::size_t n = z.size();
    Certificate cert;
    std::vector<Real> absc;
    for (const auto& q : exact) {
        Real a = Real::from_rational(abs(q), prec, U);
        absc.push_back(a);
    }
    const unsigned long gamma = 8 * n + 8;
    for (std::size_t i = 0; i < n; ++i) {
        Complex fz = horner(c, z[i]);
        Real absz = abs_up(z[i]);
        Real s(prec);
        for (std::size_t k = absc.size(); k-- > 0;) {
            mpfr_mul(s.get(), s.get(), absz.get(), U);
            mpfr_add(s.get(), s.get(), absc[k].get(), U);
        }
        Real num = abs_up(fz);
        Real err = rounding_err(s, gamma, prec);
        mpfr_add(num.get(), num.get(), err.get(), U);

        Real den(prec);
        mpfr_set_ui(den.get(), 1, N);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Real d = abs_down(csub(z[i], z[j]));
            mpfr_mul(den.get(), den.get(), d.get(), D);
        }
        Real shrink(prec);
        mpfr_set_ui(shrink.get(), 1, N);
        Real eps = Real::pow2(-static_cast<long>(prec), prec);
        mpfr_mul_ui(eps.get(), eps.get(), 8 * n + 8, U);
        mpfr_sub(shrink.get(), shrink.get(), eps.get(), D);
        mpfr_mul(den.get(), den.get(), shrink.get(), D);
        if (mpfr_sgn(den.get()) <= 0) return cert;
        Real r(prec);
        mpfr_div(r.get(), num.get(), den.get(), U);
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), U);
        cert.radius.push_back(r);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Real d = abs_down(csub(z[i], z[j]));
            Real sum(prec);
            mpfr_add(sum.get(), cert.radius[i].get(), cert.radius[j].get(), U);
            if (!mpfr_greater_p(d.get(), sum.get())) return cert;
        }
    cert.ok = true;
    return cert;
}

}  // namespace

std::vector<ComplexBall> numeric_roots(const RationalPoly& f_in, int precision_bits) {
    if (f_in.degree() < 1) throw InvalidInput("numeric_roots needs degree >= 1");
    if (!is_squarefree(f_in))
        throw InvalidInput("numeric_roots needs a squarefree polynomial; deflate with gcd(f, f') first");
    if (precision_bits < 1) throw InvalidInput("precision_bits must be positive");
    const RationalPoly f = f_in.monic();
    const RationalPoly df = f.derivative();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    constexpr mpfr_prec_t cap = 8192;

    // Cauchy bound for starting points.
    BigRational bound = 0;
    for (int i = 0; i < f.degree(); ++i) bound = std::max(bound, BigRational(abs(f.coeff(i))));
    double radius = 1.0 + std::min(1e300, bound.get_d());

    std::vector<Complex> z;
    mpfr_prec_t prec = 128;
    for (std::size_t k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        Complex s(prec);
        s.re = Real::from_double(radius * std::cos(ang), prec);
        s.im = Real::from_double(radius * std::sin(ang), prec);
        z.push_back(s);
    }

    while (true) {
        std::vector<Complex> c, dc;
        for (int i = 0; i <= f.degree(); ++i) {
            Complex v(prec);
            v.re = Real::from_rational(f.coeff(i), prec);
            c.push_back(v);
        }
        for (int i = 0; i <= df.degree(); ++i) {
            Complex v(prec);
            v.re = Real::from_rational(df.coeff(i), prec);
            dc.push_back(v);
        }
        for (auto& w : z) w = cset_prec(w, prec);
        aberth(c, dc, z, prec);
        Certificate cert = certify(f.coeffs(), c, z, prec);
        if (cert.ok) {
            Real target = Real::pow2(-precision_bits, prec);
            bool small = std::all_of(cert.radius.begin(), cert.radius.end(), [&](const Real& r) {
                return mpfr_lessequal_p(r.get(), target.get());
            });
            if (small) {
                std::vector<ComplexBall> balls;
                for (std::size_t i = 0; i < n; ++i) {
                    ComplexBall b(prec);
                    b.mid = z[i];
                    b.rad = cert.radius[i];
                    balls.push_back(b);
                }
                // Conjugation symmetry: a disk meeting the real axis whose
                // mirror image meets no other disk holds a real root.
                std::vector<bool> done(n, false);
                for (std::size_t i = 0; i < n; ++i) {
                    if (done[i]) continue;
                    ComplexBall mirror = conj(balls[i]);
                    std::size_t partner = n;
                    for (std::size_t j = 0; j < n; ++j)
                        if (overlaps(mirror, balls[j])) {
                            if (partner != n && partner != j) partner = n + 1;
                            else if (partner == n) partner = j;
                        }
                    if (partner == i) {
                        mpfr_set_zero(balls[i].mid.im.get(), 1);
                        Real extra = abs_up(z[i]);
                        mpfr_abs(extra.get(), z[i].im.get(), U);
                        mpfr_add(balls[i].rad.get(), balls[i].rad.get(), extra.get(), U);
                        done[i] = true;
                    } else if (partner < n && !done[partner]) {
                        // Use one midpoint for both, widen to keep the root.
                        Complex diff = csub(conj(balls[i]).mid, balls[partner].mid);
                        Real shift = abs_up(diff);
                        balls[partner].mid = conj(balls[i]).mid;
                        mpfr_add(balls[partner].rad.get(), balls[partner].rad.get(), shift.get(), U);
                        Real r(prec);
                        mpfr_max(r.get(), balls[i].rad.get(), balls[partner].rad.get(), U);
                        balls[i].rad = r;
                        balls[partner].rad = r;
                        done[i] = done[partner] = true;
                    }
                }
                bool clean = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
                bool still_small = std::all_of(balls.begin(), balls.end(), [&](const ComplexBall& b) {
                    return b.radius_at_most_pow2(-precision_bits);
                });
                bool disjoint = true;
                for (std::size_t i = 0; i < n && disjoint; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (overlaps(balls[i], balls[j])) {
                            disjoint = false;
                            break;
                        }
                if (clean && still_small && disjoint) {
                    std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
                        int cr = mpfr_cmp(a.mid.re.get(), b.mid.re.get());
                        if (cr != 0) return cr < 0;
                        return mpfr_cmp(a.mid.im.get(), b.mid.im.get()) < 0;
                    });
                    return balls;
                }
            }
        }
        if (prec >= cap) throw Unsupported("numeric_roots: precision cap of 8192 bits reached");
        prec *= 2;
    }
}

}  // namespace galcoh
