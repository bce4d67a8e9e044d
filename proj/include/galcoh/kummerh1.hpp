#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcoh/etalealg.hpp"

namespace galcoh {

/// x + y sqrt(d) in Q[sqrt d], d a squarefree integer. For d = 1 this is the
/// split algebra Q x Q, with x + y sqrt(1) standing for (x + y, x - y).
struct QuadElem {
    BigInt d = 1;
    BigRational x, y;

    static QuadElem rational(const BigInt& d, const BigRational& x) { return QuadElem{d, x, 0}; }
    /// "x,y"
    static QuadElem parse(const BigInt& d, std::string_view text);
    std::string to_string() const;

    QuadElem conj() const { return QuadElem{d, x, -y}; }
    BigRational norm() const { return x * x - BigRational(d) * y * y; }
    BigRational trace() const { return 2 * x; }
    bool is_rational() const { return y == 0; }
    QuadElem inverse() const;
    QuadElem pow(int e) const;

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator*(const BigRational& c, const QuadElem& a) { return QuadElem{a.d, c * a.x, c * a.y}; }
    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.d == b.d && a.x == b.x && a.y == b.y;
    }
};

/// Q[x]/(x^n - a).
EtaleAlgebra kummer_radical(int n, const BigRational& a);

/// BigInt d -> squarefree class of -3d, the twist by mu_3.
BigInt tate_dual_twist(const BigInt& d);
/// k -> (1 - k) mod (p - 1) for the twists M_k of mu_{p-1}-type modules.
int mu_power_dual(int k, int p);

// ---------------------------------------------------------------- C3

/// Module C3 twisted by T = Q[sqrt D]; delta in T' = Q[sqrt(-3D)] of norm 1.
struct CoclassC3 {
    BigInt D;
    QuadElem delta;
    void validate() const;
};
EtaleAlgebra c3_encode(const CoclassC3& cc);
struct C3Decoded {
    CoclassC3 datum;
    bool sign_ambiguous = true;  // delta and its conjugate give sigma and -sigma
};
C3Decoded c3_decode(const EtaleAlgebra& l);
CoclassC3 c3_add(const CoclassC3& a, const CoclassC3& b);

// ---------------------------------------------------------------- V4

/// Module C2 x C2 with cubic algebra R (factors in the given order) and
/// delta in R of norm 1, one coordinate per factor as a polynomial in its root.
struct CoclassV4 {
    std::vector<RationalPoly> R;
    std::vector<RationalPoly> delta;
    void validate() const;
    EtaleAlgebra r_algebra() const { return EtaleAlgebra::from_factors(R); }
};
/// The quartic x^4 - 2 e1 x^2 - 8 s x + (e1^2 - 4 e2) for delta' = xi^2 delta
/// and s = N(xi), with xi = 1 unless the roots collide.
EtaleAlgebra v4_encode(const CoclassV4& cc);
RationalPoly v4_quartic(const CoclassV4& cc);
CoclassV4 v4_decode(const EtaleAlgebra& l);
CoclassV4 v4_add(const CoclassV4& a, const CoclassV4& b);

/// Trace, second elementary symmetric function and norm of an element of R.
std::vector<BigRational> r_symmetric(const std::vector<RationalPoly>& r, const std::vector<RationalPoly>& elem);

// ---------------------------------------------------------------- C4

/// Module C4 twisted by T = Q[sqrt D]; alpha in Q[sqrt(-D)] with N(alpha) = c^4.
struct CoclassC4 {
    BigInt D;
    QuadElem alpha;
    BigRational c;
    void validate() const;
    static CoclassC4 make(const BigInt& D, const BigRational& a, const BigRational& b, const BigRational& c);
    static CoclassC4 trivial(const BigInt& D) { return make(D, 1, 0, 1); }
    static CoclassC4 mirror(const BigInt& D) { return make(D, -4, 0, 2); }
};
/// x^4 - 4 c x^2 + (2 c^2 - 2 a); collisions are removed by rescaling with
/// (beta^4, N(beta)) before factoring.
EtaleAlgebra c4_encode(const CoclassC4& cc);
RationalPoly c4_quartic(const CoclassC4& cc);
struct C4Decoded {
    CoclassC4 datum;
    bool sign_ambiguous = true;  // b and -b
};
/// D is read off the algebra; `d_hint` picks the structure on the product forms
/// K[sqrt D] x K[sqrt D] and K x K x K[sqrt D] and must agree otherwise.
C4Decoded c4_decode(const EtaleAlgebra& l, std::optional<BigInt> d_hint = std::nullopt);
CoclassC4 c4_add(const CoclassC4& a, const CoclassC4& b);
/// Divides out (beta^4, N(beta)) for rational beta and a small search of
/// beta in Q[sqrt(-D)], keeping the datum of least height.
CoclassC4 c4_reduce(const CoclassC4& cc);

}  // namespace galcoh
