#pragma once

#include <string>
#include <vector>

#include "galcoh/kummerh1.hpp"
#include "galcoh/rational.hpp"

namespace galcoh {

/// p > 0 a prime, or p = 0 for the real place.
struct Place {
    long p = 0;
    static Place real() { return Place{0}; }
    static Place prime(long p);
    bool is_real() const { return p == 0; }
    std::string to_string() const { return p == 0 ? "inf" : std::to_string(p); }
    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;
};

/// A class in Q_p^x / (Q_p^x)^m (or R^x / squares).
/// m = 2, p odd: unit 0/1 for square/nonsquare unit part.
/// m = 2, p = 2: unit = unit part mod 8 in {1,3,5,7}.
/// m = 2, real: val 0, unit 0/1 for the sign.
/// m = 3: unit = log of the unit part to the base of the least primitive root, mod 3
///        (always 0 when p = 2 mod 3).
struct LocalClass {
    int m = 2;
    Place place;
    int val = 0;
    int unit = 0;
    friend bool operator==(const LocalClass&, const LocalClass&) = default;
    friend auto operator<=>(const LocalClass&, const LocalClass&) = default;
    std::string to_string() const;
};

LocalClass local_class(const BigRational& q, Place place, int m);
BigRational representative(const LocalClass& c);
/// Q_p^x / squares: 4 (p odd), 8 (p = 2), 2 (real); canonical representatives.
std::vector<LocalClass> square_classes(Place place);
/// Q_p^x / cubes for p != 3: 9 when p = 1 mod 3, else 3.
std::vector<LocalClass> cube_classes(long p);
long least_nonresidue(long p);
long least_primitive_root(long p);

/// Exponent k of a value in mu_m: (-1)^k or zeta3^k with zeta3 = (-1 + sqrt(-3))/2
/// for the chosen p-adic sqrt(-3).
struct SymbolValue {
    int m = 2;
    int k = 0;
    bool is_one() const { return k == 0; }
    SymbolValue operator*(const SymbolValue& o) const { return SymbolValue{m, (k + o.k) % m}; }
    friend bool operator==(const SymbolValue&, const SymbolValue&) = default;
    std::string to_string() const;
};

/// Quadratic Hilbert symbol <a, b> on Q_p or R by the closed formulas.
SymbolValue hilbert2(const BigRational& a, const BigRational& b, Place place);
SymbolValue hilbert2(const LocalClass& a, const LocalClass& b);

/// Independent oracle: a x^2 + b y^2 = z^2 has a nontrivial solution over Q_p / R.
/// Finite p: depth-first search over primitive triples mod p^j up to
/// k = 1 + 2 v_p(2ab) + 2 with a Hensel certificate at level k.
bool conic_has_point(const BigRational& a, const BigRational& b, Place place);

// ---------------------------------------------------------------- p-adic layer

/// Elements of W = Q_{p^2}(sqrt p) for an odd prime p, known to N p-adic digits.
/// W contains every quadratic extension of Q_p, so every tame local field
/// with e, f <= 2 used here sits inside it.
/// x = p^e ((a0 + a1 s) + (b0 + b1 s) pi), s = sqrt(u), pi = sqrt(p).
struct WElem {
    long e = 0;
    BigInt a0, a1, b0, b1;
};

class PadicW {
public:
    explicit PadicW(long p, int digits = 60);
    long p() const { return p_; }
    long u() const { return u_; }

    WElem from_rational(const BigRational& q) const;
    WElem add(const WElem& x, const WElem& y) const;
    WElem sub(const WElem& x, const WElem& y) const;
    WElem mul(const WElem& x, const WElem& y) const;
    WElem mul(const BigRational& c, const WElem& x) const { return mul(from_rational(c), x); }
    bool is_zero(const WElem& x) const;
    /// Valuation in units of pi (so v(p) = 2). Throws if x vanishes to working precision.
    long valuation(const WElem& x) const;
    /// Residue of x / pi^v in F_{p^2} = F_p[s], as (x, y) meaning x + y s.
    std::pair<long, long> unit_residue(const WElem& x) const;
    /// A fixed square root of a rational in W.
    WElem sqrt_rational(const BigRational& q) const;
    /// Square root of an element of Q_p (a1 = b0 = b1 = 0).
    WElem sqrt_qp(const WElem& x) const;
    bool in_qp(const WElem& x) const;
    /// Class of an element of Q_p in Q_p^x / squares.
    LocalClass square_class_qp(const WElem& x) const;

private:
    long p_, u_;
    int n_;
    BigInt pn_;
    BigInt mod(const BigInt& x) const;
    WElem normalize(WElem x) const;
    BigInt hensel_sqrt(const BigInt& a) const;
};

/// A tame local field F inside W: residue degree f, ramification e (both <= 2).
struct LocalFieldDesc {
    long p = 0;
    int e = 1;
    int f = 1;
    long q() const { return f == 1 ? p : p * p; }
};

/// ((-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)})^{(q-1)/m} in the residue field of F,
/// for a, b in F (given through W). m = 3 values are read against the residue
/// of (-1 + sqrt(-3))/2. Requires p odd, p != m, and mu_m inside F.
SymbolValue tame_symbol(const PadicW& w, const LocalFieldDesc& f, const WElem& a, const WElem& b, int m);

/// Product of per-factor symbols.
SymbolValue hilbert_etale(const PadicW& w, const std::vector<LocalFieldDesc>& fields, const std::vector<WElem>& a,
                          const std::vector<WElem>& b, int m);

/// Cubic Hilbert symbol on Q_p, p = 1 mod 3.
SymbolValue hilbert3(const BigRational& a, const BigRational& b, long p);

// ---------------------------------------------------------------- pairings

/// Tate pairing H^1(M) x H^1(M') -> mu_3 for M = C3 twisted by T = Q[sqrt D]:
/// sigma in Q[sqrt(-3D)] and tau in Q[sqrt D], both of norm 1, are placed in
/// E = T[mu_3] and paired by the cubic Hilbert symbol of each factor of E,
/// the mu_3 of each factor read through its coordinate. p must not divide 6.
SymbolValue tate_pair_c3(long p, const BigInt& D, const QuadElem& sigma, const QuadElem& tau);

/// Tate pairing on H^1(M) for M = C2 x C2 with cubic algebra R: the quadratic
/// Hilbert pairing on R_p. Local factors of R of degree 3 are unsupported;
/// p = 2 only when R splits into linear factors over Q.
SymbolValue tate_pair_v4(long p, const CoclassV4& sigma, const CoclassV4& tau);

/// Local factors of R_p: one root in W per factor and the factor's field.
struct LocalFactor {
    std::size_t global_index;  // which factor of R
    WElem root;
    LocalFieldDesc field;
};
std::vector<LocalFactor> local_factors(const PadicW& w, const std::vector<RationalPoly>& r);

// ---------------------------------------------------------------- local H^1

/// Class label of a norm-one delta in Q[sqrt(-3D)] modulo cubes over Q_p.
std::string c3_local_label(long p, const BigInt& D, const QuadElem& delta);
/// Class label of a V4 datum modulo squares over Q_p (square classes per local factor).
std::string v4_local_label(long p, const CoclassV4& cc);

/// Representatives of the finite local groups:
/// c2 -> square classes; mu3 -> cube classes of Q_p;
/// c3 -> T'^{N=1}/cubes as global norm-one elements gamma/conj(gamma);
/// v4 -> R = Q^3 data (a1; a2; 1/(a1 a2)) over square classes.
std::vector<BigRational> h1_c2_local(Place place);
std::vector<BigRational> h1_mu3_local(long p);
std::vector<QuadElem> h1_c3_local(long p, const BigInt& D);
std::vector<CoclassV4> h1_v4_split_local(long p);

/// The split cubic algebra Q^3 used for local V4 data.
std::vector<RationalPoly> split_cubic_r();

/// Labels of global data at p.
std::string localize_c2(const BigRational& a, Place place);
std::string localize_c3(const CoclassC3& cc, long p);
std::string localize_v4(const CoclassV4& cc, long p);

}  // namespace galcoh
