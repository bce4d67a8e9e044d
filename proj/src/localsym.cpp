#include "galcoh/localsym.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "galcoh/errors.hpp"

namespace galcoh {

namespace {

long long mod_ll(long long a, long long p) { return ((a % p) + p) % p; }

long long pow_mod(long long b, long long e, long long p) {
    long long r = 1 % p;
    b = mod_ll(b, p);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % p);
        b = static_cast<long long>(static_cast<__int128>(b) * b % p);
    }
    return r;
}

/// q mod n for q with denominator prime to n.
long long rational_mod(const BigRational& q, long long n) {
    BigInt num = q.get_num() % BigInt(static_cast<long>(n));
    BigInt den = q.get_den() % BigInt(static_cast<long>(n));
    long long a = mod_ll(num.get_si(), n), d = mod_ll(den.get_si(), n);
    BigInt inv;
    BigInt dd(static_cast<long>(d)), nn(static_cast<long>(n));
    if (mpz_invert(inv.get_mpz_t(), dd.get_mpz_t(), nn.get_mpz_t()) == 0)
        throw std::logic_error("denominator not invertible");
    return static_cast<long long>(static_cast<__int128>(a) * inv.get_si() % n);
}

bool is_qr(long long a, long long p) { return pow_mod(a, (p - 1) / 2, p) == 1; }

void require_prime(long p) {
    if (p < 2 || !is_prime(BigInt(p))) throw InvalidInput("not a prime: " + std::to_string(p));
}

/// F_{p^2} = F_p[s], s^2 = u.
struct Fq2 {
    long long x, y;
};

struct Fq2Ring {
    long long p, u;
    Fq2 mul(Fq2 a, Fq2 b) const {
        return Fq2{mod_ll(a.x * b.x % p + u * (a.y * b.y % p) % p, p), mod_ll(a.x * b.y + a.y * b.x, p)};
    }
    Fq2 pow(Fq2 a, long long e) const {
        Fq2 r{1, 0};
        for (; e > 0; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    Fq2 inv(Fq2 a) const {
        long long n = mod_ll(a.x * a.x % p - u * (a.y * a.y % p) % p, p);
        if (n == 0) throw std::logic_error("zero residue");
        long long ni = pow_mod(n, p - 2, p);
        return Fq2{a.x * ni % p, mod_ll(-a.y * ni, p)};
    }
};

}  // namespace

Place Place::prime(long p) {
    require_prime(p);
    return Place{p};
}

long least_nonresidue(long p) {
    require_prime(p);
    if (p == 2) throw InvalidInput("no quadratic nonresidue mod 2");
    for (long a = 2;; ++a)
        if (!is_qr(a, p)) return a;
}

long least_primitive_root(long p) {
    require_prime(p);
    if (p == 2) return 1;
    std::vector<long> qs;
    for (const auto& [q, e] : factor_integer(BigInt(p - 1))) {
        (void)e;
        qs.push_back(q.get_si());
    }
    for (long g = 2;; ++g) {
        bool ok = true;
        for (long q : qs) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
        if (ok) return g;
    }
}

// ---------------------------------------------------------------- classes

LocalClass local_class(const BigRational& q, Place place, int m) {
    if (q == 0) throw InvalidInput("zero has no local class");
    if (m != 2 && m != 3) throw InvalidInput("local classes are for m = 2, 3");
    LocalClass c;
    c.m = m;
    c.place = place;
    if (place.is_real()) {
        c.unit = (m == 2 && q < 0) ? 1 : 0;
        return c;
    }
    const long p = place.p;
    if (m == 3 && p == 3) throw Unsupported("cube classes at p = 3 are wild");
    const int v = valuation(q, BigInt(p));
    const BigRational w = q / pow(BigRational(p), v);
    c.val = ((v % m) + m) % m;
    if (m == 2) {
        if (p == 2)
            c.unit = static_cast<int>(rational_mod(w, 8));
        else
            c.unit = is_qr(rational_mod(w, p), p) ? 0 : 1;
    } else if (p % 3 == 1) {
        const long long r = pow_mod(rational_mod(w, p), (p - 1) / 3, p);
        const long long g = pow_mod(least_primitive_root(p), (p - 1) / 3, p);
        for (int j = 0; j < 3; ++j)
            if (pow_mod(g, j, p) == r) c.unit = j;
    }
    return c;
}

BigRational representative(const LocalClass& c) {
    if (c.place.is_real()) return c.unit ? BigRational(-1) : BigRational(1);
    const long p = c.place.p;
    BigRational unit = 1;
    if (c.m == 2)
        unit = p == 2 ? BigRational(c.unit) : (c.unit ? BigRational(least_nonresidue(p)) : BigRational(1));
    else
        unit = pow(BigRational(least_primitive_root(p)), c.unit);
    return pow(BigRational(p), c.val) * unit;
}

std::string LocalClass::to_string() const {
    if (place.is_real()) return unit ? "-1" : "+1";
    std::vector<std::string> parts;
    const std::string ps = std::to_string(place.p);
    if (val == 1) parts.push_back(ps);
    if (val > 1) parts.push_back(ps + "^" + std::to_string(val));
    if (m == 2 && place.p != 2 && unit) parts.push_back(std::to_string(least_nonresidue(place.p)));
    if (m == 2 && place.p == 2 && unit != 1) parts.push_back(std::to_string(unit));
    if (m == 3 && unit) {
        std::string g = std::to_string(least_primitive_root(place.p));
        parts.push_back(unit == 1 ? g : g + "^" + std::to_string(unit));
    }
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
    return s;
}

std::vector<LocalClass> square_classes(Place place) {
    std::vector<LocalClass> out;
    if (place.is_real()) {
        for (int u = 0; u < 2; ++u) out.push_back(LocalClass{2, place, 0, u});
        return out;
    }
    for (int v = 0; v < 2; ++v) {
        if (place.p == 2)
            for (int u : {1, 3, 5, 7}) out.push_back(LocalClass{2, place, v, u});
        else
            for (int u = 0; u < 2; ++u) out.push_back(LocalClass{2, place, v, u});
    }
    return out;
}

std::vector<LocalClass> cube_classes(long p) {
    Place place = Place::prime(p);
    if (p == 3) throw Unsupported("cube classes at p = 3 are wild");
    std::vector<LocalClass> out;
    const int units = p % 3 == 1 ? 3 : 1;
    for (int v = 0; v < 3; ++v)
        for (int u = 0; u < units; ++u) out.push_back(LocalClass{3, place, v, u});
    return out;
}

std::string SymbolValue::to_string() const {
    if (k == 0) return "+1";
    if (m == 2) return "-1";
    return "zeta" + std::to_string(m) + "^" + std::to_string(k);
}

// ---------------------------------------------------------------- Hilbert symbol

SymbolValue hilbert2(const BigRational& a, const BigRational& b, Place place) {
    if (a == 0 || b == 0) throw InvalidInput("Hilbert symbol needs nonzero arguments");
    if (place.is_real()) return SymbolValue{2, (a < 0 && b < 0) ? 1 : 0};
    const long p = place.p;
    const int alpha = valuation(a, BigInt(p)), beta = valuation(b, BigInt(p));
    const BigRational u = a / pow(BigRational(p), alpha), v = b / pow(BigRational(p), beta);
    int k = 0;
    if (p == 2) {
        const long long u8 = rational_mod(u, 8), v8 = rational_mod(v, 8);
        auto eps = [](long long x) { return static_cast<int>(((x - 1) / 2) & 1); };
        auto omega = [](long long x) { return static_cast<int>(((x * x - 1) / 8) & 1); };
        k = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    } else {
        const int e = static_cast<int>(((p - 1) / 2) & 1);
        k = alpha * beta * e;
        if (beta & 1) k += is_qr(rational_mod(u, p), p) ? 0 : 1;
        if (alpha & 1) k += is_qr(rational_mod(v, p), p) ? 0 : 1;
    }
    return SymbolValue{2, ((k % 2) + 2) % 2};
}

SymbolValue hilbert2(const LocalClass& a, const LocalClass& b) {
    if (a.m != 2 || b.m != 2 || !(a.place.p == b.place.p)) throw InvalidInput("square classes at one place expected");
    return hilbert2(representative(a), representative(b), a.place);
}

namespace {

int val_ll(__int128 x, long long p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

}  // namespace

bool conic_has_point(const BigRational& a0, const BigRational& b0, Place place) {
    if (a0 == 0 || b0 == 0) throw InvalidInput("conic coefficients must be nonzero");
    if (place.is_real()) return a0 > 0 || b0 > 0;
    const long long p = place.p;
    // Only the square classes matter; pass to small integer representatives.
    const BigRational ar = representative(local_class(a0, place, 2));
    const BigRational br = representative(local_class(b0, place, 2));
    const long long a = ar.get_num().get_si(), b = br.get_num().get_si();
    const int k = 1 + 2 * valuation(BigInt(static_cast<long>(2 * a * b)), BigInt(static_cast<long>(p))) + 2;
    __int128 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    auto F = [&](__int128 x, __int128 y, __int128 z) { return a * x * x + b * y * y - z * z; };
    // chart 0: x = 1; chart 1: p | x, y = 1; chart 2: p | x, p | y, z = 1.
    std::function<bool(int, __int128, __int128, __int128, int, __int128)> dfs =
        [&](int j, __int128 x, __int128 y, __int128 z, int chart, __int128 pj) -> bool {
        if (j == k) {
            int t = std::min({val_ll(2 * a * x % pk, p, k), val_ll(2 * b * y % pk, p, k), val_ll(2 * z % pk, p, k)});
            return 2 * t < k;
        }
        __int128 pj1 = pj * p;
        for (long long d1 = 0; d1 < p; ++d1)
            for (long long d2 = 0; d2 < p; ++d2) {
                __int128 nx = x, ny = y, nz = z;
                if (chart == 0) {
                    ny += d1 * pj;
                    nz += d2 * pj;
                } else if (chart == 1) {
                    nx += d1 * pj;
                    nz += d2 * pj;
                } else {
                    nx += d1 * pj;
                    ny += d2 * pj;
                }
                if (F(nx, ny, nz) % pj1 != 0) continue;
                if (dfs(j + 1, nx, ny, nz, chart, pj1)) return true;
            }
        return false;
    };
    for (long long r1 = 0; r1 < p; ++r1)
        for (long long r2 = 0; r2 < p; ++r2)
            if (F(1, r1, r2) % p == 0 && dfs(1, 1, r1, r2, 0, p)) return true;
    for (long long r2 = 0; r2 < p; ++r2)
        if (F(0, 1, r2) % p == 0 && dfs(1, 0, 1, r2, 1, p)) return true;
    return F(0, 0, 1) % p == 0 && dfs(1, 0, 0, 1, 2, p);
}

// ---------------------------------------------------------------- W = Q_{p^2}(sqrt p)

PadicW::PadicW(long p, int digits) : p_(p), n_(digits) {
    require_prime(p);
    if (p == 2) throw Unsupported("the p-adic layer is for odd p");
    u_ = least_nonresidue(p);
    mpz_ui_pow_ui(pn_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n_));
}

BigInt PadicW::mod(const BigInt& x) const {
    BigInt r = x % pn_;
    if (r < 0) r += pn_;
    return r;
}

WElem PadicW::from_rational(const BigRational& q) const {
    WElem x;
    if (q == 0) return x;
    const int v = galcoh::valuation(q, BigInt(p_));
    const BigRational w = q / pow(BigRational(p_), v);
    BigInt inv;
    BigInt den = mod(w.get_den());
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pn_.get_mpz_t());
    x.e = v;
    x.a0 = mod(BigInt(w.get_num()) * inv);
    return x;
}

bool PadicW::is_zero(const WElem& x) const { return x.a0 == 0 && x.a1 == 0 && x.b0 == 0 && x.b1 == 0; }

bool PadicW::in_qp(const WElem& x) const { return x.a1 == 0 && x.b0 == 0 && x.b1 == 0; }

WElem PadicW::normalize(WElem x) const {
    if (is_zero(x)) return WElem{};
    BigInt P(p_);
    while (x.a0 % P == 0 && x.a1 % P == 0 && x.b0 % P == 0 && x.b1 % P == 0) {
        x.a0 /= P;
        x.a1 /= P;
        x.b0 /= P;
        x.b1 /= P;
        ++x.e;
    }
    return x;
}

WElem PadicW::add(const WElem& x, const WElem& y) const {
    if (is_zero(x)) return y;
    if (is_zero(y)) return x;
    WElem lo = x.e <= y.e ? x : y, hi = x.e <= y.e ? y : x;
    BigInt s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(hi.e - lo.e));
    WElem r;
    r.e = lo.e;
    r.a0 = mod(lo.a0 + s * hi.a0);
    r.a1 = mod(lo.a1 + s * hi.a1);
    r.b0 = mod(lo.b0 + s * hi.b0);
    r.b1 = mod(lo.b1 + s * hi.b1);
    return normalize(r);
}

WElem PadicW::sub(const WElem& x, const WElem& y) const {
    WElem n = y;
    n.a0 = mod(-n.a0);
    n.a1 = mod(-n.a1);
    n.b0 = mod(-n.b0);
    n.b1 = mod(-n.b1);
    return add(x, n);
}

WElem PadicW::mul(const WElem& x, const WElem& y) const {
    if (is_zero(x) || is_zero(y)) return WElem{};
    const BigInt U(u_), P(p_);
    // (A1 + B1 pi)(A2 + B2 pi) = A1A2 + p B1B2 + (A1B2 + A2B1) pi, A, B in Z_p[s].
    auto zmul = [&](const BigInt& x0, const BigInt& x1, const BigInt& y0, const BigInt& y1) {
        return std::pair<BigInt, BigInt>{x0 * y0 + U * x1 * y1, x0 * y1 + x1 * y0};
    };
    auto aa = zmul(x.a0, x.a1, y.a0, y.a1), bb = zmul(x.b0, x.b1, y.b0, y.b1);
    auto ab = zmul(x.a0, x.a1, y.b0, y.b1), ba = zmul(x.b0, x.b1, y.a0, y.a1);
    WElem r;
    r.e = x.e + y.e;
    r.a0 = mod(aa.first + P * bb.first);
    r.a1 = mod(aa.second + P * bb.second);
    r.b0 = mod(ab.first + ba.first);
    r.b1 = mod(ab.second + ba.second);
    return normalize(r);
}

namespace {

long vp_pair(const BigInt& x, const BigInt& y, long p, int cap) {
    auto v = [&](const BigInt& z) -> long {
        if (z == 0) return cap;
        return valuation(z, BigInt(p));
    };
    return std::min(v(x), v(y));
}

}  // namespace

long PadicW::valuation(const WElem& x) const {
    const long va = vp_pair(x.a0, x.a1, p_, n_), vb = vp_pair(x.b0, x.b1, p_, n_);
    if (va >= n_ && vb >= n_) throw std::logic_error("p-adic precision exhausted");
    return 2 * x.e + std::min(2 * va, 2 * vb + 1);
}

std::pair<long, long> PadicW::unit_residue(const WElem& x) const {
    const long va = vp_pair(x.a0, x.a1, p_, n_), vb = vp_pair(x.b0, x.b1, p_, n_);
    if (va >= n_ && vb >= n_) throw std::logic_error("p-adic precision exhausted");
    BigInt P(p_), s;
    auto res = [&](const BigInt& z, long k) {
        mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
        BigInt r = (z / s) % P;
        if (r < 0) r += P;
        return r.get_si();
    };
    if (2 * va < 2 * vb + 1) return {res(x.a0, va), res(x.a1, va)};
    return {res(x.b0, vb), res(x.b1, vb)};
}

BigInt PadicW::hensel_sqrt(const BigInt& a) const {
    const long am = mod_ll(BigInt(a % BigInt(p_)).get_si(), p_);
    long s0 = -1;
    for (long s = 1; s < p_; ++s)
        if (s * s % p_ == am) {
            s0 = s;
            break;
        }
    if (s0 < 0) throw std::logic_error("hensel_sqrt of a nonresidue");
    BigInt s(s0);
    for (int it = 0; it < 12; ++it) {
        BigInt two_s = mod(2 * s), inv;
        mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), pn_.get_mpz_t());
        s = mod(s - (s * s - a) * inv);
    }
    return s;
}

WElem PadicW::sqrt_qp(const WElem& x) const {
    if (!in_qp(x) || is_zero(x)) throw InvalidInput("sqrt_qp needs a nonzero element of Q_p");
    const long va = galcoh::valuation(x.a0, BigInt(p_));
    BigInt s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(va));
    const BigInt w = x.a0 / s;
    const long v = x.e + va;
    WElem r;
    const long half = v >= 0 ? v / 2 : -((-v + 1) / 2);
    const bool odd = (v - 2 * half) != 0;
    r.e = half;
    BigInt c0, c1;
    if (is_qr(mod_ll(BigInt(w % BigInt(p_)).get_si(), p_), p_)) {
        c0 = hensel_sqrt(w);
    } else {
        BigInt inv, U(u_);
        mpz_invert(inv.get_mpz_t(), U.get_mpz_t(), pn_.get_mpz_t());
        c1 = hensel_sqrt(mod(w * inv));
    }
    if (odd) {
        r.b0 = c0;
        r.b1 = c1;
    } else {
        r.a0 = c0;
        r.a1 = c1;
    }
    return normalize(r);
}

WElem PadicW::sqrt_rational(const BigRational& q) const {
    if (q == 0) throw InvalidInput("sqrt of zero");
    if (q == 1) return from_rational(1);
    return sqrt_qp(from_rational(q));
}

LocalClass PadicW::square_class_qp(const WElem& x) const {
    if (!in_qp(x)) throw InvalidInput("square_class_qp needs an element of Q_p");
    const long v = valuation(x) / 2;
    const auto r = unit_residue(x);
    return LocalClass{2, Place{p_}, static_cast<int>(((v % 2) + 2) % 2), is_qr(r.first, p_) ? 0 : 1};
}

// ---------------------------------------------------------------- tame symbols

SymbolValue tame_symbol(const PadicW& w, const LocalFieldDesc& f, const WElem& a, const WElem& b, int m) {
    const long p = w.p();
    if (m != 2 && m != 3) throw InvalidInput("tame symbols are for m = 2, 3");
    if (p == m || f.p != p) throw Unsupported("wild symbol requested");
    if (f.e < 1 || f.e > 2 || f.f < 1 || f.f > 2) throw Unsupported("only e, f <= 2 inside Q_{p^2}(sqrt p)");
    const long long q = f.q();
    if ((q - 1) % m != 0) throw Unsupported("mu_m is not contained in the field");
    const long va = w.valuation(a), vb = w.valuation(b);
    if (f.e == 1 && (va % 2 != 0 || vb % 2 != 0)) throw InvalidInput("element is not in the unramified field");
    const long fa = va * f.e / 2, fb = vb * f.e / 2;
    Fq2Ring ring{p, w.u()};
    auto ra = w.unit_residue(a), rb = w.unit_residue(b);
    Fq2 c{((fa * fb) % 2 != 0) ? p - 1 : 1, 0};
    auto pw = [&](Fq2 z, long e) { return e >= 0 ? ring.pow(z, e) : ring.pow(ring.inv(z), -e); };
    c = ring.mul(c, pw(Fq2{ra.first, ra.second}, fb));
    c = ring.mul(c, pw(Fq2{rb.first, rb.second}, -fa));
    Fq2 val = ring.pow(c, (q - 1) / m);
    if (m == 2) {
        if (val.y == 0 && val.x == 1) return SymbolValue{2, 0};
        if (val.y == 0 && val.x == p - 1) return SymbolValue{2, 1};
        throw std::logic_error("quadratic symbol outside +-1");
    }
    WElem zeta = w.mul(BigRational(1, 2), w.sub(w.sqrt_rational(-3), w.from_rational(1)));
    auto zr = w.unit_residue(zeta);
    Fq2 z{zr.first, zr.second}, acc{1, 0};
    for (int k = 0; k < 3; ++k) {
        if (acc.x == val.x && acc.y == val.y) return SymbolValue{3, k};
        acc = ring.mul(acc, z);
    }
    throw std::logic_error("cubic symbol outside mu_3");
}

SymbolValue hilbert_etale(const PadicW& w, const std::vector<LocalFieldDesc>& fields, const std::vector<WElem>& a,
                          const std::vector<WElem>& b, int m) {
    if (fields.size() != a.size() || fields.size() != b.size()) throw InvalidInput("one entry per factor expected");
    SymbolValue s{m, 0};
    for (std::size_t i = 0; i < fields.size(); ++i) s = s * tame_symbol(w, fields[i], a[i], b[i], m);
    return s;
}

SymbolValue hilbert3(const BigRational& a, const BigRational& b, long p) {
    require_prime(p);
    if (p % 3 != 1) throw Unsupported("cubic Hilbert symbol on Q_p needs p = 1 mod 3");
    if (a == 0 || b == 0) throw InvalidInput("Hilbert symbol needs nonzero arguments");
    PadicW w(p);
    return tame_symbol(w, LocalFieldDesc{p, 1, 1}, w.from_rational(a), w.from_rational(b), 3);
}

// ---------------------------------------------------------------- local factors

namespace {

WElem eval_poly(const PadicW& w, const RationalPoly& f, const WElem& x) {
    WElem acc;
    for (int i = f.degree(); i >= 0; --i) acc = w.add(w.mul(acc, x), w.from_rational(f.coeff(i)));
    return acc;
}

/// Field generated over Q_p by the square roots of a set of classes (p odd).
LocalFieldDesc field_of_classes(long p, const std::vector<LocalClass>& gens) {
    std::set<std::pair<int, int>> group{{0, 0}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto g : std::set<std::pair<int, int>>(group))
            for (const auto& c : gens) {
                std::pair<int, int> h{g.first ^ c.val, g.second ^ c.unit};
                grew = group.insert(h).second || grew;
            }
    }
    LocalFieldDesc f{p, 1, 1};
    for (const auto& [v, u] : group) {
        if (v == 1) f.e = 2;
        if (v == 0 && u == 1) f.f = 2;
    }
    return f;
}

/// A root in Z_p of a monic integral cubic, to working precision.
std::optional<BigInt> zp_root(const std::vector<BigInt>& h, long p, const BigInt& pn) {
    auto eval = [&](const BigInt& y) {
        BigInt acc = 0;
        for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i) acc = acc * y + h[static_cast<std::size_t>(i)];
        return acc;
    };
    auto deriv = [&](const BigInt& y) {
        BigInt acc = 0;
        for (int i = static_cast<int>(h.size()) - 1; i >= 1; --i)
            acc = acc * y + BigInt(i) * h[static_cast<std::size_t>(i)];
        return acc;
    };
    auto vp = [&](const BigInt& z, int cap) { return z == 0 ? cap : std::min(cap, valuation(z, BigInt(p))); };
    std::vector<BigInt> coeffs(h.begin(), h.end());
    RationalPoly hp = RationalPoly::from_integers(coeffs);
    const BigRational disc = discriminant(hp);
    const int depth = 2 * valuation(disc, BigInt(p)) + 3;
    auto newton = [&](BigInt y) {
        for (int it = 0; it < 12; ++it) {
            BigInt hy = eval(y), dy = deriv(y);
            if (hy % pn == 0) break;
            int t = vp(dy, 1000);
            BigInt s;
            mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(t));
            BigInt unit = dy / s, inv;
            BigInt um = unit % pn;
            if (um < 0) um += pn;
            mpz_invert(inv.get_mpz_t(), um.get_mpz_t(), pn.get_mpz_t());
            y = ((y - (hy / s) * inv) % pn + pn) % pn;
        }
        return y;
    };
    std::vector<std::pair<BigInt, int>> stack;
    for (long r = 0; r < p; ++r)
        if (eval(BigInt(r)) % BigInt(p) == 0) stack.emplace_back(BigInt(r), 1);
    while (!stack.empty()) {
        auto [y, j] = stack.back();
        stack.pop_back();
        const int t = vp(deriv(y), j);
        if (t < j && vp(eval(y), 1000) > 2 * t) return newton(y);
        if (j >= depth) continue;
        BigInt pj;
        mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(j));
        for (long d = 0; d < p; ++d) {
            BigInt ny = y + BigInt(d) * pj;
            if (eval(ny) % (pj * p) == 0) stack.emplace_back(ny, j + 1);
        }
    }
    return std::nullopt;
}

/// Roots of the monic quadratic x^2 + b x + c over Q_p (b, c in Q_p), grouped by factor.
void quadratic_local(const PadicW& w, std::size_t idx, const WElem& b, const WElem& c, std::vector<LocalFactor>& out) {
    WElem disc = w.sub(w.mul(b, b), w.mul(w.from_rational(4), c));
    LocalClass cls = w.square_class_qp(disc);
    WElem s = w.sqrt_qp(disc);
    WElem half = w.from_rational(BigRational(1, 2));
    WElem r1 = w.mul(half, w.sub(s, b));
    if (cls.val == 0 && cls.unit == 0) {
        WElem r2 = w.mul(half, w.sub(w.sub(w.from_rational(0), s), b));
        out.push_back(LocalFactor{idx, r1, LocalFieldDesc{w.p(), 1, 1}});
        out.push_back(LocalFactor{idx, r2, LocalFieldDesc{w.p(), 1, 1}});
    } else {
        out.push_back(LocalFactor{idx, r1, field_of_classes(w.p(), {cls})});
    }
}

}  // namespace

std::vector<LocalFactor> local_factors(const PadicW& w, const std::vector<RationalPoly>& r) {
    std::vector<LocalFactor> out;
    const long p = w.p();
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
        RationalPoly g = r[idx].monic();
        if (g.degree() == 1) {
            out.push_back(LocalFactor{idx, w.from_rational(-g.coeff(0)), LocalFieldDesc{p, 1, 1}});
        } else if (g.degree() == 2) {
            quadratic_local(w, idx, w.from_rational(g.coeff(1)), w.from_rational(g.coeff(0)), out);
        } else if (g.degree() == 3) {
            // x = y / L makes the cubic monic integral.
            BigInt L = 1;
            for (int i = 0; i < 3; ++i) L = lcm(L, BigInt(g.coeff(i).get_den()));
            std::vector<BigInt> h(4);
            BigRational Lp = 1;
            for (int i = 3; i >= 0; --i) {
                h[static_cast<std::size_t>(i)] = BigRational(g.coeff(i) * Lp).get_num();
                Lp *= BigRational(L);
            }
            BigInt pn;
            mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), 60ul);
            auto y = zp_root(h, p, pn);
            if (!y) throw Unsupported("R has a cubic local factor at " + std::to_string(p));
            WElem root = w.from_rational(BigRational(*y, L));
            out.push_back(LocalFactor{idx, root, LocalFieldDesc{p, 1, 1}});
            // x^3 + b x^2 + c x + d = (x - r)(x^2 + (b + r) x + (c + r (b + r))).
            WElem b = w.add(w.from_rational(g.coeff(2)), root);
            WElem c = w.add(w.from_rational(g.coeff(1)), w.mul(root, b));
            quadratic_local(w, idx, b, c, out);
        } else {
            throw InvalidInput("R factors have degree <= 3");
        }
    }
    return out;
}

// ---------------------------------------------------------------- pairings

namespace {

void require_tame_c3(long p) {
    require_prime(p);
    if (p == 2 || p == 3) throw Unsupported("order-3 pairings need p not dividing 6");
}

void check_c3_pair(const BigInt& D, const QuadElem& sigma, const QuadElem& tau) {
    if (D == 0 || squarefree_part(D) != D) throw InvalidInput("D must be a squarefree integer");
    if (sigma.d != tate_dual_twist(D)) throw InvalidInput("sigma must lie in Q[sqrt(-3D)]");
    if (tau.d != D) throw InvalidInput("tau must lie in Q[sqrt D]");
    if (sigma.norm() != 1 || tau.norm() != 1) throw InvalidInput("pairing arguments must have norm 1");
}

}  // namespace

SymbolValue tate_pair_c3(long p, const BigInt& D, const QuadElem& sigma, const QuadElem& tau) {
    require_tame_c3(p);
    check_c3_pair(D, sigma, tau);
    PadicW w(p);
    const Place pl{p};
    const BigInt dd = tate_dual_twist(D);
    const WElem r1 = w.sqrt_rational(BigRational(D)), r2 = w.sqrt_rational(-3);
    const BigRational k = *rational_sqrt(BigRational(-3 * D) / BigRational(dd));
    const WElem rd = w.mul(1 / k, w.mul(r1, r2));
    const LocalClass c1 = local_class(BigRational(D), pl, 2), c2 = local_class(-3, pl, 2);
    const LocalFieldDesc field = field_of_classes(p, {c1, c2});
    // Gal(W/Q_p) flips r_i through s -> -s (nonsquare unit part) and pi -> -pi (odd valuation).
    const int phi = (c1.unit) | (c2.unit << 1), tau_flip = (c1.val) | (c2.val << 1);
    std::set<int> seen;
    int total = 0;
    for (int s = 0; s < 4; ++s) {
        if (seen.count(s)) continue;
        for (int g : {0, phi, tau_flip, phi ^ tau_flip}) seen.insert(s ^ g);
        const int s1 = (s & 1) ? -1 : 1, s2 = (s & 2) ? -1 : 1;
        WElem sw = w.add(w.from_rational(sigma.x), w.mul(sigma.y * s1 * s2, rd));
        WElem tw = w.add(w.from_rational(tau.x), w.mul(tau.y * s1, r1));
        int kv = tame_symbol(w, field, sw, tw, 3).k;
        total += s2 * kv;
    }
    return SymbolValue{3, ((total % 3) + 3) % 3};
}

SymbolValue tate_pair_v4(long p, const CoclassV4& sigma, const CoclassV4& tau) {
    require_prime(p);
    sigma.validate();
    tau.validate();
    if (sigma.R != tau.R) throw InvalidInput("pairing arguments must share R");
    const bool split = std::all_of(sigma.R.begin(), sigma.R.end(), [](const RationalPoly& g) { return g.degree() == 1; });
    if (split && p == 2) {
        SymbolValue s{2, 0};
        for (std::size_t j = 0; j < sigma.R.size(); ++j)
            s = s * hilbert2(sigma.delta[j].coeff(0), tau.delta[j].coeff(0), Place{p});
        return s;
    }
    if (p == 2) throw Unsupported("V4 pairing at p = 2 needs R split over Q");
    PadicW w(p);
    SymbolValue s{2, 0};
    for (const auto& lf : local_factors(w, sigma.R)) {
        WElem a = eval_poly(w, sigma.delta[lf.global_index], lf.root);
        WElem b = eval_poly(w, tau.delta[lf.global_index], lf.root);
        s = s * tame_symbol(w, lf.field, a, b, 2);
    }
    return s;
}

// ---------------------------------------------------------------- local H^1

namespace {

/// Class in F^x / (F^x)^m of x in F: "v<val mod m>u<k>" with k the exponent of
/// the unit's power residue against -1 or zeta3.
std::string power_class_label(const PadicW& w, const LocalFieldDesc& f, const WElem& x, int m) {
    const long v = w.valuation(x) * f.e / 2;
    const long long q = f.q();
    int k = 0;
    if ((q - 1) % m == 0) {
        // <x, pi_F> style residue character; use the symbol against the unit 1 + 0 with v(b) = 1.
        Fq2Ring ring{w.p(), w.u()};
        auto r = w.unit_residue(x);
        Fq2 val = ring.pow(Fq2{r.first, r.second}, (q - 1) / m);
        if (m == 2) {
            k = (val.x == 1 && val.y == 0) ? 0 : 1;
        } else {
            WElem zeta = w.mul(BigRational(1, 2), w.sub(w.sqrt_rational(-3), w.from_rational(1)));
            auto zr = w.unit_residue(zeta);
            Fq2 z{zr.first, zr.second}, acc{1, 0};
            for (int j = 0; j < 3; ++j) {
                if (acc.x == val.x && acc.y == val.y) k = j;
                acc = ring.mul(acc, z);
            }
        }
    }
    return "v" + std::to_string(((v % m) + m) % m) + "u" + std::to_string(k);
}

}  // namespace

std::string c3_local_label(long p, const BigInt& D, const QuadElem& delta) {
    require_tame_c3(p);
    const BigInt dd = tate_dual_twist(D);
    if (delta.d != dd || delta.norm() != 1) throw InvalidInput("delta must be a norm-one element of Q[sqrt(-3D)]");
    PadicW w(p);
    const LocalClass c = local_class(BigRational(dd), Place{p}, 2);
    const LocalFieldDesc f = field_of_classes(p, {c});
    WElem x = w.add(w.from_rational(delta.x), w.mul(delta.y, w.sqrt_rational(BigRational(dd))));
    return (f.e * f.f == 1 ? "split:" : "field:") + power_class_label(w, f, x, 3);
}

std::string v4_local_label(long p, const CoclassV4& cc) {
    cc.validate();
    const bool split = std::all_of(cc.R.begin(), cc.R.end(), [](const RationalPoly& g) { return g.degree() == 1; });
    std::string s;
    if (p == 2) {
        if (!split) throw Unsupported("V4 labels at p = 2 need R split over Q");
        for (const auto& c : cc.delta) s += (s.empty() ? "" : ";") + local_class(c.coeff(0), Place{2}, 2).to_string();
        return s;
    }
    PadicW w(p);
    for (const auto& lf : local_factors(w, cc.R)) {
        WElem a = eval_poly(w, cc.delta[lf.global_index], lf.root);
        s += (s.empty() ? "" : ";") + power_class_label(w, lf.field, a, 2);
    }
    return s;
}

std::vector<BigRational> h1_c2_local(Place place) {
    std::vector<BigRational> out;
    for (const auto& c : square_classes(place)) out.push_back(representative(c));
    return out;
}

std::vector<BigRational> h1_mu3_local(long p) {
    std::vector<BigRational> out;
    for (const auto& c : cube_classes(p)) out.push_back(representative(c));
    return out;
}

std::vector<QuadElem> h1_c3_local(long p, const BigInt& D) {
    require_tame_c3(p);
    if (D == 0 || squarefree_part(D) != D) throw InvalidInput("D must be a squarefree integer");
    const BigInt dd = tate_dual_twist(D);
    auto search = [&](int bound) {
        std::map<std::string, QuadElem> found;
        QuadElem one = QuadElem::rational(dd, 1);
        found.emplace(c3_local_label(p, D, one), one);
        for (int h = 1; h <= 2 * bound; ++h)
            for (int y = 1; y <= std::min(h, bound); ++y) {
                const int ax = h - y;
                for (int x : {ax, -ax}) {
                    QuadElem g{dd, x, y};
                    if (g.norm() == 0) continue;
                    QuadElem delta = g * g.conj().inverse();
                    found.emplace(c3_local_label(p, D, delta), delta);
                    if (ax == 0) break;
                }
            }
        return found;
    };
    auto small = search(8), large = search(16);
    if (small.size() != large.size()) throw std::logic_error("local C3 class search did not stabilise");
    std::vector<QuadElem> out;
    for (const auto& [label, d] : small) out.push_back(d);
    return out;
}

std::vector<RationalPoly> split_cubic_r() {
    return {RationalPoly::parse("0,1"), RationalPoly::parse("-1,1"), RationalPoly::parse("1,1")};
}

std::vector<CoclassV4> h1_v4_split_local(long p) {
    auto reps = h1_c2_local(Place::prime(p));
    std::vector<CoclassV4> out;
    for (const auto& a1 : reps)
        for (const auto& a2 : reps)
            out.push_back(CoclassV4{split_cubic_r(),
                                    {RationalPoly::constant(a1), RationalPoly::constant(a2),
                                     RationalPoly::constant(1 / (a1 * a2))}});
    return out;
}

std::string localize_c2(const BigRational& a, Place place) { return local_class(a, place, 2).to_string(); }

std::string localize_c3(const CoclassC3& cc, long p) {
    cc.validate();
    return c3_local_label(p, cc.D, cc.delta);
}

std::string localize_v4(const CoclassV4& cc, long p) { return v4_local_label(p, cc); }

}  // namespace galcoh
