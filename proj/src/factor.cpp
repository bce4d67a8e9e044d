#include "galcoh/factor.hpp"

#include <algorithm>
#include <random>

#include "galcoh/errors.hpp"

namespace galcoh {

namespace modp {

namespace {
void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
}  // namespace

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (r != 1) throw InvalidInput("non-invertible residue");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Poly reduce(const std::vector<BigInt>& f, std::uint64_t p) {
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
    if (b.empty()) throw InvalidInput("division by zero polynomial mod p");
    if (a.size() < b.size()) return {Poly{}, a};
    Poly rem = a, quo(a.size() - b.size() + 1, 0);
    std::uint64_t inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        std::uint64_t q = rem[k + db] * inv % p;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + p - q * b[j] % p) % p;
    }
    rem.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Poly make_monic(const Poly& a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = inv_mod(a.back(), p);
    Poly r = a;
    for (auto& c : r) c = c * inv % p;
    return r;
}

Poly gcd(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = divmod(x, y, p).second;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x, p);
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod, std::uint64_t p) {
    Poly result{1};
    result = divmod(result, mod, p).second;
    Poly b = divmod(base, mod, p).second;
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = divmod(mul(result, result, p), mod, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, b, p), mod, p).second;
    }
    return result;
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    trim(d);
    return d;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    if (f.empty()) return false;
    Poly d = derivative(f, p);
    if (d.empty()) return deg(f) == 0;
    return deg(gcd(f, d, p)) == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f_in, std::uint64_t p) {
    std::vector<std::pair<Poly, int>> out;
    Poly g = make_monic(f_in, p);
    const Poly x{0, 1};
    Poly h = divmod(x, g, p).second;
    int d = 0;
    while (2 * (d + 1) <= deg(g)) {
        ++d;
        h = powmod(h, BigInt(static_cast<unsigned long>(p)), g, p);
        Poly t = gcd(g, sub(h, x, p), p);
        if (deg(t) > 0) {
            out.emplace_back(t, d);
            g = divmod(g, t, p).first;
            h = divmod(h, g, p).second;
        }
    }
    if (deg(g) > 0) out.emplace_back(g, deg(g));
    return out;
}

namespace {

void equal_degree(const Poly& f, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    BigInt e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
        Poly a(static_cast<std::size_t>(deg(f)));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        Poly b = sub(powmod(a, e, f, p), Poly{1}, p);
        Poly g = gcd(b, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            equal_degree(g, d, p, rng, out);
            equal_degree(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p) {
    if (p == 2) throw Unsupported("factorization modulo 2 is not implemented");
    std::mt19937_64 rng(0x5eedULL + p);
    std::vector<Poly> out;
    for (const auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

std::vector<int> factor_degrees(const Poly& f, std::uint64_t p) {
    std::vector<int> degs;
    for (const auto& [g, d] : distinct_degree(f, p))
        for (int i = 0; i < deg(g) / d; ++i) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace modp

namespace {

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zreduce(ZPoly a, const BigInt& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zreduce(std::move(r), m);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const BigInt& m, int sign = 1) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t j = 0; j < b.size(); ++j) r[j] += sign * b[j];
    return zreduce(std::move(r), m);
}

/// Division by a polynomial whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> zdivmod(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.size() < b.size()) return {ZPoly{}, a};
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), m.get_mpz_t()) == 0)
        throw InvalidInput("non-unit leading coefficient in Hensel division");
    ZPoly rem = a, quo(a.size() - b.size() + 1, BigInt(0));
    const std::size_t db = b.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        BigInt q = rem[k + db] * inv;
        mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= q * b[j];
            mpz_fdiv_r(rem[k + j].get_mpz_t(), rem[k + j].get_mpz_t(), m.get_mpz_t());
        }
    }
    rem.resize(db);
    ztrim(rem);
    ztrim(quo);
    return {quo, rem};
}

ZPoly from_modp(const modp::Poly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

/// Bezout coefficients s*a + t*b = 1 mod p for coprime a, b.
std::pair<modp::Poly, modp::Poly> bezout_modp(const modp::Poly& a, const modp::Poly& b,
                                              std::uint64_t p) {
    modp::Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = modp::divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = modp::sub(s0, modp::mul(q, s1, p), p);
        auto t2 = modp::sub(t0, modp::mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw InvalidInput("Hensel factors are not coprime mod p");
    std::uint64_t inv = modp::inv_mod(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

/// Lifts F = lc * prod(factors) mod p to monic factors mod `target`.
std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<modp::Poly>& factors,
                               std::uint64_t p, const BigInt& target) {
    if (factors.size() == 1) {
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), target.get_mpz_t());
        ZPoly g = F;
        for (auto& c : g) c *= inv;
        return {zreduce(std::move(g), target)};
    }
    const std::size_t mid = factors.size() / 2;
    modp::Poly left{1}, right{1};
    for (std::size_t i = 0; i < mid; ++i) left = modp::mul(left, factors[i], p);
    for (std::size_t i = mid; i < factors.size(); ++i) right = modp::mul(right, factors[i], p);
    const std::uint64_t lc = mpz_fdiv_ui(F.back().get_mpz_t(), p);
    modp::Poly g0 = left;
    for (auto& c : g0) c = c * lc % p;
    auto [s0, t0] = bezout_modp(g0, right, p);

    BigInt m(static_cast<unsigned long>(p));
    ZPoly g = from_modp(g0), h = from_modp(right), s = from_modp(s0), t = from_modp(t0);
    while (m < target) {
        BigInt m2 = m * m;
        ZPoly e = zadd(zreduce(F, m2), zmul(g, h, m2), m2, -1);
        auto [q, r] = zdivmod(zmul(s, e, m2), h, m2);
        ZPoly g1 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
        ZPoly h1 = zadd(h, r, m2);
        ZPoly b = zadd(zadd(zmul(s, g1, m2), zmul(t, h1, m2), m2), ZPoly{BigInt(1)}, m2, -1);
        auto [c, d] = zdivmod(zmul(s, b, m2), h1, m2);
        s = zadd(s, d, m2, -1);
        t = zadd(zadd(t, zmul(t, b, m2), m2, -1), zmul(c, g1, m2), m2, -1);
        g = std::move(g1);
        h = std::move(h1);
        m = m2;
    }
    g = zreduce(g, target);
    h = zreduce(h, target);
    std::vector<modp::Poly> lf(factors.begin(), factors.begin() + static_cast<long>(mid));
    std::vector<modp::Poly> rf(factors.begin() + static_cast<long>(mid), factors.end());
    auto out = hensel_lift(g, lf, p, target);
    auto more = hensel_lift(h, rf, p, target);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

BigInt symmetric(const BigInt& c, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

ZPoly primitive_part(ZPoly a) {
    BigInt g = 0;
    for (const auto& c : a) g = gcd(g, c);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

std::vector<unsigned long> small_primes(unsigned long count) {
    std::vector<unsigned long> out;
    for (unsigned long n = 3; out.size() < count; n += 2) {
        bool prime = true;
        for (unsigned long d = 3; d * d <= n; d += 2)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

/// Factors a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& F0) {
    const int n = static_cast<int>(F0.size()) - 1;
    if (n <= 1) return {F0};

    // Choose the prime giving the fewest modular factors among a few candidates.
    static const std::vector<unsigned long> primes = small_primes(400);
    std::uint64_t best_p = 0;
    std::size_t best_count = 0;
    int tried = 0;
    for (unsigned long p : primes) {
        if (mpz_fdiv_ui(F0.back().get_mpz_t(), p) == 0) continue;
        modp::Poly fp = modp::make_monic(modp::reduce(F0, p), p);
        if (!modp::is_squarefree(fp, p)) continue;
        std::size_t count = modp::factor_degrees(fp, p).size();
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
        if (best_count == 1 || ++tried >= 8) break;
    }
    if (best_p == 0) throw Unsupported("no suitable prime for factorization");
    if (best_count == 1) return {F0};

    const std::uint64_t p = best_p;
    auto local = modp::factor_squarefree(modp::make_monic(modp::reduce(F0, p), p), p);

    // Mignotte: any factor g of F satisfies |g|_inf <= 2^deg |F|_2; the lifted
    // products carry an extra factor lc(F).
    BigInt norm2 = 0;
    for (const auto& c : F0) norm2 += c * c;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    BigInt bound = root * abs(F0.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    BigInt modulus(static_cast<unsigned long>(p));
    while (modulus <= 2 * bound) modulus *= static_cast<unsigned long>(p);

    std::vector<ZPoly> lifted = hensel_lift(F0, local, p, modulus);

    std::vector<ZPoly> found;
    ZPoly F = F0;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool progress = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            const BigInt lc = F.back();
            // Constant-term filter.
            BigInt c0 = lc;
            for (auto i : idx) {
                const auto& g = lifted[remaining[i]];
                c0 = symmetric(c0 * (g.empty() ? BigInt(0) : g[0]), modulus);
            }
            bool candidate = true;
            if (F[0] != 0) candidate = (c0 != 0) && ((lc * F[0]) % c0 == 0);
            if (candidate) {
                ZPoly G{lc};
                for (auto i : idx) G = zmul(G, lifted[remaining[i]], modulus);
                for (auto& c : G) c = symmetric(c, modulus);
                ztrim(G);
                G = primitive_part(G);
                auto [q, r] = divmod(RationalPoly::from_integers(F), RationalPoly::from_integers(G));
                if (r.is_zero()) {
                    found.push_back(G);
                    F = q.primitive_integer();
                    std::vector<std::size_t> keep;
                    for (std::size_t j = 0; j < remaining.size(); ++j)
                        if (std::find(idx.begin(), idx.end(), j) == idx.end())
                            keep.push_back(remaining[j]);
                    remaining = std::move(keep);
                    progress = true;
                    break;
                }
            }
            // Next combination.
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == remaining.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!progress) ++s;
    }
    if (F.size() > 1) found.push_back(primitive_part(F));
    return found;
}

}  // namespace

std::vector<std::pair<RationalPoly, int>> factor_rationals(const RationalPoly& f) {
    if (f.degree() < 1) throw InvalidInput("factor_rationals needs degree >= 1");
    std::vector<std::pair<RationalPoly, int>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& g : factor_squarefree_integer(part.primitive_integer()))
            out.emplace_back(RationalPoly::from_integers(g).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const RationalPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_rationals(f);
    return fac.size() == 1 && fac[0].second == 1;
}

std::vector<BigRational> rational_roots(const RationalPoly& f) {
    std::vector<BigRational> roots;
    if (f.degree() < 1) return roots;
    for (const auto& [g, m] : factor_rationals(f))
        if (g.degree() == 1) roots.push_back(-g.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace galcoh
