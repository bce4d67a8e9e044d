#include "galcoh/rational.hpp"

#include <algorithm>
#include <map>

#include "galcoh/errors.hpp"

namespace galcoh {

BigRational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw InvalidInput("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    BigInt n(num, 10), d(den, 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(10); }
std::string to_string(const BigInt& n) { return n.get_str(10); }

bool is_prime(const BigInt& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace {

BigInt pollard_brent(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    BigInt diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(BigInt(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(BigInt(n / d), out);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n_in) {
    if (n_in == 0) throw InvalidInput("cannot factor zero");
    BigInt n = abs(n_in);
    std::map<BigInt, unsigned> out;
    for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    factor_into(n, out);
    return {out.begin(), out.end()};
}

BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw InvalidInput("zero has no square class");
    BigInt s = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2 == 1) s *= p;
    return s;
}

BigInt squarefree_part(const BigRational& q) {
    if (q == 0) throw InvalidInput("zero has no square class");
    return squarefree_part(BigInt(q.get_num() * q.get_den()));
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
    if (q < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    BigInt a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return BigRational(a, b);
}

bool is_square(const BigRational& q) { return rational_sqrt(q).has_value(); }

int valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw InvalidInput("valuation of zero");
    BigInt m = n;
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const BigRational& q, const BigInt& p) {
    return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

BigRational pow(const BigRational& q, int e) {
    BigRational base = q, r = 1;
    if (e < 0) {
        if (q == 0) throw InvalidInput("zero to a negative power");
        base = 1 / q;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace galcoh
