#include "galcoh/poly.hpp"

#include <sstream>

#include "galcoh/errors.hpp"

namespace galcoh {

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPoly::RationalPoly(std::initializer_list<BigRational> coeffs)
    : RationalPoly(std::vector<BigRational>(coeffs)) {}

RationalPoly RationalPoly::constant(const BigRational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::monomial(const BigRational& c, int degree) {
    std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1, BigRational(0));
    v.back() = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::parse(std::string_view text) {
    std::vector<BigRational> c;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        c.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return RationalPoly(std::move(c));
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

BigRational RationalPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const BigRational& RationalPoly::leading() const {
    if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    RationalPoly r = *this;
    BigRational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPoly(std::move(d));
}

BigRational RationalPoly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

RationalPoly RationalPoly::shift(const BigRational& a) const { return compose(RationalPoly{a, 1}); }

RationalPoly RationalPoly::scale_var(const BigRational& lambda) const {
    RationalPoly r = *this;
    BigRational p = 1;
    for (auto& c : r.coeffs_) {
        c *= p;
        p *= lambda;
    }
    r.trim();
    return r;
}

std::vector<BigInt> RationalPoly::primitive_integer() const {
    if (is_zero()) return {};
    BigInt l = 1;
    for (const auto& c : coeffs_) l = lcm(l, BigInt(c.get_den()));
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.get_num() * (l / c.get_den());
        g = gcd(g, v);
        out.push_back(v);
    }
    if (out.back() < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

RationalPoly RationalPoly::from_integers(const std::vector<BigInt>& c) {
    std::vector<BigRational> v;
    v.reserve(c.size());
    for (const auto& x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const BigRational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

bool operator<(const RationalPoly& a, const RationalPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.coeffs_[static_cast<std::size_t>(i)];
        const auto& y = b.coeffs_[static_cast<std::size_t>(i)];
        if (x != y) return x < y;
    }
    return false;
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalPoly{}, a};
    std::vector<BigRational> rem = a.coeffs();
    std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    BigRational inv = 1 / b.leading();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        BigRational q = rem[k + db] * inv;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly operator/(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).first; }
RationalPoly operator%(const RationalPoly& a, const RationalPoly& b) { return divmod(a, b).second; }

RationalPoly pow(const RationalPoly& f, unsigned e) {
    RationalPoly r = RationalPoly::constant(1), base = f;
    while (e) {
        if (e & 1U) r *= base;
        base *= base;
        e >>= 1U;
    }
    return r;
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::tuple<RationalPoly, RationalPoly, RationalPoly> xgcd(const RationalPoly& a,
                                                          const RationalPoly& b) {
    RationalPoly r0 = a, r1 = b;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RationalPoly s2 = s0 - q * s1;
        RationalPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    BigRational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const RationalPoly& f) {
    if (f.is_zero()) return false;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& f) {
    if (f.degree() < 1) throw InvalidInput("squarefree decomposition needs a nonconstant polynomial");
    std::vector<std::pair<RationalPoly, int>> out;
    RationalPoly fm = f.monic();
    RationalPoly a0 = gcd(fm, fm.derivative());
    RationalPoly b = fm / a0;
    RationalPoly c = fm.derivative() / a0;
    RationalPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RationalPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

BigRational resultant(const RationalPoly& f_in, const RationalPoly& g_in) {
    if (f_in.is_zero() || g_in.is_zero()) throw InvalidInput("resultant with the zero polynomial");
    RationalPoly f = f_in, g = g_in;
    BigRational acc = 1;
    while (true) {
        const int m = f.degree(), n = g.degree();
        if (n == 0) return acc * pow(g.leading(), m);
        if (m == 0) return acc * pow(f.leading(), n);
        RationalPoly r = f % g;
        if (r.is_zero()) return 0;
        // res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r)
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= pow(g.leading(), m - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
}

BigRational discriminant(const RationalPoly& f) {
    if (f.is_zero()) throw InvalidInput("discriminant of the zero polynomial");
    const int n = f.degree();
    if (n < 1) throw InvalidInput("discriminant needs degree >= 1");
    if (n == 1) return 1;
    BigRational r = resultant(f, f.derivative()) / f.leading();
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

RationalPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolation node mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<BigRational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            BigRational den = xs[i] - xs[i - j];
            if (den == 0) throw InvalidInput("repeated interpolation node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == j) break;
        }
    RationalPoly acc = RationalPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc *= RationalPoly{-xs[i], 1};
        acc += RationalPoly::constant(dd[i]);
    }
    return acc;
}

RationalPoly resultant_family(const RationalPoly& f,
                              const std::function<RationalPoly(const BigRational&)>& slice,
                              int degree_bound) {
    std::vector<BigRational> xs, ys;
    for (int i = 0; i <= degree_bound; ++i) {
        // Nodes 0, 1, -1, 2, -2, ...
        BigRational x = (i % 2 == 1) ? BigRational((i + 1) / 2) : BigRational(-(i / 2));
        RationalPoly g = slice(x);
        xs.push_back(x);
        ys.push_back(g.is_zero() ? BigRational(0) : resultant(f, g));
    }
    return interpolate(xs, ys);
}

RationalPoly trager_norm(const RationalPoly& f, const RationalPoly& g, const BigRational& k) {
    // g(x - k y) as a polynomial in y for fixed x.
    auto slice = [&](const BigRational& x) { return g.compose(RationalPoly{x, -k}); };
    RationalPoly n = resultant_family(f, slice, f.degree() * g.degree());
    return n;
}

RationalPoly charpoly(const RationalPoly& modulus, const RationalPoly& elem) {
    if (!modulus.is_monic()) throw InvalidInput("charpoly needs a monic modulus");
    auto slice = [&](const BigRational& x) { return RationalPoly::constant(x) - elem; };
    return resultant_family(modulus, slice, modulus.degree());
}

}  // namespace galcoh
