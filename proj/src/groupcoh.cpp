#include "galcoh/groupcoh.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galcoh/errors.hpp"

namespace galcoh {

// ---------------------------------------------------------------- modules

FiniteGModule::FiniteGModule(PermGroup group, FiniteAbelian module, std::vector<Perm> generator_actions)
    : group_(std::move(group)),
      table_(group_),
      module_(std::move(module)),
      gen_actions_(std::move(generator_actions)) {
    if (gen_actions_.size() != group_.generators().size())
        throw InvalidInput("need one module automorphism per group generator");
    auto auts = module_.automorphisms();
    for (const auto& a : gen_actions_) {
        if (a.degree() != module_.size()) throw InvalidInput("action has the wrong degree");
        if (!std::binary_search(auts.begin(), auts.end(), a))
            throw InvalidInput("generator action is not a module automorphism");
    }
    // Homomorphism checks consistency over the whole group.
    std::vector<Perm> images = gen_actions_;
    if (images.empty()) {
        actions_.assign(static_cast<std::size_t>(table_.size()), Perm::identity(module_.size()));
        if (table_.size() != 1) throw InvalidInput("nontrivial group needs generators");
        return;
    }
    Homomorphism phi(group_, images);
    for (const auto& g : table_.elements) actions_.push_back(phi.apply(g));
}

FiniteGModule FiniteGModule::trivial(const PermGroup& group, const FiniteAbelian& module) {
    std::vector<Perm> acts(group.generators().size(), Perm::identity(module.size()));
    return FiniteGModule(group, module, acts);
}

FiniteGModule FiniteGModule::restrict_to(const PermGroup& h) const {
    if (!h.is_subgroup_of(group_)) throw InvalidInput("not a subgroup");
    std::vector<Perm> acts;
    for (const auto& g : h.generators()) acts.push_back(action(table_.index(g)));
    return FiniteGModule(h, module_, acts);
}

std::vector<int> FiniteGModule::fixed_points() const {
    std::vector<int> out;
    for (int x = 0; x < module_.size(); ++x) {
        bool fixed = true;
        for (int g = 0; g < table_.size() && fixed; ++g) fixed = act(g, x) == x;
        if (fixed) out.push_back(x);
    }
    return out;
}

FiniteGModule named_module(std::string_view name) {
    const FiniteAbelian c2({2}), c3({3}), c4({4}), v4({2, 2});
    if (name == "C2:C2:triv") return FiniteGModule::trivial(PermGroup::cyclic(2), c2);
    if (name == "C3:C3:triv") return FiniteGModule::trivial(PermGroup::cyclic(3), c3);
    if (name == "1:C2:triv") return FiniteGModule::trivial(PermGroup::trivial(1), c2);
    if (name == "S3:C3:sign") {
        PermGroup s3 = PermGroup::symmetric(3);
        std::vector<Perm> acts;
        for (const auto& g : s3.generators()) acts.push_back(g.sign() < 0 ? Perm::parse("(1 2)", 3) : Perm::identity(3));
        return FiniteGModule(s3, c3, acts);
    }
    if (name == "S3:C2xC2:perm") {
        // Point i of {0,1,2} is the nonzero element with index i + 1.
        PermGroup s3 = PermGroup::symmetric(3);
        std::vector<Perm> acts;
        for (const auto& g : s3.generators()) acts.push_back(Perm({0, g(0) + 1, g(1) + 1, g(2) + 1}));
        return FiniteGModule(s3, v4, acts);
    }
    if (name == "C2:C4:inv") return FiniteGModule(PermGroup::cyclic(2), c4, {Perm::parse("(1 3)", 4)});
    throw InvalidInput("unknown module setup '" + std::string(name) + "'");
}

std::vector<std::string> named_module_list() {
    return {"1:C2:triv", "C2:C2:triv", "C2:C4:inv", "C3:C3:triv", "S3:C3:sign", "S3:C2xC2:perm"};
}

// ---------------------------------------------------------------- cochains

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<int> decode_tuple(std::size_t idx, int arity, int order) {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int i = arity; i-- > 0;) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(order));
        idx /= static_cast<std::size_t>(order);
    }
    return t;
}

std::size_t encode_tuple(const std::vector<int>& t, int order) {
    std::size_t idx = 0;
    for (int g : t) idx = idx * static_cast<std::size_t>(order) + static_cast<std::size_t>(g);
    return idx;
}

void check_shape(const FiniteGModule& gm, const Cochain& c) {
    if (c.arity < 0 || c.values.size() != ipow(static_cast<std::size_t>(gm.group_order()), c.arity))
        throw InvalidInput("cochain table has the wrong size");
    for (int v : c.values)
        if (v < 0 || v >= gm.module().size()) throw InvalidInput("cochain value outside the module");
}

}  // namespace

Cochain Cochain::zero(const FiniteGModule& gm, int arity) {
    return Cochain{arity, std::vector<int>(ipow(static_cast<std::size_t>(gm.group_order()), arity), 0)};
}

int Cochain::at(const FiniteGModule& gm, const std::vector<int>& tuple) const {
    return values[encode_tuple(tuple, gm.group_order())];
}

Cochain coboundary(const FiniteGModule& gm, const Cochain& c) {
    check_shape(gm, c);
    const int n = c.arity;
    const int order = gm.group_order();
    const auto& M = gm.module();
    const auto& mul = gm.table().mul;
    Cochain out{n + 1, std::vector<int>(ipow(static_cast<std::size_t>(order), n + 1), 0)};
    for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
        auto t = decode_tuple(idx, n + 1, order);
        std::vector<int> tail(t.begin() + 1, t.end());
        int acc = gm.act(t[0], c.at(gm, tail));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> merged;
            for (int j = 0; j < n + 1; ++j) {
                if (j == i) continue;
                if (j == i - 1)
                    merged.push_back(mul[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])]
                                        [static_cast<std::size_t>(t[static_cast<std::size_t>(j + 1)])]);
                else
                    merged.push_back(t[static_cast<std::size_t>(j)]);
            }
            int v = c.at(gm, merged);
            acc = M.add(acc, (i % 2 == 1) ? M.neg(v) : v);
        }
        std::vector<int> head(t.begin(), t.end() - 1);
        int v = c.at(gm, head);
        acc = M.add(acc, ((n + 1) % 2 == 1) ? M.neg(v) : v);
        out.values[idx] = acc;
    }
    return out;
}

bool is_cocycle(const FiniteGModule& gm, const Cochain& c) {
    auto d = coboundary(gm, c);
    return std::all_of(d.values.begin(), d.values.end(), [](int v) { return v == 0; });
}

Cochain add(const FiniteGModule& gm, const Cochain& a, const Cochain& b) {
    if (a.arity != b.arity || a.values.size() != b.values.size()) throw InvalidInput("cochain arity mismatch");
    Cochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = gm.module().add(a.values[i], b.values[i]);
    return r;
}

Cochain scale(const FiniteGModule& gm, const Cochain& a, int k) {
    Cochain r = a;
    for (auto& v : r.values) v = gm.module().scale(v, k);
    return r;
}

// ---------------------------------------------------------------- Z/m linear algebra

namespace {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

/// (g, s, t) with s a + t b = g = gcd(a, b) >= 0.
std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
    long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        long long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

/// A unit u mod m with u * a = gcd(a, m) mod m.
long long normalizing_unit(long long a, long long m) {
    long long g = std::gcd(a, m);
    long long mp = m / g, ap = a / g;
    long long u0 = 1;
    if (mp > 1) {
        auto [gg, s, t] = ext_gcd(mod(ap, mp), mp);
        (void)gg;
        (void)t;
        u0 = mod(s, mp);
    }
    for (long long k = 0; k <= g; ++k) {
        long long u = u0 + k * mp;
        if (std::gcd(u, m) == 1) return mod(u, m);
    }
    throw std::logic_error("no normalizing unit");
}

bool is_zero_row(const std::vector<int>& r) {
    return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

}  // namespace

ZmModule::ZmModule(int m, int cols, std::vector<std::vector<int>> generators) : m_(m), cols_(cols) {
    if (m < 1) throw InvalidInput("modulus must be positive");
    std::vector<std::vector<int>> work;
    for (auto& r : generators) {
        if (static_cast<int>(r.size()) != cols) throw InvalidInput("row length mismatch");
        for (auto& v : r) v = static_cast<int>(mod(v, m));
        if (!is_zero_row(r)) work.push_back(std::move(r));
    }
    for (int c = 0; c < cols && !work.empty(); ++c) {
        const auto cc = static_cast<std::size_t>(c);
        int piv = -1;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (work[r][cc] == 0) continue;
            if (piv < 0) {
                piv = static_cast<int>(r);
                continue;
            }
            auto& a = work[static_cast<std::size_t>(piv)];
            auto& b = work[r];
            long long x = a[cc], y = b[cc];
            auto [g, s, t] = ext_gcd(x, y);
            long long u = -y / g, v = x / g;
            for (std::size_t j = cc; j < static_cast<std::size_t>(cols); ++j) {
                long long aj = a[j], bj = b[j];
                a[j] = static_cast<int>(mod(s * aj + t * bj, m));
                b[j] = static_cast<int>(mod(u * aj + v * bj, m));
            }
        }
        if (piv < 0) continue;
        std::vector<int> row = std::move(work[static_cast<std::size_t>(piv)]);
        work.erase(work.begin() + piv);
        long long unit = normalizing_unit(row[cc], m);
        for (auto& v : row) v = static_cast<int>(mod(v * unit, m));
        const int p = row[cc];
        std::vector<int> ann(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) ann[j] = static_cast<int>(mod(static_cast<long long>(row[j]) * (m / p), m));
        if (!is_zero_row(ann)) work.push_back(ann);
        rows_.push_back(std::move(row));
        pivots_.push_back(c);
        work.erase(std::remove_if(work.begin(), work.end(), is_zero_row), work.end());
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto c = static_cast<std::size_t>(pivots_[i]);
        const int p = rows_[i][c];
        for (std::size_t j = 0; j < i; ++j) {
            int q = rows_[j][c] / p;
            if (q == 0) continue;
            for (std::size_t k = c; k < static_cast<std::size_t>(cols); ++k)
                rows_[j][k] = static_cast<int>(mod(rows_[j][k] - static_cast<long long>(q) * rows_[i][k], m));
        }
    }
}

unsigned long long ZmModule::size() const {
    unsigned long long s = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        unsigned long long f = static_cast<unsigned long long>(m_ / rows_[i][static_cast<std::size_t>(pivots_[i])]);
        if (s > (~0ULL) / f) throw Unsupported("module size exceeds 64 bits");
        s *= f;
    }
    return s;
}

std::vector<int> ZmModule::reduce(std::vector<int> v) const {
    for (auto& x : v) x = static_cast<int>(mod(x, m_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto c = static_cast<std::size_t>(pivots_[i]);
        int q = v[c] / rows_[i][c];
        if (q == 0) continue;
        for (std::size_t k = c; k < v.size(); ++k)
            v[k] = static_cast<int>(mod(v[k] - static_cast<long long>(q) * rows_[i][k], m_));
    }
    return v;
}

bool ZmModule::contains(const std::vector<int>& v) const { return is_zero_row(reduce(v)); }

std::vector<std::vector<int>> ZmModule::rows_after(int prefix) const {
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (pivots_[i] >= prefix) out.emplace_back(rows_[i].begin() + prefix, rows_[i].end());
    return out;
}

// ---------------------------------------------------------------- cohomology

CoclassSet::CoclassSet(const FiniteGModule& gm, int degree) : gm_(gm), degree_(degree) {
    if (degree < 0 || degree > 2) throw Unsupported("cohomology is implemented in degrees 0..2");
    const int order = gm.group_order();
    const auto& M = gm.module();
    if (order > 24 || M.size() > 16) throw Unsupported("cohomology caps: |G| <= 24, |M| <= 16");
    const int k = static_cast<int>(M.orders().size());
    const std::size_t n_in = ipow(static_cast<std::size_t>(order), degree) * static_cast<std::size_t>(k);
    const std::size_t n_out = n_in * static_cast<std::size_t>(order);
    if (n_in * (n_in + n_out) > 8'000'000) throw Unsupported("cochain space too large for dense elimination");
    m_ = M.exponent();

    if (k == 0) {
        reps_.push_back(Cochain::zero(gm, degree));
        index_[{}] = 0;
        z_size_ = b_size_ = 1;
        b_.emplace(1, 0, std::vector<std::vector<int>>{});
        return;
    }

    // Coboundary rows [Y | X] for each generator of C^n, in scaled coordinates.
    auto generator_rows = [&](int arity, bool with_x) {
        std::vector<std::vector<int>> rows;
        const std::size_t cells = ipow(static_cast<std::size_t>(order), arity);
        for (std::size_t t = 0; t < cells; ++t)
            for (int i = 0; i < k; ++i) {
                Cochain e = Cochain::zero(gm, arity);
                std::vector<int> unit(static_cast<std::size_t>(k), 0);
                unit[static_cast<std::size_t>(i)] = 1;
                e.values[t] = M.index(unit);
                Cochain d = coboundary(gm, e);
                std::vector<int> row;
                row.reserve(d.values.size() * static_cast<std::size_t>(k) + (with_x ? cells * static_cast<std::size_t>(k) : 0));
                for (int v : d.values) {
                    auto el = M.element(v);
                    for (int j = 0; j < k; ++j)
                        row.push_back(el[static_cast<std::size_t>(j)] * (m_ / M.orders()[static_cast<std::size_t>(j)]));
                }
                if (with_x) {
                    std::size_t base = row.size();
                    row.resize(base + cells * static_cast<std::size_t>(k), 0);
                    row[base + t * static_cast<std::size_t>(k) + static_cast<std::size_t>(i)] =
                        m_ / M.orders()[static_cast<std::size_t>(i)];
                }
                rows.push_back(std::move(row));
            }
        return rows;
    };

    ZmModule aug(m_, static_cast<int>(n_out + n_in), generator_rows(degree, true));
    ZmModule z(m_, static_cast<int>(n_in), aug.rows_after(static_cast<int>(n_out)));
    if (degree == 0)
        b_.emplace(m_, static_cast<int>(n_in), std::vector<std::vector<int>>{});
    else
        b_.emplace(m_, static_cast<int>(n_in), generator_rows(degree - 1, false));
    z_size_ = z.size();
    b_size_ = b_->size();

    std::vector<std::vector<int>> queue{b_->reduce(std::vector<int>(n_in, 0))};
    index_[queue[0]] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : z.rows()) {
            std::vector<int> w = queue[head];
            for (std::size_t j = 0; j < w.size(); ++j) w[j] += g[j];
            w = b_->reduce(std::move(w));
            if (index_.emplace(w, static_cast<int>(queue.size())).second) queue.push_back(w);
        }
    }
    if (queue.size() != z_size_ / b_size_) throw std::logic_error("class enumeration mismatch");
    for (const auto& v : queue) reps_.push_back(from_coords(v));
}

std::vector<int> CoclassSet::coords(const Cochain& c) const {
    const auto& M = gm_.module();
    std::vector<int> out;
    for (int v : c.values) {
        auto el = M.element(v);
        for (std::size_t j = 0; j < el.size(); ++j) out.push_back(el[j] * (m_ / M.orders()[j]));
    }
    return out;
}

Cochain CoclassSet::from_coords(const std::vector<int>& x) const {
    const auto& M = gm_.module();
    const std::size_t k = M.orders().size();
    Cochain c = Cochain::zero(gm_, degree_);
    for (std::size_t t = 0; t < c.values.size(); ++t) {
        std::vector<int> el(k);
        for (std::size_t j = 0; j < k; ++j) el[j] = x[t * k + j] / (m_ / M.orders()[j]);
        c.values[t] = M.index(el);
    }
    return c;
}

int CoclassSet::class_of(const Cochain& z) const {
    if (z.arity != degree_) throw InvalidInput("cochain has the wrong degree");
    if (!is_cocycle(gm_, z)) throw InvalidInput("not a cocycle");
    auto it = index_.find(b_->reduce(coords(z)));
    if (it == index_.end()) throw std::logic_error("cocycle outside the enumerated classes");
    return it->second;
}

CoclassSet cohomology(const FiniteGModule& gm, int degree) { return CoclassSet(gm, degree); }

// ---------------------------------------------------------------- Hol M

namespace {

Perm affine(const FiniteAbelian& m, const Perm& a, int t) {
    std::vector<int> img(static_cast<std::size_t>(m.size()));
    for (int x = 0; x < m.size(); ++x) img[static_cast<std::size_t>(x)] = m.add(a(x), t);
    return Perm(img);
}

}  // namespace

HolHom crossed_to_hol(const FiniteGModule& gm, const Cochain& z) {
    if (z.arity != 1) throw InvalidInput("crossed homomorphisms have arity 1");
    if (!is_cocycle(gm, z)) throw InvalidInput("not a 1-cocycle");
    const auto& M = gm.module();
    HolHom psi;
    for (int g = 0; g < gm.group_order(); ++g)
        psi.table.push_back(affine(M, gm.action(g), z.values[static_cast<std::size_t>(g)]));
    for (const auto& gen : gm.group().generators())
        psi.generator_images.push_back(psi.table[static_cast<std::size_t>(gm.table().index(gen))]);
    // Homomorphism and compatibility with the action.
    for (int a = 0; a < gm.group_order(); ++a)
        for (int b = 0; b < gm.group_order(); ++b) {
            int ab = gm.table().mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (psi.table[static_cast<std::size_t>(a)] * psi.table[static_cast<std::size_t>(b)] !=
                psi.table[static_cast<std::size_t>(ab)])
                throw std::logic_error("crossed_to_hol produced a non-homomorphism");
        }
    for (int g = 0; g < gm.group_order(); ++g) {
        const Perm& p = psi.table[static_cast<std::size_t>(g)];
        for (int x = 0; x < M.size(); ++x)
            if (M.add(p(x), M.neg(p(0))) != gm.act(g, x))
                throw std::logic_error("linear part differs from the action");
    }
    return psi;
}

Cochain hol_to_crossed(const FiniteGModule& gm, const HolHom& psi) {
    Cochain z = Cochain::zero(gm, 1);
    for (int g = 0; g < gm.group_order(); ++g) z.values[static_cast<std::size_t>(g)] = psi.table[static_cast<std::size_t>(g)](0);
    return z;
}

HolH1 h1_via_hol(const FiniteGModule& gm) {
    const auto& M = gm.module();
    const auto& gens = gm.group().generators();
    const std::size_t r = gens.size();
    std::vector<Perm> lin;
    for (const auto& g : gens) lin.push_back(gm.action(gm.table().index(g)));

    struct Found {
        std::vector<int> key;
        HolHom psi;
    };
    std::vector<Found> homs;
    std::vector<int> t(r, 0);
    while (true) {
        std::vector<Perm> images;
        for (std::size_t i = 0; i < r; ++i) images.push_back(affine(M, lin[i], t[i]));
        bool ok = true;
        HolHom psi;
        if (r == 0) {
            psi.table.push_back(Perm::identity(M.size()));
        } else {
            try {
                Homomorphism h(gm.group(), images);
                for (const auto& g : gm.table().elements) psi.table.push_back(h.apply(g));
            } catch (const InvalidInput&) {
                ok = false;
            }
        }
        if (ok) {
            psi.generator_images = images;
            homs.push_back(Found{t, psi});
        }
        std::size_t i = 0;
        while (i < r && ++t[i] == M.size()) t[i++] = 0;
        if (i == r) break;
    }

    // Orbits under conjugation by translations: t_i -> t_i + x - a_i(x).
    HolH1 out;
    out.homomorphism_count = static_cast<int>(homs.size());
    std::map<std::vector<int>, int> canon_index;
    for (const auto& f : homs) {
        std::vector<int> best = f.key;
        for (int x = 0; x < M.size(); ++x) {
            std::vector<int> moved(r);
            for (std::size_t i = 0; i < r; ++i) moved[i] = M.add(M.add(f.key[i], x), M.neg(lin[i](x)));
            best = std::min(best, moved);
        }
        auto [it, inserted] = canon_index.emplace(best, static_cast<int>(out.class_reps.size()));
        if (inserted) {
            out.class_reps.push_back(f.psi);
            out.class_sizes.push_back(0);
        }
        ++out.class_sizes[static_cast<std::size_t>(it->second)];
    }

    CoclassSet h1(gm, 1);
    std::set<int> hit;
    for (const auto& psi : out.class_reps) {
        int c = h1.class_of(hol_to_crossed(gm, psi));
        out.to_cohomology.push_back(c);
        hit.insert(c);
    }
    out.bijective = hit.size() == out.class_reps.size() && hit.size() == h1.size();
    return out;
}

// ---------------------------------------------------------------- Res / Cor

std::vector<int> left_coset_reps(const FiniteGModule& gm, const PermGroup& h) {
    if (!h.is_subgroup_of(gm.group())) throw InvalidInput("not a subgroup");
    const auto& tab = gm.table();
    std::vector<bool> covered(static_cast<std::size_t>(tab.size()), false);
    std::vector<int> reps;
    for (int g = 0; g < tab.size(); ++g) {
        if (covered[static_cast<std::size_t>(g)]) continue;
        reps.push_back(g);
        for (const auto& x : h.elements()) covered[static_cast<std::size_t>(tab.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(tab.index(x))])] = true;
    }
    return reps;
}

Cochain restriction(const FiniteGModule& gm, const PermGroup& h, const Cochain& c) {
    check_shape(gm, c);
    if (!h.is_subgroup_of(gm.group())) throw InvalidInput("not a subgroup");
    if (c.arity > 1) throw Unsupported("restriction is implemented in degrees 0 and 1");
    FiniteGModule gh = gm.restrict_to(h);
    Cochain out = Cochain::zero(gh, c.arity);
    if (c.arity == 0) {
        out.values[0] = c.values[0];
        return out;
    }
    for (int i = 0; i < gh.group_order(); ++i)
        out.values[static_cast<std::size_t>(i)] =
            c.values[static_cast<std::size_t>(gm.table().index(gh.table().elements[static_cast<std::size_t>(i)]))];
    return out;
}

Cochain corestriction(const FiniteGModule& gm, const PermGroup& h, const Cochain& c) {
    FiniteGModule gh = gm.restrict_to(h);
    check_shape(gh, c);
    if (c.arity > 1) throw Unsupported("corestriction is implemented in degrees 0 and 1");
    const auto& M = gm.module();
    const auto& tab = gm.table();
    auto reps = left_coset_reps(gm, h);
    Cochain out = Cochain::zero(gm, c.arity);
    if (c.arity == 0) {
        int acc = 0;
        for (int s : reps) acc = M.add(acc, gm.act(s, c.values[0]));
        out.values[0] = acc;
        return out;
    }
    for (int g = 0; g < tab.size(); ++g) {
        int acc = 0;
        for (int si : reps) {
            int gs = tab.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(si)];
            // g s_i = s_j h with h in H.
            for (int sj : reps) {
                int hh = tab.mul[static_cast<std::size_t>(tab.inv[static_cast<std::size_t>(sj)])][static_cast<std::size_t>(gs)];
                const Perm& hp = tab.elements[static_cast<std::size_t>(hh)];
                if (!h.contains(hp)) continue;
                int hidx = gh.table().index(hp);
                acc = M.add(acc, gm.act(sj, c.values[static_cast<std::size_t>(hidx)]));
                break;
            }
        }
        out.values[static_cast<std::size_t>(g)] = acc;
    }
    return out;
}

// ---------------------------------------------------------------- maps, Cor f_* Res = f~_*

bool is_additive(const FiniteAbelian& x, const FiniteAbelian& y, const ModuleMap& f) {
    if (static_cast<int>(f.size()) != x.size()) return false;
    for (int v : f)
        if (v < 0 || v >= y.size()) return false;
    for (int a = 0; a < x.size(); ++a)
        for (int b = 0; b < x.size(); ++b)
            if (f[static_cast<std::size_t>(x.add(a, b))] != y.add(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

Cochain push_forward(const ModuleMap& f, const Cochain& c) {
    Cochain out = c;
    for (auto& v : out.values) v = f[static_cast<std::size_t>(v)];
    return out;
}

namespace {

void require_linear(const FiniteGModule& x, const FiniteGModule& y, const PermGroup& h, const ModuleMap& f) {
    if (!(x.group() == y.group())) throw InvalidInput("X and Y must be modules over the same group");
    if (!is_additive(x.module(), y.module(), f)) throw InvalidInput("f is not additive");
    for (const auto& g : h.generators()) {
        int gi = x.table().index(g);
        for (int v = 0; v < x.module().size(); ++v)
            if (f[static_cast<std::size_t>(x.act(gi, v))] != y.act(gi, f[static_cast<std::size_t>(v)]))
                throw InvalidInput("f is not H-linear");
    }
}

}  // namespace

ModuleMap induced_map(const FiniteGModule& x, const FiniteGModule& y, const PermGroup& h, const ModuleMap& f) {
    require_linear(x, y, h, f);
    const auto& tab = x.table();
    auto reps = left_coset_reps(x, h);
    ModuleMap out(static_cast<std::size_t>(x.module().size()), 0);
    for (int v = 0; v < x.module().size(); ++v) {
        int acc = 0;
        for (int g : reps) {
            int ginv = tab.inv[static_cast<std::size_t>(g)];
            acc = y.module().add(acc, y.act(g, f[static_cast<std::size_t>(x.act(ginv, v))]));
        }
        out[static_cast<std::size_t>(v)] = acc;
    }
    return out;
}

Lemma53Result lemma53_check(const FiniteGModule& x, const FiniteGModule& y, const PermGroup& h,
                            const ModuleMap& f, int degree) {
    if (degree < 0 || degree > 1) throw Unsupported("the Res/Cor identity is checked in degrees 0 and 1");
    ModuleMap ft = induced_map(x, y, h, f);
    FiniteGModule yh = y.restrict_to(h);
    CoclassSet hx(x, degree), hy(y, degree);
    Lemma53Result res;
    for (std::size_t i = 0; i < hx.size(); ++i) {
        const Cochain& sigma = hx.representatives()[i];
        Cochain lhs = corestriction(y, h, push_forward(f, restriction(x, h, sigma)));
        Cochain rhs = push_forward(ft, sigma);
        ++res.classes_checked;
        if (hy.class_of(lhs) != hy.class_of(rhs)) {
            res.holds = false;
            res.violating_class = static_cast<int>(i);
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------- cup product

Cochain cup11(const FiniteGModule& x, const FiniteGModule& y, const FiniteGModule& w, const Cochain& z1,
              const Cochain& z2, const std::vector<std::vector<int>>& pairing) {
    if (!(x.group() == y.group()) || !(x.group() == w.group()))
        throw InvalidInput("cup product needs modules over one group");
    const auto& X = x.module();
    const auto& Y = y.module();
    const auto& W = w.module();
    if (static_cast<int>(pairing.size()) != X.size()) throw InvalidInput("pairing table has the wrong shape");
    for (const auto& row : pairing)
        if (static_cast<int>(row.size()) != Y.size()) throw InvalidInput("pairing table has the wrong shape");
    for (int a = 0; a < X.size(); ++a)
        for (int b = 0; b < X.size(); ++b)
            for (int c = 0; c < Y.size(); ++c)
                if (pairing[static_cast<std::size_t>(X.add(a, b))][static_cast<std::size_t>(c)] !=
                    W.add(pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)], pairing[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]))
                    throw InvalidInput("pairing is not bilinear");
    for (int a = 0; a < X.size(); ++a)
        for (int c = 0; c < Y.size(); ++c)
            for (int d = 0; d < Y.size(); ++d)
                if (pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(Y.add(c, d))] !=
                    W.add(pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)], pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)]))
                    throw InvalidInput("pairing is not bilinear");
    for (int g = 0; g < x.group_order(); ++g)
        for (int a = 0; a < X.size(); ++a)
            for (int c = 0; c < Y.size(); ++c)
                if (pairing[static_cast<std::size_t>(x.act(g, a))][static_cast<std::size_t>(y.act(g, c))] !=
                    w.act(g, pairing[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]))
                    throw InvalidInput("pairing is not G-equivariant");
    if (!is_cocycle(x, z1) || !is_cocycle(y, z2) || z1.arity != 1 || z2.arity != 1)
        throw InvalidInput("cup11 needs two 1-cocycles");
    const int order = x.group_order();
    Cochain out = Cochain::zero(w, 2);
    for (int g = 0; g < order; ++g)
        for (int hh = 0; hh < order; ++hh)
            out.values[static_cast<std::size_t>(g * order + hh)] =
                pairing[static_cast<std::size_t>(z1.values[static_cast<std::size_t>(g)])]
                       [static_cast<std::size_t>(y.act(g, z2.values[static_cast<std::size_t>(hh)]))];
    if (!is_cocycle(w, out)) throw std::logic_error("cup product is not a cocycle");
    return out;
}

}  // namespace galcoh
