#include "galcoh/permstruct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "galcoh/errors.hpp"

namespace galcoh {

namespace {
constexpr int kMaxDegree = 8;
}

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    img_.assign(images.begin(), images.end());
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Perm(v);
}

Perm Perm::parse(std::string_view text, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw InvalidInput("malformed cycle notation: " + std::string(text));
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip();
            if (i >= text.size()) throw InvalidInput("unterminated cycle: " + std::string(text));
            if (text[i] == ')') {
                ++i;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidInput("malformed cycle notation: " + std::string(text));
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v >= n || used[static_cast<std::size_t>(v)])
                throw InvalidInput("bad point in cycle notation: " + std::string(text));
            used[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        skip();
    }
    return Perm(img);
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<int>(i);
    return Perm(v);
}

int Perm::order() const {
    int o = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return o;
}

int Perm::sign() const {
    int s = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::string Perm::to_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = true;
            if (j != i) out += " ";
            out += std::to_string(j);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in composition");
    Perm r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
}

std::size_t perm_rank(const Perm& p) {
    const int n = p.degree();
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p(j) < p(i)) ++smaller;
        rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
    }
    return rank;
}

std::vector<Perm> all_perms(int n) {
    if (n > kMaxDegree) throw Unsupported("degree above 8 is not supported");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(int n, std::vector<Perm> generators) : n_(n), gens_(std::move(generators)) {
    if (n < 1) throw InvalidInput("permutation group degree must be positive");
    if (n > kMaxDegree) throw Unsupported("degree above 8 is not supported");
    for (const auto& g : gens_)
        if (g.degree() != n) throw InvalidInput("generator degree mismatch");
    std::set<Perm> seen{Perm::identity(n)};
    std::vector<Perm> frontier{Perm::identity(n)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : gens_) {
                Perm y = g * x;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    elements_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::symmetric(int n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        gens.push_back(Perm::parse("(0 1)", n));
        std::vector<int> cyc(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
        if (n > 2) gens.emplace_back(cyc);
    }
    return PermGroup(n, gens);
}

PermGroup PermGroup::trivial(int n) { return PermGroup(n, {}); }

PermGroup PermGroup::cyclic(int n) {
    if (n == 1) return trivial(1);
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    return PermGroup(n, {Perm(cyc)});
}

PermGroup PermGroup::parse(std::string_view gens, int n) {
    std::vector<Perm> out;
    std::size_t start = 0;
    while (start <= gens.size()) {
        auto end = gens.find(';', start);
        if (end == std::string_view::npos) end = gens.size();
        auto piece = gens.substr(start, end - start);
        bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return c == ' '; });
        if (!blank) out.push_back(Perm::parse(piece, n));
        start = end + 1;
    }
    return PermGroup(n, out);
}

bool PermGroup::contains(const Perm& p) const {
    return p.degree() == n_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return -1;
    return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (other.n_ != n_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const {
    for (const auto& a : gens_)
        for (const auto& b : gens_)
            if (a * b != b * a) return false;
    return true;
}

PermGroup PermGroup::conjugate(const Perm& pi) const {
    Perm inv = pi.inverse();
    std::vector<Perm> g;
    for (const auto& x : gens_) g.push_back(pi * x * inv);
    return PermGroup(n_, g);
}

std::string PermGroup::to_string() const {
    if (gens_.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ";";
        out += gens_[i].to_string();
    }
    return out;
}

GroupTable::GroupTable(const PermGroup& g) : elements(g.elements()) {
    const std::size_t n = elements.size();
    mul.assign(n, std::vector<int>(n, 0));
    inv.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = index(elements[a] * elements[b]);
        inv[a] = index(elements[a].inverse());
    }
}

int GroupTable::index(const Perm& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) throw InvalidInput("element not in group");
    return static_cast<int>(it - elements.begin());
}

// ---------------------------------------------------------------- FiniteAbelian

FiniteAbelian::FiniteAbelian(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int o : orders_) {
        if (o < 2) throw InvalidInput("cyclic orders must be >= 2");
        size_ *= o;
        if (size_ > 1 << 16) throw Unsupported("module too large");
    }
}

int FiniteAbelian::exponent() const {
    int e = 1;
    for (int o : orders_) e = std::lcm(e, o);
    return e;
}

std::vector<int> FiniteAbelian::element(int index) const {
    std::vector<int> v(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        v[i] = index % orders_[i];
        index /= orders_[i];
    }
    return v;
}

int FiniteAbelian::index(const std::vector<int>& e) const {
    int idx = 0;
    for (std::size_t i = orders_.size(); i-- > 0;) {
        int c = ((e[i] % orders_[i]) + orders_[i]) % orders_[i];
        idx = idx * orders_[i] + c;
    }
    return idx;
}

int FiniteAbelian::add(int a, int b) const {
    auto x = element(a), y = element(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return index(x);
}

int FiniteAbelian::neg(int a) const {
    auto x = element(a);
    for (auto& c : x) c = -c;
    return index(x);
}

int FiniteAbelian::scale(int a, int k) const {
    auto x = element(a);
    for (auto& c : x) c *= k;
    return index(x);
}

std::string FiniteAbelian::element_string(int idx) const {
    auto v = element(idx);
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string FiniteAbelian::to_string() const {
    if (orders_.empty()) return "C1";
    std::string out;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) out += "x";
        out += "C" + std::to_string(orders_[i]);
    }
    return out;
}

std::vector<Perm> FiniteAbelian::automorphisms() const {
    const std::size_t k = orders_.size();
    std::vector<Perm> out;
    // Candidate images for each standard generator: elements killed by its order.
    std::vector<std::vector<int>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (int e = 0; e < size_; ++e)
            if (scale(e, orders_[i]) == 0) candidates[i].push_back(e);
    std::vector<std::size_t> pick(k, 0);
    while (true) {
        std::vector<int> img(static_cast<std::size_t>(size_));
        for (int e = 0; e < size_; ++e) {
            auto c = element(e);
            int acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc = add(acc, scale(candidates[i][pick[i]], c[i]));
            img[static_cast<std::size_t>(e)] = acc;
        }
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) out.emplace_back(img);
        std::size_t i = 0;
        while (i < k && ++pick[i] == candidates[i].size()) pick[i++] = 0;
        if (i == k) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- holomorph

Perm HolomorphGroup::lambda(const Perm& a, int t) const {
    std::vector<int> img(static_cast<std::size_t>(module.size()));
    for (int x = 0; x < module.size(); ++x) img[static_cast<std::size_t>(x)] = module.add(a(x), t);
    return Perm(img);
}

Perm HolomorphGroup::translation(int t) const { return lambda(Perm::identity(module.size()), t); }

HolomorphGroup holomorph(const FiniteAbelian& m) {
    HolomorphGroup h;
    h.module = m;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < m.orders().size(); ++i) {
        std::vector<int> e(m.orders().size(), 0);
        e[i] = 1;
        h.translation_generators.push_back(h.translation(m.index(e)));
    }
    for (const auto& a : m.automorphisms())
        if (!a.is_identity()) h.automorphism_generators.push_back(a);
    gens = h.translation_generators;
    gens.insert(gens.end(), h.automorphism_generators.begin(), h.automorphism_generators.end());
    h.group = PermGroup(m.size(), gens);
    return h;
}

// ---------------------------------------------------------------- Cayley, centralizers

CayleyImages cayley_images(const PermGroup& g) {
    const auto& el = g.elements();
    const int n = static_cast<int>(el.size());
    if (n > kMaxDegree) throw Unsupported("Cayley images need |G| <= 8");
    std::vector<Perm> left, right;
    for (const auto& s : g.generators()) {
        std::vector<int> l(el.size()), r(el.size());
        Perm sinv = s.inverse();
        for (std::size_t i = 0; i < el.size(); ++i) {
            l[i] = g.index_of(s * el[i]);
            r[i] = g.index_of(el[i] * sinv);
        }
        left.emplace_back(l);
        right.emplace_back(r);
    }
    return CayleyImages{PermGroup(n, left), PermGroup(n, right), el};
}

PermGroup centralizer_in_sym(const PermGroup& h) {
    const int n = h.degree();
    std::vector<Perm> members;
    for (const auto& p : all_perms(n)) {
        bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                              [&](const Perm& g) { return p * g == g * p; });
        if (ok) members.push_back(p);
    }
    return PermGroup(n, members);
}

PermGroup normalizer_in_sym(const PermGroup& h) {
    const int n = h.degree();
    std::vector<Perm> members;
    for (const auto& p : all_perms(n)) {
        Perm inv = p.inverse();
        bool ok = std::all_of(h.generators().begin(), h.generators().end(),
                              [&](const Perm& g) { return h.contains(p * g * inv); });
        if (ok) members.push_back(p);
    }
    return PermGroup(n, members);
}

namespace {

/// |N(G)| / |G C(G)|: relabeling isomorphisms G' -> G up to G-conjugation.
int identification_count(const PermGroup& g, const PermGroup& normalizer) {
    PermGroup c = centralizer_in_sym(g);
    std::size_t inter = 0;
    for (const auto& x : c.elements()) inter += g.contains(x) ? 1 : 0;
    std::size_t gc = g.order() * c.order() / inter;
    return static_cast<int>(normalizer.order() / gc);
}

/// Lexicographically minimal representatives of the cosets pi N in Sym(n).
std::vector<Perm> coset_reps(const PermGroup& normalizer) {
    const int n = normalizer.degree();
    std::size_t total = 1;
    for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
    std::vector<bool> seen(total, false);
    std::vector<Perm> reps;
    for (const auto& pi : all_perms(n)) {
        if (seen[perm_rank(pi)]) continue;
        reps.push_back(pi);
        for (const auto& nu : normalizer.elements()) seen[perm_rank(pi * nu)] = true;
    }
    return reps;
}

}  // namespace

GStructureCount count_g_structures(const PermGroup& image, const PermGroup& g) {
    if (image.degree() != g.degree()) throw InvalidInput("image and G act on different point sets");
    GStructureCount out;
    PermGroup norm = normalizer_in_sym(g);
    const int ids = identification_count(g, norm);
    for (const auto& pi : coset_reps(norm)) {
        Perm inv = pi.inverse();
        bool inside = std::all_of(image.generators().begin(), image.generators().end(),
                                  [&](const Perm& h) { return g.contains(inv * h * pi); });
        if (!inside) continue;
        out.witnesses.push_back(GStructureWitness{g.conjugate(pi), pi, ids});
        out.count += ids;
    }
    return out;
}

// ---------------------------------------------------------------- homomorphisms

Homomorphism::Homomorphism(PermGroup domain, std::vector<Perm> generator_images)
    : domain_(std::move(domain)), gen_images_(std::move(generator_images)) {
    if (gen_images_.size() != domain_.generators().size())
        throw InvalidInput("homomorphism needs one image per generator");
    codomain_degree_ = gen_images_.empty() ? 1 : gen_images_[0].degree();
    for (const auto& p : gen_images_)
        if (p.degree() != codomain_degree_) throw InvalidInput("generator images of mixed degree");
    const auto& el = domain_.elements();
    std::vector<bool> have(el.size(), false);
    table_.assign(el.size(), Perm::identity(codomain_degree_));
    const int id = domain_.index_of(Perm::identity(domain_.degree()));
    have[static_cast<std::size_t>(id)] = true;
    std::vector<int> frontier{id};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (std::size_t i = 0; i < gen_images_.size(); ++i) {
                int y = domain_.index_of(domain_.generators()[i] * el[static_cast<std::size_t>(x)]);
                Perm img = gen_images_[i] * table_[static_cast<std::size_t>(x)];
                if (!have[static_cast<std::size_t>(y)]) {
                    have[static_cast<std::size_t>(y)] = true;
                    table_[static_cast<std::size_t>(y)] = img;
                    next.push_back(y);
                } else if (table_[static_cast<std::size_t>(y)] != img) {
                    throw InvalidInput("generator images do not define a homomorphism");
                }
            }
        frontier = std::move(next);
    }
}

Perm Homomorphism::apply(const Perm& x) const {
    int i = domain_.index_of(x);
    if (i < 0) throw InvalidInput("element outside the homomorphism's domain");
    return table_[static_cast<std::size_t>(i)];
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
    std::vector<Perm> imgs;
    for (const auto& g : first.domain().generators()) imgs.push_back(apply(first.apply(g)));
    if (imgs.empty()) return Homomorphism(first.domain(), {});
    return Homomorphism(first.domain(), imgs);
}

Homomorphism Homomorphism::sign(int n) {
    PermGroup s = PermGroup::symmetric(n);
    std::vector<Perm> imgs;
    for (const auto& g : s.generators())
        imgs.push_back(g.sign() < 0 ? Perm::parse("(0 1)", 2) : Perm::identity(2));
    return Homomorphism(s, imgs);
}

Homomorphism Homomorphism::s4_to_s3() {
    PermGroup s = PermGroup::symmetric(4);
    // Pair partitions {01|23}, {02|13}, {03|12}, indexed by the partner of 0.
    auto partition_of = [](int a, int b) {
        int partner_of_zero = (a == 0) ? b : (b == 0) ? a : (6 - a - b);
        return partner_of_zero - 1;
    };
    std::vector<Perm> imgs;
    for (const auto& g : s.generators()) {
        std::vector<int> img(3);
        for (int k = 1; k <= 3; ++k) img[static_cast<std::size_t>(k - 1)] = partition_of(g(0), g(k));
        imgs.emplace_back(img);
    }
    return Homomorphism(s, imgs);
}

Homomorphism Homomorphism::identity(const PermGroup& g) { return Homomorphism(g, g.generators()); }

PermGroup resolvent_image(const PermGroup& image, const Homomorphism& rho) {
    std::vector<Perm> gens;
    for (const auto& g : image.generators()) gens.push_back(rho.apply(g));
    return PermGroup(rho.codomain_degree(), gens);
}

// ---------------------------------------------------------------- partitions

std::vector<std::vector<std::vector<int>>> all_set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            std::vector<std::vector<int>> p(static_cast<std::size_t>(blocks));
            for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j);
            out.push_back(p);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) return {{}};
    rec(0, 0);
    return out;
}

std::vector<StablePartition> stable_partitions(const PermGroup& h) {
    const int n = h.degree();
    std::vector<StablePartition> out;
    for (const auto& blocks : all_set_partitions(n)) {
        std::vector<int> label(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int x : blocks[b]) label[static_cast<std::size_t>(x)] = static_cast<int>(b);
        auto preserved_by = [&](const Perm& g) {
            for (const auto& blk : blocks)
                for (int x : blk)
                    if (label[static_cast<std::size_t>(g(x))] != label[static_cast<std::size_t>(g(blk[0]))])
                        return false;
            return true;
        };
        if (!std::all_of(h.generators().begin(), h.generators().end(), preserved_by)) continue;
        StablePartition sp;
        sp.blocks = blocks;
        for (const auto& blk : blocks) sp.block_sizes.push_back(static_cast<int>(blk.size()));
        std::sort(sp.block_sizes.begin(), sp.block_sizes.end());
        if (sp.block_sizes.front() == sp.block_sizes.back())
            sp.in_wreath = std::all_of(h.elements().begin(), h.elements().end(), preserved_by);
        out.push_back(sp);
    }
    return out;
}

// ---------------------------------------------------------------- torsors

std::vector<TorsorStructure> torsor_structures(const PermGroup& image, const PermGroup& g) {
    CayleyImages cay = cayley_images(g);
    const int n = cay.left.degree();
    if (image.degree() != n) throw InvalidInput("torsor structures need an image of degree |G|");
    PermGroup ci = centralizer_in_sym(image);
    PermGroup nl = normalizer_in_sym(cay.left);
    const int ids = identification_count(cay.right, normalizer_in_sym(cay.right));
    std::vector<TorsorStructure> out;
    for (const auto& pi : coset_reps(nl)) {
        Perm inv = pi.inverse();
        bool commutes = std::all_of(cay.left.generators().begin(), cay.left.generators().end(),
                                    [&](const Perm& x) { return ci.contains(pi * x * inv); });
        if (!commutes) continue;
        PermGroup a = cay.left.conjugate(pi);
        out.push_back(TorsorStructure{a, centralizer_in_sym(a), ids});
    }
    return out;
}

}  // namespace galcoh
