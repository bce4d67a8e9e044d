#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace galcoh {

/// Bijection of {0..n-1}; (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    /// Cycle notation over 0-based points, e.g. "(0 1 2)(3 4)" or "(0,1,2)";
    /// "()" is the identity.
    static Perm parse(std::string_view cycles, int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    bool is_identity() const;
    Perm inverse() const;
    int order() const;
    int sign() const;
    std::string to_string() const;
    const std::vector<std::uint8_t>& images() const { return img_; }

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<std::uint8_t> img_;
};

/// Lehmer rank of a permutation in [0, n!).
std::size_t perm_rank(const Perm& p);
/// All permutations of degree n in lexicographic order (n <= 8).
std::vector<Perm> all_perms(int n);

/// Permutation group given by generators; the element list is closed and
/// sorted on construction. Degree is capped at 8 for exhaustive scans.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int n, std::vector<Perm> generators);
    static PermGroup symmetric(int n);
    static PermGroup trivial(int n);
    static PermGroup cyclic(int n);
    /// "(0 1 2 3);(0 2)" style generator lists.
    static PermGroup parse(std::string_view gens, int n);

    int degree() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elements_; }
    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool is_abelian() const;
    PermGroup conjugate(const Perm& pi) const;  // pi G pi^-1
    std::string to_string() const;               // generator list
    /// Index of p in elements(), or -1.
    int index_of(const Perm& p) const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.n_ == b.n_ && a.elements_ == b.elements_;
    }

private:
    int n_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
};

/// Multiplication table view of a finite group given as a PermGroup.
struct GroupTable {
    explicit GroupTable(const PermGroup& g);
    std::vector<Perm> elements;          // sorted; elements[0] is the identity
    std::vector<std::vector<int>> mul;   // mul[a][b] = index of a*b
    std::vector<int> inv;
    int size() const { return static_cast<int>(elements.size()); }
    int index(const Perm& p) const;
};

/// Finite abelian group Z/n1 x ... x Z/nk. Elements are indexed in mixed
/// radix with the first component varying fastest.
class FiniteAbelian {
public:
    FiniteAbelian() = default;
    explicit FiniteAbelian(std::vector<int> cyclic_orders);
    const std::vector<int>& orders() const { return orders_; }
    int size() const { return size_; }
    int exponent() const;
    std::vector<int> element(int index) const;
    int index(const std::vector<int>& element) const;
    int add(int a, int b) const;
    int neg(int a) const;
    int scale(int a, int k) const;
    int zero() const { return 0; }
    std::string element_string(int index) const;
    /// All automorphisms as permutations of the element indices, sorted.
    std::vector<Perm> automorphisms() const;
    std::string to_string() const;

private:
    std::vector<int> orders_;
    int size_ = 1;
};

/// Hol M = M x| Aut M acting on M by x -> a(x) + t.
struct HolomorphGroup {
    FiniteAbelian module;
    PermGroup group;
    std::vector<Perm> translation_generators;
    std::vector<Perm> automorphism_generators;
    Perm lambda(const Perm& a, int t) const;
    Perm translation(int t) const;
};

HolomorphGroup holomorph(const FiniteAbelian& m);

struct CayleyImages {
    PermGroup left, right;
    std::vector<Perm> labels;  // labels[i] is the group element placed at point i
};
CayleyImages cayley_images(const PermGroup& g);

/// Full centralizer of h in Sym(n), n <= 8.
PermGroup centralizer_in_sym(const PermGroup& h);
/// Normalizer of h in Sym(n), n <= 8.
PermGroup normalizer_in_sym(const PermGroup& h);

struct GStructureWitness {
    PermGroup conjugate;     // G' = pi G pi^-1 containing the image
    Perm pi;                 // x -> pi^-1 x pi identifies G' with G
    int identifications = 0; // G-conjugacy classes of relabeling isomorphisms G' -> G
};
struct GStructureCount {
    int count = 0;
    std::vector<GStructureWitness> witnesses;
};
/// G-structures on an algebra with Galois group `image` (both in Sym(n)):
/// pairs (conjugate G' of G containing the image, G-conjugacy class of
/// isomorphisms G' -> G induced by relabeling the points).
GStructureCount count_g_structures(const PermGroup& image, const PermGroup& g);

/// Homomorphism given by images of the generators of its domain.
class Homomorphism {
public:
    Homomorphism(PermGroup domain, std::vector<Perm> generator_images);
    const PermGroup& domain() const { return domain_; }
    int codomain_degree() const { return codomain_degree_; }
    Perm apply(const Perm& x) const;
    Homomorphism compose_after(const Homomorphism& first) const;  // this o first

    static Homomorphism sign(int n);
    /// S4 -> S3 via the action on the three pair partitions of {0,1,2,3}.
    static Homomorphism s4_to_s3();
    static Homomorphism identity(const PermGroup& g);

private:
    PermGroup domain_;
    std::vector<Perm> gen_images_;
    int codomain_degree_ = 0;
    std::vector<Perm> table_;  // image of domain_.elements()[i]
};

PermGroup resolvent_image(const PermGroup& image, const Homomorphism& rho);

struct StablePartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_sizes;  // ascending
    bool in_wreath = false;        // verified when all blocks share one size
};
std::vector<StablePartition> stable_partitions(const PermGroup& h);
/// Every set partition of {0..n-1}, blocks sorted.
std::vector<std::vector<std::vector<int>>> all_set_partitions(int n);

struct TorsorStructure {
    PermGroup left_conjugate;   // conjugate of the Cayley-left image commuting with the image
    PermGroup right_conjugate;  // its centralizer: a conjugate of the Cayley-right image
    int identifications = 0;
};
/// Torsor structures on a degree-|G| algebra with the given Galois image.
std::vector<TorsorStructure> torsor_structures(const PermGroup& image, const PermGroup& g);

}  // namespace galcoh
