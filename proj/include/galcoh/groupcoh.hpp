#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galcoh/permstruct.hpp"

namespace galcoh {

/// Finite group G acting on a finite abelian group M by automorphisms.
class FiniteGModule {
public:
    /// generator_actions[i] is the automorphism (as a permutation of the
    /// module's element indices) by which group.generators()[i] acts.
    FiniteGModule(PermGroup group, FiniteAbelian module, std::vector<Perm> generator_actions);
    static FiniteGModule trivial(const PermGroup& group, const FiniteAbelian& module);

    const PermGroup& group() const { return group_; }
    const GroupTable& table() const { return table_; }
    const FiniteAbelian& module() const { return module_; }
    const std::vector<Perm>& generator_actions() const { return gen_actions_; }
    int group_order() const { return table_.size(); }

    /// Action of the group element with table index g.
    const Perm& action(int g) const { return actions_[static_cast<std::size_t>(g)]; }
    int act(int g, int x) const { return actions_[static_cast<std::size_t>(g)](x); }

    /// The same module viewed over a subgroup.
    FiniteGModule restrict_to(const PermGroup& h) const;
    std::vector<int> fixed_points() const;

private:
    PermGroup group_;
    GroupTable table_;
    FiniteAbelian module_;
    std::vector<Perm> gen_actions_;
    std::vector<Perm> actions_;
};

/// Named setups: "C2:C2:triv", "S3:C3:sign", "S3:C2xC2:perm", "C2:C4:inv",
/// "C3:C3:triv", "1:C2:triv". S3 permutes the three nonzero elements of C2xC2.
FiniteGModule named_module(std::string_view name);
std::vector<std::string> named_module_list();

/// n-cochain: values indexed by tuples (g1..gn) of group-table indices,
/// flattened with g1 most significant. Values are module element indices.
struct Cochain {
    int arity = 0;
    std::vector<int> values;

    static Cochain zero(const FiniteGModule& gm, int arity);
    int at(const FiniteGModule& gm, const std::vector<int>& tuple) const;
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity == b.arity && a.values == b.values;
    }
};

Cochain coboundary(const FiniteGModule& gm, const Cochain& c);
bool is_cocycle(const FiniteGModule& gm, const Cochain& c);
Cochain add(const FiniteGModule& gm, const Cochain& a, const Cochain& b);
Cochain scale(const FiniteGModule& gm, const Cochain& a, int k);

/// Row-reduced submodule of (Z/m)^cols in Howell form. Canonical reduction
/// modulo the submodule gives unique coset representatives.
class ZmModule {
public:
    ZmModule(int m, int cols, std::vector<std::vector<int>> generators);
    int modulus() const { return m_; }
    int cols() const { return cols_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Number of elements; throws Unsupported past 64 bits.
    unsigned long long size() const;
    std::vector<int> reduce(std::vector<int> v) const;
    bool contains(const std::vector<int>& v) const;
    /// Rows whose first `prefix` entries vanish, with that prefix dropped.
    std::vector<std::vector<int>> rows_after(int prefix) const;

private:
    int m_, cols_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

/// H^n(G, M) with representatives; classes are identified by canonical
/// reduction modulo B^n.
class CoclassSet {
public:
    CoclassSet(const FiniteGModule& gm, int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return reps_.size(); }
    const std::vector<Cochain>& representatives() const { return reps_; }
    unsigned long long cocycle_count() const { return z_size_; }
    unsigned long long coboundary_count() const { return b_size_; }
    /// Index of the class of a cocycle; throws InvalidInput for non-cocycles.
    int class_of(const Cochain& z) const;

private:
    std::vector<int> coords(const Cochain& c) const;
    Cochain from_coords(const std::vector<int>& x) const;

    FiniteGModule gm_;
    int degree_;
    int m_;
    std::optional<ZmModule> b_;
    std::vector<Cochain> reps_;
    std::map<std::vector<int>, int> index_;
    unsigned long long z_size_ = 0, b_size_ = 0;
};

/// Dense-size guard: |G|^(n+1) * rank(M) entries per coboundary row.
CoclassSet cohomology(const FiniteGModule& gm, int degree);

/// psi(g) = lambda_{phi(g), z(g)} in Hol M, as permutations of M's elements.
struct HolHom {
    std::vector<Perm> generator_images;  // images of gm.group().generators()
    std::vector<Perm> table;             // image of every group-table element
};
HolHom crossed_to_hol(const FiniteGModule& gm, const Cochain& z);
/// z(g) = psi(g)(0).
Cochain hol_to_crossed(const FiniteGModule& gm, const HolHom& psi);

struct HolH1 {
    std::vector<HolHom> class_reps;   // one per M-conjugacy class
    std::vector<int> class_sizes;     // homomorphisms in each class
    std::vector<int> to_cohomology;   // class i -> index in cohomology(gm, 1)
    int homomorphism_count = 0;
    bool bijective = false;
};
/// All homomorphisms psi: G -> Hol M lifting the action, grouped by
/// conjugation with translations, matched against H^1.
HolH1 h1_via_hol(const FiniteGModule& gm);

/// Lexicographically minimal representatives of the left cosets gH.
std::vector<int> left_coset_reps(const FiniteGModule& gm, const PermGroup& h);

/// Restriction to a subgroup (degree 0 or 1); the result is a cochain of gm.restrict_to(h).
Cochain restriction(const FiniteGModule& gm, const PermGroup& h, const Cochain& c);
/// Corestriction from h to G in degree 0 (norm) or 1 (coset transfer).
Cochain corestriction(const FiniteGModule& gm, const PermGroup& h, const Cochain& c);

/// Additive map X -> Y given on element indices.
using ModuleMap = std::vector<int>;

struct Lemma53Result {
    bool holds = true;
    std::optional<int> violating_class;
    std::size_t classes_checked = 0;
};
/// Checks Cor(f_* Res sigma) = f~_* sigma on all of H^n(G, X), with
/// f~(x) = sum over gH of g f(g^-1 x). Throws if f is not additive and H-linear.
Lemma53Result lemma53_check(const FiniteGModule& x, const FiniteGModule& y, const PermGroup& h,
                            const ModuleMap& f, int degree);
ModuleMap induced_map(const FiniteGModule& x, const FiniteGModule& y, const PermGroup& h,
                      const ModuleMap& f);
/// Pushforward of a cochain along an additive map.
Cochain push_forward(const ModuleMap& f, const Cochain& c);
bool is_additive(const FiniteAbelian& x, const FiniteAbelian& y, const ModuleMap& f);

/// (z1 u z2)(g, h) = pairing(z1(g), g . z2(h)); pairing[x][y] is an element of W.
Cochain cup11(const FiniteGModule& x, const FiniteGModule& y, const FiniteGModule& w,
              const Cochain& z1, const Cochain& z2, const std::vector<std::vector<int>>& pairing);

}  // namespace galcoh
