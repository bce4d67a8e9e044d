#include "galcoh/cli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/etalealg.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/groupcoh.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/localsym.hpp"
#include "galcoh/numeric.hpp"
#include "galcoh/permstruct.hpp"

namespace galcoh::cli {

using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the flags of one leaf command. CLI11 wants the arguments reversed.
void parse_flags(CLI::App& app, const std::vector<std::string>& rest) {
    std::vector<std::string> rev(rest.rbegin(), rest.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- text formats

RationalPoly poly_arg(const std::string& text) {
    RationalPoly f = RationalPoly::parse(text);
    if (f.degree() < 1) throw InvalidInput("polynomial must have degree >= 1");
    return f;
}

EtaleAlgebra algebra_arg(const std::string& f, const std::string& l) {
    if (!f.empty() && !l.empty()) throw InvalidInput("give --f or --L, not both");
    if (!l.empty()) return EtaleAlgebra::parse(l);
    if (f.empty()) throw InvalidInput("an algebra is required (--f or --L)");
    return EtaleAlgebra::from_poly(poly_arg(f));
}

BigInt squarefree_arg(const std::string& text) {
    BigRational q = parse_rational(text);
    if (q.get_den() != 1 || q == 0) throw InvalidInput("D must be a nonzero integer");
    BigInt d = q.get_num();
    if (squarefree_part(d) != d) throw InvalidInput("D must be squarefree");
    return d;
}

long prime_arg(const std::string& text) {
    BigRational q = parse_rational(text);
    if (q.get_den() != 1 || q <= 1 || q > 1000003 || !is_prime(q.get_num()))
        throw InvalidInput("p must be a prime below 10^6");
    return q.get_num().get_si();
}

Place place_arg(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "real") return Place::real();
    return Place::prime(prime_arg(text));
}

std::vector<RationalPoly> poly_list(const std::string& text) {
    std::vector<RationalPoly> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = text.find('|', start);
        out.push_back(RationalPoly::parse(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InvalidInput("expected comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

std::vector<std::string> poly_strings(const std::vector<RationalPoly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

std::string q(const BigRational& x) { return to_string(x); }
std::string z(const BigInt& x) { return to_string(x); }

PermGroup group_arg(const std::string& gens, int n) {
    if (n < 1 || n > 8) throw Unsupported("permutation degree must be between 1 and 8");
    if (gens.empty() || gens == "1" || gens == "()") return PermGroup::trivial(n);
    return PermGroup::parse(gens, n);
}

/// C2, C3, C4, V4, S3 or a generator list on `n` points.
PermGroup abstract_group_arg(const std::string& text, int n) {
    if (text == "C2") return PermGroup::cyclic(2);
    if (text == "C3") return PermGroup::cyclic(3);
    if (text == "C4") return PermGroup::cyclic(4);
    if (text == "V4") return PermGroup(4, {Perm::parse("(0 1)(2 3)", 4), Perm::parse("(0 2)(1 3)", 4)});
    if (text == "S3") return PermGroup::symmetric(3);
    return group_arg(text, n);
}

json algebra_json(const EtaleAlgebra& l) {
    json j;
    j["factors"] = poly_strings(l.factors());
    j["degree"] = l.degree();
    j["factor_degrees"] = l.factor_degrees();
    return j;
}

json resolvents_json(const EtaleAlgebra& l) {
    json r;
    if (l.degree() >= 2) r["quadratic"] = z(quadratic_resolvent(l));
    if (l.degree() == 4) r["cubic"] = poly_strings(cubic_resolvent(l).factors());
    return r;
}

json etale_json(const EtaleAlgebra& l) {
    json j = algebra_json(l);
    if (l.degree() >= 2) j["disc_class"] = z(quadratic_resolvent(l));
    if (l.degree() <= 4) j["galois_tag"] = galois_group(l);
    j["h0"] = h0_count(l);
    if (l.degree() == 4 && l.factors().size() == 1) {
        json q = json::array();
        for (const auto& k : quadratic_subfields(l.factors()[0])) q.push_back(z(k));
        j["quadratic_subfields"] = q;
    }
    j["resolvents"] = resolvents_json(l);
    return j;
}

// ---------------------------------------------------------------- poly

json cmd_poly(const std::string& action, const std::vector<std::string>& rest, int bits) {
    CLI::App app{"poly " + action};
    std::string f, g;
    app.add_option("--f", f)->required();
    if (action == "resultant") app.add_option("--g", g)->required();
    parse_flags(app, rest);
    RationalPoly pf = poly_arg(f);
    json out;
    if (action == "factor") {
        json fs = json::array();
        for (const auto& [h, m] : factor_rationals(pf)) fs.push_back({{"factor", h.to_string()}, {"multiplicity", m}});
        out["leading"] = q(pf.leading());
        out["factors"] = fs;
        out["irreducible"] = is_irreducible(pf);
    } else if (action == "disc") {
        BigRational d = discriminant(pf);
        out["value"] = q(d);
        if (d != 0) out["square_class"] = z(squarefree_part(d));
    } else if (action == "resultant") {
        out["value"] = q(resultant(pf, poly_arg(g)));
    } else if (action == "roots") {
        json rs = json::array();
        for (const auto& b : numeric_roots(pf, bits))
            rs.push_back({{"re", b.mid.re.to_string(30)}, {"im", b.mid.im.to_string(30)}, {"radius", b.rad.to_string(3)}});
        out["roots"] = rs;
        out["precision_bits"] = bits;
    } else {
        throw UsageError("unknown poly action '" + action + "'");
    }
    return out;
}

// ---------------------------------------------------------------- etale

json cmd_etale(const std::string& action, const std::vector<std::string>& rest) {
    CLI::App app{"etale " + action};
    std::string f, l, g;
    app.add_option("--f", f);
    app.add_option("--L", l);
    if (action == "torsor") app.add_option("--G", g)->required();
    parse_flags(app, rest);
    EtaleAlgebra alg = algebra_arg(f, l);
    if (action == "info") return etale_json(alg);
    if (action == "mirror") {
        EtaleAlgebra m = mirror_quartic(alg);
        json out = etale_json(m);
        out["input"] = etale_json(alg);
        out["isomorphic_to_input"] = is_isomorphic(m, alg);
        out["mirror_of_mirror_isomorphic"] = is_isomorphic(mirror_quartic(m), alg);
        return out;
    }
    if (action == "closure") {
        EtaleAlgebra c = torsor_closure(alg);
        json out = algebra_json(c);
        json tags = json::array();
        for (const auto& h : c.factors()) tags.push_back(h.degree() <= 4 ? galois_tag(h) : (is_galois_field(h) ? "regular" : "non-galois"));
        out["factor_tags"] = tags;
        return out;
    }
    if (action == "torsor") {
        PermGroup grp = abstract_group_arg(g, alg.degree());
        json out;
        out["torsor"] = is_g_torsor(alg, grp);
        out["group_order"] = grp.order();
        return out;
    }
    throw UsageError("unknown etale action '" + action + "'");
}

// ---------------------------------------------------------------- group

json cmd_group(const std::string& action, const std::vector<std::string>& rest) {
    CLI::App app{"group " + action};
    std::string m, image, g, h;
    int n = 0;
    if (action == "hol") app.add_option("--M", m, "cyclic orders, e.g. 2,2")->required();
    if (action == "structures") {
        app.add_option("--image", image);
        app.add_option("--G", g)->required();
        app.add_option("--n", n)->required();
    }
    if (action == "centralizer" || action == "partitions") {
        app.add_option("--H", h);
        app.add_option("--n", n)->required();
    }
    parse_flags(app, rest);
    json out;
    if (action == "hol") {
        FiniteAbelian mod(int_list(m));
        if (mod.size() > 8) throw Unsupported("|M| > 8");
        auto hol = holomorph(mod);
        long fact = 1;
        for (int i = 2; i <= mod.size(); ++i) fact *= i;
        out["module"] = mod.to_string();
        out["order"] = hol.group.order();
        out["aut_order"] = hol.group.order() / static_cast<std::size_t>(mod.size());
        out["equals_sym"] = static_cast<long>(hol.group.order()) == fact;
        out["generators"] = hol.group.to_string();
        return out;
    }
    if (action == "structures") {
        PermGroup grp = group_arg(g, n), img = group_arg(image, n);
        auto c = count_g_structures(img, grp);
        json ws = json::array();
        for (const auto& w : c.witnesses)
            ws.push_back({{"conjugate", w.conjugate.to_string()}, {"pi", w.pi.to_string()}, {"identifications", w.identifications}});
        out["count"] = c.count;
        out["witnesses"] = ws;
        return out;
    }
    if (action == "centralizer") {
        auto c = centralizer_in_sym(group_arg(h, n));
        out["order"] = c.order();
        out["generators"] = c.to_string();
        return out;
    }
    if (action == "partitions") {
        json ps = json::array();
        for (const auto& sp : stable_partitions(group_arg(h, n)))
            ps.push_back({{"blocks", sp.blocks}, {"block_sizes", sp.block_sizes}, {"in_wreath", sp.in_wreath}});
        out["partitions"] = ps;
        out["count"] = ps.size();
        return out;
    }
    throw UsageError("unknown group action '" + action + "'");
}

// ---------------------------------------------------------------- coh

/// A named setup, or "trivial:<orders>" over the group of `like`.
FiniteGModule module_arg(const std::string& text, const FiniteGModule* like) {
    if (text.rfind("trivial:", 0) == 0) {
        if (!like) throw InvalidInput("trivial modules need a group; give --X first");
        return FiniteGModule::trivial(like->group(), FiniteAbelian(int_list(text.substr(8))));
    }
    return named_module(text);
}

json cochain_json(const Cochain& c) { return json{{"arity", c.arity}, {"values", c.values}}; }

json cmd_coh(const std::string& action, const std::vector<std::string>& rest) {
    CLI::App app{"coh " + action};
    std::string module, x, y, h, f, instance;
    int degree = 1;
    if (action == "h" || action == "hol-h1") app.add_option("--module", module)->required();
    if (action == "h") app.add_option("--n", degree);
    if (action == "lemma53") {
        app.add_option("--instance", instance, "chi");
        app.add_option("--X", x);
        app.add_option("--Y", y);
        app.add_option("--H", h);
        app.add_option("--f", f, "images of the module elements");
        app.add_option("--n", degree);
    }
    parse_flags(app, rest);
    json out;
    if (action == "h") {
        if (degree < 0 || degree > 2) throw InvalidInput("degree must be 0, 1 or 2");
        auto gm = named_module(module);
        auto coh = cohomology(gm, degree);
        json reps = json::array();
        for (const auto& r : coh.representatives()) reps.push_back(cochain_json(r));
        out["size"] = coh.size();
        out["cocycles"] = coh.cocycle_count();
        out["coboundaries"] = coh.coboundary_count();
        out["representatives"] = reps;
        return out;
    }
    if (action == "hol-h1") {
        auto gm = named_module(module);
        auto hol = h1_via_hol(gm);
        out["classes"] = hol.class_reps.size();
        out["class_sizes"] = hol.class_sizes;
        out["homomorphisms"] = hol.homomorphism_count;
        out["to_cohomology"] = hol.to_cohomology;
        out["h1_size"] = cohomology(gm, 1).size();
        out["bijective"] = hol.bijective;
        return out;
    }
    if (action == "lemma53") {
        if (instance == "chi") {
            x = x.empty() ? "S3:C2xC2:perm" : x;
            y = y.empty() ? "trivial:2" : y;
            h = h.empty() ? "(1 2)" : h;
            f = f.empty() ? "0,0,1,1" : f;
        } else if (!instance.empty()) {
            throw InvalidInput("unknown instance '" + instance + "'");
        }
        if (x.empty() || y.empty() || f.empty()) throw InvalidInput("lemma53 needs --X, --Y and --f (or --instance chi)");
        if (degree < 0 || degree > 1) throw InvalidInput("degree must be 0 or 1");
        auto gx = module_arg(x, nullptr);
        auto gy = module_arg(y, &gx);
        PermGroup sub = group_arg(h, gx.group().degree());
        ModuleMap map(int_list(f));
        auto r = lemma53_check(gx, gy, sub, map, degree);
        out["holds"] = r.holds;
        out["classes_checked"] = r.classes_checked;
        out["induced_map"] = induced_map(gx, gy, sub, map);
        if (r.violating_class) out["violating_class"] = *r.violating_class;
        return out;
    }
    throw UsageError("unknown coh action '" + action + "'");
}

// ---------------------------------------------------------------- h1

json c3_datum_json(const CoclassC3& c) { return json{{"D", z(c.D)}, {"delta", c.delta.to_string()}}; }
json v4_datum_json(const CoclassV4& c) {
    // R in the given order, which is the order of the delta coordinates.
    std::string r;
    for (const auto& f : c.R) r += (r.empty() ? "" : "|") + f.to_string();
    return json{{"R", r}, {"delta", poly_strings(c.delta)}};
}
json c4_datum_json(const CoclassC4& c) {
    return json{{"D", z(c.D)}, {"a", q(c.alpha.x)}, {"b", q(c.alpha.y)}, {"c", q(c.c)}};
}

json h1_result(json datum, const EtaleAlgebra& l, json resolvents, std::vector<std::string> flags) {
    return json{{"datum", std::move(datum)},
                {"algebra_factors", poly_strings(l.factors())},
                {"resolvents", std::move(resolvents)},
                {"flags", std::move(flags)}};
}

CoclassV4 v4_arg(const std::string& r, const std::string& delta) {
    CoclassV4 cc{r.empty() ? split_cubic_r() : poly_list(r), poly_list(delta)};
    if (cc.delta.size() == 1 && cc.R.size() == 3 && cc.delta[0].is_constant())
        throw InvalidInput("give one delta coordinate per factor of R, separated by '|'");
    cc.validate();
    return cc;
}

json cmd_h1(const std::string& module, const std::string& action, const std::vector<std::string>& rest) {
    CLI::App app{"h1 " + module + " " + action};
    std::string d, r, f, l;
    std::vector<std::string> delta, a, b, c;
    const bool needs_datum = action == "encode" || action == "add";
    app.add_option("--D", d);
    app.add_option("--delta", delta)->take_all();
    app.add_option("--R", r);
    app.add_option("--a", a)->take_all();
    app.add_option("--b", b)->take_all();
    app.add_option("--c", c)->take_all();
    app.add_option("--f", f);
    app.add_option("--L", l);
    parse_flags(app, rest);
    const std::size_t want = action == "add" ? 2 : 1;
    auto count_ok = [&](const std::vector<std::string>& v, const char* name) {
        if (v.size() != want)
            throw InvalidInput(std::string("expected ") + std::to_string(want) + " value(s) for --" + name);
    };
    if (action != "encode" && action != "decode" && action != "add")
        throw UsageError("unknown h1 action '" + action + "'");

    if (module == "c3") {
        if (needs_datum) {
            count_ok(delta, "delta");
            const BigInt dd = squarefree_arg(d);
            CoclassC3 cc{dd, QuadElem::parse(tate_dual_twist(dd), delta[0])};
            cc.validate();
            if (action == "add") {
                CoclassC3 c2{dd, QuadElem::parse(tate_dual_twist(dd), delta[1])};
                c2.validate();
                cc = c3_add(cc, c2);
            }
            auto alg = c3_encode(cc);
            return h1_result(c3_datum_json(cc), alg, json{{"quadratic", z(quadratic_resolvent(alg))}}, {});
        }
        auto alg = algebra_arg(f, l);
        auto dec = c3_decode(alg);
        std::vector<std::string> flags;
        if (dec.sign_ambiguous) flags.push_back("sign_ambiguous");
        return h1_result(c3_datum_json(dec.datum), alg, json{{"quadratic", z(quadratic_resolvent(alg))}}, flags);
    }
    if (module == "v4") {
        auto res = [](const EtaleAlgebra& alg) {
            return json{{"cubic", poly_strings(cubic_resolvent(alg).factors())}};
        };
        if (needs_datum) {
            count_ok(delta, "delta");
            CoclassV4 cc = v4_arg(r, delta[0]);
            if (action == "add") cc = v4_add(cc, v4_arg(r, delta[1]));
            auto alg = v4_encode(cc);
            return h1_result(v4_datum_json(cc), alg, res(alg), {"aut_orbit"});
        }
        auto alg = algebra_arg(f, l);
        auto dec = v4_decode(alg);
        return h1_result(v4_datum_json(dec), alg, res(alg), {"aut_orbit"});
    }
    if (module == "c4") {
        auto res = [](const EtaleAlgebra& alg) {
            return json{{"quadratic", z(quadratic_resolvent(alg))}, {"cubic", poly_strings(cubic_resolvent(alg).factors())}};
        };
        if (needs_datum) {
            count_ok(a, "a");
            count_ok(b, "b");
            count_ok(c, "c");
            const BigInt dd = squarefree_arg(d);
            auto make = [&](std::size_t i) {
                return CoclassC4::make(dd, parse_rational(a[i]), parse_rational(b[i]), parse_rational(c[i]));
            };
            CoclassC4 cc = make(0);
            if (action == "add") cc = c4_add(cc, make(1));
            auto alg = c4_encode(cc);
            return h1_result(c4_datum_json(cc), alg, res(alg), {"sign_ambiguous"});
        }
        auto alg = algebra_arg(f, l);
        std::optional<BigInt> hint;
        if (!d.empty()) hint = squarefree_arg(d);
        auto dec = c4_decode(alg, hint);
        std::vector<std::string> flags;
        if (dec.sign_ambiguous) flags.push_back("sign_ambiguous");
        return h1_result(c4_datum_json(dec.datum), alg, res(alg), flags);
    }
    throw UsageError("unknown h1 module '" + module + "'");
}

// ---------------------------------------------------------------- local

std::string class_label(const LocalClass& c) { return c.to_string(); }

json pairing_matrix(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                    const std::function<SymbolValue(std::size_t, std::size_t)>& pair, bool bilinear) {
    json m = json::array();
    std::vector<std::vector<int>> k(rows.size(), std::vector<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < cols.size(); ++j) {
            SymbolValue v = pair(i, j);
            k[i][j] = v.k;
            row.push_back(v.to_string());
        }
        m.push_back(row);
    }
    // Exactly one row (the trivial class) and one column may be identically 1.
    int zero_rows = 0, zero_cols = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        zero_rows += std::all_of(k[i].begin(), k[i].end(), [](int v) { return v == 0; }) ? 1 : 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        bool all = true;
        for (std::size_t i = 0; i < rows.size(); ++i) all = all && k[i][j] == 0;
        zero_cols += all ? 1 : 0;
    }
    const bool rows_ok = zero_rows == 1, cols_ok = zero_cols == 1;
    return json{{"matrix", m},
                {"rows", rows},
                {"cols", cols},
                {"nondegenerate", rows_ok && cols_ok},
                {"bilinear", bilinear}};
}

json cmd_local(const std::string& action, const std::vector<std::string>& rest) {
    CLI::App app{"local " + action};
    std::string p, a, b, module, d, r, sigma, tau, delta;
    int m = 2;
    app.add_option("--p", p)->required();
    if (action == "hilbert") {
        app.add_option("--a", a)->required();
        app.add_option("--b", b)->required();
        app.add_option("--m", m);
    }
    if (action == "classes") app.add_option("--m", m);
    if (action == "tate" || action == "h1" || action == "localize") {
        app.add_option("--module", module)->required();
        app.add_option("--D", d);
        app.add_option("--R", r);
    }
    if (action == "tate") {
        app.add_option("--sigma", sigma);
        app.add_option("--tau", tau);
    }
    if (action == "localize") {
        app.add_option("--a", a);
        app.add_option("--delta", delta);
    }
    parse_flags(app, rest);
    json out;
    if (action == "hilbert") {
        const BigRational qa = parse_rational(a), qb = parse_rational(b);
        if (qa == 0 || qb == 0) throw InvalidInput("a and b must be nonzero");
        if (m == 2) {
            out["value"] = hilbert2(qa, qb, place_arg(p)).to_string();
        } else if (m == 3) {
            out["value"] = hilbert3(qa, qb, prime_arg(p)).to_string();
        } else {
            throw InvalidInput("m must be 2 or 3");
        }
        return out;
    }
    if (action == "classes") {
        std::vector<LocalClass> cls;
        if (m == 2) cls = square_classes(place_arg(p));
        else if (m == 3) cls = cube_classes(prime_arg(p));
        else throw InvalidInput("m must be 2 or 3");
        json list = json::array();
        for (const auto& c : cls) list.push_back({{"label", class_label(c)}, {"representative", q(representative(c))}});
        out["classes"] = list;
        out["count"] = cls.size();
        return out;
    }
    if (action == "h1") {
        json list = json::array();
        if (module == "c2") {
            for (const auto& x : h1_c2_local(place_arg(p))) list.push_back(q(x));
        } else if (module == "mu3") {
            for (const auto& x : h1_mu3_local(prime_arg(p))) list.push_back(q(x));
        } else if (module == "c3") {
            const long pp = prime_arg(p);
            const BigInt dd = squarefree_arg(d.empty() ? "1" : d);
            for (const auto& x : h1_c3_local(pp, dd))
                list.push_back({{"delta", x.to_string()}, {"label", c3_local_label(pp, dd, x)}});
        } else if (module == "v4") {
            if (!r.empty()) throw Unsupported("local H1 for V4 is enumerated for split R only");
            const long pp = prime_arg(p);
            for (const auto& x : h1_v4_split_local(pp)) list.push_back({{"delta", poly_strings(x.delta)}, {"label", v4_local_label(pp, x)}});
        } else {
            throw InvalidInput("module must be c2, mu3, c3 or v4");
        }
        out["size"] = list.size();
        out["classes"] = list;
        return out;
    }
    if (action == "tate") {
        const long pp = prime_arg(p);
        if (module == "c3") {
            const BigInt dd = squarefree_arg(d.empty() ? "1" : d);
            const BigInt dual = tate_dual_twist(dd);
            if (!sigma.empty() || !tau.empty()) {
                if (sigma.empty() || tau.empty()) throw InvalidInput("give both --sigma and --tau");
                QuadElem s = QuadElem::parse(dual, sigma), t = QuadElem::parse(dd, tau);
                if (s.norm() != 1 || t.norm() != 1) throw InvalidInput("sigma and tau must have norm 1");
                out["value"] = tate_pair_c3(pp, dd, s, t).to_string();
                return out;
            }
            auto left = h1_c3_local(pp, dd), right = h1_c3_local(pp, dual);
            std::vector<std::string> rl, cl;
            for (const auto& s : left) rl.push_back(s.to_string());
            for (const auto& t : right) cl.push_back(t.to_string());
            bool bil = true;
            for (const auto& s1 : left)
                for (const auto& s2 : left)
                    for (const auto& t : right)
                        bil = bil && tate_pair_c3(pp, dd, s1 * s2, t) ==
                                         tate_pair_c3(pp, dd, s1, t) * tate_pair_c3(pp, dd, s2, t);
            return pairing_matrix(rl, cl, [&](std::size_t i, std::size_t j) { return tate_pair_c3(pp, dd, left[i], right[j]); }, bil);
        }
        if (module == "v4") {
            if (!sigma.empty() || !tau.empty()) {
                if (sigma.empty() || tau.empty()) throw InvalidInput("give both --sigma and --tau");
                out["value"] = tate_pair_v4(pp, v4_arg(r, sigma), v4_arg(r, tau)).to_string();
                return out;
            }
            if (!r.empty()) throw Unsupported("pairing matrices are enumerated for split R only");
            auto h = h1_v4_split_local(pp);
            std::vector<std::string> labels;
            for (const auto& x : h) labels.push_back(v4_local_label(pp, x));
            bool bil = true;
            for (const auto& s1 : h)
                for (const auto& s2 : h)
                    for (const auto& t : h)
                        bil = bil && tate_pair_v4(pp, v4_add(s1, s2), t) == tate_pair_v4(pp, s1, t) * tate_pair_v4(pp, s2, t);
            return pairing_matrix(labels, labels, [&](std::size_t i, std::size_t j) { return tate_pair_v4(pp, h[i], h[j]); }, bil);
        }
        throw InvalidInput("module must be c3 or v4");
    }
    if (action == "localize") {
        if (module == "c2") {
            out["value"] = localize_c2(parse_rational(a), place_arg(p));
        } else if (module == "c3") {
            const BigInt dd = squarefree_arg(d);
            CoclassC3 cc{dd, QuadElem::parse(tate_dual_twist(dd), delta)};
            cc.validate();
            out["value"] = localize_c3(cc, prime_arg(p));
        } else if (module == "v4") {
            out["value"] = localize_v4(v4_arg(r, delta), prime_arg(p));
        } else {
            throw InvalidInput("module must be c2, c3 or v4");
        }
        return out;
    }
    throw UsageError("unknown local action '" + action + "'");
}

json cmd_corpus(const std::string& action, const std::vector<std::string>& rest, int bits) {
    if (action != "run") throw UsageError("unknown corpus action '" + action + "'");
    CLI::App app{"corpus run"};
    std::string suite;
    app.add_option("--suite", suite)->required();
    parse_flags(app, rest);
    return run_corpus(suite, bits);
}

}  // namespace

std::string usage() {
    return "usage: galcoh [--precision-bits N] [--json] <command> ...\n"
           "  poly factor|disc|roots --f COEFFS | poly resultant --f F --g G\n"
           "  etale info|mirror|closure (--f COEFFS | --L F1|F2) | etale torsor --f F --G C2|C3|C4|V4|S3\n"
           "  group hol --M 2,2 | group structures --image GENS --G GENS --n N\n"
           "  group centralizer|partitions --H GENS --n N\n"
           "  coh h --module NAME [--n 1] | coh hol-h1 --module NAME\n"
           "  coh lemma53 (--instance chi | --X NAME --Y NAME|trivial:ORDERS --H GENS --f MAP) [--n 1]\n"
           "  h1 c3|v4|c4 encode|decode|add  [--D D] [--delta X,Y | --delta P1|P2|P3] [--R F1|F2|F3]\n"
           "                                [--a A --b B --c C] [--f COEFFS | --L F1|F2]\n"
           "  local hilbert --p P|inf --a A --b B [--m 2|3] | local classes --p P [--m 2|3]\n"
           "  local tate --module c3|v4 --p P [--D D] [--R R] [--sigma S --tau T]\n"
           "  local h1 --module c2|mu3|c3|v4 --p P [--D D]\n"
           "  local localize --module c2|c3|v4 --p P [--a A | --D D --delta X,Y | --R R --delta P1|P2|P3]\n"
           "  corpus run --suite NAME\n"
           "modules for coh: 1:C2:triv C2:C2:triv C2:C4:inv C3:C3:triv S3:C3:sign S3:C2xC2:perm\n";
}

CommandResult run(const std::vector<std::string>& args_in) {
    CommandResult res;
    std::vector<std::string> args;
    int bits = 128;
    try {
        for (std::size_t i = 0; i < args_in.size(); ++i) {
            const std::string& a = args_in[i];
            if (a == "--json") continue;
            if (a == "--precision-bits" || a.rfind("--precision-bits=", 0) == 0) {
                std::string v = a.size() > 16 ? a.substr(17) : (i + 1 < args_in.size() ? args_in[++i] : "");
                auto n = int_list(v);
                if (n.size() != 1 || n[0] < 32 || n[0] > 8192) throw InvalidInput("--precision-bits must be in [32, 8192]");
                bits = n[0];
                continue;
            }
            args.push_back(a);
        }
        auto word = [&](std::size_t i) -> std::string {
            if (i >= args.size() || args[i].rfind("--", 0) == 0) throw UsageError("missing subcommand");
            return args[i];
        };
        const std::string top = word(0);
        if (top == "help" || top == "--help") {
            res.command = "help";
            res.payload["usage"] = usage();
            return res;
        }
        const std::string action = word(1);
        res.command = top + " " + action;
        auto tail = [&](std::size_t from) { return std::vector<std::string>(args.begin() + static_cast<long>(from), args.end()); };
        if (top == "poly") res.payload = cmd_poly(action, tail(2), bits);
        else if (top == "etale") res.payload = cmd_etale(action, tail(2));
        else if (top == "group") res.payload = cmd_group(action, tail(2));
        else if (top == "coh") res.payload = cmd_coh(action, tail(2));
        else if (top == "h1") {
            const std::string op = word(2);
            res.command += " " + op;
            res.payload = cmd_h1(action, op, tail(3));
        } else if (top == "local") res.payload = cmd_local(action, tail(2));
        else if (top == "corpus") res.payload = cmd_corpus(action, tail(2), bits);
        else throw UsageError("unknown subcommand '" + top + "'");
    } catch (const UsageError& e) {
        res.ok = false;
        res.exit_code = kUsage;
        res.payload = json{{"code", "usage"}, {"message", e.what()}};
        res.diagnostics.push_back(usage());
    } catch (const InvalidInput& e) {
        res.ok = false;
        res.exit_code = kInvalid;
        res.payload = json{{"code", "invalid_input"}, {"message", e.what()}};
    } catch (const Unsupported& e) {
        res.ok = false;
        res.exit_code = kUnsupported;
        res.payload = json{{"code", "unsupported"}, {"message", e.what()}};
    } catch (const std::exception& e) {
        res.ok = false;
        res.exit_code = kInternal;
        res.payload = json{{"code", "internal"}, {"message", e.what()}};
    }
    return res;
}

std::string render(const CommandResult& r) {
    json j{{"schema", 1},
           {"status", r.ok ? "ok" : "error"},
           {"command", r.command},
           {"payload", r.payload},
           {"diagnostics", r.diagnostics}};
    return j.dump(2) + "\n";
}

}  // namespace galcoh::cli
