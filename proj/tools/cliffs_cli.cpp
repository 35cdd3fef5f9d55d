#include <CLI11.hpp>

#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <vector>

#include "cliffs/cliffalgebra.hpp"
#include "cliffs/cubicgeom.hpp"
#include "cliffs/error.hpp"
#include "cliffs/fusscatalan.hpp"
#include "cliffs/lattice.hpp"
#include "cliffs/reftable.hpp"
#include "cliffs/subposet.hpp"

using namespace cliffs;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Options {
    std::string delta = "affine:1";
    std::string family = "cl";
    std::size_t n = 3;
    std::string format = "text";
    std::vector<std::string> words;
    std::string flag, kind = "input", basis = "F", algebra = "cl";
    std::size_t degree = 5;
    bool enumerate_chains = false;
    std::string cap = "100000";
};

std::string txt(const Cliff& u) { return u.empty() ? std::string("-") : to_text(u); }

json base_json(const Options& o) {
    return json{{"schema", 1}, {"delta", format(parse_range_map(o.delta))}};
}

GradedFamily family_of(const Options& o) {
    RangeMap d = parse_range_map(o.delta);
    if (o.family == "cl") return cliff_family(d);
    return family_by_name(o.family, d);
}

void print_words(const Options& o, const std::vector<Cliff>& ws, const std::string& key) {
    if (o.format == "json") {
        json j = base_json(o);
        j["family"] = o.family;
        j["n"] = o.n;
        j[key] = json::array();
        for (const Cliff& u : ws) j[key].push_back(u.empty() ? "" : to_text(u));
        std::cout << j.dump() << "\n";
    } else {
        for (const Cliff& u : ws) std::cout << txt(u) << "\n";
    }
}

Cliff word_arg(const Options& o, std::size_t i) {
    if (i >= o.words.size()) throw CLI::ValidationError("missing cliff argument");
    return parse_cliff(o.words[i]);
}

WingKind parse_kind(const std::string& k) {
    if (k == "input") return WingKind::Input;
    if (k == "output") return WingKind::Output;
    if (k == "butterfly") return WingKind::Butterfly;
    throw Error(ErrorKind::Parse, "unknown wing kind " + k);
}

void print_combo(const Options& o, const LinCombo& x, const std::string& symbol) {
    if (o.format == "json") {
        json j = base_json(o);
        j["basis"] = symbol;
        j["terms"] = json::parse(x.to_json());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << x.to_string(symbol) << "\n";
    }
}

int run_verify(const Options& o) {
    auto rows = run_reference_table();
    bool all = true;
    json arr = json::array();
    for (const auto& r : rows) {
        all = all && r.pass;
        if (o.format == "json")
            arr.push_back({{"topic", r.topic}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.topic << ": " << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    }
    if (o.format == "json")
        std::cout << json{{"schema", 1}, {"rows", arr}, {"pass", all}}.dump() << "\n";
    else
        std::cout << (all ? "all rows pass" : "some rows fail") << " (" << rows.size() << " rows)\n";
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cliffs: enumeration, lattices, Fuss-Catalan families, cubic realizations and algebras"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool with_family = true, bool with_n = true) {
        s->add_option("--delta", o.delta, "range map: affine:<m> or word:<prefix>*<period>");
        if (with_family)
            s->add_option("--family", o.family, "cl, av, hi or ca")
                ->check(CLI::IsMember({"cl", "av", "hi", "ca"}));
        if (with_n) s->add_option("--n", o.n, "size");
        s->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list S(n)");
    common(enumerate_cmd);
    auto* count_cmd = app.add_subcommand("count", "size of S(n)");
    common(count_cmd);
    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of S(n) as DOT or JSON");
    common(hasse_cmd);
    auto* check_cmd = app.add_subcommand("check", "verify a structural flag on sizes 0..n");
    common(check_cmd);
    check_cmd->add_option("flag", o.flag, "flag name, e.g. closed_by_prefix")->required();
    auto* meet_cmd = app.add_subcommand("meet", "meet of two elements");
    common(meet_cmd, true, false);
    meet_cmd->add_option("words", o.words)->expected(2)->required();
    auto* join_cmd = app.add_subcommand("join", "join of two elements");
    common(join_cmd, true, false);
    join_cmd->add_option("words", o.words)->expected(2)->required();
    auto* chains_cmd = app.add_subcommand("chains", "number of saturated chains of Cl(n)");
    common(chains_cmd, false);
    chains_cmd->add_flag("--enumerate", o.enumerate_chains, "list the chains");
    chains_cmd->add_option("--cap", o.cap, "refuse to list more chains than this");
    auto* intervals_cmd = app.add_subcommand("intervals", "number of intervals of Cl(n)");
    common(intervals_cmd, false);
    auto* dpol_cmd = app.add_subcommand("dpol", "degree polynomial of Cl(n)");
    common(dpol_cmd, false);
    auto* derive_cmd = app.add_subcommand("derive", "derivation sequence of S(n) down to the trivial poset");
    common(derive_cmd);
    auto* elevate_cmd = app.add_subcommand("elevate", "elevation of a word, or the image of S(n)");
    common(elevate_cmd);
    elevate_cmd->add_option("words", o.words);
    auto* wings_cmd = app.add_subcommand("wings", "input-, output-wings or butterflies of S(n)");
    common(wings_cmd);
    wings_cmd->add_option("--kind", o.kind, "input, output or butterfly")
        ->check(CLI::IsMember({"input", "output", "butterfly"}));
    auto* volume_cmd = app.add_subcommand("volume", "volume of the cubic realization of S(n)");
    common(volume_cmd);
    auto* product_cmd = app.add_subcommand("product", "product of two basis elements");
    common(product_cmd, false, false);
    product_cmd->add_option("--basis", o.basis, "F, E, H or G")->check(CLI::IsMember({"F", "E", "H", "G"}));
    product_cmd->add_option("--algebra", o.algebra, "cl, hi or ca")->check(CLI::IsMember({"cl", "hi", "ca"}));
    product_cmd->add_option("words", o.words)->expected(2)->required();
    auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of F_u");
    common(coproduct_cmd, false, false);
    coproduct_cmd->add_option("words", o.words)->expected(1)->required();
    auto* primes_cmd = app.add_subcommand("primes", "prime cliffs of size n");
    common(primes_cmd, false);
    auto* relations_cmd = app.add_subcommand("relations", "presentation up to a degree");
    common(relations_cmd, false, false);
    relations_cmd->add_option("--degree", o.degree, "degree bound");
    auto* generators_cmd = app.add_subcommand("generators", "dimensions of a minimal generating set");
    common(generators_cmd, false, false);
    generators_cmd->add_option("--algebra", o.algebra, "cl, hi or ca")->check(CLI::IsMember({"cl", "hi", "ca"}));
    generators_cmd->add_option("--degree", o.degree, "largest degree");
    auto* verify_cmd = app.add_subcommand("verify-paper", "recompute the embedded reference table");
    verify_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "verify-paper") return run_verify(o);
        const RangeMap d = parse_range_map(o.delta);

        if (cmd == "enumerate") {
            print_words(o, family_elements(family_of(o), o.n), "elements");
        } else if (cmd == "count") {
            mpz_class k = o.family == "cl" ? cliff_count(d, o.n)
                                           : mpz_class(static_cast<unsigned long>(family_elements(family_of(o), o.n).size()));
            if (o.format == "json") {
                json j = base_json(o);
                j["family"] = o.family;
                j["n"] = o.n;
                j["count"] = k.get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << k.get_str() << "\n";
            }
        } else if (cmd == "hasse") {
            FinitePoset p = build_poset(family_of(o), o.n);
            std::cout << (o.format == "json" ? p.to_json() + "\n" : p.to_dot("S"));
        } else if (cmd == "check") {
            FlagCheck r = verify_flag(family_of(o), parse_flag(o.flag), o.n);
            if (o.format == "json") {
                json j = base_json(o);
                j["flag"] = o.flag;
                j["holds"] = r.holds;
                if (r.witness) j["witness"] = txt(*r.witness);
                if (r.partner) j["partner"] = txt(*r.partner);
                j["detail"] = r.detail;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << (r.holds ? "holds" : "fails: " + r.detail) << "\n";
            }
            return r.holds ? kOk : kFail;
        } else if (cmd == "meet" || cmd == "join") {
            const Cliff u = word_arg(o, 0), v = word_arg(o, 1);
            Cliff r;
            if (o.family == "cl")
                r = cmd == "meet" ? meet(d, u, v) : join(d, u, v);
            else
                r = cmd == "meet" ? meet_s(family_of(o), u, v) : join_s(family_of(o), u, v);
            std::cout << txt(r) << "\n";
        } else if (cmd == "chains") {
            if (o.enumerate_chains) {
                for (const auto& ch : enumerate_saturated_chains(d, o.n, mpz_class(o.cap))) {
                    for (std::size_t i = 0; i < ch.size(); ++i) std::cout << (i ? " " : "") << txt(ch[i]);
                    std::cout << "\n";
                }
            } else {
                std::cout << saturated_chain_count(d, o.n).get_str() << "\n";
            }
        } else if (cmd == "intervals") {
            std::cout << interval_count(d, o.n).get_str() << "\n";
        } else if (cmd == "dpol") {
            std::cout << degree_polynomial(d, o.n).to_string() << "\n";
        } else if (cmd == "derive") {
            DerivationSequence s = derivation_sequence(family_of(o), o.n);
            if (o.format == "json") {
                json j = base_json(o);
                j["family"] = o.family;
                j["steps"] = json::array();
                for (const auto& st : s.steps)
                    j["steps"].push_back({{"n", st.n},
                                          {"before", st.before.size()},
                                          {"after", st.after.size()},
                                          {"bottom", txt(st.interval_bottom)},
                                          {"top", txt(st.interval_top)},
                                          {"certified", st.certified}});
                j["all_certified"] = s.all_certified();
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& st : s.steps)
                    std::cout << "n=" << st.n << " " << st.before.size() << " -> " << st.after.size() << " interval ["
                              << txt(st.interval_bottom) << ", " << txt(st.interval_top) << "]"
                              << (st.certified ? "" : " UNCERTIFIED") << "\n";
                std::cout << s.steps.size() << " steps\n";
            }
            return s.all_certified() ? kOk : kFail;
        } else if (cmd == "elevate") {
            GradedFamily s = family_of(o);
            if (o.words.empty())
                print_words(o, elevation_image(s, o.n), "image");
            else
                for (const std::string& w : o.words) std::cout << txt(elevation(s, parse_cliff(w))) << "\n";
        } else if (cmd == "wings") {
            print_words(o, wings(family_of(o), o.n, parse_kind(o.kind)), "wings");
        } else if (cmd == "volume") {
            GradedFamily s = family_of(o);
            mpz_class v = volume(s, o.n);
            if (o.format == "json") {
                json j = base_json(o);
                j["family"] = o.family;
                j["n"] = o.n;
                j["volume"] = v.get_str();
                j["cells"] = json::parse(cells_to_json(cells_of_max_dimension(s, o.n)));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << v.get_str() << "\n";
            }
        } else if (cmd == "product") {
            const Cliff u = word_arg(o, 0), v = word_arg(o, 1);
            const Basis b = parse_basis(o.basis);
            if (o.algebra == "cl") {
                print_combo(o, product_in_basis(d, b, u, v), o.basis);
            } else {
                if (b != Basis::F) {
                    std::cerr << "quotient products are available in the F basis only\n";
                    return kUsage;
                }
                print_combo(o, quotient_product(family_by_name(o.algebra, d), u, v), "F");
            }
        } else if (cmd == "coproduct") {
            TensorCombo t = coproduct_f(d, word_arg(o, 0));
            if (o.format == "json") {
                json j = base_json(o);
                j["terms"] = json::array();
                for (const auto& [k, x] : t.terms)
                    j["terms"].push_back({{"left", k.first.empty() ? "" : to_text(k.first)},
                                          {"right", k.second.empty() ? "" : to_text(k.second)},
                                          {"coefficient", x.get_str()}});
                std::cout << j.dump() << "\n";
            } else {
                std::cout << t.to_string() << "\n";
            }
        } else if (cmd == "primes") {
            print_words(o, enumerate_primes(d, o.n), "primes");
        } else if (cmd == "relations") {
            PresentationData p = presentation(d, o.degree);
            if (o.format == "json") {
                json j = json::parse(p.to_json());
                j["schema"] = 1;
                j["delta"] = format(d);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << p.to_string();
            }
        } else if (cmd == "generators") {
            std::vector<std::size_t> g;
            if (o.algebra == "cl") {
                g = generator_dimensions(d, nullptr, o.degree);
            } else {
                GradedFamily s = family_by_name(o.algebra, d);
                g = generator_dimensions(d, &s, o.degree);
            }
            if (o.format == "json") {
                json j = base_json(o);
                j["algebra"] = o.algebra;
                j["dimensions"] = g;
                std::cout << j.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
                std::cout << "\n";
            }
        }
        return kOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
}
