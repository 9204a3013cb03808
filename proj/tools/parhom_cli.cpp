// parhom: command-line front end to the library.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "parhom/automorphism.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/gadgets.hpp"
#include "parhom/homcount.hpp"
#include "parhom/reductions.hpp"
#include "parhom/selfcheck.hpp"

using namespace parhom;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, input_format = 2, precondition = 3, budget = 4, contradiction = 5 };

// Unreadable files count as bad input.
class InputError : public Error {
public:
    using Error::Error;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

// A file path, "-" for stdin, or named:<corpus name>.
Graph load_graph(const std::string& where) {
    if (where.rfind("named:", 0) == 0) return named_graph(where.substr(6));
    return parse_graph(read_text(where));
}

Json ids(const std::vector<int>& v) { return Json(v); }

Json gadget_json(const HardnessGadget& g) {
    auto n = normalized(g);
    Json k = Json::object(), w = Json::object();
    for (const auto& [u, len] : n.walk_length) k[std::to_string(u)] = len;
    for (const auto& [u, a] : n.anchor) w[std::to_string(u)] = a;
    return Json{{"beta", n.beta}, {"s", n.hub},           {"t", n.target}, {"i", n.selector},
                {"O", ids(n.outs)}, {"K", ids(n.cancelled)}, {"k", k},        {"w", w}};
}

std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

// key: value lines; nested objects flatten to dotted keys, arrays of scalars
// join with spaces, arrays of arrays repeat the key.
void render(const Json& j, const std::string& prefix, std::ostream& out) {
    for (const auto& [key, v] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (v.is_object()) {
            if (v.empty()) out << name << ":\n";
            render(v, name, out);
        } else if (v.is_array() && !v.empty() && (v.front().is_array() || v.front().is_object())) {
            for (const auto& e : v) {
                if (e.is_object()) {
                    render(e, name, out);
                    continue;
                }
                out << name << ":";
                for (const auto& x : e) out << ' ' << scalar(x);
                out << '\n';
            }
        } else if (v.is_array() && !v.empty() && v.front().is_string()) {
            for (const auto& x : v) out << name << ": " << scalar(x) << '\n';
        } else if (v.is_array()) {
            out << name << ":";
            for (const auto& x : v) out << ' ' << scalar(x);
            out << '\n';
        } else {
            out << name << ": " << scalar(v) << '\n';
        }
    }
}

struct Output {
    bool json = false;
    void emit(const Json& j) const {
        if (json)
            std::cout << j.dump(2) << '\n';
        else
            render(j, "", std::cout);
    }
};

Json classify_cmd(const Graph& h, std::optional<std::uint64_t> seed) {
    auto c = classify(h, seed);
    Json out{{"verdict", to_string(c.verdict)},
             {"reduced_order", c.reduction.final_graph.order()},
             {"reduction_steps", c.reduction.steps.size()}};
    out["reduced_vertices"] = ids(c.reduction.final_to_original);
    if (c.witness) {
        out["witness_component"] = ids(c.witness_component);
        out["witness"] = gadget_json(*c.witness);
    }
    return out;
}

Json reduce_cmd(const Graph& h, std::optional<std::uint64_t> seed, const std::string& output) {
    auto r = involution_free_reduction(h, seed);
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"order", s.graph.order()}, {"involution", ids(s.involution)},
                         {"fixed_order", s.fixed.graph.order()}});
    if (!output.empty()) write_text(output, serialize_graph(r.final_graph));
    return Json{{"reduced_order", r.final_graph.order()},
                {"reduced_edges", r.final_graph.size()},
                {"reduced_vertices", ids(r.final_to_original)},
                {"step", steps}};
}

Json aut_cmd(const Graph& h, bool list) {
    auto autos = automorphisms(h);
    auto inv = find_involution(h);
    Json out{{"automorphisms", autos.size()}, {"parity", autos.size() % 2 ? "odd" : "even"}};
    out["involution"] = inv ? Json(ids(*inv)) : Json("none");
    if (list) out["automorphism"] = autos;
    return out;
}

Json count_cmd(const Graph& g, const Graph& h, bool mod2, const std::string& pin_path, const std::string& method) {
    PinningFunction pin;
    if (!pin_path.empty()) pin = parse_pinning(read_text(pin_path));
    const auto b = CountBudget::from_environment();
    Json out{{"method", method}};
    if (mod2 && method == "auto") {
        out["parity"] = count_pinned_homs_mod2(g, h, pin, b) ? 1 : 0;
        return out;
    }
    BigNat n = method == "brute"  ? count_homs_brute_force(g, h, pin, b)
               : method == "td"   ? count_homs_tree_decomposition(g, h, pin, b)
                                  : count_pinned_homs(g, h, pin, b);
    if (mod2)
        out["parity"] = n % 2 == 1 ? 1 : 0;
    else
        out["count"] = n.str();
    return out;
}

Json find_gadget_cmd(const Graph& h, std::optional<int> root, bool trace, bool brute) {
    FinderTrace steps;
    Json out;
    if (brute) {
        auto all = brute_force_gadget_search(h, default_search_bounds(h));
        out["records"] = all.size();
        if (!all.empty()) out["first"] = gadget_json(all.front());
        return out;
    }
    if (root) {
        auto r = find_structure_rooted(h, *root, trace ? &steps : nullptr);
        if (auto g = std::get_if<HardnessGadget>(&r)) {
            out["kind"] = "gadget";
            out["gadget"] = gadget_json(*g);
        } else if (auto p = std::get_if<PartialHardnessGadget>(&r)) {
            out["kind"] = "partial";
            out["partial"] = Json{{"s", p->hub}, {"i", p->selector}, {"O", ids(p->outs)}, {"P", ids(p->root_path.vertices)}};
        } else {
            const auto& m = std::get<MosaicCertificate>(r);
            out["kind"] = to_string(m.verdict);
            out["mosaic"] = Json{{"core", ids(m.core)}, {"bristles", ids(m.bristle_vertices)}};
        }
    } else {
        out = gadget_json(find_hardness_gadget(h, trace ? &steps : nullptr));
    }
    if (trace) out["trace"] = steps;
    return out;
}

Json verify_gadget_cmd(const Graph& h, const HardnessGadget& g, const std::vector<int>& distance) {
    auto r = verify_hardness_gadget(h, g);
    for (const auto& v : check_distance_requirements(h, g, distance).violations) r.violations.push_back(v);
    Json out{{"valid", r.ok()}};
    Json vs = Json::array();
    for (const auto& v : r.violations) vs.push_back(Json{{"violation", v.clause + ": " + v.detail}});
    if (!vs.empty()) out["violations"] = vs;
    return out;
}

HardnessGadget gadget_for(const Graph& h, const std::string& path) {
    return path.empty() ? find_hardness_gadget(h) : parse_gadget(read_text(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity homomorphism counting: classification, gadgets and reductions"};
    app.require_subcommand(1);
    Output output;
    app.add_flag("--json", output.json, "machine-readable output")->configurable(false);
    app.fallthrough();

    std::string graph, second, gadget_path, pin_path, out_path, pin_out, method = "auto";
    std::optional<std::uint64_t> seed;
    std::optional<int> root;
    bool flag_a = false, flag_b = false;
    std::vector<int> distance;
    SelfcheckOptions sc;
    std::function<Json()> run;

    auto graph_arg = [&](CLI::App* c, std::string& target, const char* name, const char* help) {
        c->add_option(name, target, help)->required();
    };

    auto* cl = app.add_subcommand("classify", "decide the complexity of parity counting for H");
    graph_arg(cl, graph, "graph", "edge-list file, '-' or named:<name>");
    cl->add_option("--seed", seed, "shuffle involution choices");
    cl->callback([&] { run = [&] { return classify_cmd(load_graph(graph), seed); }; });

    auto* ic = app.add_subcommand("is-cactus", "check the cactus condition");
    graph_arg(ic, graph, "graph", "edge-list file");
    ic->callback([&] {
        run = [&] {
            auto g = load_graph(graph);
            auto bad = cactus_violation(g);
            Json out{{"cactus", !bad && is_connected(g)}, {"edges_on_one_cycle", !bad}, {"connected", is_connected(g)}};
            if (bad) out["violation"] = Json{bad->first, bad->second};
            return out;
        };
    });

    auto* rd = app.add_subcommand("reduce", "involution-free reduction");
    graph_arg(rd, graph, "graph", "edge-list file");
    rd->add_option("--seed", seed, "shuffle involution choices");
    rd->add_option("-o,--output", out_path, "write the reduced graph here");
    rd->callback([&] { run = [&] { return reduce_cmd(load_graph(graph), seed, out_path); }; });

    auto* au = app.add_subcommand("aut", "automorphism group size and parity");
    graph_arg(au, graph, "graph", "edge-list file");
    au->add_flag("--list", flag_a, "list every automorphism");
    au->callback([&] { run = [&] { return aut_cmd(load_graph(graph), flag_a); }; });

    auto* ob = app.add_subcommand("orbits", "automorphism orbits");
    graph_arg(ob, graph, "graph", "edge-list file");
    ob->callback([&] { run = [&] { return Json{{"orbit", orbits(load_graph(graph))}}; }; });

    auto* co = app.add_subcommand("count", "count homomorphisms G -> H");
    graph_arg(co, graph, "source", "source graph G");
    graph_arg(co, second, "target", "target graph H");
    co->add_flag("--mod2", flag_a, "parity only");
    co->add_option("--pin", pin_path, "pinning file for G");
    co->add_option("--method", method, "auto, brute or td")->check(CLI::IsMember({"auto", "brute", "td"}));
    co->callback([&] { run = [&] { return count_cmd(load_graph(graph), load_graph(second), flag_a, pin_path, method); }; });

    auto* fg = app.add_subcommand("find-gadget", "construct a hardness gadget");
    graph_arg(fg, graph, "graph", "involution-free cactus");
    fg->add_option("--root", root, "rooted search from this vertex");
    fg->add_flag("--trace", flag_a, "list the construction steps");
    fg->add_flag("--brute", flag_b, "exhaustive search within the default bounds");
    fg->callback([&] {
        run = [&] {
            auto h = load_graph(graph);
            if (output.json || root || flag_b) return find_gadget_cmd(h, root, flag_a, flag_b);
            // Plain text is the gadget record itself, ready for verify-gadget.
            FinderTrace steps;
            auto g = find_hardness_gadget(h, &steps);
            std::cout << serialize_gadget(g);
            if (flag_a)
                for (const auto& step : steps) std::cout << "# " << step << '\n';
            return Json();
        };
    });

    auto* vg = app.add_subcommand("verify-gadget", "check a gadget record");
    graph_arg(vg, graph, "graph", "host graph");
    graph_arg(vg, gadget_path, "gadget", "gadget record");
    vg->add_option("--distance", distance, "also check the distance requirements for these vertices");
    vg->callback([&] {
        run = [&] { return verify_gadget_cmd(load_graph(graph), parse_gadget(read_text(gadget_path)), distance); };
    });

    auto* br = app.add_subcommand("build-reduction", "attach a gadget to a source graph");
    graph_arg(br, graph, "source", "source graph G");
    graph_arg(br, second, "host", "host graph H");
    br->add_option("--gadget", gadget_path, "gadget record (default: constructed)");
    br->add_option("--graph-out", out_path, "write the built graph here");
    br->add_option("--pin-out", pin_out, "write the pinning here");
    br->callback([&] {
        run = [&] {
            auto g = load_graph(graph), h = load_graph(second);
            auto inst = build_g_gamma(g, h, gadget_for(h, gadget_path));
            Json out{{"order", inst.graph.order()}, {"edges", inst.graph.size()}, {"pinned", inst.pin.entries().size()}};
            if (!out_path.empty()) write_text(out_path, serialize_graph(inst.graph));
            if (!pin_out.empty()) write_text(pin_out, serialize_pinning(inst.pin));
            if (out_path.empty() && pin_out.empty()) {
                out["graph"] = serialize_graph(inst.graph);
                out["pin"] = serialize_pinning(inst.pin);
                if (!output.json) {
                    std::cout << serialize_graph(inst.graph) << "# pinning\n" << serialize_pinning(inst.pin);
                    return Json();
                }
            }
            return out;
        };
    });

    auto* vr = app.add_subcommand("verify-reduction", "compare both sides of the reduction congruence");
    graph_arg(vr, graph, "source", "source graph G");
    graph_arg(vr, second, "host", "host graph H");
    vr->add_option("--gadget", gadget_path, "gadget record (default: constructed)");
    vr->add_flag("--aut-factor", flag_a, "also bucket pinned homomorphisms by automorphism");
    vr->callback([&] {
        run = [&] {
            auto g = load_graph(graph), h = load_graph(second);
            auto gad = gadget_for(h, gadget_path);
            auto r = verify_reduction(g, h, gad, CountBudget::from_environment());
            Json out{{"instance_order", r.instance_order},
                     {"source_parity", r.source_parity ? 1 : 0},
                     {"pinned_parity", r.pinned_parity ? 1 : 0},
                     {"result", r.ok() ? "Ok" : "Mismatch"}};
            bool good = r.ok();
            if (flag_a) {
                auto a = aut_factor_check(h, build_g_gamma(g, h, gad), CountBudget::from_environment());
                std::string sizes;
                for (const auto& b : a.bucket_sizes) sizes += (sizes.empty() ? "" : " ") + b.str();
                out["aut_factor"] = Json{{"automorphisms", a.automorphism_count},
                                         {"buckets", sizes},
                                         {"stray", a.stray_restrictions.size()},
                                         {"result", a.ok() ? "Ok" : "Mismatch"}};
                good &= a.ok();
            }
            if (!good) {
                output.emit(out);
                throw InternalContradiction("reduction congruence failed");
            }
            return out;
        };
    });

    auto* dt = app.add_subcommand("dot", "Graphviz rendering");
    graph_arg(dt, graph, "graph", "edge-list file");
    dt->add_option("--root", root, "highlight this vertex");
    dt->callback([&] {
        run = [&] {
            std::cout << to_dot(load_graph(graph), root);
            return Json();
        };
    });

    auto* sf = app.add_subcommand("selfcheck", "run the acceptance criteria");
    sf->add_option("--seed", sc.seed, "random seed");
    sf->add_option("--only", sc.only, "criteria to run")->check(CLI::Range(1, kCriterionCount));
    sf->add_option("--exhaustive-max", sc.exhaustive_max_order, "largest order in the exhaustive sweep")
        ->check(CLI::Range(2, 12));
    sf->add_flag("--timing", flag_a, "include run times");
    sf->add_flag("--corrupt-gadgets", sc.corrupt_gadgets, "break constructed gadgets on purpose");
    bool selfcheck_failed = false;
    sf->callback([&] {
        run = [&] {
            auto r = run_selfcheck(sc);
            selfcheck_failed = !r.ok();
            if (!output.json) {
                std::cout << r.text(flag_a);
                return Json();
            }
            Json rows = Json::array();
            for (const auto& c : r.results)
                rows.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            return Json{{"criteria", rows}, {"pass", r.ok()}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        auto result = run();
        if (!result.is_null()) output.emit(result);
        return selfcheck_failed ? Exit::usage : Exit::ok;
    } catch (const ParseError& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return Exit::input_format;
    } catch (const InputError& e) {
        std::cerr << "error: input: " << e.what() << '\n';
        return Exit::input_format;
    } catch (const PreconditionError& e) {
        std::cerr << "error: precondition: " << e.what() << '\n';
        return Exit::precondition;
    } catch (const BudgetError& e) {
        std::cerr << "error: budget: " << e.what() << '\n';
        return Exit::budget;
    } catch (const InternalContradiction& e) {
        std::cerr << "error: internal contradiction: " << e.what() << '\n';
        return Exit::contradiction;
    }
}
