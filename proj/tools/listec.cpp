#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "listec/catalogue.hpp"
#include "listec/generate.hpp"
#include "listec/instance.hpp"
#include "listec/oracle.hpp"
#include "listec/rng.hpp"
#include "listec/solver.hpp"
#include "listec/substructure.hpp"

using json = nlohmann::json;
using namespace listec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::EdgeReduction: return "edge-reduction";
        case StepKind::Substructure: return "substructure";
        case StepKind::AuxGraph: return "aux-graph";
        case StepKind::Catalogue: return "catalogue";
        case StepKind::Gadget: return "gadget";
    }
    return "?";
}

Regime pick_regime(const InstanceFile& inst, const std::string& flag) {
    std::string want = flag.empty() || flag == "auto" ? inst.regime : flag;
    if (want != "auto") {
        auto r = regime_from_string(want);
        if (!r) throw InputError("unknown regime '" + want + "'");
        return *r;
    }
    const Graph& g = inst.graph;
    if (g.max_degree() >= 7 && decompose_tw3(g)) return Regime::Tw3L7;
    if (g.vertex_count() >= 4 && is_three_tree(g)) return Regime::ThreeTree;
    if (g.vertex_count() <= 24) {
        if (decompose_pw(g, 3)) return Regime::Pw3L6;
        if (decompose_pw(g, 4)) return Regime::Pw4L10;
    } else if (decompose_tw3(g)) {
        return Regime::Tw3L7;
    }
    throw InputError("no sufficient regime found; pass --regime explicitly");
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

json trace_json(const SolveTrace& trace) {
    json steps = json::array();
    for (const auto& st : trace.steps) {
        json j{{"kind", step_kind_name(st.kind)}, {"detail", st.detail}, {"depth", st.depth}};
        j["removed_vertices"] = st.removed_vertices;
        json redges = json::array();
        for (const Edge& e : st.removed_edges) redges.push_back(to_string(e));
        j["removed_edges"] = redges;
        steps.push_back(j);
    }
    return steps;
}

int cmd_solve(const std::string& path, const std::string& regime_flag,
              const std::string& decomposition_path, bool want_trace, bool as_json,
              const std::string& out_path) {
    InstanceFile inst = parse_instance_file(path);
    SolveRequest req;
    req.graph = inst.graph;
    req.lists = inst.lists;
    req.decomposition = inst.decomposition;
    if (!decomposition_path.empty()) {
        InstanceFile dfile = parse_instance_file(decomposition_path);
        if (!dfile.decomposition) throw InputError("no decomposition in " + decomposition_path);
        req.decomposition = dfile.decomposition;
    }
    Regime regime = pick_regime(inst, regime_flag);
    req.regime = regime;
    SolveResult res = solve(req);
    if (as_json) {
        json j{{"status", "ok"}, {"regime", to_string(regime)}};
        json col = json::object();
        for (const auto& [e, c] : res.colouring) col[to_string(e)] = c;
        j["colouring"] = col;
        if (want_trace) j["trace"] = trace_json(res.trace);
        write_out(out_path, j.dump(2) + "\n");
    } else {
        std::string text = "# regime " + to_string(regime) + "\n" + emit_colouring(res.colouring);
        if (want_trace) {
            text += "# trace\n";
            for (const auto& st : res.trace.steps) {
                text += "# " + step_kind_name(st.kind) + " " + st.detail;
                if (!st.removed_vertices.empty()) {
                    text += " removed";
                    for (int v : st.removed_vertices) text += " " + std::to_string(v);
                }
                for (const Edge& e : st.removed_edges) text += " " + to_string(e);
                text += " depth " + std::to_string(st.depth) + "\n";
            }
        }
        write_out(out_path, text);
    }
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& colouring_path, bool as_json) {
    InstanceFile inst = parse_instance_file(path);
    EdgeColouring c = parse_colouring_file(colouring_path);
    ValidationReport rep = verify_colouring(inst.graph, inst.lists, c);
    if (as_json) {
        json j{{"ok", rep.ok()}, {"violations", rep.violations}};
        std::cout << j.dump(2) << "\n";
    } else if (rep.ok()) {
        std::cout << "ok\n";
    } else {
        for (const auto& v : rep.violations) std::cout << v << "\n";
    }
    return rep.ok() ? kExitOk : 1;
}

int cmd_oracle(const std::string& path, bool as_json) {
    InstanceFile inst = parse_instance_file(path);
    OracleResult r = exists_colouring(inst.graph, inst.lists);
    if (as_json) {
        json j{{"colourable", r.colourable}, {"nodes_expanded", r.nodes_expanded}};
        if (r.witness) {
            json col = json::object();
            for (const auto& [e, c] : *r.witness) col[to_string(e)] = c;
            j["witness"] = col;
        }
        std::cout << j.dump(2) << "\n";
    } else if (r.colourable) {
        std::cout << "# colourable, " << r.nodes_expanded << " nodes\n"
                  << emit_colouring(*r.witness);
    } else {
        std::cout << "# not colourable, " << r.nodes_expanded << " nodes\n";
    }
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& kind, bool as_json) {
    InstanceFile inst = parse_instance_file(path);
    std::optional<TreeDecomposition> d;
    if (kind == "tw3")
        d = decompose_tw3(inst.graph);
    else if (kind == "pw3")
        d = decompose_pw(inst.graph, 3);
    else if (kind == "pw4")
        d = decompose_pw(inst.graph, 4);
    else
        throw InputError("unknown decomposition kind '" + kind + "'");
    if (!d) {
        std::cout << (as_json ? "{\"found\": false}\n" : "# no decomposition\n");
        return 1;
    }
    InstanceFile out = inst;
    out.decomposition = d;
    if (as_json) {
        json j{{"found", true}, {"width", d->width()}};
        json bags = json::array();
        for (const auto& b : d->bags) bags.push_back(b);
        j["bags"] = bags;
        json edges = json::array();
        for (auto [a, bnode] : d->tree_edges)
            edges.push_back(std::to_string(a) + "-" + std::to_string(bnode));
        j["tree_edges"] = edges;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << emit_instance(out);
    }
    return kExitOk;
}

int cmd_generate(const std::string& kind_s, int n, std::uint64_t seed,
                 const std::string& out_path) {
    auto kind = instance_kind_from_string(kind_s);
    if (!kind) throw InputError("unknown kind '" + kind_s + "' (usage: ktree3|sub-tw3|pw3|pw4-ish)");
    GeneratedInstance gen = generate_instance(*kind, n, seed);
    InstanceFile inst;
    inst.graph = gen.graph;
    inst.lists = gen.lists;
    inst.regime = to_string(gen.regime);
    inst.decomposition = gen.decomposition;
    write_out(out_path, emit_instance(inst));
    return kExitOk;
}

int cmd_fuzz(const std::string& regime, int trials, std::uint64_t seed) {
    InstanceKind kind;
    if (regime == "tw3")
        kind = InstanceKind::SubTw3;
    else if (regime == "pw3")
        kind = InstanceKind::Pw3;
    else if (regime == "pw4")
        kind = InstanceKind::Pw4ish;
    else
        throw InputError("fuzz regime must be tw3, pw3 or pw4");
    Rng rng(seed);
    int failures = 0;
    std::vector<double> millis;
    for (int t = 0; t < trials; ++t) {
        int n = regime == "tw3" ? 12 + rng.below(29) : 10 + rng.below(15);
        GeneratedInstance gen = generate_instance(kind, n, rng.next());
        auto start = std::chrono::steady_clock::now();
        try {
            SolveRequest req{gen.graph, gen.lists, gen.regime, std::nullopt, 0};
            SolveResult res = solve(req);
            if (!verify_colouring(gen.graph, gen.lists, res.colouring).ok()) ++failures;
        } catch (const std::exception& e) {
            std::cout << "trial " << t << " failed: " << e.what() << "\n";
            ++failures;
        }
        millis.push_back(std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count());
    }
    std::sort(millis.begin(), millis.end());
    auto pct = [&](double p) {
        if (millis.empty()) return 0.0;
        return millis[std::min(millis.size() - 1,
                               static_cast<std::size_t>(p * static_cast<double>(millis.size())))];
    };
    std::cout << "trials " << trials << ", failures " << failures << "\n";
    std::cout << "p50 " << pct(0.50) << " ms, p90 " << pct(0.90) << " ms, max "
              << (millis.empty() ? 0.0 : millis.back()) << " ms\n";
    return failures == 0 ? kExitOk : 1;
}

int cmd_export_dot(const std::string& path, const std::string& colouring_path,
                   const std::string& out_path) {
    InstanceFile inst = parse_instance_file(path);
    std::optional<EdgeColouring> c;
    if (!colouring_path.empty()) c = parse_colouring_file(colouring_path);
    write_out(out_path, export_dot(inst.graph, c ? &*c : nullptr));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list edge-colouring of graphs of tree-width 3 and path-width 3/4"};
    app.require_subcommand(1);

    std::string instance_path, regime = "auto", decomposition_path, colouring_path, out_path;
    std::string kind = "tw3";
    bool want_trace = false, as_json = false;
    int n = 20, trials = 100;
    std::uint64_t seed = 1;

    auto* solve_cmd = app.add_subcommand("solve", "colour an instance");
    solve_cmd->add_option("instance", instance_path)->required();
    solve_cmd->add_option("--regime", regime, "tw3|pw3|pw4|3tree|auto");
    solve_cmd->add_option("--decomposition", decomposition_path, "decomposition file");
    solve_cmd->add_flag("--trace", want_trace);
    solve_cmd->add_flag("--json", as_json);
    solve_cmd->add_option("-o,--output", out_path);
    solve_cmd->add_option("--seed", seed);

    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against an instance");
    verify_cmd->add_option("instance", instance_path)->required();
    verify_cmd->add_option("colouring", colouring_path)->required();
    verify_cmd->add_flag("--json", as_json);

    auto* oracle_cmd = app.add_subcommand("oracle", "exact backtracking decision");
    oracle_cmd->add_option("instance", instance_path)->required();
    oracle_cmd->add_flag("--json", as_json);

    auto* decompose_cmd = app.add_subcommand("decompose", "compute a decomposition");
    decompose_cmd->add_option("instance", instance_path)->required();
    decompose_cmd->add_option("--kind", kind, "tw3|pw3|pw4");
    decompose_cmd->add_flag("--json", as_json);

    auto* generate_cmd = app.add_subcommand("generate", "emit a random instance");
    generate_cmd->add_option("--kind", kind, "ktree3|sub-tw3|pw3|pw4-ish")->required();
    generate_cmd->add_option("--n", n)->required();
    generate_cmd->add_option("--seed", seed);
    generate_cmd->add_option("-o,--output", out_path);

    auto* fuzz_cmd = app.add_subcommand("fuzz", "generate-solve-verify loops");
    fuzz_cmd->add_option("--regime", regime)->required();
    fuzz_cmd->add_option("--trials", trials);
    fuzz_cmd->add_option("--seed", seed);

    auto* dot_cmd = app.add_subcommand("export-dot", "emit DOT, optionally with a colouring");
    dot_cmd->add_option("instance", instance_path)->required();
    dot_cmd->add_option("--colouring", colouring_path);
    dot_cmd->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed())
            return cmd_solve(instance_path, regime, decomposition_path, want_trace, as_json,
                             out_path);
        if (verify_cmd->parsed()) return cmd_verify(instance_path, colouring_path, as_json);
        if (oracle_cmd->parsed()) return cmd_oracle(instance_path, as_json);
        if (decompose_cmd->parsed()) return cmd_decompose(instance_path, kind, as_json);
        if (generate_cmd->parsed()) return cmd_generate(kind, n, seed, out_path);
        if (fuzz_cmd->parsed()) return cmd_fuzz(regime, trials, seed);
        if (dot_cmd->parsed()) return cmd_export_dot(instance_path, colouring_path, out_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const ContractError& e) {
        std::cerr << "internal contract violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}
