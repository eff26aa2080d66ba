// Command-line front end: orbit partitions, exact and predicted minimal
// alphabet sizes, shift-graph statistics and exports, seeded walks, the
// sequential-method simulator, and the self-verification suite.
//
// Exit codes: 0 ok, 2 usage error, 3 budget exceeded, 4 verification failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfree/sqfree.hpp"

using nlohmann::json;
using namespace sqfree;

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

struct RunConfig {
    std::vector<int> s_raw;
    int l = 2;
    std::uint64_t seed = 0;
    std::uint64_t steps = 1000;
    int k_max = -1;
    long long vertex_cap = 0;  // 0: default budget
    std::string format = "text";
    int threads = 1;
    int trials = 1;
    bool list_dead_ends = false;
    std::string grid = "r<=3,i1<=7,l<=3";

    LengthSeq lengths() const { return LengthSeq(s_raw); }

    long long budget() const { return vertex_cap > 0 ? vertex_cap : default_budget(); }

    std::string hash(const std::string& cmd) const {
        std::ostringstream os;
        std::string s_text;
        for (int v : s_raw) s_text += std::to_string(v) + ';';
        os << cmd << '|' << s_text << '|' << l << '|' << seed << '|'
           << steps << '|' << k_max << '|' << vertex_cap << '|' << format << '|' << trials
           << '|' << grid;
        std::ostringstream hex;
        hex << std::hex << fnv1a(os.str());
        return hex.str();
    }
};

json report_header(const RunConfig& cfg, const std::string& cmd) {
    return json{{"tool", "sqfree"}, {"version", kVersion}, {"config_hash", cfg.hash(cmd)}};
}

void print_header(const RunConfig& cfg, const std::string& cmd) {
    std::cout << "# sqfree " << kVersion << " config " << cfg.hash(cmd) << "\n";
}

json blocks_json(const SetPartition& p) {
    json out = json::array();
    for (const auto& blk : p.blocks()) out.push_back(blk);
    return out;
}

std::string blocks_text(const SetPartition& p) {
    std::string out;
    for (const auto& blk : p.blocks()) {
        out += '{';
        for (std::size_t k = 0; k < blk.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(blk[k]);
        }
        out += "} ";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

int cmd_orbits(const RunConfig& cfg) {
    const LengthSeq s = cfg.lengths();
    const SetPartition o = orbit_closure(s);
    const GenericWord w = generic_word_of(o);
    if (cfg.format == "json") {
        json out = report_header(cfg, "orbits");
        out["s"] = s.ascending();
        out["blocks"] = blocks_json(o);
        out["generic_word"] = w.to_string();
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(cfg, "orbits");
        std::cout << "s = (" << s.to_string() << "), N = " << s.window() << "\n";
        std::cout << "orbits: " << blocks_text(o) << "\n";
        std::cout << "generic word: " << w.to_string() << "\n";
    }
    return 0;
}

int cmd_mina(const RunConfig& cfg) {
    const LengthSeq s = cfg.lengths();
    const MinAVerdict predicted = predict_minA(s);
    const MinAResult exact = minA_exact(s, cfg.k_max, cfg.budget());
    const bool decided = predicted.kind != MinAVerdict::Kind::UnknownBounded;
    const bool agree =
        !decided ||
        (predicted.kind == MinAVerdict::Kind::Finite
             ? exact.finite && exact.value == predicted.value
             : !exact.finite);
    if (cfg.format == "json") {
        json out = report_header(cfg, "mina");
        out["s"] = s.ascending();
        out["predicted"] = predicted.to_string();
        out["exact"] = exact.value_string();
        out["agree"] = agree;
        json profile = json::array();
        for (std::size_t k = 0; k < exact.candidate_at_k.size(); ++k)
            profile.push_back(
                {{"k", k + 1}, {"candidate", static_cast<bool>(exact.candidate_at_k[k])}});
        out["profile"] = profile;
        if (exact.witness) out["witness"] = blocks_json(*exact.witness);
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(cfg, "mina");
        std::cout << "s = (" << s.to_string() << ")\n";
        std::cout << "predicted: " << predicted.to_string() << "\n";
        std::cout << "exact: " << exact.value_string() << "\n";
        std::cout << "agreement: " << (decided ? (agree ? "yes" : "NO") : "n/a (undecided)")
                  << "\n";
        if (exact.witness) std::cout << "witness: " << blocks_text(*exact.witness) << "\n";
        for (std::size_t k = 0; k < exact.candidate_at_k.size(); ++k)
            std::cout << "  k=" << (k + 1) << ": "
                      << (exact.candidate_at_k[k] ? "candidate" : "none") << "\n";
    }
    return agree ? 0 : 4;
}

int cmd_graph(const RunConfig& cfg) {
    const LengthSeq s = cfg.lengths();
    const AvoidanceGraph g(s, cfg.l, cfg.budget());
    if (cfg.format == "dot") {
        g.write_dot(std::cout);
        return 0;
    }
    const auto ends = g.dead_ends();
    const auto starts = g.dead_starts();
    const auto core = g.pruned_core();
    if (cfg.format == "json") {
        json out = report_header(cfg, "graph");
        out["s"] = s.ascending();
        out["l"] = cfg.l;
        out["vertices"] = g.vertex_count();
        out["arcs"] = g.arc_count();
        out["dead_ends"] = ends.size();
        out["dead_starts"] = starts.size();
        out["core_vertices"] = core.vertex_count();
        if (cfg.list_dead_ends) {
            json words = json::array();
            for (const Word& w : ends) words.push_back(letters_of(w));
            out["dead_end_words"] = words;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(cfg, "graph");
        std::cout << "s = (" << s.to_string() << "), l = " << cfg.l << ", N = " << s.window()
                  << "\n";
        std::cout << "vertices: " << g.vertex_count() << "\n";
        std::cout << "arcs: " << g.arc_count() << "\n";
        std::cout << "dead ends: " << ends.size() << ", dead starts: " << starts.size() << "\n";
        std::cout << "core vertices: " << core.vertex_count() << "\n";
        if (cfg.list_dead_ends)
            for (const Word& w : ends) std::cout << "dead end: " << letters_of(w) << "\n";
    }
    return 0;
}

int cmd_walk(const RunConfig& cfg) {
    const LengthSeq s = cfg.lengths();
    const AvoidanceGraph core = AvoidanceGraph(s, cfg.l, cfg.budget()).pruned_core();
    if (core.vertex_count() == 0) {
        std::cerr << "error: empty core for s=(" << s.to_string() << "), l=" << cfg.l << "\n";
        return 2;
    }
    const Word stream = random_walk(core, cfg.seed, cfg.steps);
    if (cfg.format == "json") {
        json out = report_header(cfg, "walk");
        out["s"] = s.ascending();
        out["l"] = cfg.l;
        out["seed"] = cfg.seed;
        out["letters"] = letters_of(stream);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << letters_of(stream) << "\n";
    }
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    const LengthSeq s = cfg.lengths();
    json rows = json::array();
    if (cfg.format != "json") print_header(cfg, "simulate");
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const auto out = sequential_simulate(s, cfg.l, cfg.seed + static_cast<unsigned>(trial),
                                             cfg.steps);
        if (cfg.format == "json") {
            rows.push_back({{"trial", trial},
                            {"dead_end", out.dead_end},
                            {"steps", out.steps},
                            {"word", out.dead_end ? letters_of(out.word) : ""}});
        } else {
            std::cout << "trial " << trial << ": "
                      << (out.dead_end ? "dead-end at step " + std::to_string(out.steps) +
                                             " on " + letters_of(out.word)
                                       : "survived " + std::to_string(out.steps) + " steps")
                      << "\n";
        }
    }
    if (cfg.format == "json") {
        json out = report_header(cfg, "simulate");
        out["s"] = s.ascending();
        out["l"] = cfg.l;
        out["trials"] = rows;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

struct Grid {
    int r_max = 3;
    int i1_max = 7;
    int l_max = 3;
};

Grid parse_grid(const std::string& text) {
    Grid g;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto at = part.find("<=");
        if (at == std::string::npos)
            throw std::invalid_argument("grid parts must look like r<=3");
        const std::string key = part.substr(0, at);
        const int value = std::stoi(part.substr(at + 2));
        if (key == "r") g.r_max = value;
        else if (key == "i1") g.i1_max = value;
        else if (key == "l") g.l_max = value;
        else throw std::invalid_argument("unknown grid key: " + key);
    }
    return g;
}

int cmd_verify(const RunConfig& cfg) {
    const Grid grid = parse_grid(cfg.grid);
    std::vector<int> alphabets;
    for (int l = 2; l <= grid.l_max; ++l) alphabets.push_back(l);
    long failures = 0;
    long unknown = 0;
    std::vector<std::string> messages;

    const auto rows = theorem1_audit(grid.r_max, grid.i1_max, alphabets, cfg.budget());
    for (const auto& row : rows) {
        if (row.predicted.kind == DeadEndVerdict::Kind::Unknown) {
            ++unknown;
            messages.push_back("undecided: s=(" + row.s.to_string() + ") l=" +
                               std::to_string(row.l) + " dead_ends=" +
                               std::to_string(row.dead_end_count));
        }
        if (row.mismatch()) {
            ++failures;
            messages.push_back("MISMATCH: s=(" + row.s.to_string() + ") l=" +
                               std::to_string(row.l) + " predicted " +
                               row.predicted.to_string() + " but found " +
                               std::to_string(row.dead_end_count) + " dead ends");
        }
    }
    for_each_length_seq(grid.r_max, grid.i1_max, [&](const LengthSeq& s) {
        for (int l : alphabets) {
            const AvoidanceGraph g(s, l, cfg.budget());
            const std::string err = check_graph_properties(g, cfg.seed, 2'000);
            if (!err.empty()) {
                ++failures;
                messages.push_back("MISMATCH: " + err + " l=" + std::to_string(l));
            }
        }
        const auto predicted = predict_minA(s);
        if (predicted.kind != MinAVerdict::Kind::UnknownBounded) {
            const auto exact = minA_exact(s, -1, cfg.budget());
            const bool agree = predicted.kind == MinAVerdict::Kind::Finite
                                   ? exact.finite && exact.value == predicted.value
                                   : !exact.finite;
            if (!agree) {
                ++failures;
                messages.push_back("MISMATCH: minA(" + s.to_string() + ") predicted " +
                                   predicted.to_string() + " exact " + exact.value_string());
            }
        }
    });

    if (cfg.format == "json") {
        json out = report_header(cfg, "verify");
        out["grid"] = cfg.grid;
        out["audit_rows"] = rows.size();
        out["failures"] = failures;
        out["undecided"] = unknown;
        out["messages"] = messages;
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(cfg, "verify");
        std::cout << "grid: " << cfg.grid << ", " << rows.size() << " audit rows\n";
        for (const auto& msg : messages) std::cout << msg << "\n";
        std::cout << "failures: " << failures << ", undecided: " << unknown << "\n";
    }
    return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite square avoidance toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool needs_s) {
        auto* opt = sub->add_option("--s", cfg.s_raw,
                                    "square lengths, ascending (e.g. --s 3,5)")
                        ->delimiter(',');
        if (needs_s) opt->required();
        sub->add_option("--format", cfg.format, "text, json or dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--threads", cfg.threads, "worker cap (reserved)");
        sub->add_option("--vertex-cap", cfg.vertex_cap, "enumeration budget override");
        return sub;
    };

    auto* orbits = add_common(app.add_subcommand("orbits", "orbit partition and generic word"),
                              true);
    auto* mina = add_common(app.add_subcommand("mina", "predicted and exact minA"), true);
    mina->add_option("--k-max", cfg.k_max, "profile depth (default r+2)");
    auto* graph = add_common(app.add_subcommand("graph", "shift graph statistics"), true);
    graph->add_option("--l", cfg.l, "alphabet size")->required();
    graph->add_flag("--dead-ends", cfg.list_dead_ends, "list dead-end words");
    auto* walk = add_common(app.add_subcommand("walk", "seeded walk on the pruned core"), true);
    walk->add_option("--l", cfg.l, "alphabet size")->required();
    walk->add_option("--seed", cfg.seed, "rng seed");
    walk->add_option("--steps", cfg.steps, "letters to emit");
    auto* simulate = add_common(app.add_subcommand("simulate", "naive sequential method"), true);
    simulate->add_option("--l", cfg.l, "alphabet size")->required();
    simulate->add_option("--seed", cfg.seed, "rng seed");
    simulate->add_option("--steps", cfg.steps, "step cap per trial");
    simulate->add_option("--trials", cfg.trials, "number of seeded trials");
    auto* verify = add_common(app.add_subcommand("verify", "paper-audit suite"), false);
    verify->add_option("--grid", cfg.grid, "audit grid, e.g. r<=3,i1<=7,l<=3");
    verify->add_option("--seed", cfg.seed, "rng seed for walks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (orbits->parsed()) return cmd_orbits(cfg);
        if (mina->parsed()) return cmd_mina(cfg);
        if (graph->parsed()) return cmd_graph(cfg);
        if (walk->parsed()) return cmd_walk(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 4;
    }
    return 2;
}
