// radial: command-line front end.
//
// Exit codes: 0 radial planar (or success), 1 not radial planar (or failure of
// the requested check), 2 invalid input or usage, 3 internal error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "radial/error.hpp"
#include "radial/io.hpp"
#include "radial/oracle.hpp"
#include "radial/pipeline.hpp"
#include "radial/svg.hpp"
#include "suite.hpp"

namespace {

using namespace radial;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot open file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write file", path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

struct Flags {
    std::string input;
    std::string output;
    std::string solver = "dense";
    int scheme = 0;
    std::uint64_t refine_seed = 0;
    std::uint64_t seed = 0;
    int trials = 8;
    std::int64_t slots = 8;
    int max_winding = 2;
    std::uint64_t budget = 100'000'000;
    bool terse = false;

    // gen
    std::string kind = "planar";
    int n = 10;
    int m = 15;
    int levels = 0;

    // render
    std::string witness;

    // bench
    int count = 5;

    // corpus
    std::vector<int> only;
};

DecideOptions decide_options(const Flags& f) {
    DecideOptions opt;
    opt.scheme = f.scheme;
    opt.refine_seed = f.refine_seed;
    opt.solver = *gf2::parse_strategy(f.solver);
    opt.seed = f.seed;
    opt.trials = f.trials;
    return opt;
}

int cmd_test(const Flags& f) {
    const LeveledGraph g = parse_graph(read_file(f.input));
    const Verdict v = decide(g, decide_options(f));
    if (!verify_verdict(v)) throw Error(ErrorCode::Internal, "certificate failed to verify");
    emit(verdict_json(v, f.terse), f.output);
    return v.radial_planar ? kYes : kNo;
}

int cmd_oracle(const Flags& f) {
    const LeveledGraph g = parse_graph(read_file(f.input));
    SearchOptions so;
    so.slots = f.slots;
    so.max_winding = f.max_winding;
    so.budget = f.budget;
    const SearchResult r = find_embedding(g, so);
    if (r.status == SearchStatus::Found) {
        emit(witness_json(*r.witness), f.output);
        std::cerr << "FOUND after " << r.nodes << " nodes\n";
        return kYes;
    }
    std::cerr << (r.status == SearchStatus::NotFound ? "NOT-FOUND" : "BUDGET-EXHAUSTED") << " after " << r.nodes
              << " nodes\n";
    return kNo;
}

int cmd_gen(const Flags& f) {
    std::string graph, witness;
    if (f.kind == "planar") {
        GeneratorOptions opt;
        opt.n = f.n;
        opt.target_m = f.m;
        opt.levels = f.levels;
        const GeneratedInstance inst = generate_planar_instance(f.seed, opt);
        graph = serialize_graph(inst.graph);
        // Serialization sorts edges by endpoint index; carry windings along.
        const auto& edges = inst.graph.edges();
        std::vector<EdgeIndex> order(edges.size());
        std::iota(order.begin(), order.end(), EdgeIndex{0});
        auto key = [&](EdgeIndex e) { return std::minmax(edges[e].a, edges[e].b); };
        std::stable_sort(order.begin(), order.end(), [&](EdgeIndex x, EdgeIndex y) { return key(x) < key(y); });
        std::vector<int> windings;
        for (EdgeIndex e : order) windings.push_back(inst.witness.windings[e]);
        witness = witness_json(make_embedding(parse_graph(graph), inst.witness.slots, inst.witness.slot, windings));
    } else if (f.kind == "k5" || f.kind == "k33") {
        graph = serialize_graph(suite::kuratowski(f.kind == "k33", f.seed));
    } else if (f.kind == "random") {
        graph = serialize_graph(suite::random_leveled(f.n, f.m, f.seed, f.levels));
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown kind \"" + f.kind + "\"", "--kind");
    }
    if (f.output.empty()) {
        emit(graph, "");
        if (!witness.empty()) emit(witness, "");
    } else {
        emit(graph, f.output + ".json");
        if (!witness.empty()) emit(witness, f.output + ".witness.json");
    }
    return kYes;
}

int cmd_render(const Flags& f) {
    const LeveledGraph g = parse_graph(read_file(f.input));
    std::string svg;
    if (!f.witness.empty()) {
        const GeometricEmbedding w = parse_witness(read_file(f.witness), g);
        if (!verify_embedding(w)) std::cerr << "warning: witness does not verify\n";
        svg = render_svg(w);
    } else {
        const OrderedGraph ordered = g.has_ties() ? augment_and_refine(g, f.refine_seed).ordered : to_ordered(g);
        svg = render_svg(canonical_drawing(ordered, f.scheme));
    }
    emit(svg, f.output);
    return kYes;
}

int cmd_bench(const Flags& f) {
    std::string csv = suite::bench_csv_header();
    const DecideOptions opt = decide_options(f);
    std::vector<std::pair<std::string, LeveledGraph>> instances;
    if (!f.input.empty()) {
        instances.emplace_back(f.input, parse_graph(read_file(f.input)));
    } else {
        for (int i = 0; i < f.count; ++i) {
            const std::uint64_t s = f.seed + static_cast<std::uint64_t>(i);
            instances.emplace_back("random-" + std::to_string(f.n) + "-" + std::to_string(f.m) + "-s" + std::to_string(s),
                                   suite::random_leveled(f.n, f.m, s, f.levels));
        }
    }
    for (const auto& [name, g] : instances) {
        const auto t0 = std::chrono::steady_clock::now();
        const Verdict v = decide(g, opt);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        csv += suite::bench_csv_line(name, g, v, ms);
    }
    emit(csv, f.output);
    return kYes;
}

int cmd_corpus(const Flags& f) {
    suite::SuiteOptions opt;
    opt.bench_csv = f.output;
    std::vector<int> ids = f.only.empty() ? std::vector<int>{2, 3, 4, 5, 6, 7, 8} : f.only;
    bool all = true;
    for (const auto& r : suite::run(ids, opt)) {
        std::cout << suite::format(r) << std::endl;
        all = all && r.pass;
    }
    return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial planarity testing by crossing parities"};
    app.require_subcommand(1);
    Flags f;

    auto add_decide_flags = [&](CLI::App* sub) {
        sub->add_option("--solver", f.solver, "dense | sparse | auto")->check(CLI::IsMember({"dense", "sparse", "auto"}));
        sub->add_option("--scheme", f.scheme, "canonical drawing scheme")->check(CLI::Range(0, kSchemeCount - 1));
        sub->add_option("--refine-seed", f.refine_seed, "order of tied vertices (0 keeps declaration order)");
        sub->add_option("--seed", f.seed, "sparse solver seed");
        sub->add_option("--trials", f.trials, "sparse solver trials")->check(CLI::PositiveNumber);
    };

    auto* test = app.add_subcommand("test", "decide radial planarity of a graph file");
    test->add_option("input", f.input, "graph JSON")->required();
    add_decide_flags(test);
    test->add_flag("--terse", f.terse, "omit the system and certificate");
    test->add_option("-o", f.output, "write the verdict here");

    auto* oracle = app.add_subcommand("oracle", "search for a crossing-free drawing on a slot grid");
    oracle->add_option("input", f.input, "graph JSON")->required();
    oracle->add_option("--slots", f.slots, "angle slots")->check(CLI::PositiveNumber);
    oracle->add_option("--max-winding", f.max_winding, "largest |winding| per edge")->check(CLI::NonNegativeNumber);
    oracle->add_option("--budget", f.budget, "search node limit");
    oracle->add_option("-o", f.output, "write the witness here");

    auto* gen = app.add_subcommand("gen", "emit a corpus instance");
    gen->add_option("--kind", f.kind, "planar | k5 | k33 | random")->check(CLI::IsMember({"planar", "k5", "k33", "random"}));
    gen->add_option("--n", f.n, "vertices")->check(CLI::PositiveNumber);
    gen->add_option("--m", f.m, "target edges")->check(CLI::NonNegativeNumber);
    gen->add_option("--levels", f.levels, "levels to draw from (0: distinct)")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", f.seed, "generator seed");
    gen->add_option("-o", f.output, "output prefix: PREFIX.json and PREFIX.witness.json");

    auto* render = app.add_subcommand("render", "SVG of the canonical drawing or of a witness");
    render->add_option("input", f.input, "graph JSON")->required();
    render->add_option("--witness", f.witness, "witness JSON");
    render->add_option("--scheme", f.scheme, "canonical drawing scheme")->check(CLI::Range(0, kSchemeCount - 1));
    render->add_option("--refine-seed", f.refine_seed, "order of tied vertices");
    render->add_option("-o", f.output, "SVG path");

    auto* bench = app.add_subcommand("bench", "time decide and write CSV");
    bench->add_option("input", f.input, "graph JSON (default: random instances)");
    add_decide_flags(bench);
    bench->add_option("--n", f.n, "vertices")->check(CLI::PositiveNumber);
    bench->add_option("--m", f.m, "edges")->check(CLI::NonNegativeNumber);
    bench->add_option("--levels", f.levels, "levels to draw from (0: distinct)")->check(CLI::NonNegativeNumber);
    bench->add_option("--count", f.count, "random instances")->check(CLI::PositiveNumber);
    bench->add_option("-o", f.output, "CSV path");

    auto* corpus = app.add_subcommand("corpus", "run the agreement suite and print a pass/fail table");
    corpus->add_option("--only", f.only, "criterion ids")->check(CLI::Range(1, 9));
    corpus->add_option("-o", f.output, "CSV path for the performance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalid;
    }

    try {
        if (*test) return cmd_test(f);
        if (*oracle) return cmd_oracle(f);
        if (*gen) return cmd_gen(f);
        if (*render) return cmd_render(f);
        if (*bench) return cmd_bench(f);
        if (*corpus) return cmd_corpus(f);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Internal ? kInternal : kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}
