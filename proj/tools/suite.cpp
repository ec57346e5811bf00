#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "radial/error.hpp"
#include "radial/ht_system.hpp"
#include "radial/oracle.hpp"

namespace radial::suite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::int64_t> shuffled_levels(std::size_t n, std::uint64_t seed) {
    std::vector<std::int64_t> levels(n);
    std::iota(levels.begin(), levels.end(), std::int64_t{1});
    if (seed == 0) return levels;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(levels[i], levels[rng() % (i + 1)]);
    return levels;
}

/// Runs decide and insists on a certificate that re-verifies.
bool decide_checked(const LeveledGraph& g, const DecideOptions& options) {
    const Verdict v = decide(g, options);
    if (!verify_verdict(v)) throw Error(ErrorCode::Internal, "certificate failed to verify");
    return v.radial_planar;
}

CriterionResult finish(CriterionResult r, Clock::time_point start) {
    r.seconds = seconds_since(start);
    return r;
}

}  // namespace

LeveledGraph kuratowski(bool k33, std::uint64_t seed) {
    const std::size_t n = k33 ? 6 : 5;
    const auto levels = shuffled_levels(n, seed);
    LeveledGraph g;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string side = k33 ? (i < 3 ? "a" : "b") : "k";
        g.add_vertex(side + std::to_string(k33 ? i % 3 + 1 : i + 1), levels[i]);
    }
    if (k33) {
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 3; b < 6; ++b) g.add_edge(a, b);
    } else {
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b) g.add_edge(a, b);
    }
    return g;
}

LeveledGraph random_leveled(int n, int m, std::uint64_t seed, int levels) {
    std::mt19937_64 rng(seed);
    LeveledGraph g;
    for (int i = 1; i <= n; ++i) {
        const std::int64_t level = levels > 0 ? 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(levels)) : i;
        g.add_vertex("v" + std::to_string(i), level);
    }
    if (n < 2) return g;
    for (int t = 0, added = 0; added < m && t < 100 * m; ++t) {
        const auto a = static_cast<VertexIndex>(rng() % static_cast<std::uint64_t>(n));
        const auto b = static_cast<VertexIndex>(rng() % static_cast<std::uint64_t>(n));
        if (g.level(a) == g.level(b)) continue;
        g.add_edge(a, b);
        ++added;
    }
    return g;
}

std::vector<OrderedGraph> connected_ordered_graphs(int n, int max_m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    std::vector<OrderedGraph> out;
    const std::uint32_t subsets = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        if (std::popcount(mask) > max_m) continue;
        std::vector<int> parent(static_cast<std::size_t>(n) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int parts = n;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!(mask >> i & 1U)) continue;
            const int ra = find(pairs[i].first);
            const int rb = find(pairs[i].second);
            if (ra != rb) {
                parent[ra] = rb;
                --parts;
            }
        }
        if (parts != 1) continue;
        OrderedGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

SystemCase random_system(std::uint64_t seed, bool inconsistent) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
    SystemCase out;
    gf2::GF2System& s = out.system;
    s.cols = uniform(30, 120);
    const std::size_t rows = inconsistent ? s.cols + uniform(5, 40) : uniform(s.cols / 2, s.cols + 20);
    gf2::BitVector x(s.cols);
    for (std::size_t c = 0; c < s.cols; ++c) x.set(c, rng() & 1U);
    for (std::size_t r = 0; r < rows; ++r) {
        gf2::Row row;
        while (row.support.size() < 3) {
            const auto c = static_cast<std::uint32_t>(rng() % s.cols);
            if (std::find(row.support.begin(), row.support.end(), c) == row.support.end()) row.support.push_back(c);
        }
        std::sort(row.support.begin(), row.support.end());
        for (std::uint32_t c : row.support) row.rhs ^= x.get(c);
        s.rows.push_back(std::move(row));
    }
    if (inconsistent) {
        const auto dependency = gf2::find_row_dependency(s);
        if (!dependency) throw Error(ErrorCode::Internal, "tall system without a row dependency");
        const auto members = dependency->ones();
        s.rows[members[rng() % members.size()]].rhs ^= true;
        if (!gf2::verify_inconsistency(s, *dependency))
            throw Error(ErrorCode::Internal, "flipped system is not certified inconsistent");
        out.planted_solvable = false;
    }
    return out;
}

CriterionResult golden_rows() {
    const auto start = Clock::now();
    CriterionResult r{1, "golden rows (interleaved and nested)", true, "", 0};
    auto check = [&](int e_hi, int f_lo, int f_hi, bool nested) {
        OrderedGraph g(4);
        g.add_edge(1, e_hi);
        g.add_edge(f_lo, f_hi);
        const VarIndex ix(g);
        const HtSystem sys = build_system(g, parity_matrix(canonical_drawing(g, 0)), ix);
        std::vector<std::uint32_t> expected =
            nested ? std::vector<std::uint32_t>{ix.switch_var(0, 2), ix.switch_var(0, 3), ix.twist_var(1)}
                   : std::vector<std::uint32_t>{ix.switch_var(0, 2), ix.switch_var(1, 3), ix.twist_var(0)};
        std::sort(expected.begin(), expected.end());
        if (sys.system.rows.size() != 1) return false;
        auto got = sys.system.rows[0].support;
        std::sort(got.begin(), got.end());
        return got == expected && sys.origin[0].nested == nested;
    };
    const bool interleaved = check(3, 2, 4, false);
    const bool nested = check(4, 2, 3, true);
    r.pass = interleaved && nested;
    r.detail = std::string("interleaved ") + (interleaved ? "ok" : "MISMATCH") + ", nested " + (nested ? "ok" : "MISMATCH");
    return finish(r, start);
}

CriterionResult yes_soundness() {
    const auto start = Clock::now();
    CriterionResult r{2, "YES-soundness on 200 generated planar instances", true, "", 0};
    int yes = 0;
    std::string first_failure;
    for (int i = 0; i < 200; ++i) {
        GeneratorOptions opt;
        opt.n = 1 + i % 30;
        opt.target_m = opt.n + opt.n / 2;
        opt.levels = i % 2 == 0 ? 0 : std::max(1, opt.n / 2);
        const GeneratedInstance inst = generate_planar_instance(1000 + static_cast<std::uint64_t>(i), opt);
        if (decide_checked(inst.graph, {}))
            ++yes;
        else if (first_failure.empty())
            first_failure = " first NO at generator seed " + std::to_string(1000 + i);
    }
    const double secs = seconds_since(start);
    r.pass = yes == 200 && secs < 60;
    std::ostringstream d;
    d << yes << "/200 YES in " << secs << " s (limit 60 s)" << first_failure;
    r.detail = d.str();
    return finish(r, start);
}

CriterionResult no_soundness() {
    const auto start = Clock::now();
    CriterionResult r{3, "NO-soundness on K5 and K3,3 x 20 orderings", true, "", 0};
    int no = 0;
    for (int k33 = 0; k33 < 2; ++k33) {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const Verdict v = decide(kuratowski(k33 != 0, seed));
            const bool certified = v.outcome.status == gf2::Status::Inconsistent &&
                                   gf2::verify_inconsistency(v.system.system, v.outcome.witness);
            if (!v.radial_planar && certified) ++no;
        }
    }
    r.pass = no == 40;
    r.detail = std::to_string(no) + "/40 NO with verifying left-kernel witness";
    return finish(r, start);
}

namespace {

struct AgreementTally {
    int total = 0, found = 0, not_found = 0, exhausted = 0, decided_no = 0;
    int violations_a = 0, violations_b = 0, yes_unwitnessed = 0;

    void add(const OrderedGraph& g, const SearchOptions& so) {
        ++total;
        const LeveledGraph lg = to_leveled(g);
        const bool yes = decide_checked(lg, {});
        const SearchResult sr = find_embedding(lg, so);
        if (!yes) ++decided_no;
        switch (sr.status) {
            case SearchStatus::Found:
                ++found;
                if (!yes) ++violations_a;
                break;
            case SearchStatus::NotFound:
                ++not_found;
                if (yes) ++yes_unwitnessed;
                break;
            case SearchStatus::BudgetExhausted:
                ++exhausted;
                if (!yes) ++violations_b;
                break;
        }
    }

    bool clean() const { return violations_a == 0 && violations_b == 0; }

    std::string summary() const {
        std::ostringstream d;
        d << total << " graphs, oracle found " << found << " / not found " << not_found << " / exhausted " << exhausted
          << ", decide NO " << decided_no << ", violations (a) " << violations_a << " (b) " << violations_b
          << ", YES without oracle witness " << yes_unwitnessed;
        return d.str();
    }
};

}  // namespace

CriterionResult oracle_agreement(const SuiteOptions& options) {
    const auto start = Clock::now();
    CriterionResult r{4, "oracle agreement, connected ordered graphs n<=5 m<=7", true, "", 0};
    SearchOptions so;
    so.slots = 8;
    so.max_winding = 2;
    so.budget = options.oracle_budget;
    AgreementTally required;
    for (int n = 1; n <= 5; ++n)
        for (const OrderedGraph& g : connected_ordered_graphs(n, 7)) required.add(g, so);
    // Every graph of the required corpus is radial planar, which leaves (b)
    // without a single NO case; n = 6, m <= 8 supplies some.
    AgreementTally extra;
    if (options.supplementary)
        for (const OrderedGraph& g : connected_ordered_graphs(6, 8)) extra.add(g, so);
    const double secs = seconds_since(start);
    r.pass = required.clean() && extra.clean() && secs <= 1800;
    std::ostringstream d;
    d << required.summary();
    if (options.supplementary) d << "; supplementary n=6 m<=8: " << extra.summary();
    d << "; " << secs << " s (limit 1800 s)";
    r.detail = d.str();
    return finish(r, start);
}

CriterionResult solver_agreement() {
    const auto start = Clock::now();
    CriterionResult r{5, "dense/auto solver agreement on 100 random systems", true, "", 0};
    int agree = 0, certified = 0, expected = 0;
    for (int i = 0; i < 100; ++i) {
        const bool flip = i >= 50;
        const SystemCase c = random_system(5000 + static_cast<std::uint64_t>(i), flip);
        const auto dense = gf2::solve(c.system, gf2::Strategy::Dense);
        const auto automatic = gf2::solve(c.system, gf2::Strategy::Auto, static_cast<std::uint64_t>(i));
        if (dense.status == automatic.status) ++agree;
        if ((dense.status == gf2::Status::Solvable) == c.planted_solvable) ++expected;
        auto ok = [&](const gf2::SolveOutcome& o) {
            if (o.status == gf2::Status::Solvable) return gf2::verify_certificate(c.system, o.assignment);
            if (o.status == gf2::Status::Inconsistent) return gf2::verify_inconsistency(c.system, o.witness);
            return false;
        };
        if (ok(dense) && ok(automatic)) ++certified;
    }
    r.pass = agree == 100 && certified == 100 && expected == 100;
    r.detail = std::to_string(agree) + "/100 agree, " + std::to_string(certified) + "/100 certificates verify, " +
               std::to_string(expected) + "/100 match the planted status";
    return finish(r, start);
}

namespace {

std::vector<LeveledGraph> mixed_instances() {
    std::vector<LeveledGraph> out;
    for (int i = 0; i < 40; ++i) {
        GeneratorOptions opt;
        opt.n = 4 + i % 12;
        opt.target_m = 2 * opt.n;
        out.push_back(generate_planar_instance(7000 + static_cast<std::uint64_t>(i), opt).graph);
    }
    for (int i = 0; i < 20; ++i) out.push_back(kuratowski(i % 2 == 1, 100 + static_cast<std::uint64_t>(i)));
    for (int i = 0; i < 40; ++i) {
        const int n = 4 + i % 9;
        out.push_back(random_leveled(n, n + i % (n + 1), 9000 + static_cast<std::uint64_t>(i)));
    }
    return out;
}

std::vector<LeveledGraph> tied_instances() {
    std::vector<LeveledGraph> out;
    for (int i = 0; i < 25; ++i) {
        GeneratorOptions opt;
        opt.n = 4 + i % 10;
        opt.target_m = opt.n + opt.n / 2;
        opt.levels = std::max(2, opt.n / 2);
        out.push_back(generate_planar_instance(11000 + static_cast<std::uint64_t>(i), opt).graph);
    }
    for (int i = 0; i < 25; ++i) {
        const int n = 5 + i % 8;
        out.push_back(random_leveled(n, n + i % n, 13000 + static_cast<std::uint64_t>(i), std::max(2, n / 2)));
    }
    return out;
}

}  // namespace

CriterionResult scheme_invariance() {
    const auto start = Clock::now();
    CriterionResult r{6, "scheme invariance, 100 mixed instances x schemes 0-4", true, "", 0};
    int consistent = 0, yes = 0;
    std::string first;
    const auto instances = mixed_instances();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::set<bool> seen;
        for (int scheme = 0; scheme < kSchemeCount; ++scheme) {
            DecideOptions opt;
            opt.scheme = scheme;
            seen.insert(decide_checked(instances[i], opt));
        }
        if (seen.size() == 1) {
            ++consistent;
            yes += *seen.begin() ? 1 : 0;
        } else if (first.empty()) {
            first = "; first split at instance " + std::to_string(i);
        }
    }
    r.pass = consistent == static_cast<int>(instances.size());
    r.detail = std::to_string(consistent) + "/" + std::to_string(instances.size()) + " identical (" +
               std::to_string(yes) + " YES)" + first;
    return finish(r, start);
}

CriterionResult refinement_invariance() {
    const auto start = Clock::now();
    CriterionResult r{7, "refinement invariance, 50 tied instances x 5 seeds", true, "", 0};
    const std::uint64_t seeds[] = {0, 1, 42, 0x9e3779b97f4a7c15ULL, 123456789};
    int consistent = 0, yes = 0;
    std::string first;
    const auto instances = tied_instances();
    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::set<bool> seen;
        for (std::uint64_t seed : seeds) {
            DecideOptions opt;
            opt.refine_seed = seed;
            seen.insert(decide_checked(instances[i], opt));
        }
        if (seen.size() == 1) {
            ++consistent;
            yes += *seen.begin() ? 1 : 0;
        } else if (first.empty()) {
            first = "; first split at instance " + std::to_string(i);
        }
    }
    r.pass = consistent == static_cast<int>(instances.size());
    r.detail = std::to_string(consistent) + "/" + std::to_string(instances.size()) + " identical (" +
               std::to_string(yes) + " YES)" + first;
    return finish(r, start);
}

CriterionResult lemma_suite() {
    const auto start = Clock::now();
    CriterionResult r{8, "rotation criterion on every cycle, outer-walk count", true, "", 0};
    std::size_t cycles = 0, lemma_ok = 0;
    int outer_ok = 0, truncated = 0;
    for (int i = 0; i < 100; ++i) {
        GeneratorOptions opt;
        opt.n = 3 + i % 8;
        opt.target_m = opt.n + opt.n / 2 + i % 3;
        const GeneratedInstance inst = generate_planar_instance(17000 + static_cast<std::uint64_t>(i), opt);
        constexpr std::size_t kLimit = 200000;
        const auto all = simple_cycles(inst.graph, kLimit);
        if (all.size() >= kLimit) ++truncated;
        for (const auto& c : all) {
            ++cycles;
            if (check_lemma1(inst.witness, c)) ++lemma_ok;
        }
        const auto walks = facial_walks(inst.witness, rotation_system(inst.witness));
        std::size_t darts = 0;
        for (const auto& w : walks) darts += w.darts.size();
        if (darts == 2 * inst.graph.edge_count() && check_outer_walks(inst.witness, walks)) ++outer_ok;
    }
    r.pass = lemma_ok == cycles && outer_ok == 100 && truncated == 0;
    r.detail = std::to_string(lemma_ok) + "/" + std::to_string(cycles) + " cycles agree, " + std::to_string(outer_ok) +
               "/100 witnesses pass the outer-walk check";
    if (truncated) r.detail += ", " + std::to_string(truncated) + " cycle lists truncated";
    return finish(r, start);
}

CriterionResult performance(const SuiteOptions& options) {
    const auto start = Clock::now();
    CriterionResult r{9, "n=60 m=120 random instance, dense solver", true, "", 0};
    const LeveledGraph g = random_leveled(60, 120, 60120);
    DecideOptions opt;
    opt.solver = gf2::Strategy::Dense;
    const auto t0 = Clock::now();
    const Verdict v = decide(g, opt);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const bool ok = verify_verdict(v);
    if (!options.bench_csv.empty()) {
        std::ofstream csv(options.bench_csv);
        csv << bench_csv_header() << bench_csv_line("random-60-120", g, v, ms);
    }
    r.pass = ok && ms < 10000;
    std::ostringstream d;
    d << (v.radial_planar ? "YES" : "NO") << " in " << ms << " ms (limit 10000 ms), " << v.system.system.rows.size()
      << " rows x " << v.system.system.cols << " cols";
    if (!ok) d << ", certificate FAILED";
    if (!options.bench_csv.empty()) d << ", csv " << options.bench_csv;
    r.detail = d.str();
    return finish(r, start);
}

std::vector<CriterionResult> run(const std::vector<int>& ids, const SuiteOptions& options) {
    std::vector<CriterionResult> out;
    for (int id : ids) {
        CriterionResult res;
        try {
            switch (id) {
                case 1: res = golden_rows(); break;
                case 2: res = yes_soundness(); break;
                case 3: res = no_soundness(); break;
                case 4: res = oracle_agreement(options); break;
                case 5: res = solver_agreement(); break;
                case 6: res = scheme_invariance(); break;
                case 7: res = refinement_invariance(); break;
                case 8: res = lemma_suite(); break;
                case 9: res = performance(options); break;
                default: throw Error(ErrorCode::InvalidArgument, "no criterion " + std::to_string(id));
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InvalidArgument && e.message().rfind("no criterion", 0) == 0) throw;
            res = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
        } catch (const std::exception& e) {
            res = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
        }
        out.push_back(res);
    }
    return out;
}

std::string format(const CriterionResult& r) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " -- " << r.detail << " ("
         << r.seconds << " s)";
    return line.str();
}

std::string bench_csv_header() {
    return "instance,n,m,rows,cols,nnz,solver,engine,verdict,wall_ms\n";
}

std::string bench_csv_line(const std::string& name, const LeveledGraph& g, const Verdict& v, double wall_ms) {
    std::ostringstream line;
    const auto& s = v.system.system;
    line << name << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << s.rows.size() << ',' << s.cols << ','
         << s.nonzeros() << ',' << gf2::to_string(v.options.solver) << ',' << gf2::to_string(v.outcome.engine) << ','
         << (v.radial_planar ? "YES" : "NO") << ',' << wall_ms << '\n';
    return line.str();
}

}  // namespace radial::suite
