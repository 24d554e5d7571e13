#include "qsr/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "qsr/graph6.hpp"
#include "qsr/qsr.hpp"
#include "qsr/version.hpp"

namespace qsr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct SpecView {
    int n = 0, k = 0, a = 0;
    std::uint32_t c_mask = 0;       // bit c set iff c is allowed
    int max_c = 0;
    bool proper = false, strict = false;
    std::vector<int> c_desc;        // allowed values, strictly descending
};

SpecView validate_spec(const EnumSpec& spec) {
    if (spec.n < 1) throw InvalidSpec("n must be at least 1");
    if (spec.n > kMaxVertices)
        throw CapacityExceeded("n = " + std::to_string(spec.n) + " exceeds capacity 64");
    if (spec.k < 0 || spec.k >= kMaxVertices) throw InvalidSpec("k outside [0, 63]");
    if (spec.a < 0) throw InvalidSpec("a must be non-negative");
    if ((static_cast<long>(spec.n) * spec.k) % 2 != 0)
        throw InvalidSpec("parity violation: n*k must be even");
    if (spec.c_allowed.empty()) throw InvalidSpec("c_allowed must be non-empty");
    SpecView s;
    s.n = spec.n;
    s.k = spec.k;
    s.a = spec.a;
    s.proper = spec.require_all_realized;
    s.strict = spec.require_strict;
    for (int c : spec.c_allowed) {
        if (c < 0 || c > spec.k)
            throw InvalidSpec("c value " + std::to_string(c) + " outside [0, k]");
        s.c_mask |= std::uint32_t{1} << c;
    }
    for (int c = spec.k; c >= 0; --c)
        if ((s.c_mask >> c) & 1) s.c_desc.push_back(c);
    s.max_c = s.c_desc.front();
    return s;
}

EnumSpec normalized_spec(const SpecView& s) {
    EnumSpec spec;
    spec.n = s.n;
    spec.k = s.k;
    spec.a = s.a;
    spec.c_allowed = s.c_desc;
    spec.require_all_realized = s.proper;
    spec.require_strict = s.strict;
    return spec;
}

// Completion filter shared by both engines: the realized signature must match
// the spec, with subset semantics unless properness is required.
bool accept_final(const Graph& g, const SpecView& s) {
    QsrSignature sig;
    try {
        sig = analyze(g);
    } catch (const Error&) {
        return false;
    }
    if (sig.k != s.k || sig.a != s.a) return false;
    std::uint32_t realized = 0;
    for (int c : sig.c_values) realized |= std::uint32_t{1} << c;
    if ((realized & ~s.c_mask) != 0) return false;
    if (s.proper && realized != s.c_mask) return false;
    if (s.strict && !sig.strict) return false;
    return true;
}

// Snapshot of a partial labeled graph, used to hand subtrees to workers.
struct GrowState {
    std::array<std::uint64_t, kMaxVertices> rows{};
    std::array<int, kMaxVertices> deg{};
    int m = 0;  // vertices placed
};

// One search worker. Grows graphs vertex by vertex; vertex m attaches to a
// subset S of {0..m-1}. All pruning rules hold along every prefix of every
// valid completion (they depend only on the child's structure), so no valid
// class can be lost.
struct Worker {
    const SpecView& s;
    const bool star;           // N(0) = {1..k} normalization active
    std::uint64_t leaf_mask = 0;  // {1..k} in star mode

    std::array<std::uint64_t, kMaxVertices> rows{};
    std::array<int, kMaxVertices> deg{};
    std::array<std::array<signed char, kMaxVertices>, kMaxVertices> cnt{};  // shared-neighbour counts

    std::uint64_t nodes = 0;
    std::set<std::string> classes;

    int split_m = -1;                       // emit frontier snapshots at this depth
    std::vector<GrowState>* frontier = nullptr;

    Worker(const SpecView& spec_view, bool star_mode) : s(spec_view), star(star_mode) {
        if (star)
            for (int v = 1; v <= s.k; ++v) leaf_mask |= std::uint64_t{1} << v;
    }

    void seed(const GrowState& st) {
        rows = st.rows;
        deg = st.deg;
        for (int u = 0; u < st.m; ++u)
            for (int v = u + 1; v < st.m; ++v)
                cnt[u][v] = cnt[v][u] =
                    static_cast<signed char>(std::popcount(rows[u] & rows[v]));
    }

    Graph snapshot_graph(int m) const {
        std::vector<VertexSet> r(static_cast<std::size_t>(m));
        for (int v = 0; v < m; ++v) r[static_cast<std::size_t>(v)] = VertexSet(rows[v]);
        return Graph::from_adjacency(std::move(r));
    }

    // Feasibility and frozen-pair checks for attaching vertex m to S.
    bool check_child(int m, std::uint64_t S) const {
        const int k = s.k;
        const int rem = s.n - (m + 1);
        const int sdeg = std::popcount(S);
        if (k - sdeg > rem) return false;
        long missing = k - sdeg;
        for (int v = 0; v < m; ++v) {
            const int need = k - deg[v] - static_cast<int>((S >> v) & 1);
            if (need > rem) return false;  // v cannot reach degree k any more
            missing += need;
        }
        const long capacity = static_cast<long>(rem) * k;
        if (missing > capacity) return false;
        // remaining edges among unplaced vertices must be a non-negative
        // integer count that fits a simple graph
        if (((capacity - missing) & 1) != 0) return false;
        if (capacity - missing > static_cast<long>(rem) * (rem - 1)) return false;

        // pairs (u, m): count in the child is |N(u) ∩ S|
        for (int u = 0; u < m; ++u) {
            const int shared = std::popcount(rows[u] & S);
            const bool adj = (S >> u) & 1;
            const int du = deg[u] + (adj ? 1 : 0);
            if (adj) {
                if (shared > s.a) return false;
                if (du == k && sdeg == k && shared != s.a) return false;
            } else {
                if (shared > s.max_c) return false;
                if (du == k && sdeg == k && ((s.c_mask >> shared) & 1) == 0) return false;
            }
        }
        // pairs inside S gain m as a shared neighbour; pairs of a newly full
        // vertex with an already full one are frozen and must be final
        for (std::uint64_t su = S; su; su &= su - 1) {
            const int u = std::countr_zero(su);
            for (std::uint64_t sv = su & (su - 1); sv; sv &= sv - 1) {
                const int v = std::countr_zero(sv);
                const int c2 = cnt[u][v] + 1;
                const bool adj = (rows[u] >> v) & 1;
                if (adj) {
                    if (c2 > s.a) return false;
                } else {
                    if (c2 > s.max_c) return false;
                }
                if (deg[u] + 1 == k && deg[v] + 1 == k) {
                    if (adj ? (c2 != s.a) : (((s.c_mask >> c2) & 1) == 0)) return false;
                }
            }
            if (deg[u] + 1 == k) {
                for (int w = 0; w < m; ++w) {
                    if (w == u || deg[w] != k) continue;  // full vertices are never in S
                    const int c2 = cnt[u][w];
                    if ((rows[u] >> w) & 1 ? (c2 != s.a) : (((s.c_mask >> c2) & 1) == 0))
                        return false;
                }
            }
        }
        return true;
    }

    void apply(int m, std::uint64_t S) {
        rows[m] = S;
        deg[m] = std::popcount(S);
        for (std::uint64_t su = S; su; su &= su - 1) {
            const int u = std::countr_zero(su);
            rows[u] |= std::uint64_t{1} << m;
            ++deg[u];
            for (std::uint64_t sv = su & (su - 1); sv; sv &= sv - 1) {
                const int v = std::countr_zero(sv);
                ++cnt[u][v];
                ++cnt[v][u];
            }
        }
        for (int u = 0; u < m; ++u)
            cnt[u][m] = cnt[m][u] = static_cast<signed char>(std::popcount(rows[u] & S));
    }

    void undo(int m, std::uint64_t S) {
        rows[m] = 0;
        deg[m] = 0;
        for (std::uint64_t su = S; su; su &= su - 1) {
            const int u = std::countr_zero(su);
            rows[u] &= ~(std::uint64_t{1} << m);
            --deg[u];
            for (std::uint64_t sv = su & (su - 1); sv; sv &= sv - 1) {
                const int v = std::countr_zero(sv);
                --cnt[u][v];
                --cnt[v][u];
            }
        }
    }

    void finish(int m) {
        const Graph g = snapshot_graph(m);
        if (!accept_final(g, s)) return;
        classes.insert(canonical_form(g).bytes);
    }

    // Enumerates candidate attachment sets: subsets of the not-yet-full
    // vertices, size at most k, pairwise compatible with the count caps.
    template <typename Fn>
    void candidates(int m, Fn&& fn) {
        std::array<int, kMaxVertices> eligible{};
        int ne = 0;
        for (int v = 0; v < m; ++v)
            if (deg[v] < s.k) eligible[ne++] = v;
        std::uint64_t S = 0;
        gen_subsets(m, eligible.data(), ne, 0, 0, S, fn);
    }

    template <typename Fn>
    void gen_subsets(int m, const int* elig, int ne, int idx, int size, std::uint64_t& S, Fn&& fn) {
        fn(S);
        if (size == s.k) return;
        for (int i = idx; i < ne; ++i) {
            const int v = elig[i];
            if (!pair_compatible(v, S)) continue;
            S |= std::uint64_t{1} << v;
            gen_subsets(m, elig, ne, i + 1, size + 1, S, fn);
            S &= ~(std::uint64_t{1} << v);
        }
    }

    // adding v to S must not push any pair past its cap
    bool pair_compatible(int v, std::uint64_t S) const {
        for (std::uint64_t st = S; st; st &= st - 1) {
            const int t = std::countr_zero(st);
            const int c2 = cnt[v][t] + 1;
            if ((rows[v] >> t) & 1) {
                if (c2 > s.a) return false;
            } else {
                if (c2 > s.max_c) return false;
            }
        }
        return true;
    }

    void search_from(int m) {
        if (m == s.n) {
            finish(m);
            return;
        }
        if (frontier && m == split_m) {
            GrowState st;
            st.rows = rows;
            st.deg = deg;
            st.m = m;
            frontier->push_back(st);
            return;
        }
        std::set<std::string> seen_children;  // canonical-augmentation dedup
        candidates(m, [&](std::uint64_t S) {
            if (star && (S >> 0) & 1) return;  // vertex 0 is full; cheap skip
            if (star && m > s.k + 1) {
                // tail vertices are kept sorted by their {1..k} attachment
                // pattern; one representative per class survives this
                const std::uint64_t key = S & leaf_mask;
                const std::uint64_t prev = rows[m - 1] & leaf_mask;
                if (key < prev) return;
            }
            if (!check_child(m, S)) return;
            ++nodes;
            apply(m, S);
            if (star) {
                search_from(m + 1);
            } else {
                const Graph child = snapshot_graph(m + 1);
                const CanonResult canon = canonical_search(child);
                if (seen_children.insert(canon.form.bytes).second) {
                    // accept iff the just-added vertex is in the orbit of the
                    // vertex the canonical labeling sends to the highest label
                    int v_high = 0;
                    for (int v = 0; v <= m; ++v)
                        if (canon.labels[static_cast<std::size_t>(v)] == m) v_high = v;
                    if (canon.orbit[static_cast<std::size_t>(v_high)] ==
                        canon.orbit[static_cast<std::size_t>(m)])
                        search_from(m + 1);
                }
            }
            undo(m, S);
        });
    }
};

struct RootSetup {
    GrowState state;
    bool star = false;
    bool feasible = true;
};

RootSetup make_root(const SpecView& s, const EnumOptions& opt) {
    RootSetup root;
    root.star = opt.star_shortcut && s.a == 0 && s.k >= 1 && s.n > s.k;
    if (!root.star) {
        root.state.m = 1;
        return root;
    }
    // star root: vertex 0 adjacent to exactly 1..k, nothing else placed
    root.state.m = s.k + 1;
    for (int v = 1; v <= s.k; ++v) {
        root.state.rows[0] |= std::uint64_t{1} << v;
        root.state.rows[v] = 1;  // bit 0
        root.state.deg[v] = 1;
    }
    root.state.deg[0] = s.k;
    // every pair of leaves already shares vertex 0
    if (s.k >= 2 && s.max_c < 1) root.feasible = false;
    // each leaf still needs k-1 edges, all to future vertices
    if (s.k - 1 > s.n - (s.k + 1)) root.feasible = false;
    return root;
}

}  // namespace

EnumReport enumerate_graphs(const EnumSpec& spec, const EnumOptions& options) {
    const auto start = Clock::now();
    const SpecView s = validate_spec(spec);
    if (spec.n > kEnumBudgetOrder && !options.override_budget)
        throw BudgetExceeded("n = " + std::to_string(spec.n) + " beyond the default budget " +
                             std::to_string(kEnumBudgetOrder) + "; pass the override to proceed");

    EnumReport report;
    report.spec = normalized_spec(s);

    const RootSetup root = make_root(s, options);
    Worker collector(s, root.star);
    collector.seed(root.state);
    collector.nodes = 1;  // the root itself

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int jobs = std::clamp(options.jobs, 1, std::max(1, hw));
    const int split_m = root.state.m + 2;

    if (root.feasible) {
        if (jobs <= 1 || split_m >= s.n) {
            collector.search_from(root.state.m);
        } else {
            std::vector<GrowState> frontier;
            collector.split_m = split_m;
            collector.frontier = &frontier;
            collector.search_from(root.state.m);
            collector.frontier = nullptr;

            std::vector<std::set<std::string>> found(static_cast<std::size_t>(jobs));
            std::vector<std::uint64_t> counts(static_cast<std::size_t>(jobs), 0);
            std::atomic<std::size_t> next{0};
            std::exception_ptr first_error;
            std::mutex error_mutex;
            std::vector<std::thread> threads;
            for (int t = 0; t < jobs; ++t) {
                threads.emplace_back([&, t]() {
                    try {
                        Worker w(s, root.star);
                        for (;;) {
                            const std::size_t i = next.fetch_add(1);
                            if (i >= frontier.size()) break;
                            w.seed(frontier[i]);
                            w.search_from(frontier[i].m);
                        }
                        found[static_cast<std::size_t>(t)] = std::move(w.classes);
                        counts[static_cast<std::size_t>(t)] = w.nodes;
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error) first_error = std::current_exception();
                    }
                });
            }
            for (auto& th : threads) th.join();
            if (first_error) std::rethrow_exception(first_error);
            for (int t = 0; t < jobs; ++t) {
                collector.classes.merge(found[static_cast<std::size_t>(t)]);
                collector.nodes += counts[static_cast<std::size_t>(t)];
            }
        }
    }

    for (const auto& bytes : collector.classes) report.classes.push_back(CanonicalForm{bytes});
    report.nodes_explored = collector.nodes;
    report.complete = true;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

EnumReport brute_force_enumerate(const EnumSpec& spec) {
    const auto start = Clock::now();
    const SpecView s = validate_spec(spec);
    if (spec.n > 8)
        throw TooLargeForOracle("oracle sweeps all labeled graphs, guarded to n <= 8; got n = " +
                                std::to_string(spec.n));

    const int n = s.n;
    const int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(E));
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

    // split the edge mask in half; per half, precompute packed degree lanes
    // (8 bits per vertex) and packed adjacency rows (byte v = row mask of v)
    const int lo_bits = E / 2, hi_bits = E - lo_bits;
    struct Packed {
        std::uint64_t deg = 0, rows = 0;
    };
    const auto build_table = [&](int base, int count) {
        std::vector<Packed> table(std::size_t{1} << count);
        for (std::uint64_t x = 1; x < table.size(); ++x) {
            const int low = std::countr_zero(x);
            const auto [i, j] = pairs[static_cast<std::size_t>(base + low)];
            Packed p = table[x & (x - 1)];
            p.deg += (std::uint64_t{1} << (8 * i)) + (std::uint64_t{1} << (8 * j));
            p.rows |= (std::uint64_t{1} << (8 * i + j)) | (std::uint64_t{1} << (8 * j + i));
            table[x] = p;
        }
        return table;
    };
    const auto lo_table = build_table(0, lo_bits);
    const auto hi_table = build_table(lo_bits, hi_bits);

    std::uint64_t target = 0;
    for (int v = 0; v < n; ++v) target |= static_cast<std::uint64_t>(s.k) << (8 * v);

    std::set<std::string> classes;
    for (std::uint64_t hi = 0; hi < hi_table.size(); ++hi) {
        const std::uint64_t dh = hi_table[hi].deg;
        const std::uint64_t rh = hi_table[hi].rows;
        for (std::uint64_t lo = 0; lo < lo_table.size(); ++lo) {
            if (lo_table[lo].deg + dh != target) continue;
            const std::uint64_t packed = lo_table[lo].rows | rh;
            std::vector<VertexSet> rows(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                rows[static_cast<std::size_t>(v)] = VertexSet((packed >> (8 * v)) & 0xff);
            const Graph g = Graph::from_adjacency(std::move(rows));
            if (accept_final(g, s)) classes.insert(canonical_form(g).bytes);
        }
    }

    EnumReport report;
    report.spec = normalized_spec(s);
    for (const auto& bytes : classes) report.classes.push_back(CanonicalForm{bytes});
    report.nodes_explored = std::uint64_t{1} << E;
    report.complete = true;
    report.elapsed_seconds = seconds_since(start);
    return report;
}

CertifyResult certify(const EnumReport& report) {
    SpecView s;
    try {
        s = validate_spec(report.spec);
    } catch (const Error& e) {
        return {false, std::string("invalid spec: ") + e.what()};
    }
    for (std::size_t i = 1; i < report.classes.size(); ++i)
        if (!(report.classes[i - 1] < report.classes[i]))
            return {false, "classes not sorted strictly ascending at index " + std::to_string(i)};

    std::vector<Graph> graphs;
    for (const auto& form : report.classes) {
        try {
            graphs.push_back(decode_graph6(form.bytes));
        } catch (const Error& e) {
            return {false, "undecodable class " + form.bytes + ": " + e.what()};
        }
    }
    const bool identity_family = s.a == 0 && s.c_desc.size() == 3 && s.c_desc[0] == s.k - 1 &&
                                 s.c_desc[1] == s.k - 2 && s.c_desc[2] == s.k - 3;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() != s.n)
            return {false, "class " + report.classes[i].bytes + " has the wrong order"};
        if (!accept_final(graphs[i], s))
            return {false, "class " + report.classes[i].bytes + " fails the spec filter"};
        if (identity_family && !check_counting_identities(graphs[i], s.c_desc).all_pass)
            return {false, "class " + report.classes[i].bytes + " fails the counting identities"};
    }
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            if (is_isomorphic(graphs[i], graphs[j]))
                return {false, "classes " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are isomorphic"};
    return {true, ""};
}

void write_census(const std::string& path, const EnumReport& report) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open census file " + path);
    for (const auto& form : report.classes) out << form.bytes << '\n';
    out.close();

    nlohmann::json meta;
    meta["spec"] = {{"n", report.spec.n},
                    {"k", report.spec.k},
                    {"a", report.spec.a},
                    {"c_allowed", report.spec.c_allowed},
                    {"require_all_realized", report.spec.require_all_realized},
                    {"require_strict", report.spec.require_strict}};
    meta["class_count"] = report.classes.size();
    meta["nodes_explored"] = report.nodes_explored;
    meta["complete"] = report.complete;
    meta["elapsed_seconds"] = report.elapsed_seconds;
    meta["version"] = kVersion;
    std::ofstream side(path + ".meta.json");
    if (!side) throw Error("cannot open sidecar file " + path + ".meta.json");
    side << meta.dump(2) << '\n';
}

std::vector<std::string> read_census(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

}  // namespace qsr
