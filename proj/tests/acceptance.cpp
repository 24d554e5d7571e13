// Acceptance gate: one check per shipped claim, one PASS/FAIL line each.
// Exit status is the number of failed criteria, so 0 means the build is good.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsr/canon.hpp"
#include "qsr/catalog.hpp"
#include "qsr/enumerate.hpp"
#include "qsr/errors.hpp"
#include "qsr/graph.hpp"
#include "qsr/graph6.hpp"
#include "qsr/qsr.hpp"

#include "oracles.hpp"

namespace {

using namespace qsr;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double value, int precision = 1) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << value;
    return os.str();
}

EnumSpec family_spec(int n) {
    EnumSpec spec;
    spec.n = n;
    spec.k = 4;
    spec.a = 0;
    spec.c_allowed = {3, 2, 1};
    spec.require_all_realized = true;
    spec.require_strict = true;
    return spec;
}

std::vector<std::string> class_bytes(const EnumReport& report) {
    std::vector<std::string> out;
    for (const auto& form : report.classes) out.push_back(form.bytes);
    return out;
}

// 1. the two witnesses match their declared parameters, under 1 ms per call
bool criterion_witness_match(std::string& detail) {
    const Graph g1 = build_g1();
    const Graph g2 = build_g2();
    const std::vector<int> c{3, 2, 1};
    bool ok = matches(g1, 11, 4, 0, c, true) && matches(g2, 12, 4, 0, c, true);
    double best1 = 1e9, best2 = 1e9;
    for (int rep = 0; rep < 5; ++rep) {
        auto t0 = clock_type::now();
        ok = matches(g1, 11, 4, 0, c, true) && ok;
        best1 = std::min(best1, seconds_since(t0));
        t0 = clock_type::now();
        ok = matches(g2, 12, 4, 0, c, true) && ok;
        best2 = std::min(best2, seconds_since(t0));
    }
    detail = "g1 " + fmt(best1 * 1e6) + "us, g2 " + fmt(best2 * 1e6) + "us";
    return ok && best1 < 1e-3 && best2 < 1e-3;
}

// 2. orders 11 and 12 give exactly one class each, isomorphic to g1 and g2
bool criterion_uniqueness(std::string& detail) {
    EnumOptions opt;
    opt.jobs = 4;
    auto t0 = clock_type::now();
    const EnumReport r11 = enumerate_graphs(family_spec(11), opt);
    const double s11 = seconds_since(t0);
    t0 = clock_type::now();
    const EnumReport r12 = enumerate_graphs(family_spec(12), opt);
    const double s12 = seconds_since(t0);

    bool ok = r11.complete && r12.complete && r11.classes.size() == 1 && r12.classes.size() == 1;
    if (ok) {
        ok = r11.classes[0].bytes == canonical_form(build_g1()).bytes &&
             r12.classes[0].bytes == canonical_form(build_g2()).bytes &&
             is_isomorphic(decode_graph6(r11.classes[0].bytes), build_g1()) &&
             is_isomorphic(decode_graph6(r12.classes[0].bytes), build_g2());
    }
    detail = "n=11: " + std::to_string(r11.classes.size()) + " class in " + fmt(s11) +
             "s, n=12: " + std::to_string(r12.classes.size()) + " class in " + fmt(s12) + "s";
    return ok && s11 < 300.0 && s12 < 300.0;
}

// 3. orders 9, 10 and 13 admit no graph of the family
bool criterion_emptiness(std::string& detail) {
    EnumOptions opt;
    opt.jobs = 4;
    const auto t0 = clock_type::now();
    bool ok = true;
    std::string counts;
    for (int n : {9, 10, 13}) {
        const EnumReport rep = enumerate_graphs(family_spec(n), opt);
        ok = ok && rep.complete && rep.classes.empty();
        counts += (counts.empty() ? "n=" : ", n=") + std::to_string(n) + ": " +
                  std::to_string(rep.classes.size());
    }
    const double total = seconds_since(t0);
    detail = counts + " classes in " + fmt(total) + "s total";
    return ok && total < 600.0;
}

// 4. the counting identities hold at every vertex of both witnesses
bool criterion_identities(std::string& detail) {
    struct Expect {
        Graph g;
        long eq1, eq2, eq3;
    };
    const std::vector<Expect> cases{{build_g1(), 6, 12, 12}, {build_g2(), 7, 12, 16}};
    bool ok = true;
    std::string seen;
    for (const auto& [g, eq1, eq2, eq3] : cases) {
        const IdentityReport rep = check_counting_identities(g, {3, 2, 1});
        ok = ok && rep.all_pass && rep.eq1_expected == eq1 && rep.eq2_expected == eq2 &&
             rep.eq3_expected == eq3 && static_cast<int>(rep.per_vertex.size()) == g.order();
        for (const auto& row : rep.per_vertex)
            ok = ok && row.pass && row.eq1 == eq1 && row.eq2 == eq2 && row.eq3 == eq3;
        seen += (seen.empty() ? "" : "; ") + std::to_string(rep.eq1_expected) + "/" +
                std::to_string(rep.eq2_expected) + "/" + std::to_string(rep.eq3_expected);
    }
    detail = "eq1/eq2/eq3 = " + seen;
    return ok;
}

// 5. g2 carries the two neighbourhood profiles (1,3,3) and (0,5,2)
bool criterion_profiles(std::string& detail) {
    const Graph g2 = build_g2();
    const std::vector<int> c{3, 2, 1};
    const std::vector<std::pair<int, int>> mixed{{3, 1}, {2, 3}, {1, 3}};
    const std::vector<std::pair<int, int>> flat{{3, 0}, {2, 5}, {1, 2}};
    const VertexSet mixed_vertices(0b100011110111);  // 0,1,2,4,5,6,7,11
    int n_mixed = 0, n_flat = 0;
    bool ok = true;
    for (int v = 0; v < g2.order(); ++v) {
        const TProfile prof = t_profile(g2, v, c);
        if (prof.counts == mixed) {
            ++n_mixed;
            ok = ok && mixed_vertices.contains(v);
        } else if (prof.counts == flat) {
            ++n_flat;
            ok = ok && !mixed_vertices.contains(v);
        } else {
            ok = false;
        }
    }
    detail = "(1,3,3) at " + std::to_string(n_mixed) + " vertices, (0,5,2) at " +
             std::to_string(n_flat);
    return ok && n_mixed == 8 && n_flat == 4;
}

// 6. cut between N(u) and the non-neighbours is k(k-1) = 12 at every vertex
bool criterion_cuts(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (const Graph& g : {build_g1(), build_g2()}) {
        const VertexSet all = VertexSet::first_n(g.order());
        for (int u = 0; u < g.order(); ++u) {
            VertexSet closed = g.neighbours(u);
            closed.add(u);
            ok = ok && cut_size(g, g.neighbours(u), all - closed) == 12;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " vertex cuts, all of size 12";
    return ok;
}

// 7. h8 has independence number 5 with a unique maximum set, by full scan
bool criterion_h8(std::string& detail) {
    const Graph h8 = build_h8();
    if (h8.order() != 7) return false;
    int best = 0, best_count = 0;
    unsigned witness = 0;
    for (unsigned mask = 0; mask < 128; ++mask) {
        bool independent = true;
        for (int u = 0; u < 7 && independent; ++u)
            for (int v = u + 1; v < 7 && independent; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && h8.adjacent(u, v)) independent = false;
        if (!independent) continue;
        const int size = std::popcount(mask);
        if (size > best) {
            best = size;
            best_count = 1;
            witness = mask;
        } else if (size == best) {
            ++best_count;
        }
    }
    std::ostringstream os;
    os << "alpha = " << best << ", " << best_count << " maximum set(s), witness {";
    bool first = true;
    for (int v = 0; v < 7; ++v)
        if (witness >> v & 1) {
            os << (first ? "" : ",") << v;
            first = false;
        }
    os << "}";
    detail = os.str();
    return best == 5 && best_count == 1 && witness == 0b1101110 &&
           independence_number(h8) == 5;
}

// 8. generator output equals the labeled-sweep oracle across the small grid
bool criterion_oracle_grid(std::string& detail) {
    const auto t0 = clock_type::now();
    int specs = 0;
    bool ok = true;
    std::string first_bad;
    for (int k : {2, 3}) {
        for (unsigned mask = 1; mask < (1u << (k + 1)); ++mask) {
            std::vector<int> c;
            for (int value = 0; value <= k; ++value)
                if (mask >> value & 1) c.push_back(value);
            for (int n = k + 1; n <= 8; ++n) {
                if (n * k % 2 != 0) continue;
                EnumSpec spec;
                spec.n = n;
                spec.k = k;
                spec.a = 0;
                spec.c_allowed = c;
                const EnumReport fast = enumerate_graphs(spec);
                const EnumReport oracle = brute_force_enumerate(spec);
                ++specs;
                if (class_bytes(fast) != class_bytes(oracle) && first_bad.empty()) {
                    ok = false;
                    first_bad = " first mismatch at n=" + std::to_string(n) + " k=" +
                                std::to_string(k);
                }
            }
        }
    }
    const double total = seconds_since(t0);
    detail = std::to_string(specs) + " specs byte-identical in " + fmt(total) + "s" + first_bad;
    return ok && total < 600.0;
}

// 9. canonical forms are relabeling-invariant; isomorphism agrees with the
//    permutation sweep on a mixed corpus
bool criterion_canonical(std::string& detail) {
    std::mt19937 rng(20260815u);
    std::vector<Graph> invariance;
    for (const std::string& name : catalog_names()) invariance.push_back(build_named(name));
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const double p = 0.25 + 0.5 * (static_cast<double>(i) / 49.0);
        invariance.push_back(test_oracles::random_graph(rng, n, p));
    }
    bool ok = true;
    long relabelings = 0;
    for (const Graph& g : invariance) {
        const std::string base = canonical_form(g).bytes;
        for (int rep = 0; rep < 1000; ++rep) {
            const auto perm = test_oracles::random_permutation(rng, g.order());
            if (canonical_form(apply_permutation(g, perm)).bytes != base) ok = false;
            ++relabelings;
        }
    }

    std::vector<Graph> corpus;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + i % 7;
        const double p = 0.2 + 0.15 * (i % 5);
        corpus.push_back(test_oracles::random_graph(rng, n, p));
    }
    long pairs = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (is_isomorphic(corpus[i], corpus[j]) !=
                test_oracles::perm_isomorphic(corpus[i], corpus[j]))
                ok = false;
            ++pairs;
        }
    detail = std::to_string(invariance.size()) + " graphs x 1000 relabelings (" +
             std::to_string(relabelings) + " checks), " + std::to_string(pairs) +
             " isomorphism pairs";
    return ok;
}

// 10. closed-form order bounds for k = 4..12, rejection below
bool criterion_bounds(std::string& detail) {
    const std::vector<Bounds> expected{{4, 11, 12},  {5, 14, 20},   {6, 16, 31},
                                       {7, 18, 44},  {8, 20, 59},   {9, 22, 76},
                                       {10, 24, 95}, {11, 26, 116}, {12, 28, 139}};
    bool ok = true;
    for (const Bounds& want : expected) ok = ok && sqsr_bounds(want.k) == want;
    bool rejected = false;
    try {
        sqsr_bounds(3);
    } catch (const DegreeTooSmall&) {
        rejected = true;
    }
    detail = "k=4..12 match, k=3 rejected";
    return ok && rejected;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria{
        {"witness graphs match their declared parameters in under 1ms", criterion_witness_match},
        {"orders 11 and 12 each yield exactly one class, g1 and g2", criterion_uniqueness},
        {"orders 9, 10 and 13 yield no graphs", criterion_emptiness},
        {"counting identities hold at every vertex of g1 and g2", criterion_identities},
        {"g2 shows exactly the profiles (1,3,3) and (0,5,2)", criterion_profiles},
        {"every neighbourhood cut has k(k-1) = 12 edges", criterion_cuts},
        {"h8 has a unique maximum independent set of size 5", criterion_h8},
        {"generator agrees with the labeled-sweep oracle on the grid", criterion_oracle_grid},
        {"canonical forms are invariant and isomorphism matches brute force", criterion_canonical},
        {"order bounds match the closed form for k = 4..12", criterion_bounds},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string det;
        bool pass = false;
        try {
            pass = criteria[i].run(det);
        } catch (const std::exception& e) {
            det = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << i + 1 << ": "
                  << criteria[i].label << " [" << det << "]\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures;
}
