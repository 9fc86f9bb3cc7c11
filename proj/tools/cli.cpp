#include "cli.hpp"

#include "unicell/counting.hpp"
#include "unicell/map.hpp"
#include "unicell/oracle.hpp"
#include "unicell/sampler.hpp"
#include "unicell/surgery.hpp"
#include "unicell/trisection.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <thread>

namespace unicell::cli {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

/* ---------------- verification suites ---------------- */

struct Suite {
    bool ok = true;
    long long work = 0;
    std::vector<long long> per_n; // visit counts, index n-1 (trisection suite)
    std::vector<std::string> examples;

    void fail(const std::string& example) {
        ok = false;
        if (examples.size() < 3) examples.push_back(example);
    }
    void merge(const Suite& o) {
        ok = ok && o.ok;
        work += o.work;
        for (const std::string& e : o.examples)
            if (examples.size() < 3) examples.push_back(e);
    }
};

/* Run a per-map check over all maps with exactly n edges, optionally sharded
   over threads (the shards split on the first pairing decision). */
template <class PerMap>
void sweep_maps(int n, int shards, Suite& suite, PerMap per_map) {
    if (shards <= 1) {
        enumerate_maps(n, [&](const UnicellularMap& m) {
            suite.work++;
            per_map(m, suite);
        });
        return;
    }
    if (n > oracle_size_bound()) // surface the bound on this thread
        enumerate_maps(n, [](const UnicellularMap&) {});
    const int slices = 2 * n - 1;
    const int workers = std::min(shards, slices);
    std::vector<Suite> partial(slices);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; t++) {
        pool.emplace_back([&, t] {
            for (int s = t; s < slices; s += workers) {
                enumerate_maps_shard(n, s, [&](const UnicellularMap& m) {
                    partial[s].work++;
                    per_map(m, partial[s]);
                });
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const Suite& p : partial) suite.merge(p);
}

Suite suite_trisection(int max_n, int shards) {
    Suite s;
    for (int n = 1; n <= max_n; n++) {
        long long before = s.work;
        sweep_maps(n, shards, s, [n](const UnicellularMap& m, Suite& st) {
            TourRank rank = tour_rank(m);
            int tri = 0, down = 0;
            for (int h = 0; h < m.half_edges(); h++) {
                StepKind k = step_kind(m, rank, h);
                if (k != StepKind::UpStep) down++;
                if (k == StepKind::Trisection) tri++;
            }
            bool bad = tri != 2 * genus(m) || down != n + 1;
            // every trisection must also carry a well-formed frame
            if (!bad) {
                try {
                    for (int h : trisections(m)) trisection_frame(m, rank, h);
                } catch (const MapError&) {
                    bad = true;
                }
            }
            if (bad) st.fail(serialize(m));
        });
        s.per_n.push_back(s.work - before);
    }
    return s;
}

bool meets_before_cyclic(const TourRank& rank, int n2, int a, int b, int c) {
    int pb = (rank[b] - rank[a] + n2) % n2;
    int pc = (rank[c] - rank[a] + n2) % n2;
    return pb < pc;
}

void roundtrip_check_map(const UnicellularMap& m, Suite& st) {
    TourRank rank = tour_rank(m);
    const int H = m.half_edges();
    std::vector<int> vmin(H);
    for (int h = 0; h < H; h++) vmin[h] = min_halfedge(m, rank, h);
    std::vector<int> minima = vertex_minima(m, rank);
    const int v = (int)minima.size();

    // slice3(glue3(m, t), t) == m on every admissible half-edge triple
    for (int h1 = 0; h1 < H; h1++)
        for (int h2 = h1 + 1; h2 < H; h2++) {
            if (vmin[h1] == vmin[h2]) continue;
            for (int h3 = h2 + 1; h3 < H; h3++) {
                if (vmin[h3] == vmin[h1] || vmin[h3] == vmin[h2]) continue;
                int t[3] = {h1, h2, h3};
                std::sort(t, t + 3, [&](int x, int y) { return rank[x] < rank[y]; });
                UnicellularMap glued = glue3(m, t[0], t[1], t[2]);
                st.work++;
                if (slice3(glued, t[0], t[1], t[2]) != m) {
                    st.fail(serialize(m) + " glue at " + join(std::vector<int>(t, t + 3), ","));
                    return;
                }
            }
        }

    // glue3(slice3(m, t), t sorted by new rank) == m on every intertwined triple
    for (int mn : minima) {
        std::vector<int> rot = vertex_of(m, mn);
        int deg = (int)rot.size();
        for (int i = 0; i < deg; i++)
            for (int j = i + 1; j < deg; j++)
                for (int k = j + 1; k < deg; k++) {
                    int a = rot[i], b = rot[j], c = rot[k];
                    if (meets_before_cyclic(rank, H, a, b, c)) continue; // not intertwined
                    UnicellularMap cut = slice3(m, a, b, c);
                    TourRank crank = tour_rank(cut);
                    int t[3] = {a, b, c};
                    std::sort(t, t + 3, [&](int x, int y) { return crank[x] < crank[y]; });
                    st.work++;
                    if (glue3(cut, t[0], t[1], t[2]) != m) {
                        st.fail(serialize(m) + " slice at " +
                                join(std::vector<int>(t, t + 3), ","));
                        return;
                    }
                }
    }

    // phi_inv(phi(m, triple)) == (m, triple) on every vertex triple
    for (int i = 0; i < v; i++)
        for (int j = i + 1; j < v; j++)
            for (int k = j + 1; k < v; k++) {
                MarkedTrisection mt = phi(m, minima[i], minima[j], minima[k]);
                MarkedVertices back = phi_inv(mt);
                st.work++;
                if (back.map != m ||
                    back.marks != std::vector<int>{minima[i], minima[j], minima[k]}) {
                    st.fail(serialize(m) + " phi at " + join(back.marks, ","));
                    return;
                }
            }

    // psi_inv(psi(x)) == x on every admissible (v1, v2, tau)
    std::vector<int> tris = trisections(m);
    for (int tau : tris) {
        int tv = vmin[tau];
        for (int i = 0; i < v; i++) {
            if (minima[i] == tv || rank[minima[i]] > rank[tv]) continue;
            for (int j = i + 1; j < v; j++) {
                if (minima[j] == tv || rank[minima[j]] > rank[tv]) continue;
                PsiInput in{m, minima[i], minima[j], tau};
                MarkedTrisection mt = psi(in);
                st.work++;
                if (psi_inv(mt) != in) {
                    st.fail(serialize(m) + " psi at " + std::to_string(tau));
                    return;
                }
            }
        }
    }

    // phi(phi_inv(..)) / psi(psi_inv(..)) == identity on every trisection
    for (int tau : tris) {
        TrisectionInfo f = trisection_frame(m, rank, tau);
        MarkedTrisection mt{m, tau};
        st.work++;
        if (f.kind == TrisectionKind::TypeI) {
            MarkedVertices mv = phi_inv(mt);
            if (phi(mv.map, mv.marks[0], mv.marks[1], mv.marks[2]) != mt) {
                st.fail(serialize(m) + " phi_inv at " + std::to_string(tau));
                return;
            }
        } else {
            PsiInput in = psi_inv(mt);
            if (psi(in) != mt) {
                st.fail(serialize(m) + " psi_inv at " + std::to_string(tau));
                return;
            }
        }
    }

    // xi(lambda(mv)) == mv on every odd vertex subset of size >= 3
    for (unsigned mask = 0; mask < (1u << v); mask++) {
        int bits = __builtin_popcount(mask);
        if (bits < 3 || bits % 2 == 0) continue;
        MarkedVertices mv{m, {}};
        for (int i = 0; i < v; i++)
            if (mask & (1u << i)) mv.marks.push_back(minima[i]);
        MarkedTrisection mt = lambda(mv);
        st.work++;
        if (xi(mt) != mv) {
            st.fail(serialize(m) + " lambda at " + join(mv.marks, ","));
            return;
        }
    }

    // lambda(xi(mt)) == mt on every marked trisection
    for (int tau : tris) {
        MarkedTrisection mt{m, tau};
        MarkedVertices mv = xi(mt);
        st.work++;
        if (lambda(mv) != mt) {
            st.fail(serialize(m) + " xi at " + std::to_string(tau));
            return;
        }
    }
}

Suite suite_roundtrip(int max_n, int shards) {
    Suite s;
    for (int n = 1; n <= max_n; n++)
        sweep_maps(n, shards, s, [](const UnicellularMap& m, Suite& st) {
            st.work--; // count round trips, not maps
            roundtrip_check_map(m, st);
        });
    return s;
}

Suite suite_hz_recurrence(int max_n) {
    Suite s;
    for (int n = 2; n <= max_n; n++)
        for (int g = 0; g <= (n + 3) / 2; g++) {
            s.work++;
            if (!hz_recurrence_check(g, n))
                s.fail("g=" + std::to_string(g) + " n=" + std::to_string(n));
        }
    return s;
}

Suite suite_hz_formula(int max_n) {
    Suite s;
    for (int n = 1; n <= max_n; n++) {
        s.work++;
        if (!hz_formula_check(n)) s.fail("n=" + std::to_string(n));
    }
    return s;
}

Suite suite_bipartite(int max_n) {
    Suite s;
    for (int n = 1; n <= max_n; n++) {
        auto censusb = bipartite_census(n);
        // every (g,i,j) consistent with n edges, populated or not
        for (int g = 0; 2 * g <= n; g++)
            for (int i = 1; i + 2 * g <= n + 1; i++) {
                int j = n + 1 - 2 * g - i;
                if (j < 1) continue;
                s.work++;
                auto it = censusb.find({g, i, j});
                ExactInt brute = it == censusb.end() ? ExactInt(0) : it->second;
                if (brute != beta_bipartite(g, i, j))
                    s.fail("g=" + std::to_string(g) + " i=" + std::to_string(i) +
                           " j=" + std::to_string(j) + " brute=" + brute.str());
            }
        // and nothing outside those cells
        for (const auto& [key, cnt] : censusb)
            if (key[1] + key[2] + 2 * key[0] - 1 != n)
                s.fail("cell (" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                       std::to_string(key[2]) + ") inconsistent with n=" + std::to_string(n));
    }
    return s;
}

Suite suite_precubic(int max_n) {
    Suite s;
    for (int n = 1; n <= max_n; n++) {
        std::vector<ExactInt> censusp = precubic_census(n);
        for (int g = 0; g < (int)censusp.size(); g++) {
            s.work++;
            ExactInt expect = (n % 2 == 1) ? xi_precubic(g, n) : ExactInt(0);
            if (censusp[g] != expect)
                s.fail("g=" + std::to_string(g) + " n=" + std::to_string(n) + " brute=" +
                       censusp[g].str() + " formula=" + expect.str());
        }
    }
    return s;
}

/* ---------------- subcommands ---------------- */

int report(const Suite& s, const std::string& name, int max_n, const std::string& detail,
           std::ostream& out) {
    out << (s.ok ? "PASS " : "FAIL ") << name << " n<=" << max_n << " (" << detail << ")\n";
    for (const std::string& e : s.examples) out << e << "\n";
    return s.ok ? 0 : 1;
}

int do_verify(const std::string& suite, int max_n, int shards, std::ostream& out) {
    if (suite == "trisection") {
        Suite s = suite_trisection(max_n, shards);
        return report(s, suite, max_n, join(s.per_n, "+") + " maps", out);
    }
    if (suite == "roundtrip") {
        Suite s = suite_roundtrip(max_n, shards);
        return report(s, suite, max_n, std::to_string(s.work) + " round trips", out);
    }
    if (suite == "hz-recurrence") {
        Suite s = suite_hz_recurrence(max_n);
        return report(s, suite, max_n, std::to_string(s.work) + " identities", out);
    }
    if (suite == "hz-formula") {
        Suite s = suite_hz_formula(max_n);
        return report(s, suite, max_n, std::to_string(s.work) + " identities", out);
    }
    if (suite == "bipartite") {
        Suite s = suite_bipartite(max_n);
        return report(s, suite, max_n, std::to_string(s.work) + " cells", out);
    }
    Suite s = suite_precubic(max_n);
    return report(s, suite, max_n, std::to_string(s.work) + " cells", out);
}

void do_inspect_one(const std::string& line, int diagram_h, std::ostream& out) {
    UnicellularMap m = line.find(" l:") != std::string::npos ? deserialize_labeled(line).map
                                                             : deserialize(line);
    TourRank rank = tour_rank(m);
    out << "n=" << m.n << " v=" << vertex_count(m) << " genus=" << genus(m)
        << " root=" << m.root << "\n";

    std::vector<int> tour(m.half_edges());
    for (int h = 0; h < m.half_edges(); h++) tour[rank[h]] = h;
    out << "tour: " << join(tour, ",") << "\n";

    for (int mn : vertex_minima(m, rank)) {
        std::vector<int> cyc = vertex_of(m, mn);
        out << "vertex min=" << mn << " cycle=(" << join(cyc, " ") << ")\n";
    }

    out << "steps:";
    for (int h = 0; h < m.half_edges(); h++) {
        StepKind k = step_kind(m, rank, h);
        out << " " << h << ":"
            << (k == StepKind::UpStep ? "up" : k == StepKind::DownStep ? "down" : "trisection");
    }
    out << "\n";

    std::vector<int> tris = trisections(m);
    if (tris.empty()) {
        out << "trisections: none\n";
    } else {
        for (int tau : tris) {
            TrisectionInfo f = trisection_frame(m, rank, tau);
            out << "tau=" << f.tau << " b1=" << f.b1 << " b2=" << f.b2 << " b3=" << f.b3
                << " type=" << (f.kind == TrisectionKind::TypeI ? "I" : "II") << "\n";
        }
    }

    if (diagram_h >= 0) {
        if (diagram_h >= m.half_edges())
            throw MapError(Errc::ParseError, "diagram half-edge out of range");
        Diagram d = diagram(m, diagram_h);
        out << "diagram start=" << diagram_h << ": cols=" << join(d.columns, ",")
            << " ranks=" << join(d.rows, ",") << "\n";
    }
}

int do_surgery(const std::string& op, const std::string& line, const std::vector<int>& at,
               const std::vector<int>& verts, int tau, bool tau_given, std::ostream& out,
               std::ostream& err) {
    bool labeled = line.find(" l:") != std::string::npos;
    if (labeled && op != "lambda") {
        err << "surgery: labelled input is only supported for --op lambda\n";
        return 1;
    }

    if (op == "lambda" && labeled) {
        LabeledUnicellularMap lm = deserialize_labeled(line);
        if (verts.empty()) {
            err << "surgery: --op lambda needs --vertices\n";
            return 2;
        }
        LabeledMarkedTrisection res = lambda_labeled(lm, verts);
        out << serialize_labeled(res.map) << "\n";
        out << "tau=" << res.tau << "\n";
        return 0;
    }

    UnicellularMap m = deserialize(line);
    auto need = [&](bool cond, const char* msg) {
        if (!cond) {
            err << "surgery: " << msg << "\n";
            return false;
        }
        return true;
    };

    if (op == "glue3" || op == "slice3") {
        if (!need(at.size() == 3, "--at needs exactly three half-edges")) return 2;
        UnicellularMap res =
            op == "glue3" ? glue3(m, at[0], at[1], at[2]) : slice3(m, at[0], at[1], at[2]);
        out << serialize(res) << "\n";
        return 0;
    }
    if (op == "phi") {
        if (!need(verts.size() == 3, "--vertices needs exactly three vertices")) return 2;
        MarkedTrisection res = phi(m, verts[0], verts[1], verts[2]);
        out << serialize(res.map) << "\n" << "tau=" << res.tau << "\n";
        return 0;
    }
    if (op == "phi-inv") {
        if (!need(tau_given, "--tau is required")) return 2;
        MarkedVertices res = phi_inv(MarkedTrisection{m, tau});
        out << serialize(res.map) << "\n" << "marks=" << join(res.marks, ",") << "\n";
        return 0;
    }
    if (op == "psi") {
        if (!need(verts.size() == 2 && tau_given, "--vertices v1,v2 and --tau are required"))
            return 2;
        MarkedTrisection res = psi(PsiInput{m, verts[0], verts[1], tau});
        out << serialize(res.map) << "\n" << "tau=" << res.tau << "\n";
        return 0;
    }
    if (op == "psi-inv") {
        if (!need(tau_given, "--tau is required")) return 2;
        PsiInput res = psi_inv(MarkedTrisection{m, tau});
        out << serialize(res.map) << "\n"
            << "marks=" << res.v1 << "," << res.v2 << "\n"
            << "tau=" << res.tau << "\n";
        return 0;
    }
    if (op == "lambda") {
        if (!need(!verts.empty(), "--vertices is required")) return 2;
        MarkedTrisection res = lambda(MarkedVertices{m, verts});
        out << serialize(res.map) << "\n" << "tau=" << res.tau << "\n";
        return 0;
    }
    // xi
    if (!need(tau_given, "--tau is required")) return 2;
    MarkedVertices res = xi(MarkedTrisection{m, tau});
    out << serialize(res.map) << "\n" << "marks=" << join(res.marks, ",") << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"surgery calculus on one-face combinatorial maps", "unicell"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count genus-g maps with n edges");
    int c_genus = 0, c_edges = 0;
    std::string c_method = "identity";
    count->add_option("--genus", c_genus, "genus")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--edges", c_edges, "edge count")->required()->check(CLI::PositiveNumber);
    count->add_option("--method", c_method, "counting route")
        ->check(CLI::IsMember({"identity", "walsh", "polynomial", "brute"}));

    // count-bipartite
    auto* countb = app.add_subcommand("count-bipartite",
                                      "count bipartite maps by genus and vertex colors");
    int b_genus = 0, b_white = 0, b_black = 0;
    std::string b_method = "recursion";
    countb->add_option("--genus", b_genus, "genus")->required()->check(CLI::NonNegativeNumber);
    countb->add_option("--white", b_white, "white vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    countb->add_option("--black", b_black, "black vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    countb->add_option("--method", b_method, "counting route")
        ->check(CLI::IsMember({"recursion", "brute"}));

    // count-precubic
    auto* countp = app.add_subcommand("count-precubic",
                                      "count maps with all vertex degrees 1 or 3");
    int p_genus = 0, p_edges = 0;
    std::string p_method = "formula";
    countp->add_option("--genus", p_genus, "genus")->required()->check(CLI::NonNegativeNumber);
    countp->add_option("--edges", p_edges, "edge count (odd)")
        ->required()
        ->check(CLI::PositiveNumber);
    countp->add_option("--method", p_method, "counting route")
        ->check(CLI::IsMember({"formula", "brute"}));

    // sample
    auto* sample = app.add_subcommand("sample", "draw uniform genus-g maps with n edges");
    int s_genus = 0, s_edges = 0, s_count = 1;
    std::uint64_t s_seed = 0;
    std::string s_format = "full";
    sample->add_option("--genus", s_genus, "genus")->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--edges", s_edges, "edge count")->required()->check(CLI::PositiveNumber);
    sample->add_option("--count", s_count, "number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--seed", s_seed, "random seed");
    sample->add_option("--format", s_format, "output form")
        ->check(CLI::IsMember({"full", "canonical"}));

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustive ground-truth suites");
    std::string v_suite;
    int v_max = 0, v_shards = 1;
    verify->add_option("--suite", v_suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"trisection", "roundtrip", "hz-recurrence", "hz-formula",
                               "bipartite", "precubic"}));
    verify->add_option("--max-edges", v_max, "largest edge count swept")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--shards", v_shards, "parallel enumeration shards")
        ->check(CLI::PositiveNumber);

    // inspect
    auto* inspect = app.add_subcommand("inspect", "report structure of a map line");
    std::string i_map;
    int i_diagram = -1;
    inspect->add_option("map", i_map, "map line (default: read stdin)");
    inspect->add_option("--diagram", i_diagram, "dump the diagram of this half-edge's vertex")
        ->check(CLI::NonNegativeNumber);

    // surgery
    auto* surgery = app.add_subcommand("surgery", "apply one surgery to a map line");
    std::string g_op, g_map;
    std::vector<int> g_at, g_verts;
    int g_tau = -1;
    surgery->add_option("--op", g_op, "operation")
        ->required()
        ->check(CLI::IsMember(
            {"glue3", "slice3", "phi", "phi-inv", "psi", "psi-inv", "lambda", "xi"}));
    surgery->add_option("--map", g_map, "map line (default: read stdin)");
    surgery->add_option("--at", g_at, "three half-edges a1,a2,a3")->delimiter(',');
    surgery->add_option("--vertices", g_verts, "vertex list v1,v2,...")->delimiter(',');
    auto* tau_opt = surgery->add_option("--tau", g_tau, "trisection half-edge")
                        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) {
            if (c_edges + 1 - 2 * c_genus < 1) throw MapError(Errc::GenusTooLarge);
            ExactInt result;
            if (c_method == "identity") result = epsilon_identity(c_genus, c_edges);
            else if (c_method == "walsh") result = epsilon_walsh(c_genus, c_edges);
            else if (c_method == "polynomial") result = epsilon_via_r(c_genus, c_edges);
            else result = census(c_edges).counts[c_genus];
            out << result << "\n";
            return 0;
        }
        if (countb->parsed()) {
            ExactInt result;
            if (b_method == "recursion") {
                result = beta_bipartite(b_genus, b_white, b_black);
            } else {
                auto censusb = bipartite_census(b_white + b_black + 2 * b_genus - 1);
                auto it = censusb.find({b_genus, b_white, b_black});
                result = it == censusb.end() ? ExactInt(0) : it->second;
            }
            out << result << "\n";
            return 0;
        }
        if (countp->parsed()) {
            if (p_edges % 2 == 0)
                throw MapError(Errc::ParseError, "edge count must be odd for precubic maps");
            ExactInt result;
            if (p_method == "formula") {
                result = xi_precubic(p_genus, p_edges);
            } else {
                std::vector<ExactInt> censusp = precubic_census(p_edges);
                result = p_genus < (int)censusp.size() ? censusp[p_genus] : ExactInt(0);
            }
            out << result << "\n";
            return 0;
        }
        if (sample->parsed()) {
            if (s_edges + 1 - 2 * s_genus < 1) throw MapError(Errc::GenusTooLarge);
            RandomSource rng(s_seed);
            for (int k = 0; k < s_count; k++) {
                UnicellularMap m = sample_map(s_genus, s_edges, rng);
                out << (s_format == "canonical" ? serialize_canonical(m) : serialize(m)) << "\n";
            }
            return 0;
        }
        if (verify->parsed()) return do_verify(v_suite, v_max, v_shards, out);
        if (inspect->parsed()) {
            if (!i_map.empty()) {
                do_inspect_one(i_map, i_diagram, out);
            } else {
                std::string line;
                while (std::getline(in, line))
                    if (!line.empty()) do_inspect_one(line, i_diagram, out);
            }
            return 0;
        }
        // surgery
        std::string line = g_map;
        if (line.empty() && !std::getline(in, line))
            throw MapError(Errc::ParseError, "no map line on stdin");
        return do_surgery(g_op, line, g_at, g_verts, g_tau, !tau_opt->empty(), out, err);
    } catch (const MapError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << e.what() << "\n";
        return 1;
    }
}

} // namespace unicell::cli
