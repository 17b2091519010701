// Command-line front end: reproducible percolation experiments on the
// permutahedron, emitting CSV or JSON with a fixed field order.
//
// Determinism contract: a given (subcommand, flags, --seed) pair produces
// byte-identical output regardless of --threads. Trials use seeds
// base, base+1, ... and results are buffered in trial order before any
// aggregation or printing.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permuperc/branching.hpp"
#include "permuperc/face.hpp"
#include "permuperc/io.hpp"
#include "permuperc/isoperimetry.hpp"
#include "permuperc/percolation.hpp"
#include "permuperc/permutation.hpp"
#include "permuperc/pfs.hpp"
#include "permuperc/random.hpp"
#include "permuperc/spectral.hpp"
#include "permuperc/trees.hpp"

using namespace permuperc;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format;  // resolved per subcommand when empty
    std::string out;     // empty = stdout
};

std::string resolve_format(const GlobalOpts& g, const char* preferred) {
    if (g.format.empty()) return preferred;
    if (g.format != "csv" && g.format != "json")
        throw std::invalid_argument("--format must be csv or json");
    return g.format;
}

void write_output(const GlobalOpts& g, const std::string& body) {
    if (g.out.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open --out file: " + g.out);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
}

struct MeanErr {
    double mean = 0.0;
    double se = 0.0;
};

MeanErr mean_stderr(const std::vector<double>& xs) {
    MeanErr r;
    if (xs.empty()) return r;
    double s = 0.0;
    for (const double x : xs) s += x;
    r.mean = s / static_cast<double>(xs.size());
    if (xs.size() >= 2) {
        double v = 0.0;
        for (const double x : xs) v += (x - r.mean) * (x - r.mean);
        const auto m = static_cast<double>(xs.size());
        r.se = std::sqrt(v / (m - 1.0) / m);
    }
    return r;
}

// Runs fn(0..trials-1) across the thread pool; the result vector is indexed
// by trial, so downstream aggregation order never depends on scheduling.
template <typename R, typename Fn>
std::vector<R> run_trials(long long trials, unsigned threads, Fn&& fn) {
    std::vector<R> out(static_cast<std::size_t>(trials));
    const auto workers =
        static_cast<unsigned>(std::min<long long>(std::max(1u, threads), trials));
    if (workers <= 1) {
        for (long long i = 0; i < trials; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (long long i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
                out[static_cast<std::size_t>(i)] = fn(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

std::string echo_line(JsonObject cfg) { return "# " + cfg.close() + "\n"; }

// The echo names the experiment configuration only: runtime plumbing such
// as --threads and --out never changes results, so it stays out of the line
// and output is byte-identical across thread counts.
JsonObject base_config(std::string_view command, const GlobalOpts& g, std::string_view fmt) {
    JsonObject j;
    j.str("command", command).num("seed", g.seed).str("format", fmt);
    return j;
}

// Exactly one of --p/--c; the other is derived via p = c/n.
void resolve_pc(bool has_p, bool has_c, int n, double& p, double& c) {
    if (has_p == has_c)
        throw std::invalid_argument("exactly one of --p or --c is required");
    if (has_c) {
        p = c / static_cast<double>(n);
    } else {
        c = p * static_cast<double>(n);
    }
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("resolved p outside [0,1]");
}

double lambda_of(int n, double p) {
    return static_cast<double>(host_vertex_count(n)) * std::pow(1.0 - p, n);
}

// Solve lambda = (n+1)! (1-p)^n for p.
double p_from_lambda(int n, double lambda) {
    const auto total = static_cast<double>(host_vertex_count(n));
    if (!(lambda >= 0.0) || lambda > total)
        throw std::invalid_argument("lambda target infeasible for this n");
    if (lambda == 0.0) return 1.0;
    return 1.0 - std::exp((std::log(lambda) - std::log(total)) / static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// percolate

int cmd_percolate(const GlobalOpts& g, int n, bool has_p, bool has_c, double p, double c,
                  std::uint64_t r) {
    resolve_pc(has_p, has_c, n, p, c);
    if (r == 0) r = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::string fmt = resolve_format(g, "json");

    PercolationConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.seed = g.seed;
    cfg.r = r;
    const ComponentReport rep = enumerate_components(cfg);

    std::string body = echo_line(base_config("percolate", g, fmt)
                                     .num("n", n)
                                     .num("p", p)
                                     .num("c", c)
                                     .num("r", r));
    if (fmt == "json") {
        body += component_json(rep);
        body += '\n';
    } else {
        body += component_csv_header;
        body += '\n';
        body += component_csv_row(n, p, g.seed, rep);
        body += '\n';
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

constexpr std::string_view sweep_csv_header =
    "n,c,p,giant_fraction,second_largest,gamma_c,isolated,connectivity_rate,lambda,trials,"
    "giant_fraction_se,second_largest_se,isolated_se,connectivity_rate_se,"
    "second_largest_over_nlogn";

int cmd_sweep(const GlobalOpts& g, int n, std::vector<double> cgrid, std::vector<double> pgrid,
              long long trials, std::uint64_t r) {
    if (cgrid.empty() == pgrid.empty())
        throw std::invalid_argument("exactly one of --c-grid or --p-grid is required");
    if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
    const bool by_c = !cgrid.empty();
    const std::vector<double>& grid = by_c ? cgrid : pgrid;
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("grid values must be sorted ascending");
    if (r == 0) r = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    const std::string fmt = resolve_format(g, "csv");

    std::string body = echo_line(base_config("sweep", g, fmt)
                                     .num("n", n)
                                     .str("grid_kind", by_c ? "c" : "p")
                                     .raw("grid", json_double_array(grid))
                                     .num("trials", static_cast<std::int64_t>(trials))
                                     .num("r", r));
    if (fmt == "csv") {
        body += sweep_csv_header;
        body += '\n';
    }

    struct Trial {
        double gf = 0, sl = 0, iso = 0, conn = 0;
    };
    for (const double x : grid) {
        const double c = by_c ? x : x * n;
        const double p = by_c ? x / n : x;
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("grid p outside [0,1]");
        const auto rows = run_trials<Trial>(trials, g.threads, [&](long long i) {
            PercolationConfig cfg;
            cfg.n = n;
            cfg.p = p;
            cfg.seed = g.seed + static_cast<std::uint64_t>(i);
            cfg.r = r;
            const ComponentReport rep = enumerate_components(cfg);
            return Trial{rep.giant_fraction, static_cast<double>(rep.second_largest),
                         static_cast<double>(rep.isolated_count),
                         rep.connected ? 1.0 : 0.0};
        });
        std::vector<double> gf, sl, iso, conn;
        gf.reserve(rows.size());
        for (const Trial& t : rows) {
            gf.push_back(t.gf);
            sl.push_back(t.sl);
            iso.push_back(t.iso);
            conn.push_back(t.conn);
        }
        const MeanErr mgf = mean_stderr(gf), msl = mean_stderr(sl), miso = mean_stderr(iso),
                      mconn = mean_stderr(conn);
        const double gamma_c = solve_gamma(c);
        const double lam = lambda_of(n, p);
        const double nlogn = n * std::log(static_cast<double>(n));
        if (fmt == "csv") {
            body += std::to_string(n);
            for (const double v : {c, p, mgf.mean, msl.mean, gamma_c, miso.mean, mconn.mean, lam}) {
                body += ',';
                body += format_g9(v);
            }
            body += ',';
            body += std::to_string(trials);
            for (const double v :
                 {mgf.se, msl.se, miso.se, mconn.se, msl.mean / nlogn}) {
                body += ',';
                body += format_g9(v);
            }
            body += '\n';
        } else {
            body += JsonObject{}
                        .num("n", n)
                        .num("c", c)
                        .num("p", p)
                        .num("giant_fraction", mgf.mean)
                        .num("second_largest", msl.mean)
                        .num("gamma_c", gamma_c)
                        .num("isolated", miso.mean)
                        .num("connectivity_rate", mconn.mean)
                        .num("lambda", lam)
                        .num("trials", static_cast<std::int64_t>(trials))
                        .num("giant_fraction_se", mgf.se)
                        .num("second_largest_se", msl.se)
                        .num("isolated_se", miso.se)
                        .num("connectivity_rate_se", mconn.se)
                        .num("second_largest_over_nlogn", msl.mean / nlogn)
                        .close();
            body += '\n';
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// connectivity

constexpr std::string_view connectivity_csv_header =
    "n,lambda,p,connectivity_rate,isolated_mean,trials,connectivity_rate_se,isolated_se";

int cmd_connectivity(const GlobalOpts& g, int n, const std::vector<double>& lambdas,
                     long long trials) {
    if (lambdas.empty()) throw std::invalid_argument("--lambda requires at least one target");
    if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
    const std::string fmt = resolve_format(g, "csv");

    std::string body = echo_line(base_config("connectivity", g, fmt)
                                     .num("n", n)
                                     .raw("lambda", json_double_array(lambdas))
                                     .num("trials", static_cast<std::int64_t>(trials)));
    if (fmt == "csv") {
        body += connectivity_csv_header;
        body += '\n';
    }

    struct Trial {
        double conn = 0, iso = 0;
    };
    for (const double lambda : lambdas) {
        const double p = p_from_lambda(n, lambda);
        const auto rows = run_trials<Trial>(trials, g.threads, [&](long long i) {
            PercolationConfig cfg;
            cfg.n = n;
            cfg.p = p;
            cfg.seed = g.seed + static_cast<std::uint64_t>(i);
            const ComponentReport rep = enumerate_components(cfg);
            return Trial{rep.connected ? 1.0 : 0.0, static_cast<double>(rep.isolated_count)};
        });
        std::vector<double> conn, iso;
        for (const Trial& t : rows) {
            conn.push_back(t.conn);
            iso.push_back(t.iso);
        }
        const MeanErr mc = mean_stderr(conn), mi = mean_stderr(iso);
        if (fmt == "csv") {
            body += std::to_string(n);
            for (const double v : {lambda, p, mc.mean, mi.mean}) {
                body += ',';
                body += format_g9(v);
            }
            body += ',';
            body += std::to_string(trials);
            body += ',';
            body += format_g9(mc.se);
            body += ',';
            body += format_g9(mi.se);
            body += '\n';
        } else {
            body += JsonObject{}
                        .num("n", n)
                        .num("lambda", lambda)
                        .num("p", p)
                        .num("connectivity_rate", mc.mean)
                        .num("isolated_mean", mi.mean)
                        .num("trials", static_cast<std::int64_t>(trials))
                        .num("connectivity_rate_se", mc.se)
                        .num("isolated_se", mi.se)
                        .close();
            body += '\n';
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// hitting

int cmd_hitting(const GlobalOpts& g, const std::vector<int>& ns, long long trials,
                bool summary) {
    if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
    const std::string fmt = resolve_format(g, "csv");

    std::string body = echo_line(base_config("hitting", g, fmt)
                                     .raw("n", json_int_array(ns))
                                     .num("trials", static_cast<std::int64_t>(trials))
                                     .boolean("summary", summary));
    if (fmt == "csv")
        body += summary ? "n,trials,agreement,gap_mean,gap_max"
                        : "n,seed,t_min_deg_1,t_connect,gap,agree",
            body += '\n';

    for (const int n : ns) {
        const auto rows = run_trials<HittingTimes>(trials, g.threads, [&](long long i) {
            return hitting_times(n, g.seed + static_cast<std::uint64_t>(i));
        });
        if (summary) {
            double agree = 0, gap_sum = 0, gap_max = 0;
            for (const HittingTimes& h : rows) {
                const auto gap = static_cast<double>(h.t_connect - h.t_min_deg_1);
                agree += h.agree ? 1.0 : 0.0;
                gap_sum += gap;
                gap_max = std::max(gap_max, gap);
            }
            const auto m = static_cast<double>(rows.size());
            if (fmt == "csv") {
                body += std::to_string(n);
                body += ',';
                body += std::to_string(trials);
                body += ',';
                body += format_g9(agree / m);
                body += ',';
                body += format_g9(gap_sum / m);
                body += ',';
                body += format_g9(gap_max);
                body += '\n';
            } else {
                body += JsonObject{}
                            .num("n", n)
                            .num("trials", static_cast<std::int64_t>(trials))
                            .num("agreement", agree / m)
                            .num("gap_mean", gap_sum / m)
                            .num("gap_max", gap_max)
                            .close();
                body += '\n';
            }
        } else {
            for (long long i = 0; i < trials; ++i) {
                const HittingTimes& h = rows[static_cast<std::size_t>(i)];
                const std::uint64_t seed = g.seed + static_cast<std::uint64_t>(i);
                const std::uint64_t gap = h.t_connect - h.t_min_deg_1;
                if (fmt == "csv") {
                    body += std::to_string(n);
                    body += ',';
                    body += std::to_string(seed);
                    body += ',';
                    body += std::to_string(h.t_min_deg_1);
                    body += ',';
                    body += std::to_string(h.t_connect);
                    body += ',';
                    body += std::to_string(gap);
                    body += ',';
                    body += h.agree ? "1" : "0";
                    body += '\n';
                } else {
                    body += JsonObject{}
                                .num("n", n)
                                .num("seed", seed)
                                .num("t_min_deg_1", h.t_min_deg_1)
                                .num("t_connect", h.t_connect)
                                .num("gap", gap)
                                .boolean("agree", h.agree)
                                .close();
                    body += '\n';
                }
            }
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// pfs

int cmd_pfs(const GlobalOpts& g, int n, bool has_p, bool has_c, double p, double c,
            std::uint64_t start, const std::string& mode, std::uint64_t K, std::uint64_t tau1,
            double beta, std::uint64_t r) {
    resolve_pc(has_p, has_c, n, p, c);
    if (n < 1 || n > 18) throw std::invalid_argument("pfs: n must be in [1, 18]");
    if (start >= host_vertex_count(n)) throw std::invalid_argument("--start rank out of range");
    const std::string fmt = resolve_format(g, "json");

    PfsConfig cfg;
    cfg.p = p;
    if (mode == "two-phase") {
        cfg.mode = PfsConfig::Mode::two_phase;
        cfg.K = K ? K : truncation_K(beta, n, p);
        cfg.tau1 = tau1 ? tau1 : default_tau1(n);
    }
    if (r > 0) cfg.r = r;

    std::string body =
        echo_line(base_config("pfs", g, fmt)
                      .num("n", n)
                      .num("p", p)
                      .num("c", c)
                      .num("start", start)
                      .str("mode", mode)
                      .num("K", cfg.K)
                      .num("tau1", cfg.tau1)
                      .num("beta", beta)
                      .num("r", r));

    const FaceChain host = FaceChain::full(n);
    const Permutation v = unrank(n, start);
    const PfsState st = cfg.mode == PfsConfig::Mode::plain
                            ? pfs_explore(host, v, g.seed, cfg)
                            : pfs_prime_explore(host, v, g.seed, cfg);

    if (fmt == "json") {
        body += pfs_summary_json(st);
        body += '\n';
    } else {
        body += "round,w,frontier_size,min_face_dim\n";
        for (std::uint64_t t = 0; t < st.rounds; ++t) {
            body += std::to_string(t + 1);
            body += ',';
            body += t < st.w_after_round.size() ? std::to_string(st.w_after_round[t]) : "";
            body += ',';
            body += t < st.frontier_sizes.size() ? std::to_string(st.frontier_sizes[t]) : "";
            body += ',';
            body += t < st.min_face_dim_per_round.size()
                        ? std::to_string(st.min_face_dim_per_round[t])
                        : "";
            body += '\n';
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// iso

int cmd_iso(const GlobalOpts& g, const std::string& op, std::vector<int> ns, std::vector<int> ks,
            std::vector<int> rs, bool emit_witness) {
    const std::string fmt = resolve_format(g, "csv");
    if (ns.empty()) {
        if (op == "brute") ns = {3};
        else if (op == "halfspace") ns = {3, 5};
        else if (op == "face") ns = {5};
        else ns = {2, 5};
    }

    std::string body = echo_line(base_config("iso", g, fmt)
                                     .str("op", op)
                                     .raw("n", json_int_array(ns))
                                     .raw("k", json_int_array(ks))
                                     .raw("r", json_int_array(rs))
                                     .boolean("emit_witness", emit_witness));
    if (fmt == "csv") {
        body += emit_witness ? iso_csv_header_witness : iso_csv_header;
        body += '\n';
    }

    const auto emit = [&](int n, std::uint64_t k, double ratio,
                          const std::vector<std::uint64_t>* witness) {
        const double harper = harper_bound(n, k);
        if (fmt == "csv") {
            body += iso_csv_row(n, k, ratio, harper, emit_witness ? witness : nullptr);
            body += '\n';
        } else {
            JsonObject j;
            j.num("n", n).num("k", k).num("i_k", ratio).num("harper_bound", harper);
            if (emit_witness && witness != nullptr) j.str("witness_set", hex_rank_list(*witness));
            body += j.close();
            body += '\n';
        }
    };

    for (const int n : ns) {
        if (op == "brute") {
            std::vector<int> klist = ks;
            if (klist.empty())
                for (int k = 1; k <= (n <= 3 ? 12 : 3); ++k) klist.push_back(k);
            for (const int k : klist) {
                const IsoResult res = i_k_bruteforce(n, k);
                emit(n, static_cast<std::uint64_t>(k), res.ratio, &res.witness);
            }
        } else if (op == "halfspace") {
            const auto S = halfspace_witness(n);
            const std::uint64_t k = S.size();
            const std::uint64_t bnd = edge_boundary(n, S);
            emit(n, k, static_cast<double>(bnd) / static_cast<double>(k), &S);
        } else if (op == "face") {
            std::vector<int> rlist = rs;
            if (rlist.empty())
                for (int r = 1; 2 * r <= n + 1; ++r) rlist.push_back(r);
            for (const int r : rlist) {
                const FaceChain F = hypercube_face(n, r);
                const auto S = face_member_ranks(F);
                const std::uint64_t bnd = edge_boundary(n, S);
                emit(n, S.size(), static_cast<double>(bnd) / static_cast<double>(S.size()), &S);
            }
        } else if (op == "conjecture") {
            const ConjectureWitness w = conjecture_face_boundary(n);
            std::vector<std::vector<int>> blocks;
            for (int j = 0; j < (n + 1) / 3; ++j)
                blocks.push_back({3 * j + 1, 3 * j + 2, 3 * j + 3});
            const auto S = face_member_ranks(FaceChain(n, std::move(blocks)));
            emit(n, w.k, w.ratio, &S);
        } else {
            throw std::invalid_argument("iso: unknown --op " + op);
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// spectral

int cmd_spectral(const GlobalOpts& g, const std::vector<int>& ns) {
    const std::string fmt = resolve_format(g, "csv");
    std::string body =
        echo_line(base_config("spectral", g, fmt).raw("n", json_int_array(ns)));
    if (fmt == "csv") body += "n,lambda1,closed_form,abs_error\n";
    for (const int n : ns) {
        const double numeric = laplacian_lambda1(n);
        const double closed = lambda1_closed_form(n);
        const double err = std::fabs(numeric - closed);
        if (fmt == "csv") {
            body += std::to_string(n);
            body += ',';
            body += format_g9(numeric);
            body += ',';
            body += format_g9(closed);
            body += ',';
            body += format_g9(err);
            body += '\n';
        } else {
            body += JsonObject{}
                        .num("n", n)
                        .num("lambda1", numeric)
                        .num("closed_form", closed)
                        .num("abs_error", err)
                        .close();
            body += '\n';
        }
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// trees

int cmd_trees(const GlobalOpts& g, const std::string& op, const std::vector<int>& ns, int m_max,
              int m, long long trials) {
    const std::string fmt = resolve_format(g, "csv");
    std::string body;

    const auto emit = [&](std::string_view operation, const std::string& params, double estimate,
                          double se, long long tr) {
        if (fmt == "csv") {
            body += oracle_csv_row(operation, params, estimate, se, tr);
            body += '\n';
        } else {
            body += JsonObject{}
                        .str("operation", operation)
                        .str("params", params)
                        .num("estimate", estimate)
                        .num("stderr", se)
                        .num("trials", static_cast<std::int64_t>(tr))
                        .close();
            body += '\n';
        }
    };

    if (op == "count") {
        body = echo_line(base_config("trees", g, fmt)
                             .str("op", op)
                             .raw("n", json_int_array(ns))
                             .num("m_max", m_max));
        if (fmt == "csv") body += std::string(oracle_csv_header) + "\n";
        for (const int n : ns) {
            for (int mm = 1; mm <= m_max; ++mm) {
                const std::string params = "n=" + std::to_string(n) + ";m=" + std::to_string(mm);
                emit("rooted_tree_count", params,
                     static_cast<double>(count_rooted_trees(n, mm)), 0.0, 1);
                const TreeCountBounds b =
                    tree_count_bounds(static_cast<double>(host_vertex_count(n)), n, mm);
                emit("rooted_tree_lower",
                     params + ";valid=" + (b.lower_valid ? "1" : "0"), b.lower, 0.0, 1);
                emit("rooted_tree_upper", params, b.upper, 0.0, 1);
            }
        }
    } else if (op == "sample") {
        if (m < 2) throw std::invalid_argument("trees sample: --m >= 2 required");
        if (trials < 1) throw std::invalid_argument("--trials must be >= 1");
        body = echo_line(base_config("trees", g, fmt)
                             .str("op", op)
                             .num("m", m)
                             .num("trials", static_cast<std::int64_t>(trials)));
        if (fmt == "csv") body += std::string(oracle_csv_header) + "\n";
        struct Stat {
            double deg = 0, diam = 0;
        };
        const auto rows = run_trials<Stat>(trials, g.threads, [&](long long i) {
            const LabelledTree t = sample_uniform_tree(m, g.seed + static_cast<std::uint64_t>(i));
            return Stat{static_cast<double>(tree_max_degree(t)),
                        static_cast<double>(tree_diameter(t))};
        });
        std::vector<double> deg, diam;
        for (const Stat& s : rows) {
            deg.push_back(s.deg);
            diam.push_back(s.diam);
        }
        const MeanErr md = mean_stderr(deg), mdi = mean_stderr(diam);
        const std::string params = "m=" + std::to_string(m);
        emit("tree_max_degree", params, md.mean, md.se, trials);
        emit("tree_diameter", params, mdi.mean, mdi.se, trials);
    } else {
        throw std::invalid_argument("trees: unknown --op " + op);
    }
    write_output(g, body);
    return 0;
}

// ---------------------------------------------------------------------------
// embed-check

int cmd_embed_check(const GlobalOpts& g, const std::vector<int>& ns) {
    const std::string fmt = resolve_format(g, "csv");
    std::string body = echo_line(base_config("embed-check", g, fmt).raw("n", json_int_array(ns)));
    if (fmt == "csv") body += "n,pairs,violations,ok\n";

    bool all_ok = true;
    for (const int n : ns) {
        if (n < 1 || n > 6)
            throw std::invalid_argument("embed-check: n must be in [1, 6] (all-pairs cost)");
        const auto nverts = static_cast<std::size_t>(host_vertex_count(n));

        std::vector<InversionSet> inv;
        inv.reserve(nverts);
        std::vector<std::vector<std::uint32_t>> adj(nverts);
        for (std::size_t u = 0; u < nverts; ++u) {
            inv.emplace_back(unrank(n, u));
            for (const auto v : neighbor_ranks(n, u))
                adj[u].push_back(static_cast<std::uint32_t>(v));
        }

        std::uint64_t pairs = 0, violations = 0;
        std::vector<int> dist(nverts);
        std::vector<std::uint32_t> queue(nverts);
        for (std::size_t s = 0; s < nverts; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::size_t head = 0, tail = 0;
            dist[s] = 0;
            queue[tail++] = static_cast<std::uint32_t>(s);
            while (head < tail) {
                const std::uint32_t u = queue[head++];
                for (const std::uint32_t v : adj[u])
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        queue[tail++] = v;
                    }
            }
            for (std::size_t v = s + 1; v < nverts; ++v) {
                ++pairs;
                if (static_cast<int>(inv[s].hamming(inv[v])) != dist[v]) ++violations;
            }
        }
        const bool ok = violations == 0;
        all_ok = all_ok && ok;
        if (fmt == "csv") {
            body += std::to_string(n);
            body += ',';
            body += std::to_string(pairs);
            body += ',';
            body += std::to_string(violations);
            body += ',';
            body += ok ? "1" : "0";
            body += '\n';
        } else {
            body += JsonObject{}
                        .num("n", n)
                        .num("pairs", pairs)
                        .num("violations", violations)
                        .boolean("ok", ok)
                        .close();
            body += '\n';
        }
    }
    write_output(g, body);
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
    std::string module;
    std::string name;
    bool ok = false;
    std::string detail;
};

// BFS over the percolated subgraph under the shared edge oracle.
std::set<std::uint64_t> open_component(int n, std::uint64_t start, std::uint64_t seed, double p) {
    std::set<std::uint64_t> seen{start};
    std::vector<std::uint64_t> stack{start};
    while (!stack.empty()) {
        const std::uint64_t u = stack.back();
        stack.pop_back();
        const Permutation pu = unrank(n, u);
        for (int i = 1; i <= n; ++i) {
            const std::uint64_t v = neighbor_rank(pu, i);
            const std::uint64_t e = edge_id_from_rank(std::min(u, v), n, i);
            if (edge_open(seed, e, p) && seen.insert(v).second) stack.push_back(v);
        }
    }
    return seen;
}

void run_verify_module(const std::string& module, std::vector<Check>& checks) {
    const auto add = [&](const std::string& name, bool ok, std::string detail) {
        checks.push_back({module, name, ok, std::move(detail)});
    };

    if (module == "core") {
        {
            bool ok = true;
            for (int n = 2; n <= 5 && ok; ++n) {
                const std::uint64_t total = host_vertex_count(n);
                for (std::uint64_t r = 0; r < total && ok; ++r)
                    ok = rank_of(unrank(n, r)) == r;
            }
            add("rank/unrank roundtrip (n <= 5)", ok, ok ? "exact" : "mismatch");
        }
        {
            bool ok = true;
            for (int n = 2; n <= 5 && ok; ++n) {
                const std::uint64_t total = host_vertex_count(n);
                for (std::uint64_t r = 0; r < total && ok; ++r) {
                    const Permutation pi = unrank(n, r);
                    for (int i = 1; i <= n && ok; ++i)
                        ok = neighbor_rank(pi, i) == rank_of(apply_generator(pi, i));
                }
            }
            add("neighbor rank arithmetic matches rank(tau_i pi)", ok, ok ? "exact" : "mismatch");
        }
        {
            bool ok = true;
            for (int n = 2; n <= 4 && ok; ++n) {
                std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> streamed,
                    direct;
                for_each_host_edge(n, [&](std::uint64_t u, std::uint64_t v, std::uint64_t e) {
                    streamed.insert({u, v, e});
                });
                const std::uint64_t total = host_vertex_count(n);
                for (std::uint64_t r = 0; r < total; ++r) {
                    const Permutation pi = unrank(n, r);
                    for (int i = 1; i <= n; ++i) {
                        const std::uint64_t s = neighbor_rank(pi, i);
                        direct.insert({std::min(r, s), std::max(r, s), edge_id(pi, i)});
                    }
                }
                ok = streamed == direct && streamed.size() == host_edge_count(n);
            }
            add("edge stream equals pairwise edge ids (n <= 4)", ok, ok ? "exact" : "mismatch");
        }
        {
            std::uint64_t violations = 0;
            for (int n = 2; n <= 4; ++n) {
                const auto nverts = static_cast<std::size_t>(host_vertex_count(n));
                std::vector<InversionSet> inv;
                for (std::size_t r = 0; r < nverts; ++r) inv.emplace_back(unrank(n, r));
                for (std::size_t a = 0; a < nverts; ++a) {
                    const Permutation pa = unrank(n, a);
                    for (std::size_t b = a + 1; b < nverts; ++b)
                        if (inv[a].hamming(inv[b]) != kendall_distance(pa, unrank(n, b)))
                            ++violations;
                }
            }
            add("inversion-set embedding is an isometry (n <= 4)", violations == 0,
                std::to_string(violations) + " violations");
        }
    } else if (module == "face") {
        {
            std::mt19937_64 rng(11);
            bool ok = true;
            std::string why = "ok";
            for (int n = 2; n <= 4 && ok; ++n) {
                const FaceChain full = FaceChain::full(n);
                const std::uint64_t total = host_vertex_count(n);
                for (int t = 0; t < 150 && ok; ++t) {
                    const int k = 2 + static_cast<int>(rng() % 4);
                    std::set<std::uint64_t> picks;
                    while (static_cast<int>(picks.size()) < k) picks.insert(rng() % total);
                    std::vector<Permutation> X;
                    for (const auto r : picks) X.push_back(unrank(n, r));
                    const auto fam = project(full, X);
                    if (fam.size() != X.size()) {
                        ok = false;
                        why = "family size";
                        break;
                    }
                    for (const auto& [x, F] : fam) {
                        if (!F.contains(x)) {
                            ok = false;
                            why = "containment";
                        }
                        if (F.dimension() < n + 1 - k) {
                            ok = false;
                            why = "dimension";
                        }
                    }
                    for (auto it = fam.begin(); it != fam.end() && ok; ++it)
                        for (auto jt = std::next(it); jt != fam.end() && ok; ++jt)
                            if (!faces_disjoint(it->second, jt->second)) {
                                ok = false;
                                why = "overlap";
                            }
                }
            }
            add("projection family: disjoint, containing, dim >= m+1-k", ok, why);
        }
        {
            bool ok = true;
            const FaceChain F(4, {{2, 3}, {1, 4, 5}});
            const auto members = face_members(F);
            std::uint64_t twice_edges = 0;
            const std::set<Permutation> memset(members.begin(), members.end());
            for (const auto& pi : members)
                for (const auto& [lvl, nb] : face_neighbors(F, pi)) {
                    (void)lvl;
                    if (!memset.count(nb)) ok = false;
                    ++twice_edges;
                }
            ok = ok && twice_edges == members.size() * static_cast<std::uint64_t>(F.dimension());
            add("face subgraph is dimension-regular and closed", ok,
                "blocks {2,3},{1,4,5} in Perm(4)");
        }
    } else if (module == "perc") {
        {
            bool ok = true;
            for (const int n : {2, 3})
                for (const double p : {0.2, 0.6})
                    for (const std::uint64_t seed : {1ull, 2ull}) {
                        PercolationConfig cfg;
                        cfg.n = n;
                        cfg.p = p;
                        cfg.seed = seed;
                        const ComponentReport rep = enumerate_components(cfg);
                        std::vector<std::uint64_t> sizes;
                        std::set<std::uint64_t> visited;
                        for (std::uint64_t s = 0; s < host_vertex_count(n); ++s)
                            if (!visited.count(s)) {
                                const auto comp = open_component(n, s, seed, p);
                                visited.insert(comp.begin(), comp.end());
                                sizes.push_back(comp.size());
                            }
                        std::sort(sizes.rbegin(), sizes.rend());
                        ok = ok && sizes == rep.component_sizes;
                    }
            add("union-find components equal BFS components", ok, "n in {2,3}");
        }
        {
            int hits = 0;
            const int tr = 20000;
            for (int i = 0; i < tr; ++i) {
                PercolationConfig cfg;
                cfg.n = 2;
                cfg.p = 0.5;
                cfg.seed = static_cast<std::uint64_t>(i);
                hits += enumerate_components(cfg).connected ? 1 : 0;
            }
            const double rate = static_cast<double>(hits) / tr;
            const bool ok = std::fabs(rate - 7.0 / 64.0) <= 0.01;
            add("hexagon connectivity at p=1/2 near 7/64", ok, format_g9(rate));
        }
        {
            double sum = 0;
            const int tr = 300;
            for (int i = 0; i < tr; ++i) {
                PercolationConfig cfg;
                cfg.n = 5;
                cfg.p = 0.3;
                cfg.seed = 100 + static_cast<std::uint64_t>(i);
                sum += static_cast<double>(enumerate_components(cfg).isolated_count);
            }
            const double mean = sum / tr;
            const double exact = 720.0 * std::pow(0.7, 5);
            const bool ok = std::fabs(mean - exact) <= 3.0;
            add("isolated-vertex mean matches (n+1)!(1-p)^n", ok,
                format_g9(mean) + " vs " + format_g9(exact));
        }
    } else if (module == "pfs") {
        {
            bool ok = true;
            std::string why = "ok";
            for (const int n : {2, 3})
                for (const double p : {0.3, 0.6})
                    for (int s = 0; s < 150 && ok; ++s) {
                        const auto seed = static_cast<std::uint64_t>(s);
                        PfsConfig cfg;
                        cfg.p = p;
                        cfg.check_invariants = true;
                        const PfsState st =
                            pfs_explore(FaceChain::full(n), Permutation::identity(n), seed, cfg);
                        const auto truth = open_component(n, 0, seed, p);
                        for (const auto w : st.discovered)
                            if (!truth.count(w)) {
                                ok = false;
                                why = "escaped true component";
                            }
                    }
            add("search tree stays inside the true open component", ok, why);
        }
        {
            PfsConfig cfg;
            cfg.p = 1.0;
            const PfsState hex =
                pfs_explore(FaceChain::full(2), Permutation::identity(2), 0, cfg);
            const PfsState p4 =
                pfs_explore(FaceChain::full(4), Permutation::identity(4), 0, cfg);
            const bool ok = hex.size() == 4 && p4.size() == 16;
            add("p=1 discovery saturates at 2^n", ok,
                "hexagon " + std::to_string(hex.size()) + ", n=4 " + std::to_string(p4.size()));
        }
    } else if (module == "prob") {
        {
            bool ok = true;
            double worst = 0;
            for (const double c : {1.05, 1.1, 1.2, 1.5, 2.0, 3.0}) {
                const double gamma = solve_gamma(c);
                const double resid = std::fabs(gamma - (1.0 - std::exp(-c * gamma)));
                worst = std::max(worst, resid);
                ok = ok && resid <= 1e-12 && gamma > 0.0 && gamma < 1.0;
            }
            add("gamma(c) fixed-point residual <= 1e-12", ok, "worst " + format_g9(worst));
        }
        {
            const McEstimate est = survival_probability_mc(100, 2.0, 24, 4000, 2024);
            const double gamma = solve_gamma(2.0);
            const bool ok = std::fabs(est.estimate - gamma) <= 0.03;
            add("GW survival matches gamma(2)", ok,
                format_g9(est.estimate) + " vs " + format_g9(gamma));
        }
        {
            const McEstimate est = truncated_binomial_mean(94, 0.02, 11, 40000, 7);
            const bool ok = est.estimate - 3.0 * est.std_error >= 1.25;
            add("truncated-mean lower bound 1 + beta/4", ok,
                format_g9(est.estimate) + " - 3se >= 1.25");
        }
        {
            bool ok = true;
            const std::uint64_t hex_expect[] = {6, 12, 18, 24, 30, 36};
            for (int m = 1; m <= 6; ++m) ok = ok && count_rooted_trees(2, m) == hex_expect[m - 1];
            ok = ok && count_rooted_trees(3, 1) == 24 && count_rooted_trees(3, 2) == 72 &&
                 count_rooted_trees(3, 3) == 216;
            add("exact rooted-tree censuses (hexagon, Perm(3))", ok, ok ? "exact" : "mismatch");
        }
        {
            int counts[3] = {0, 0, 0};
            const int tr = 30000;
            for (int i = 0; i < tr; ++i) {
                const LabelledTree t = sample_uniform_tree(3, static_cast<std::uint64_t>(i));
                int center = 0;
                int deg[4] = {0, 0, 0, 0};
                for (const auto& [a, b] : t.edges) {
                    ++deg[a];
                    ++deg[b];
                }
                for (int v = 1; v <= 3; ++v)
                    if (deg[v] == 2) center = v;
                ++counts[center - 1];
            }
            bool ok = true;
            for (const int c : counts)
                ok = ok && std::fabs(static_cast<double>(c) / tr - 1.0 / 3.0) <= 0.02;
            add("uniform tree sampler hits all 3-vertex trees equally", ok,
                std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
                    std::to_string(counts[2]));
        }
    } else if (module == "iso") {
        {
            bool ok = true;
            std::string why = "ok";
            for (int k = 1; k <= 12 && ok; ++k) {
                const IsoResult res = i_k_bruteforce(3, k);
                const double bound = harper_bound(3, static_cast<std::uint64_t>(k));
                if (res.ratio < bound - 1e-12) {
                    ok = false;
                    why = "Harper violated at k=" + std::to_string(k);
                }
                if ((k == 1 || k == 2 || k == 4) && res.ratio != bound) {
                    ok = false;
                    why = "tightness failed at k=" + std::to_string(k);
                }
                if (edge_boundary(3, res.witness) != res.boundary) {
                    ok = false;
                    why = "witness recount failed";
                }
            }
            add("i_k >= 3 - log2 k with equality at k in {1,2,4}", ok, why);
        }
        {
            bool ok = true;
            for (const int n : {3, 5}) {
                const auto S = halfspace_witness(n);
                ok = ok && edge_boundary(n, S) == host_vertex_count(n - 1);
            }
            add("halfspace boundary equals n!", ok, "n in {3,5}");
        }
        {
            bool ok = true;
            for (int n = 2; n <= 5; ++n)
                for (int r = 1; 2 * r <= n + 1; ++r) {
                    const auto S = face_member_ranks(hypercube_face(n, r));
                    ok = ok && S.size() == (std::uint64_t{1} << r) &&
                         edge_boundary(n, S) == S.size() * static_cast<std::uint64_t>(n - r);
                }
            add("embedded subcube boundary equals 2^r (n-r)", ok, "n <= 5, all r");
        }
        {
            const ConjectureWitness w2 = conjecture_face_boundary(2);
            const ConjectureWitness w5 = conjecture_face_boundary(5);
            const bool ok = w2.k == 6 && w2.boundary == 0 && w5.k == 36 && w5.boundary == 36 &&
                            w5.ratio == 1.0 && w5.dimension == 4;
            add("product-of-hexagons witness boundaries", ok, "n in {2,5}");
        }
    } else if (module == "spectral") {
        {
            bool ok = true;
            double worst = 0;
            for (int n = 1; n <= 4; ++n) {
                const double err = std::fabs(laplacian_lambda1(n) - lambda1_closed_form(n));
                worst = std::max(worst, err);
                ok = ok && err <= 1e-9;
            }
            add("lambda1 equals 2 - 2cos(pi/(n+1)) to 1e-9", ok, "worst " + format_g9(worst));
        }
        {
            std::vector<std::vector<double>> L(6, std::vector<double>(6, 0.0));
            for_each_host_edge(2, [&](std::uint64_t u, std::uint64_t v, std::uint64_t) {
                L[u][u] += 1;
                L[v][v] += 1;
                L[u][v] -= 1;
                L[v][u] -= 1;
            });
            const auto ev = jacobi_eigenvalues(L);
            const double expect[] = {0, 1, 1, 3, 3, 4};
            bool ok = ev.size() == 6;
            for (int i = 0; i < 6 && ok; ++i) ok = std::fabs(ev[i] - expect[i]) <= 1e-9;
            add("hexagon Laplacian spectrum {0,1,1,3,3,4}", ok, ok ? "exact" : "mismatch");
        }
    } else {
        throw std::invalid_argument("verify: unknown module " + module);
    }
}

int cmd_verify(const GlobalOpts& g, const std::string& what) {
    static const std::vector<std::string> all = {"core", "face", "perc", "pfs",
                                                 "prob", "iso",  "spectral"};
    std::vector<std::string> todo;
    if (what == "all") todo = all;
    else if (what == "iso-spectral") todo = {"iso", "spectral"};
    else todo = {what};

    std::string body = echo_line(base_config("verify", g, "table").str("module", what));
    std::vector<Check> checks;
    for (const auto& m : todo) run_verify_module(m, checks);

    std::size_t width = 0;
    for (const Check& c : checks) width = std::max(width, c.module.size() + c.name.size());
    int failed = 0;
    for (const Check& c : checks) {
        body += c.ok ? "[ OK ] " : "[FAIL] ";
        std::string label = c.module + ": " + c.name;
        body += label;
        body.append(width + 4 - label.size() + 2, ' ');
        body += c.detail;
        body += '\n';
        failed += c.ok ? 0 : 1;
    }
    body += std::to_string(checks.size() - static_cast<std::size_t>(failed));
    body += "/" + std::to_string(checks.size()) + " checks passed\n";
    write_output(g, body);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bond percolation laboratory for permutahedron graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base seed; trial i uses seed base+i");
    app.add_option("--threads", g.threads, "worker threads for independent trials")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "write output to PATH instead of stdout");

    // percolate
    auto* percolate = app.add_subcommand("percolate", "single percolation run, full report");
    int pe_n = 7;
    double pe_p = 0.0, pe_c = 0.0;
    std::uint64_t pe_r = 0;
    percolate->add_option("--n", pe_n, "host dimension");
    auto* pe_popt = percolate->add_option("--p", pe_p, "edge retention probability");
    auto* pe_copt = percolate->add_option("--c", pe_c, "mean parameter, p = c/n");
    pe_popt->excludes(pe_copt);
    percolate->add_option("--r", pe_r, "component-size threshold (default n^2)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "giant-component sweep over a c or p grid");
    int sw_n = 7;
    std::vector<double> sw_cgrid, sw_pgrid;
    long long sw_trials = 50;
    std::uint64_t sw_r = 0;
    sweep->add_option("--n", sw_n, "host dimension");
    sweep->add_option("--c-grid", sw_cgrid, "comma-separated c values")->delimiter(',');
    sweep->add_option("--p-grid", sw_pgrid, "comma-separated p values")->delimiter(',');
    sweep->add_option("--trials", sw_trials, "trials per grid point");
    sweep->add_option("--r", sw_r, "component-size threshold (default n^2)");

    // connectivity
    auto* conn = app.add_subcommand("connectivity", "connectivity rate at isolated-count targets");
    int cn_n = 7;
    std::vector<double> cn_lambda{1.0};
    long long cn_trials = 400;
    conn->add_option("--n", cn_n, "host dimension");
    conn->add_option("--lambda", cn_lambda, "target expected isolated counts")->delimiter(',');
    conn->add_option("--trials", cn_trials, "trials per target");

    // hitting
    auto* hit = app.add_subcommand("hitting", "connectivity vs last-isolated hitting times");
    std::vector<int> hi_n{6};
    long long hi_trials = 100;
    bool hi_summary = false;
    hit->add_option("--n", hi_n, "host dimensions")->delimiter(',');
    hit->add_option("--trials", hi_trials, "process samples per n");
    hit->add_flag("--summary", hi_summary, "one aggregate row per n");

    // pfs
    auto* pfs = app.add_subcommand("pfs", "projection-first cluster search from one vertex");
    int pf_n = 7;
    double pf_p = 0.0, pf_c = 0.0, pf_beta = 1.0;
    std::uint64_t pf_start = 0, pf_K = 0, pf_tau1 = 0, pf_r = 0;
    std::string pf_mode = "plain";
    pfs->add_option("--n", pf_n, "host dimension");
    auto* pf_popt = pfs->add_option("--p", pf_p, "edge retention probability");
    auto* pf_copt = pfs->add_option("--c", pf_c, "mean parameter, p = c/n");
    pf_popt->excludes(pf_copt);
    pfs->add_option("--start", pf_start, "start vertex rank");
    pfs->add_option("--mode", pf_mode, "search variant")
        ->check(CLI::IsMember({"plain", "two-phase"}));
    pfs->add_option("--K", pf_K, "two-phase child cap (default from beta)");
    pfs->add_option("--tau1", pf_tau1, "untruncated rounds (default round(log log n))");
    pfs->add_option("--beta", pf_beta, "supercriticality used to derive K");
    pfs->add_option("--r", pf_r, "stop once r vertices are discovered");

    // iso
    auto* iso = app.add_subcommand("iso", "edge-isoperimetry scans and witnesses");
    std::string is_op = "brute";
    std::vector<int> is_n, is_k, is_r;
    bool is_witness = false;
    iso->add_option("--op", is_op, "brute | halfspace | face | conjecture")
        ->check(CLI::IsMember({"brute", "halfspace", "face", "conjecture"}));
    iso->add_option("--n", is_n, "host dimensions")->delimiter(',');
    iso->add_option("--k", is_k, "subset sizes (brute)")->delimiter(',');
    iso->add_option("--r", is_r, "subcube dimensions (face)")->delimiter(',');
    iso->add_flag("--emit-witness", is_witness, "append hex-encoded witness ranks");

    // spectral
    auto* spec = app.add_subcommand("spectral", "Laplacian gap vs closed form");
    std::vector<int> sp_n{1, 2, 3, 4};
    spec->add_option("--n", sp_n, "host dimensions (numeric solve needs n <= 4)")
        ->delimiter(',');

    // trees
    auto* trees = app.add_subcommand("trees", "tree censuses, bounds, and uniform samples");
    std::string tr_op = "count";
    std::vector<int> tr_n{2, 3};
    int tr_mmax = 6, tr_m = 0;
    long long tr_trials = 100;
    trees->add_option("--op", tr_op, "count | sample")
        ->check(CLI::IsMember({"count", "sample"}));
    trees->add_option("--n", tr_n, "host dimensions (count)")->delimiter(',');
    trees->add_option("--m-max", tr_mmax, "largest tree size to count");
    trees->add_option("--m", tr_m, "tree size (sample)");
    trees->add_option("--trials", tr_trials, "samples (sample)");

    // embed-check
    auto* embed = app.add_subcommand("embed-check", "all-pairs isometry of the cube embedding");
    std::vector<int> em_n{2, 3, 4};
    embed->add_option("--n", em_n, "host dimensions (n <= 6)")->delimiter(',');

    // verify
    auto* verify = app.add_subcommand("verify", "run oracle cross-checks, exit nonzero on failure");
    std::string ve_module = "all";
    verify
        ->add_option("module", ve_module,
                     "all | core | face | perc | pfs | prob | iso | spectral | iso-spectral")
        ->check(CLI::IsMember({"all", "core", "face", "perc", "pfs", "prob", "iso", "spectral",
                               "iso-spectral"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*percolate)
            return cmd_percolate(g, pe_n, pe_popt->count() > 0, pe_copt->count() > 0, pe_p, pe_c,
                                 pe_r);
        if (*sweep) return cmd_sweep(g, sw_n, sw_cgrid, sw_pgrid, sw_trials, sw_r);
        if (*conn) return cmd_connectivity(g, cn_n, cn_lambda, cn_trials);
        if (*hit) return cmd_hitting(g, hi_n, hi_trials, hi_summary);
        if (*pfs)
            return cmd_pfs(g, pf_n, pf_popt->count() > 0, pf_copt->count() > 0, pf_p, pf_c,
                           pf_start, pf_mode, pf_K, pf_tau1, pf_beta, pf_r);
        if (*iso) return cmd_iso(g, is_op, is_n, is_k, is_r, is_witness);
        if (*spec) return cmd_spectral(g, sp_n);
        if (*trees) return cmd_trees(g, tr_op, tr_n, tr_mmax, tr_m, tr_trials);
        if (*embed) return cmd_embed_check(g, em_n);
        if (*verify) return cmd_verify(g, ve_module);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
    return 0;
}
