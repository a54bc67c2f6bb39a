// Workbench CLI over the leelat library: codes, lattices, intersection
// reports, divergence numerics, the Lee-McEliece toy pipeline, and golden
// reproduction of the embedded example tables.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leelat/distributions.hpp"
#include "leelat/intersection.hpp"
#include "leelat/mceliece.hpp"
#include "leelat/reductions.hpp"

using json = nlohmann::ordered_json;
using namespace leelat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fmt9(double x) {
    std::ostringstream os;
    os << std::setprecision(9) << x;
    return os.str();
}

json zq_to_json(const ZqVec& v) {
    json a = json::array();
    for (auto x : v.v) a.push_back(x);
    return a;
}

json intvec_to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

ZqVec zq_from_json(const json& a, std::int64_t q) {
    std::vector<std::int64_t> v;
    for (const auto& x : a) v.push_back(x.get<std::int64_t>());
    return ZqVec(q, std::move(v));
}

IntVec intvec_from_json(const json& a) {
    IntVec v;
    for (const auto& x : a) {
        if (x.is_string())
            v.emplace_back(x.get<std::string>());
        else
            v.emplace_back(x.get<std::int64_t>());
    }
    return v;
}

LinearCode code_from_json(const json& j) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : j.at("gen"))
        rows.push_back(r.get<std::vector<std::int64_t>>());
    std::size_t n = rows.at(0).size();  // before the move: evaluation order
    return LinearCode(j.at("q").get<std::int64_t>(), n, std::move(rows));
}

LatticeBasis basis_from_json(const json& j) {
    IntMat rows;
    for (const auto& r : j.at("basis")) rows.push_back(intvec_from_json(r));
    std::size_t n = rows.at(0).size();  // before the move: evaluation order
    return LatticeBasis(n, std::move(rows));
}

// ---- golden values -------------------------------------------------------

struct ExampleRow {
    std::string label;
    LinearCode code;
    Int expected_count;
    Int expected_bound;  // -1: bound not part of the published table
    Int expected_size;
    const char* note = "";
};

std::vector<ExampleRow> example_rows() {
    std::vector<ExampleRow> rows;
    rows.push_back({"C1=<(1,1)> over Z_7", LinearCode(7, 2, {{1, 1}}), 7, 5, 7});
    rows.push_back({"C2=<(1,2)> over Z_7", LinearCode(7, 2, {{1, 2}}), 3, 3, 7});
    rows.push_back({"C3 (G3) over Z_7^3",
                    LinearCode(7, 3, {{3, 1, 2}, {3, 2, 3}}), 19, 5, 49});
    rows.push_back({"C4 (G4) over Z_13^5",
                    LinearCode(13, 5,
                               {{3, 1, 2, 5, -4}, {3, 2, 3, 6, -1},
                                {-1, 2, 5, -5, 6}}),
                    17, 3, 2197});
    rows.push_back({"C5 (G5=(1,2)) over Z_11", LinearCode(11, 2, {{1, 2}}), 5,
                    -1, 11});
    rows.push_back({"C5 (G5'=(5,-1)) over Z_11", LinearCode(11, 2, {{5, -1}}), 3,
                    -1, 11});
    rows.push_back({"C3 (G3') over Z_7^3",
                    LinearCode(7, 3, {{0, 1, 1}, {3, 0, 1}}), 20, -1, 49,
                    "published count is 20, but the intersection is closed "
                    "under negation, so its cardinality is odd; exhaustive "
                    "enumeration gives 19"});
    rows.push_back({"C3 (G3'') over Z_7^3",
                    LinearCode(7, 3, {{0, 2, 2}, {3, 2, 3}}), 9, -1, 49});
    return rows;
}

struct Table1Row {
    double b, sigma_min, kl_min, kl_tol;
};

// printed significant figures of the reference table
const Table1Row kTable1[] = {
    {0.1, 0.223609, 7.83e-8, 5e-9}, {0.5, 0.607753, 0.0886053, 1e-6},
    {1.0, 1.35696, 0.101332, 1e-5}, {2.0, 2.79918, 0.0819178, 1e-6},
    {4.0, 5.64215, 0.0749139, 1e-6}, {8.0, 11.3063, 0.0730125, 1e-6},
};

int run_repro_examples(const std::string& format) {
    auto rows = example_rows();
    bool all_ok = true;
    if (format == "csv")
        std::cout << "label,count,expected_count,bound,expected_bound,size,"
                     "expected_size,ok\n";
    for (const auto& row : rows) {
        IntersectionReport rep = intersection_report(row.code);
        bool bound_checked = row.expected_bound >= 0;
        bool ok = rep.count == row.expected_count &&
                  (!bound_checked || rep.lower_bound == row.expected_bound) &&
                  rep.upper_bound == row.expected_size;
        all_ok = all_ok && ok;
        if (format == "csv") {
            std::cout << row.label << ',' << rep.count << ','
                      << row.expected_count << ',' << rep.lower_bound << ','
                      << (bound_checked ? row.expected_bound.str() : "-") << ','
                      << rep.upper_bound << ',' << row.expected_size << ','
                      << (ok ? 1 : 0) << '\n';
        } else {
            std::cout << (ok ? "[ok]   " : "[FAIL] ") << row.label << ": count "
                      << rep.count << " (want " << row.expected_count
                      << "), bound " << rep.lower_bound;
            if (bound_checked) std::cout << " (want " << row.expected_bound << ")";
            std::cout << ", |C| " << rep.upper_bound << " (want "
                      << row.expected_size << ")";
            if (!ok && row.note[0]) std::cout << "  [" << row.note << "]";
            std::cout << '\n';
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_repro_table1() {
    bool all_ok = true;
    for (const auto& row : kTable1) {
        auto [sigma, kl] = sigma_min_discrete(row.b);
        bool ok = std::abs(sigma - row.sigma_min) <= 1e-3 * row.sigma_min &&
                  std::abs(kl - row.kl_min) <= row.kl_tol;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << "b=" << row.b
                  << " sigma_min=" << fmt9(sigma) << " (want " << row.sigma_min
                  << ") kl=" << fmt9(kl) << " (want " << row.kl_min << ")\n";
    }
    return all_ok ? kExitOk : kExitMismatch;
}

void run_figure_kl(const std::vector<double>& b_grid) {
    std::cout << "b,sigma_min,kl_min,b_sqrt2,continuous_limit\n";
    double limit = (std::log(M_PI) - 1.0) / 2.0;
    for (double b : b_grid) {
        auto [sigma, kl] = sigma_min_discrete(b);
        std::cout << fmt9(b) << ',' << fmt9(sigma) << ',' << fmt9(kl) << ','
                  << fmt9(b * std::sqrt(2.0)) << ',' << fmt9(limit) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lee metric code/lattice workbench"};
    app.require_subcommand(1);

    // ---- dist ----
    auto* dist = app.add_subcommand("dist", "divergence and marginal numerics");
    dist->require_subcommand(1);

    std::int64_t q = 7;
    double t_param = 1.0, delta = 0.5, b_param = 1.0, sigma_param = 1.0;

    auto* dist_beta = dist->add_subcommand("beta", "solve the tilt beta");
    dist_beta->add_option("-q", q)->required();
    dist_beta->add_option("-T", t_param)->required();

    auto* dist_renyi = dist->add_subcommand("renyi", "R_inf(F_T || H_delta)");
    dist_renyi->add_option("-q", q)->required();
    dist_renyi->add_option("-T", t_param)->required();
    dist_renyi->add_option("-d,--delta", delta);

    auto* dist_klc = dist->add_subcommand("kl-cont", "continuous KL(Lap || Gauss)");
    dist_klc->add_option("-b", b_param)->required();
    dist_klc->add_option("-s,--sigma", sigma_param)->required();

    auto* dist_kld = dist->add_subcommand("kl-disc", "discrete KL(Lap || Gauss)");
    dist_kld->add_option("-b", b_param)->required();
    dist_kld->add_option("-s,--sigma", sigma_param);
    bool minimize = false;
    dist_kld->add_flag("--min", minimize, "report sigma_min and the minimum");

    auto* dist_t1 = dist->add_subcommand("table1", "reproduce the KL table");
    std::vector<double> b_grid;
    auto* dist_fig = dist->add_subcommand("figure-kl", "CSV sweep of kl_min(b)");
    dist_fig->add_option("--b-grid", b_grid, "grid of b values")->delimiter(',');

    // ---- code ----
    auto* code_cmd = app.add_subcommand("code", "linear code operations");
    code_cmd->require_subcommand(1);
    std::string code_file;
    auto* code_mindist = code_cmd->add_subcommand("mindist", "minimum Lee distance");
    code_mindist->add_option("file", code_file)->required();
    auto* code_enum = code_cmd->add_subcommand("enum", "list codewords");
    code_enum->add_option("file", code_file)->required();

    // ---- lattice ----
    auto* lat_cmd = app.add_subcommand("lattice", "lattice operations");
    lat_cmd->require_subcommand(1);
    std::string lat_file, vec_json;
    std::string radius_str = "0";
    auto* lat_l1 = lat_cmd->add_subcommand("lambda1", "shortest l1 vector");
    lat_l1->add_option("file", lat_file)->required();
    lat_l1->add_option("-r,--radius", radius_str, "search radius");
    auto* lat_l2 = lat_cmd->add_subcommand("lambda2", "second minimum");
    lat_l2->add_option("file", lat_file)->required();
    lat_l2->add_option("-r,--radius", radius_str, "search radius");
    auto* lat_mem = lat_cmd->add_subcommand("member", "membership + witness");
    lat_mem->add_option("file", lat_file)->required();
    lat_mem->add_option("vector", vec_json, "JSON array")->required();
    auto* lat_det = lat_cmd->add_subcommand("det", "determinant");
    lat_det->add_option("file", lat_file)->required();

    // ---- intersect ----
    auto* int_cmd = app.add_subcommand("intersect", "code vs A_G lattice");
    int_cmd->require_subcommand(1);
    auto* int_count = int_cmd->add_subcommand("count", "intersection count");
    int_count->add_option("file", code_file)->required();
    auto* int_bound = int_cmd->add_subcommand("bound", "Minkowski-type bound");
    int_bound->add_option("file", code_file)->required();
    auto* int_rep = int_cmd->add_subcommand("report", "full JSON report");
    int_rep->add_option("file", code_file)->required();

    // ---- reduce ----
    auto* red_cmd = app.add_subcommand("reduce", "reductions batch driver");
    red_cmd->require_subcommand(1);
    std::string batch_file;
    std::string mu_str = "1";
    auto* red_lb = red_cmd->add_subcommand(
        "leedp-bdd", "LeeDP -> BDD on JSONL instances {q,gen,r,t}");
    red_lb->add_option("file", batch_file)->required();
    auto* red_bl = red_cmd->add_subcommand(
        "bdd-leedp", "BDD -> LeeDP on JSONL instances {basis,r,alpha_num,alpha_den}");
    red_bl->add_option("file", batch_file)->required();
    auto* red_bu = red_cmd->add_subcommand(
        "bdd-usvp", "BDD -> uSVP embedding on JSONL instances");
    red_bu->add_option("file", batch_file)->required();
    red_bu->add_option("--mu", mu_str, "embedding factor");
    auto* red_dc = red_cmd->add_subcommand(
        "decon-check", "L_A(C_A(B)) == L(B) for a basis file");
    red_dc->add_option("file", lat_file)->required();

    // ---- mceliece ----
    auto* mc_cmd = app.add_subcommand("mceliece", "toy Lee-McEliece pipeline");
    mc_cmd->require_subcommand(1);
    std::uint64_t seed = 1;
    std::vector<std::int64_t> params;  // q,n,k,w
    std::string key_file, msg_json, ct_json;
    auto* mc_keygen = mc_cmd->add_subcommand("keygen", "generate a key pair");
    mc_keygen->add_option("--seed", seed);
    mc_keygen->add_option("--params", params, "q,n,k,w")->delimiter(',')->required();
    auto* mc_enc = mc_cmd->add_subcommand("encrypt", "encrypt a message");
    mc_enc->add_option("--seed", seed);
    mc_enc->add_option("--key", key_file)->required();
    mc_enc->add_option("message", msg_json, "JSON array")->required();
    auto* mc_dec = mc_cmd->add_subcommand("decrypt", "decrypt a ciphertext");
    mc_dec->add_option("--key", key_file)->required();
    mc_dec->add_option("cipher", ct_json, "JSON array")->required();
    auto* mc_att = mc_cmd->add_subcommand("attack", "message recovery attack");
    mc_att->add_option("--key", key_file)->required();
    mc_att->add_option("cipher", ct_json, "JSON array")->required();
    std::string path_name = "leedp-bdd";
    mc_att->add_option("--path", path_name)
        ->check(CLI::IsMember({"leedp-bdd", "usvp"}));
    mc_att->add_option("--mu", mu_str, "embedding factor");

    // ---- repro ----
    auto* rep_cmd = app.add_subcommand("repro", "golden reproduction");
    rep_cmd->require_subcommand(1);
    std::string format = "text";
    auto* rep_ex = rep_cmd->add_subcommand("examples", "intersection examples");
    rep_ex->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    auto* rep_t1 = rep_cmd->add_subcommand("table1", "discrete KL table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*dist_beta) {
            LeeMarginal m = lee_marginal(q, t_param);
            json out{{"q", q}, {"T", t_param}, {"beta", m.beta}, {"c1", m.c1}};
            std::cout << out.dump() << '\n';
        } else if (*dist_renyi) {
            auto [dstar, bound] = renyi_lower_bound(q, t_param);
            json out{{"q", q},
                     {"T", t_param},
                     {"delta", delta},
                     {"renyi_inf", renyi_inf_lee_hamming(q, t_param, delta)},
                     {"delta_star", dstar},
                     {"lower_bound", bound}};
            std::cout << out.dump() << '\n';
        } else if (*dist_klc) {
            json out{{"b", b_param},
                     {"sigma", sigma_param},
                     {"kl", kl_laplace_gauss_continuous(b_param, sigma_param)}};
            std::cout << out.dump() << '\n';
        } else if (*dist_kld) {
            json out{{"b", b_param}};
            if (minimize) {
                auto [s, kl] = sigma_min_discrete(b_param);
                out["sigma_min"] = s;
                out["kl_min"] = kl;
            } else {
                out["sigma"] = sigma_param;
                out["kl"] = kl_discrete_laplace_gauss(b_param, sigma_param);
            }
            std::cout << out.dump() << '\n';
        } else if (*dist_t1) {
            return run_repro_table1();
        } else if (*dist_fig) {
            if (b_grid.empty())
                b_grid = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
            run_figure_kl(b_grid);
        } else if (*code_mindist) {
            LinearCode c = code_from_text(slurp(code_file));
            std::cout << min_lee_distance(c) << '\n';
        } else if (*code_enum) {
            LinearCode c = code_from_text(slurp(code_file));
            for_each_codeword(c, [](const ZqVec& w) {
                std::cout << zq_to_json(w).dump() << '\n';
            });
        } else if (*lat_l1 || *lat_l2) {
            LatticeBasis b = lattice_from_text(slurp(lat_file));
            Int radius(radius_str);
            if (radius <= 0) {
                radius = l1_norm(b.rows[0]);
                for (const auto& row : b.rows)
                    radius = std::min(radius, l1_norm(row));
            }
            ShortVector sv =
                *lat_l1 ? lambda1_l1(b, radius) : lambda2_l1(b, radius);
            std::cout << sv.norm << '\n';
        } else if (*lat_mem) {
            LatticeBasis b = lattice_from_text(slurp(lat_file));
            MemberResult res = member(b, intvec_from_json(json::parse(vec_json)));
            json out{{"member", res.member}};
            if (res.member) out["witness"] = intvec_to_json(res.witness);
            std::cout << out.dump() << '\n';
        } else if (*lat_det) {
            LatticeBasis b = lattice_from_text(slurp(lat_file));
            std::cout << determinant(b) << '\n';
        } else if (*int_count) {
            std::cout << intersection_count(code_from_text(slurp(code_file)))
                      << '\n';
        } else if (*int_bound) {
            std::cout << minkowski_lower_bound(code_from_text(slurp(code_file)))
                      << '\n';
        } else if (*int_rep) {
            IntersectionReport r = intersection_report(code_from_text(slurp(code_file)));
            json out{{"count", r.count.str()},
                     {"lower_bound", r.lower_bound.str()},
                     {"upper_bound", r.upper_bound.str()},
                     {"q", r.q},
                     {"k", r.k},
                     {"n", r.n},
                     {"gram_det", r.gram_det.str()},
                     {"M", r.big_m.str()}};
            std::cout << out.dump() << '\n';
        } else if (*red_lb) {
            std::istringstream lines(slurp(batch_file));
            std::string line;
            std::cout << "index,achieved_weight,oracle_weight,success\n";
            std::size_t idx = 0;
            while (std::getline(lines, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                LinearCode c = code_from_json(j);
                ZqVec r = zq_from_json(j.at("r"), c.q);
                std::int64_t t = j.at("t").get<std::int64_t>();
                auto oracle_best = solve_leedp_bruteforce(c, r, t);
                std::int64_t oracle_w =
                    oracle_best ? lee_weight(zq_sub(r, *oracle_best)) : -1;
                std::int64_t achieved = -1;
                try {
                    ZqVec cw = leedp_to_bdd(
                        LeedpInstance{c, r, t},
                        [](const ConstructionA& a, const IntVec& rr,
                           const Rat& alpha) { return solve_bdd(a, rr, alpha); });
                    achieved = lee_weight(zq_sub(r, cw));
                } catch (const std::exception&) {
                }
                std::cout << idx++ << ',' << achieved << ',' << oracle_w << ','
                          << (achieved >= 0 && achieved == oracle_w ? 1 : 0)
                          << '\n';
            }
        } else if (*red_bl) {
            std::istringstream lines(slurp(batch_file));
            std::string line;
            std::cout << "index,achieved_dist,oracle_dist,success\n";
            std::size_t idx = 0;
            while (std::getline(lines, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                LatticeBasis b = basis_from_json(j);
                IntVec r = intvec_from_json(j.at("r"));
                Rat alpha(Int(j.at("alpha_num").get<std::int64_t>()),
                          Int(j.at("alpha_den").get<std::int64_t>()));
                ClosestResult oracle_best = closest_vector_l1_bruteforce(b, r);
                Int achieved = -1;
                try {
                    IntVec v = bdd_to_leedp(
                        BddInstance{b, r, alpha},
                        [](const LinearCode& c, const ZqVec& rr, std::int64_t t) {
                            auto res = solve_leedp_bruteforce(c, rr, t);
                            if (!res)
                                throw std::runtime_error("LeeDP oracle: not found");
                            return *res;
                        });
                    achieved = l1_dist(v, r);
                } catch (const std::exception&) {
                }
                std::cout << idx++ << ',' << achieved << ',' << oracle_best.dist
                          << ','
                          << (achieved >= 0 && achieved == oracle_best.dist ? 1 : 0)
                          << '\n';
            }
        } else if (*red_bu) {
            std::istringstream lines(slurp(batch_file));
            std::string line;
            std::cout << "index,achieved_dist,oracle_dist,success\n";
            std::size_t idx = 0;
            Int mu(mu_str);
            while (std::getline(lines, line)) {
                if (line.empty()) continue;
                json j = json::parse(line);
                LatticeBasis b = basis_from_json(j);
                IntVec r = intvec_from_json(j.at("r"));
                Rat alpha(Int(j.at("alpha_num").get<std::int64_t>()),
                          Int(j.at("alpha_den").get<std::int64_t>()));
                ClosestResult oracle_best = closest_vector_l1_bruteforce(b, r);
                Int achieved = -1;
                try {
                    Int radius = oracle_best.dist + mu;
                    IntVec v = bdd_to_usvp_embedding(BddInstance{b, r, alpha},
                                                     usvp_bruteforce_oracle(radius),
                                                     mu, Rat(1));
                    achieved = l1_dist(v, r);
                } catch (const std::exception&) {
                }
                std::cout << idx++ << ',' << achieved << ',' << oracle_best.dist
                          << ','
                          << (achieved >= 0 && achieved == oracle_best.dist ? 1 : 0)
                          << '\n';
            }
        } else if (*red_dc) {
            LatticeBasis b = lattice_from_text(slurp(lat_file));
            LinearCode c = code_from_basis(b);
            bool ok = same_lattice(construction_a(c).basis, b);
            std::cout << (ok ? "equal" : "DIFFERENT") << '\n';
            return ok ? kExitOk : kExitMismatch;
        } else if (*mc_keygen) {
            if (params.size() != 4)
                throw CLI::ValidationError("--params", "expected q,n,k,w");
            Rng rng(seed);
            KeyPair kp = keygen(params[0], static_cast<std::size_t>(params[1]),
                                static_cast<std::size_t>(params[2]), params[3], rng);
            json out{{"q", kp.secret.q},
                     {"n", kp.secret.n},
                     {"k", kp.secret.k()},
                     {"w", kp.w},
                     {"secret_gen", kp.secret.gen},
                     {"public_gen", kp.pub.gen},
                     {"perm", kp.phi.perm},
                     {"signs", kp.phi.signs},
                     {"info_set", kp.info_set}};
            std::cout << out.dump() << '\n';
        } else {
            auto load_key = [&](const std::string& path) {
                json j = json::parse(slurp(path));
                KeyPair kp;
                std::int64_t kq = j.at("q").get<std::int64_t>();
                std::size_t kn = j.at("n").get<std::size_t>();
                kp.secret = LinearCode(
                    kq, kn,
                    j.at("secret_gen").get<std::vector<std::vector<std::int64_t>>>());
                kp.pub = LinearCode(
                    kq, kn,
                    j.at("public_gen").get<std::vector<std::vector<std::int64_t>>>());
                kp.phi.perm = j.at("perm").get<std::vector<std::size_t>>();
                kp.phi.signs = j.at("signs").get<std::vector<int>>();
                kp.w = j.at("w").get<std::int64_t>();
                kp.info_set = j.at("info_set").get<std::vector<std::size_t>>();
                return kp;
            };
            if (*mc_enc) {
                KeyPair kp = load_key(key_file);
                Rng rng(seed);
                ZqVec m = zq_from_json(json::parse(msg_json), kp.pub.q);
                Ciphertext ct = encrypt(kp, m, rng);
                std::cout << json{{"cipher", zq_to_json(ct.c)}}.dump() << '\n';
            } else if (*mc_dec) {
                KeyPair kp = load_key(key_file);
                ZqVec c = zq_from_json(json::parse(ct_json), kp.pub.q);
                ZqVec m = decrypt(kp, Ciphertext{c});
                std::cout << json{{"message", zq_to_json(m)}}.dump() << '\n';
            } else if (*mc_att) {
                KeyPair kp = load_key(key_file);
                ZqVec c = zq_from_json(json::parse(ct_json), kp.pub.q);
                AttackPath path = path_name == "usvp" ? AttackPath::kUsvpEmbedding
                                                      : AttackPath::kLeedpToBdd;
                ZqVec m = message_recovery_attack(kp, Ciphertext{c}, path,
                                                  Int(mu_str));
                std::cout << json{{"message", zq_to_json(m)}}.dump() << '\n';
            } else if (*rep_ex) {
                return run_repro_examples(format);
            } else if (*rep_t1) {
                return run_repro_table1();
            }
        }
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const PromiseViolation& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const HypothesisViolated& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}
