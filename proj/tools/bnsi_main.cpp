// bnsi: linear coding toolkit for broadcasting with noisy side information.
//
// Subcommands: validate, solve, bounds, construct, analyze, decode, reduce,
// simulate. Exit codes: 0 ok/valid, 2 invalid encoder, 3 guard exceeded,
// 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bnsi/bounds.hpp"
#include "bnsi/decoder.hpp"
#include "bnsi/errors.hpp"
#include "bnsi/index_coding.hpp"
#include "bnsi/oracle.hpp"
#include "bnsi/simulate.hpp"
#include "bnsi/validity.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitGuard = 3;
constexpr int kExitUsage = 64;

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int j : v) out.push_back(j + 1);
    return out;
}

bnsi::Vec parse_csv_vec(const std::string& csv, const bnsi::Field& f) {
    bnsi::Vec v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        long long e = std::stoll(tok);
        if (e < 0 || e >= f.q())
            throw std::runtime_error("entry " + tok + " outside " + f.name());
        v.push_back(static_cast<bnsi::Elem>(e));
    }
    return v;
}

struct Args {
    std::string problem_path;
    std::string matrix_path;
    std::string code_path;
    std::string out_path;
    std::string method = "both";          // validate
    std::string solve_method = "subspace";
    std::string scheme;
    std::string codeword_csv, sideinfo_csv;
    std::string format = "text";
    int user = 0;
    bool oracle = false;
    bool dedup = false;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    int force_weight = -1;
    int n_max = -1;
};

int cmd_validate(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    auto L = bnsi::load_matrix_file(a.matrix_path);
    bool valid = true;
    json j;
    std::ostringstream text;
    if (a.method == "enum" || a.method == "both") {
        auto r = bnsi::is_valid_by_enumeration(p, L);
        valid = valid && r.valid;
        j["enumeration"]["valid"] = r.valid;
        text << "enumeration: " << (r.valid ? "valid" : "invalid") << '\n';
        if (r.witness) {
            j["enumeration"]["witness_z"] = *r.witness;
            text << "  witness z = " << bnsi::vec_to_string(*r.witness) << '\n';
        }
    }
    if (a.method == "rank" || a.method == "both") {
        auto r = bnsi::is_valid_by_rank(p, L);
        valid = valid && r.valid;
        j["rank"]["valid"] = r.valid;
        text << "rank: " << (r.valid ? "valid" : "invalid") << '\n';
        if (r.witness) {
            j["rank"]["witness_user"] = r.witness->user + 1;
            j["rank"]["witness_rows"] = one_based(r.witness->rows);
            text << "  witness user " << (r.witness->user + 1) << ", rows";
            for (int x : one_based(r.witness->rows)) text << ' ' << x;
            text << '\n';
        }
    }
    j["valid"] = valid;
    if (a.format == "structured")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text.str() << (valid ? "valid" : "invalid") << '\n';
    return valid ? kExitValid : kExitInvalid;
}

int cmd_solve(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    int nopt;
    std::optional<bnsi::Matrix> L;
    if (a.solve_method == "exhaustive") {
        int cap = a.n_max >= 0 ? a.n_max : p.n();
        auto r = bnsi::optimal_codelength_exhaustive(p, cap);
        if (!r) {
            std::cout << "no valid encoder with N <= " << cap << '\n';
            return kExitValid;
        }
        nopt = *r;
    } else {
        auto r = bnsi::optimal_codelength_subspace(p);
        nopt = r.n_opt;
        L = r.L_opt;
    }
    if (L && !a.out_path.empty()) bnsi::save_matrix_file(*L, a.out_path);
    if (a.format == "structured") {
        json j;
        j["N_opt"] = nopt;
        if (L) j["encoder"] = bnsi::save_matrix(*L);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "N_opt " << nopt << '\n';
        if (L) std::cout << bnsi::save_matrix(*L);
    }
    return kExitValid;
}

int cmd_bounds(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    bnsi::BoundsOptions opts;
    opts.run_oracle = a.oracle;
    auto r = bnsi::bounds_report(p, opts);
    if (a.format == "structured") {
        json j;
        j["n"] = r.n;
        j["lower_size"] = r.lower_size;
        auto put = [&](const char* key, const std::optional<int>& v) {
            if (v)
                j[key] = *v;
            else
                j[key] = nullptr;
        };
        put("lower_bmax", r.lower_bmax);
        put("lower_ic_acyclic", r.lower_ic_acyclic);
        j["upper_trivial"] = r.upper_trivial;
        put("upper_ecc", r.upper_ecc);
        put("upper_disjoint", r.upper_disjoint);
        put("upper_mds_disjoint", r.upper_mds_disjoint);
        put("upper_partition", r.upper_partition);
        put("oracle_nopt", r.oracle_nopt);
        j["best_lower"] = r.best_lower();
        j["best_upper"] = r.best_upper();
        j["notes"] = r.notes;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << bnsi::format_bounds_text(r);
    }
    return kExitValid;
}

int cmd_construct(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    bnsi::Matrix L;
    if (a.scheme == "simple") {
        L = bnsi::simple_scheme(p);
    } else if (a.scheme == "mds") {
        auto r = bnsi::upper_bound_mds(p);
        if (auto* u = std::get_if<bnsi::Unavailable>(&r))
            throw std::runtime_error("mds scheme unavailable: " + u->reason);
        L = std::get<bnsi::UpperBound>(r).L;
    } else if (a.scheme == "disjoint") {
        L = bnsi::upper_bound_disjoint(p).L;
    } else if (a.scheme == "mds-disjoint") {
        auto r = bnsi::upper_bound_mds_disjoint(p);
        if (auto* u = std::get_if<bnsi::Unavailable>(&r))
            throw std::runtime_error("mds-disjoint scheme unavailable: " + u->reason);
        L = std::get<bnsi::UpperBound>(r).L;
    } else if (a.scheme == "partition") {
        auto r = bnsi::partition_optimizer(p);
        if (auto* u = std::get_if<bnsi::Unavailable>(&r))
            throw std::runtime_error("partition scheme unavailable: " + u->reason);
        L = std::get<bnsi::PartitionResult>(r).L;
    } else if (a.scheme == "ecc") {
        if (a.code_path.empty())
            throw std::runtime_error("--scheme ecc needs --code with a parity check matrix file");
        bnsi::LinearCodeSpec code{bnsi::load_matrix_file(a.code_path), std::nullopt};
        L = bnsi::ecc_based_encoder(p, code);
    } else {
        std::cerr << "unknown scheme '" << a.scheme << "'\n";
        return kExitUsage;
    }
    if (!a.out_path.empty()) bnsi::save_matrix_file(L, a.out_path);
    if (a.format == "structured") {
        json j;
        j["scheme"] = a.scheme;
        j["N"] = L.cols();
        j["savings"] = p.n() - static_cast<int>(L.cols());
        j["encoder"] = bnsi::save_matrix(L);
        std::cout << j.dump(2) << '\n';
    } else {
        if (a.out_path.empty()) std::cout << bnsi::save_matrix(L);
        std::cout << "N " << L.cols() << " (savings " << (p.n() - static_cast<int>(L.cols()))
                  << ")\n";
    }
    return kExitValid;
}

int cmd_analyze(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    auto pe = bnsi::phi_emptiness(p);
    auto col = bnsi::disjoint_phi_collection(p);
    json j;
    std::ostringstream text;
    j["phi_empty"] = pe.is_empty;
    text << "Phi empty: " << (pe.is_empty ? "true" : "false") << '\n';
    if (!pe.is_empty) {
        j["c_max"] = one_based(pe.witness->C);
        text << "C_max:";
        for (int x : one_based(pe.witness->C)) text << ' ' << x;
        text << '\n';
    }
    try {
        auto b = bnsi::b_max(p);
        j["b_max"] = one_based(b);
        text << "B_max:";
        for (int x : one_based(b)) text << ' ' << x;
        text << " (size " << b.size() << ")\n";
    } catch (const bnsi::GuardExceeded& e) {
        j["b_max"] = nullptr;
        text << "B_max: unknown (" << e.what() << ")\n";
    }
    j["disjoint_collection_exact"] = col.exact;
    auto arr = json::array();
    text << "disjoint collection (" << (col.exact ? "exact" : "greedy") << "):";
    for (const auto& C : col.elements) {
        arr.push_back(one_based(C));
        text << " {";
        for (std::size_t i = 0; i < C.size(); ++i) text << (i ? "," : "") << (C[i] + 1);
        text << "}";
    }
    j["disjoint_collection"] = arr;
    text << '\n';
    if (a.format == "structured")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text.str();
    return kExitValid;
}

int cmd_decode(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    auto L = bnsi::load_matrix_file(a.matrix_path);
    if (a.user < 1 || a.user > p.m()) {
        std::cerr << "--user must be in [1, " << p.m() << "]\n";
        return kExitUsage;
    }
    auto d = bnsi::build_decoder(p, L, a.user - 1);
    auto c = parse_csv_vec(a.codeword_csv, p.field());
    auto side = parse_csv_vec(a.sideinfo_csv, p.field());
    auto out = d.decode(c, side);
    if (a.format == "structured") {
        json j;
        j["user"] = a.user;
        j["decoded"] = out;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "decoded " << bnsi::vec_to_string(out) << '\n';
    }
    return kExitValid;
}

int cmd_reduce(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    auto ic = bnsi::reduce_to_ic(p);
    std::string text = bnsi::save_ic_problem(ic, a.dedup);
    if (!a.out_path.empty()) {
        std::ofstream out(a.out_path);
        if (!out) throw std::runtime_error("cannot write " + a.out_path);
        out << text;
    }
    if (a.format == "structured") {
        json j;
        j["n"] = ic.n;
        j["generated"] = ic.m_hat_formula;
        j["distinct"] = ic.m_distinct();
        auto arr = json::array();
        for (const auto& u : (a.dedup ? ic.distinct_users() : ic.users))
            arr.push_back({{"demand", u.demand + 1}, {"side_info", one_based(u.side_info)}});
        j["users"] = arr;
        std::cout << j.dump(2) << '\n';
    } else if (!a.out_path.empty()) {
        std::cout << "generated " << ic.m_hat_formula << " users, " << ic.m_distinct()
                  << " distinct\n";
    } else {
        std::cout << text;
    }
    return kExitValid;
}

int cmd_simulate(const Args& a) {
    auto p = bnsi::load_problem_file(a.problem_path);
    auto L = bnsi::load_matrix_file(a.matrix_path);
    bnsi::SimOptions opts;
    if (a.force_weight >= 0) opts.force_weight = a.force_weight;
    auto rep = bnsi::simulate(p, L, a.trials, a.seed, opts);
    if (a.format == "structured") {
        json j;
        j["trials"] = rep.trials;
        auto arr = json::array();
        for (const auto& u : rep.users)
            arr.push_back({{"i", u.user + 1}, {"successes", u.successes}});
        j["users"] = arr;
        j["N"] = rep.N;
        j["n"] = rep.n;
        j["savings"] = rep.savings;
        j["seed"] = rep.seed;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << bnsi::format_sim_text(rep);
    }
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear coding toolkit for broadcast retransmission with noisy side information"};
    app.require_subcommand(1);
    Args a;
    app.add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    auto* validate = app.add_subcommand("validate", "check an encoder matrix");
    validate->fallthrough();
    validate->add_option("--problem", a.problem_path)->required();
    validate->add_option("--matrix", a.matrix_path)->required();
    validate->add_option("--method", a.method)->check(CLI::IsMember({"enum", "rank", "both"}));

    auto* solve = app.add_subcommand("solve", "optimal codelength by brute force");
    solve->fallthrough();
    solve->add_option("--problem", a.problem_path)->required();
    solve->add_option("--method", a.solve_method)
        ->check(CLI::IsMember({"subspace", "exhaustive"}))
        ->capture_default_str();
    solve->add_option("--out", a.out_path, "write the optimal encoder here");
    solve->add_option("--nmax", a.n_max, "cap for the exhaustive method");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds report");
    bounds->fallthrough();
    bounds->add_option("--problem", a.problem_path)->required();
    bounds->add_flag("--oracle", a.oracle, "include the brute-force optimum");

    auto* construct = app.add_subcommand("construct", "build an encoder matrix");
    construct->fallthrough();
    construct->add_option("--problem", a.problem_path)->required();
    construct->add_option("--scheme", a.scheme)
        ->required()
        ->check(CLI::IsMember({"simple", "mds", "disjoint", "mds-disjoint", "partition", "ecc"}));
    construct->add_option("--code", a.code_path,
                          "parity check matrix file for --scheme ecc (external code tables)");
    construct->add_option("--out", a.out_path);

    auto* analyze = app.add_subcommand("analyze", "Phi structure of the problem");
    analyze->fallthrough();
    analyze->add_option("--problem", a.problem_path)->required();

    auto* decode = app.add_subcommand("decode", "run one syndrome decoding");
    decode->fallthrough();
    decode->add_option("--problem", a.problem_path)->required();
    decode->add_option("--matrix", a.matrix_path)->required();
    decode->add_option("--user", a.user, "1-based user index")->required();
    decode->add_option("--codeword", a.codeword_csv, "received codeword, CSV")->required();
    decode->add_option("--sideinfo", a.sideinfo_csv, "noisy side information, CSV")->required();

    auto* reduce = app.add_subcommand("reduce", "equivalent index-coding problem");
    reduce->fallthrough();
    reduce->add_option("--problem", a.problem_path)->required();
    reduce->add_option("--out", a.out_path);
    reduce->add_flag("--dedup", a.dedup, "collapse duplicate (demand, side info) users");

    auto* simulate = app.add_subcommand("simulate", "end-to-end retransmission rounds");
    simulate->fallthrough();
    simulate->add_option("--problem", a.problem_path)->required();
    simulate->add_option("--matrix", a.matrix_path)->required();
    simulate->add_option("--trials", a.trials)->capture_default_str();
    simulate->add_option("--seed", a.seed)->capture_default_str();
    simulate->add_option("--force-weight", a.force_weight,
                         "draw errors of exactly this weight (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(a);
        if (app.got_subcommand(solve)) return cmd_solve(a);
        if (app.got_subcommand(bounds)) return cmd_bounds(a);
        if (app.got_subcommand(construct)) return cmd_construct(a);
        if (app.got_subcommand(analyze)) return cmd_analyze(a);
        if (app.got_subcommand(decode)) return cmd_decode(a);
        if (app.got_subcommand(reduce)) return cmd_reduce(a);
        if (app.got_subcommand(simulate)) return cmd_simulate(a);
    } catch (const bnsi::GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
