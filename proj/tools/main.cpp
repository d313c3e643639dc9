// acypart - build, decompose, and certify acyclic edge partitions of K_{rd}^(r)
#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acypart/collapse.hpp"
#include "acypart/construct.hpp"
#include "acypart/homology.hpp"
#include "acypart/hypergraph.hpp"
#include "acypart/io.hpp"

namespace fs = std::filesystem;
using namespace acypart;

namespace {

constexpr std::uint64_t kEdgeGuard = 1'000'000;
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_size_guard(int r, int d, bool force) {
    if (r < 1 || d < 1) throw GuardError("parameters must satisfy r >= 1 and d >= 1");
    if (force) return;
    std::uint64_t total = 0;
    try {
        total = binomial(r * d, r);
    } catch (const std::overflow_error&) {
        throw GuardError("size guard: C(rd, r) overflows; pass --force to override");
    }
    if (total > kEdgeGuard)
        throw GuardError("size guard: C(" + std::to_string(r * d) + ", " + std::to_string(r) +
                         ") = " + std::to_string(total) + " exceeds " +
                         std::to_string(kEdgeGuard) + " edges; pass --force to override");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path.string() + "'");
    out << bytes;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// ---- gen ----------------------------------------------------------------

struct GenOpts {
    int r = 0, d = 0, part = 0;
    bool all = false, force = false;
    std::string output;
    std::string format = "json";
};

int run_gen(const GenOpts& o) {
    if (o.all == (o.part != 0)) {
        std::cerr << "gen: pass exactly one of --part or --all\n";
        return kExitUsage;
    }
    check_size_guard(o.r, o.d, o.force);
    if (!o.all && (o.part < 1 || o.part > o.d)) {
        std::cerr << "gen: part index must lie in 1.." << o.d << "\n";
        return kExitUsage;
    }
    const std::string ext = o.format;
    auto serialize = [&](const Hypergraph& h) {
        return o.format == "json" ? serialize_json(h) : serialize_txt(h);
    };
    auto default_name = [&](int a) {
        return "omega_r" + std::to_string(o.r) + "_d" + std::to_string(o.d) + "_part" +
               std::to_string(a) + "." + ext;
    };
    if (o.all) {
        const fs::path dir = o.output.empty() ? fs::path(".") : fs::path(o.output);
        fs::create_directories(dir);
        const Partition p = build_partition(o.r, o.d);
        for (int a = 1; a <= o.d; ++a) {
            const fs::path path = dir / default_name(a);
            write_file(path, serialize(p.parts[a - 1]));
            std::cout << "wrote " << path.string() << "\n";
        }
    } else {
        const fs::path path = o.output.empty() ? fs::path(default_name(o.part)) : fs::path(o.output);
        write_file(path, serialize(build_omega(o.part, o.r, o.d)));
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitPass;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
    int r = 0, d = 0;
    std::string method = "both";
    bool force = false;
};

int run_verify(const VerifyOpts& o) {
    check_size_guard(o.r, o.d, o.force);
    const Partition p = build_partition(o.r, o.d);
    bool all_ok = true;

    const PartitionReport axioms = verify_partition(p);
    all_ok &= axioms.valid;
    std::cout << "partition axioms: " << pass_fail(axioms.valid) << "\n";
    for (const auto& v : axioms.violations)
        std::cout << "  " << v.condition << ": " << v.detail << "\n";

    const HomogeneityReport hom = homogeneity_report(p);
    all_ok &= hom.pass;
    std::cout << "homogeneity: " << pass_fail(hom.pass) << "\n";
    for (int a = 1; a <= o.d; ++a) {
        std::string line = "  part " + std::to_string(a) + ":";
        for (const auto& row : hom.rows) {
            if (row.part != a) continue;
            const std::string label = row.s == o.r ? "|E|" : "|E_" + std::to_string(row.s) + "|";
            line += " " + label + "=" + std::to_string(row.actual) + "/" +
                    std::to_string(row.expected);
        }
        std::cout << line << "\n";
    }

    if (o.method == "betti" || o.method == "both") {
        std::vector<BettiVector> per_part;
        bool ok = true;
        for (const auto& part : p.parts) {
            per_part.push_back(betti(part, BettiMode::Fast));
            ok &= per_part.back().all_zero();
        }
        all_ok &= ok;
        std::cout << "betti: " << pass_fail(ok) << "\n";
        for (int a = 1; a <= o.d; ++a)
            std::cout << "  part " << a << ": " << join_ints(per_part[a - 1].values, ' ') << "\n";
    }

    if (o.method == "collapse" || o.method == "both") {
        bool ok = true;
        std::vector<std::string> lines;
        for (int a = 1; a <= o.d; ++a) {
            const PeelSequence seq = greedy_collapse(p.parts[a - 1]);
            ok &= seq.residual.edges.empty();
            lines.push_back("  part " + std::to_string(a) + ": steps=" +
                            std::to_string(seq.steps.size()) + " residual=" +
                            std::to_string(seq.residual.edges.size()));
        }
        all_ok &= ok;
        std::cout << "collapse: " << pass_fail(ok) << "\n";
        for (const auto& line : lines) std::cout << line << "\n";
    }

    std::cout << "verdict: " << pass_fail(all_ok) << "\n";
    return all_ok ? kExitPass : kExitFail;
}

// ---- betti ----------------------------------------------------------------

int run_betti(const std::string& input) {
    const Hypergraph h = parse_hypergraph(read_file(input));
    std::cout << join_ints(betti(h).values, ' ') << "\n";
    return kExitPass;
}

// ---- collapse ---------------------------------------------------------------

struct CollapseOpts {
    std::string input;
    int r = 0, d = 0;
    std::string strategy = "greedy";
    std::string emit = "steps";
    bool force = false;
};

int run_collapse(const CollapseOpts& o) {
    PeelSequence seq;
    if (o.strategy == "structured") {
        if (!o.input.empty() || o.r < 1 || o.d < 1) {
            std::cerr << "collapse: the structured strategy takes --r/--d, not an input file\n";
            return kExitUsage;
        }
        check_size_guard(o.r, o.d, o.force);
        try {
            seq = structured_collapse_omega1(o.r, o.d);
        } catch (const std::runtime_error& e) {
            std::cerr << "collapse: " << e.what() << "\n";
            return kExitFail;
        }
    } else {
        if (o.input.empty()) {
            std::cerr << "collapse: the greedy strategy requires -i FILE\n";
            return kExitUsage;
        }
        seq = greedy_collapse(parse_hypergraph(read_file(o.input)));
    }
    if (o.emit == "steps")
        for (const auto& step : seq.steps)
            std::cout << join_ints(step.edge, ' ') << " | " << join_ints(step.private_face, ' ')
                      << "\n";
    std::cout << "steps=" << seq.steps.size() << " residual=" << seq.residual.edges.size() << "\n";
    return seq.residual.edges.empty() ? kExitPass : kExitFail;
}

// ---- decompose ----------------------------------------------------------------

int run_decompose(int r, int d, bool force) {
    check_size_guard(r, d, force);
    const Decomposition dec = decompose_omega1(r, d);
    std::size_t total = 0;
    for (const auto& [key, piece] : dec.pieces) {
        if (piece.edges.empty()) continue;
        std::cout << "k=" << key.k << " js=" << join_ints(key.js, ',')
                  << " count=" << piece.edges.size() << "\n";
        total += piece.edges.size();
    }
    std::cout << "total=" << total << "\n";
    return kExitPass;
}

// ---- phi ----------------------------------------------------------------

int run_phi(int r, int d, int a, bool check) {
    const VertexPermutation phi = phi_map(a, r, d);
    std::cout << join_ints(phi.image, ' ') << "\n";
    if (!check) return kExitPass;
    const Hypergraph mapped = phi.apply(build_omega(a + 1, r, d));
    const bool ok = mapped == build_omega(a, r, d);
    std::cout << "check: " << pass_fail(ok) << "\n";
    return ok ? kExitPass : kExitFail;
}

// ---- gamma ----------------------------------------------------------------

struct GammaOpts {
    int k = 0, r = 0, a = 0, d = 0;
    std::vector<int> js;
    bool abstract_mode = true;
};

int run_gamma(const GammaOpts& o) {
    const Hypergraph g = o.abstract_mode ? gamma_abstract(o.k, o.r, o.a)
                                         : gamma_sub(GammaKey{o.k, o.js}, o.r, o.d);
    for (const auto& e : g.edges) std::cout << join_ints(e, ' ') << "\n";
    return kExitPass;
}

// ---- iso ----------------------------------------------------------------

int run_iso(const std::string& file_a, const std::string& file_b, int cap) {
    const Hypergraph a = parse_hypergraph(read_file(file_a));
    const Hypergraph b = parse_hypergraph(read_file(file_b));
    const auto perm = are_isomorphic(a, b, cap);
    if (!perm) {
        std::cout << "none\n";
        return kExitFail;
    }
    std::cout << join_ints(perm->image, ' ') << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"build, decompose, and certify acyclic edge partitions of complete "
                 "uniform hypergraphs"};
    app.require_subcommand(1);

    GenOpts gen;
    auto* gen_cmd = app.add_subcommand("gen", "write partition parts to files");
    gen_cmd->add_option("--r", gen.r, "uniform arity")->required();
    gen_cmd->add_option("--d", gen.d, "number of parts")->required();
    gen_cmd->add_option("--part", gen.part, "1-based part index");
    gen_cmd->add_flag("--all", gen.all, "emit every part");
    gen_cmd->add_option("-o,--output", gen.output, "output file, or directory with --all");
    gen_cmd->add_option("--format", gen.format, "json or txt")
        ->check(CLI::IsMember({"json", "txt"}));
    gen_cmd->add_flag("--force", gen.force, "ignore the size guard");

    VerifyOpts verify;
    auto* verify_cmd = app.add_subcommand("verify", "check the partition is acyclic");
    verify_cmd->add_option("--r", verify.r, "uniform arity")->required();
    verify_cmd->add_option("--d", verify.d, "number of parts")->required();
    verify_cmd->add_option("--method", verify.method, "betti, collapse, or both")
        ->check(CLI::IsMember({"betti", "collapse", "both"}));
    verify_cmd->add_flag("--force", verify.force, "ignore the size guard");

    std::string betti_input;
    auto* betti_cmd = app.add_subcommand("betti", "print reduced Betti numbers of a file");
    betti_cmd->add_option("-i,--input", betti_input, "hypergraph file")->required();

    CollapseOpts collapse;
    auto* collapse_cmd = app.add_subcommand("collapse", "peel a hypergraph by leaf removal");
    collapse_cmd->add_option("-i,--input", collapse.input, "hypergraph file (greedy strategy)");
    collapse_cmd->add_option("--r", collapse.r, "uniform arity (structured strategy)");
    collapse_cmd->add_option("--d", collapse.d, "number of parts (structured strategy)");
    collapse_cmd->add_option("--strategy", collapse.strategy, "greedy or structured")
        ->check(CLI::IsMember({"greedy", "structured"}));
    collapse_cmd->add_option("--emit", collapse.emit, "steps or summary")
        ->check(CLI::IsMember({"steps", "summary"}));
    collapse_cmd->add_flag("--force", collapse.force, "ignore the size guard");

    int dec_r = 0, dec_d = 0;
    bool dec_force = false;
    auto* dec_cmd = app.add_subcommand("decompose", "list the pieces of the first part");
    dec_cmd->add_option("--r", dec_r, "uniform arity")->required();
    dec_cmd->add_option("--d", dec_d, "number of parts")->required();
    dec_cmd->add_flag("--force", dec_force, "ignore the size guard");

    int phi_r = 0, phi_d = 0, phi_a = 0;
    bool phi_check = false;
    auto* phi_cmd = app.add_subcommand("phi", "print the part-to-part vertex permutation");
    phi_cmd->add_option("--r", phi_r, "uniform arity")->required();
    phi_cmd->add_option("--d", phi_d, "number of parts")->required();
    phi_cmd->add_option("--a", phi_a, "source part index (maps part a+1 onto part a)")->required();
    phi_cmd->add_flag("--check", phi_check, "verify the induced edge bijection");

    GammaOpts gamma;
    auto* gamma_cmd = app.add_subcommand("gamma", "print gamma edge lists");
    gamma_cmd->add_option("--k", gamma.k, "head size")->required();
    gamma_cmd->add_option("--r", gamma.r, "uniform arity")->required();
    gamma_cmd->add_option("--a", gamma.a, "residue class (abstract form)");
    gamma_cmd->add_option("--d", gamma.d, "number of parts (piece form)");
    gamma_cmd->add_option("--js", gamma.js, "comma-separated tail (piece form)")->delimiter(',');

    std::string iso_a, iso_b;
    int iso_cap = 10;
    auto* iso_cmd = app.add_subcommand("iso", "search for an isomorphism between two files");
    iso_cmd->add_option("-i,--first", iso_a, "first hypergraph file")->required();
    iso_cmd->add_option("-j,--second", iso_b, "second hypergraph file")->required();
    iso_cmd->add_option("--cap", iso_cap, "exhaustive-search vertex cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*verify_cmd) return run_verify(verify);
        if (*betti_cmd) return run_betti(betti_input);
        if (*collapse_cmd) return run_collapse(collapse);
        if (*dec_cmd) return run_decompose(dec_r, dec_d, dec_force);
        if (*phi_cmd) return run_phi(phi_r, phi_d, phi_a, phi_check);
        if (*gamma_cmd) {
            gamma.abstract_mode = gamma.d == 0;
            return run_gamma(gamma);
        }
        if (*iso_cmd) return run_iso(iso_a, iso_b, iso_cap);
    } catch (const GuardError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
