#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "brauerdm/decomp.hpp"
#include "brauerdm/errors.hpp"
#include "brauerdm/klpoly.hpp"
#include "brauerdm/tlcube.hpp"
#include "brauerdm/valley.hpp"
#include "brauerdm/verify.hpp"
#include "brauerdm/young.hpp"

namespace {

using namespace brauerdm;

// deltas arrive as text so a non-integer value can be refused with an
// explanation instead of a parser error
int parse_delta(const std::string& text) {
    size_t used = 0;
    int value = 0;
    bool ok = !text.empty();
    if (ok) {
        try {
            value = std::stoi(text, &used);
        } catch (const std::exception&) {
            ok = false;
        }
    }
    if (!ok || used != text.size()) {
        std::cerr << "delta must be an integer: at any non-integer parameter the "
                     "algebra is semisimple, so every decomposition matrix is the "
                     "identity and there is nothing to compute\n";
        std::exit(2);
    }
    return value;
}

std::string arc_text(const Arc& g) {
    std::string open = g.both ? "[" : "(";
    std::string close = g.both ? "]" : ")";
    return open + std::to_string(g.i) + " " + std::to_string(g.j) + close;
}

void print_hypercube(const Hypercube& h, bool with_labels, int delta,
                     const Partition& anchor, int prefix) {
    std::cout << "dim " << h.dim() << "\n";
    std::cout << "root " << h.root.to_string() << "\n";
    for (const Arc& g : h.generators) std::cout << "generator " << arc_text(g) << "\n";
    std::vector<std::pair<int, RankSet>> verts;
    for (const auto& [v, d] : h.depth) verts.push_back({d, v});
    std::sort(verts.begin(), verts.end());
    for (const auto& [d, v] : verts) {
        std::cout << "vertex " << v.to_string() << " depth " << d;
        if (with_labels)
            std::cout << " label "
                      << rank_set_inverse(delta, anchor, v, prefix).to_string();
        std::cout << "\n";
    }
    for (const Hypercube::Edge& e : h.edges)
        std::cout << "edge " << e.from.to_string() << " "
                  << arc_text(h.generators[e.gen]) << " " << e.to.to_string() << "\n";
}

std::string cartan_text(const CartanMatrix& c, const std::string& format) {
    std::string out;
    if (format == "csv") {
        out = "label";
        for (const Partition& l : c.labels) out += "," + l.to_string();
        out += "\n";
        for (size_t r = 0; r < c.labels.size(); ++r) {
            out += c.labels[r].to_string();
            for (size_t cc = 0; cc < c.labels.size(); ++cc)
                out += "," + std::to_string(c.entry[r][cc]);
            out += "\n";
        }
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["delta"] = c.delta;
        j["n"] = c.n;
        j["convention"] = convention_name(c.convention);
        j["labels"] = nlohmann::ordered_json::array();
        for (const Partition& l : c.labels) j["labels"].push_back(l.to_string());
        j["entries"] = c.entry;
        return j.dump(2) + "\n";
    }
    if (format == "latex") {
        out = "\\begin{tabular}{l|" + std::string(c.labels.size(), 'c') + "}\n";
        for (const Partition& l : c.labels) out += " & " + l.to_string();
        out += " \\\\\n\\hline\n";
        for (size_t r = 0; r < c.labels.size(); ++r) {
            out += c.labels[r].to_string();
            for (size_t cc = 0; cc < c.labels.size(); ++cc)
                out += " & " + std::to_string(c.entry[r][cc]);
            out += " \\\\\n";
        }
        out += "\\end{tabular}\n";
        return out;
    }
    throw UnknownFormat("unknown format: " + format);
}

int report(const std::vector<CheckResult>& results) {
    int pass = 0;
    for (const CheckResult& r : results) {
        std::cout << (r.ok ? "ok " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        pass += r.ok;
    }
    std::cout << "passed " << pass << " of " << results.size() << "\n";
    return pass == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block and decomposition combinatorics of a diagram algebra"};
    app.require_subcommand(1);

    std::string delta_str, partition_str, set_str;
    std::string convention_str = "primed", format_str, suite;
    int n = 0, radius = 0, prefix = 0, max_n = -1;
    bool depths = false;

    auto* odelta = app.add_subcommand("odelta", "print the valley set of a partition");
    odelta->add_option("--delta", delta_str)->required();
    odelta->add_option("--partition", partition_str)->required();
    odelta->add_option("--prefix", prefix, "override the truncation length");

    auto* block = app.add_subcommand("block", "list the block of a partition");
    block->add_option("--delta", delta_str)->required();
    block->add_option("--partition", partition_str)->required();
    auto* block_n = block->add_option("--n", n, "members among the labels of size n");
    auto* block_r =
        block->add_option("--radius", radius, "members within this graph distance");

    auto* cube = app.add_subcommand(
        "hypercube", "vertices, depths and edges of the cube below a valley set");
    auto* cube_set = cube->add_option("--set", set_str, "root valley set");
    auto* cube_delta = cube->add_option("--delta", delta_str);
    auto* cube_part = cube->add_option("--partition", partition_str,
                                       "root partition; adds partition labels");
    cube->add_option("--prefix", prefix, "override the truncation length");
    cube_part->needs(cube_delta);
    cube_set->excludes(cube_part);

    auto* klrow = app.add_subcommand("klrow", "polynomial row of a valley set");
    klrow->add_option("--set", set_str)->required();

    auto* decomp = app.add_subcommand("decomp", "decomposition matrix of the algebra");
    decomp->add_option("--delta", delta_str)->required();
    decomp->add_option("--n", n)->required();
    decomp->add_option("--convention", convention_str, "primed or module");
    decomp->add_option("--format", format_str, "json, csv, latex or polytable")
        ->default_val("json");
    decomp->add_flag("--depths", depths, "emit cube depths instead of 0/1");

    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix of the algebra");
    cartan_cmd->add_option("--delta", delta_str)->required();
    cartan_cmd->add_option("--n", n)->required();
    cartan_cmd->add_option("--convention", convention_str, "primed or module");
    cartan_cmd->add_option("--format", format_str, "csv, json or latex")
        ->default_val("csv");

    auto* blocks_cmd = app.add_subcommand("blocks", "all blocks of the algebra");
    blocks_cmd->add_option("--delta", delta_str)->required();
    blocks_cmd->add_option("--n", n)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "dims, blocks, kl, mibs or all")->required();
    verify->add_option("--max-n", max_n,
                       "override the sweep bound (for all: the dims bound)");

    app.add_subcommand("selftest", "check the frozen worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (odelta->parsed()) {
            int delta = parse_delta(delta_str);
            Partition lam = Partition::parse(partition_str);
            std::cout << rank_set(delta, lam, prefix).to_string() << "\n";
        } else if (block->parsed()) {
            int delta = parse_delta(delta_str);
            Partition lam = Partition::parse(partition_str);
            if (static_cast<bool>(*block_n) == static_cast<bool>(*block_r)) {
                std::cerr << "block needs exactly one of --n and --radius\n";
                return 2;
            }
            if (*block_n)
                for (const Partition& mu : block_members(delta, lam, n))
                    std::cout << mu.to_string() << "\n";
            else
                for (const auto& [mu, dist] : block_ball(delta, lam, radius))
                    std::cout << mu.to_string() << " " << dist << "\n";
        } else if (cube->parsed()) {
            if (static_cast<bool>(*cube_set) == static_cast<bool>(*cube_part)) {
                std::cerr << "hypercube needs --set, or --delta with --partition\n";
                return 2;
            }
            if (*cube_set) {
                print_hypercube(hypercube(RankSet::parse(set_str)), false, 0,
                                Partition{}, 0);
            } else {
                int delta = parse_delta(delta_str);
                Partition lam = Partition::parse(partition_str);
                print_hypercube(hypercube(rank_set(delta, lam, prefix)), true, delta,
                                lam, prefix);
            }
        } else if (klrow->parsed()) {
            PolyRow row = kl_row(RankSet::parse(set_str));
            std::string line;
            for (auto it = row.entries.rbegin(); it != row.entries.rend(); ++it) {
                if (!line.empty()) line += " ";
                line += it->first.compact_label() + ":" + std::to_string(it->second);
            }
            std::cout << line << "\n";
        } else if (decomp->parsed()) {
            int delta = parse_delta(delta_str);
            DecompMatrix m =
                decomp_matrix(delta, n, convention_from_string(convention_str));
            std::cout << export_matrix(m, format_str, depths);
        } else if (cartan_cmd->parsed()) {
            int delta = parse_delta(delta_str);
            CartanMatrix c = cartan(delta, n, convention_from_string(convention_str));
            std::cout << cartan_text(c, format_str);
        } else if (blocks_cmd->parsed()) {
            int delta = parse_delta(delta_str);
            BlockReport rep = block_report(delta, n);
            std::cout << "delta " << rep.delta << " n " << rep.n << " blocks "
                      << rep.blocks.size() << "\n";
            for (const BlockInfo& b : rep.blocks) {
                std::cout << "block " << b.rep.to_string() << " singularity "
                          << b.singularity << " size " << b.members.size() << "\n";
                for (const auto& [mu, set] : b.valley)
                    std::cout << "  " << mu.to_string() << " " << set.to_string()
                              << "\n";
            }
        } else if (verify->parsed()) {
            std::vector<CheckResult> results;
            if (suite == "dims") {
                results = verify_dims(max_n < 0 ? 6 : max_n);
            } else if (suite == "blocks") {
                results = verify_blocks(max_n < 0 ? 8 : max_n);
            } else if (suite == "kl") {
                results = verify_kl(max_n < 0 ? 8 : max_n);
            } else if (suite == "mibs") {
                results = verify_mibs(max_n < 0 ? 10 : max_n);
            } else if (suite == "all") {
                for (auto batch :
                     {verify_examples(), verify_kl(8), verify_blocks(8),
                      verify_mibs(10), verify_dims(max_n < 0 ? 6 : max_n),
                      verify_sections(), verify_props(8)})
                    results.insert(results.end(), batch.begin(), batch.end());
            } else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return report(results);
        } else {
            std::vector<CheckResult> results = verify_examples();
            for (const CheckResult& r : verify_sections()) results.push_back(r);
            return report(results);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownFormat& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
