#include "brauerdm/decomp.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "brauerdm/errors.hpp"
#include "brauerdm/klpoly.hpp"
#include "brauerdm/tlcube.hpp"
#include "brauerdm/valley.hpp"

namespace brauerdm {

Convention convention_from_string(const std::string& s) {
    if (s == "primed") return Convention::primed;
    if (s == "module") return Convention::module_;
    throw ParseError("unknown convention: " + s);
}

std::string convention_name(Convention c) {
    return c == Convention::primed ? "primed" : "module";
}

DecompRow decomp_row(int delta, const Partition& lam) {
    Hypercube h = hypercube(rank_set(delta, lam));
    DecompRow out;
    out.owner = lam;
    for (const auto& [vertex, d] : h.depth)
        out.support.emplace(rank_set_inverse(delta, lam, vertex), d);
    if (out.support.size() != h.depth.size())
        throw InternalError("cube vertices pulled back to colliding labels");
    auto it = out.support.find(lam);
    if (it == out.support.end() || it->second != 0)
        throw InternalError("row owner missing at depth zero");
    return out;
}

namespace {

Partition primed_label(const DecompMatrix& m, const Partition& shown) {
    return m.convention == Convention::module_ ? shown.conjugate() : shown;
}

}  // namespace

DecompMatrix decomp_matrix(int delta, int n, Convention convention) {
    if (n < 0) throw PreconditionViolated("matrix size must be nonnegative");
    DecompMatrix m;
    m.delta = delta;
    m.n = n;
    m.convention = convention;
    m.col_labels = cell_labels(n);  // conjugation permutes each degree, so the
                                    // displayed label list is the same either way
    // at delta = 0 the empty label keeps its column but loses its row, except
    // at n = 0 where the algebra is the ground field and the label survives
    for (const Partition& shown : m.col_labels)
        if (!(delta == 0 && n >= 2 && shown.empty())) m.row_labels.push_back(shown);

    std::map<Partition, size_t, PartitionBefore> col_index;
    for (size_t c = 0; c < m.col_labels.size(); ++c)
        col_index.emplace(primed_label(m, m.col_labels[c]), c);

    for (const Partition& shown : m.row_labels) {
        DecompRow row = decomp_row(delta, primed_label(m, shown));
        std::vector<int> filled(m.col_labels.size(), -1);
        for (const auto& [mu, d] : row.support) {
            auto at = col_index.find(mu);
            if (at == col_index.end())
                throw InternalError("row support escapes the label set: " + mu.to_string());
            filled[at->second] = d;
        }
        m.depth.push_back(std::move(filled));
    }
    return m;
}

CartanMatrix cartan(int delta, int n, Convention convention) {
    DecompMatrix d = decomp_matrix(delta, n, convention);
    CartanMatrix c;
    c.delta = delta;
    c.n = n;
    c.convention = convention;
    c.labels = d.row_labels;
    size_t rows = d.row_labels.size();
    c.entry.assign(rows, std::vector<long long>(rows, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = i; j < rows; ++j) {
            long long dot = 0;
            for (size_t k = 0; k < d.col_labels.size(); ++k)
                if (d.present(i, k) && d.present(j, k)) ++dot;
            c.entry[i][j] = c.entry[j][i] = dot;
        }
    return c;
}

BlockReport block_report(int delta, int n) {
    BlockReport rep;
    rep.delta = delta;
    rep.n = n;
    std::vector<Partition> labels = cell_labels(n);
    std::vector<bool> placed(labels.size(), false);
    for (size_t i = 0; i < labels.size(); ++i) {
        if (placed[i]) continue;
        BlockInfo b;
        b.rep = labels[i];
        b.singularity = singularity_degree(delta, labels[i]);
        for (size_t j = i; j < labels.size(); ++j) {
            if (placed[j] || !same_block(delta, labels[i], labels[j])) continue;
            placed[j] = true;
            b.members.push_back(labels[j]);
            b.valley.emplace_back(labels[j], rank_set(delta, labels[j]));
            if (singularity_degree(delta, labels[j]) != b.singularity)
                throw InternalError("block members with unequal singularity degree");
        }
        rep.blocks.push_back(std::move(b));
    }
    return rep;
}

namespace {

std::string export_json(const DecompMatrix& m) {
    nlohmann::ordered_json j;
    j["delta"] = m.delta;
    j["n"] = m.n;
    j["convention"] = convention_name(m.convention);
    j["rows"] = nlohmann::ordered_json::array();
    for (size_t r = 0; r < m.row_labels.size(); ++r) {
        nlohmann::ordered_json row;
        row["label"] = m.row_labels[r].to_string();
        // support listed by ascending depth, then column order
        std::vector<std::pair<int, size_t>> found;
        for (size_t c = 0; c < m.col_labels.size(); ++c)
            if (m.present(r, c)) found.emplace_back(m.depth[r][c], c);
        std::stable_sort(found.begin(), found.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        row["support"] = nlohmann::ordered_json::array();
        for (const auto& [d, c] : found)
            row["support"].push_back({{"label", m.col_labels[c].to_string()}, {"depth", d}});
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string export_csv(const DecompMatrix& m, bool depths) {
    std::ostringstream out;
    out << "label";
    for (const Partition& c : m.col_labels) out << ',' << c.to_string();
    out << '\n';
    for (size_t r = 0; r < m.row_labels.size(); ++r) {
        out << m.row_labels[r].to_string();
        for (size_t c = 0; c < m.col_labels.size(); ++c) {
            out << ',';
            if (depths) {
                if (m.present(r, c)) out << m.depth[r][c];
            } else {
                out << (m.present(r, c) ? 1 : 0);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string export_latex(const DecompMatrix& m) {
    std::ostringstream out;
    out << "\\begin{tabular}{l|" << std::string(m.col_labels.size(), 'c') << "}\n";
    for (const Partition& c : m.col_labels) out << " & " << c.to_string();
    out << " \\\\\n\\hline\n";
    for (size_t r = 0; r < m.row_labels.size(); ++r) {
        out << m.row_labels[r].to_string();
        for (size_t c = 0; c < m.col_labels.size(); ++c) {
            out << " & ";
            if (m.present(r, c)) out << 1;
        }
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

// fixed-width grid: row/column labels, entries blank when absent
std::string grid_text(const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels,
                      const std::vector<std::vector<std::string>>& cells) {
    size_t width = 1;
    for (const auto& s : row_labels) width = std::max(width, s.size());
    for (const auto& s : col_labels) width = std::max(width, s.size());
    for (const auto& row : cells)
        for (const auto& s : row) width = std::max(width, s.size());
    std::string out;
    auto pad = [&](std::string& line, const std::string& s) {
        line.append(width - s.size(), ' ');
        line += s;
    };
    auto flush = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    };
    std::string header;
    pad(header, "");
    for (const auto& c : col_labels) {
        header += ' ';
        pad(header, c);
    }
    flush(std::move(header));
    for (size_t r = 0; r < row_labels.size(); ++r) {
        std::string line;
        pad(line, row_labels[r]);
        for (const auto& cell : cells[r]) {
            line += ' ';
            pad(line, cell);
        }
        flush(std::move(line));
    }
    return out;
}

std::string export_polytable(const DecompMatrix& m) {
    std::vector<std::string> rows, cols;
    for (const Partition& p : m.row_labels)
        rows.push_back(rank_set(m.delta, primed_label(m, p)).compact_label());
    for (const Partition& p : m.col_labels)
        cols.push_back(rank_set(m.delta, primed_label(m, p)).compact_label());
    std::vector<std::vector<std::string>> cells;
    for (size_t r = 0; r < m.row_labels.size(); ++r) {
        std::vector<std::string> row;
        for (size_t c = 0; c < m.col_labels.size(); ++c)
            row.push_back(m.present(r, c) ? std::to_string(m.depth[r][c]) : "");
        cells.push_back(std::move(row));
    }
    return grid_text(rows, cols, cells);
}

}  // namespace

std::string export_matrix(const DecompMatrix& m, const std::string& format, bool depths) {
    if (format == "json") return export_json(m);
    if (format == "csv") return export_csv(m, depths);
    if (format == "latex") return export_latex(m);
    if (format == "polytable") return export_polytable(m);
    throw UnknownFormat("unknown export format: " + format);
}

std::string polytable_text(const std::vector<RankSet>& sets) {
    KlTable table;
    std::vector<std::string> labels;
    for (const RankSet& a : sets) labels.push_back(a.compact_label());
    std::vector<std::vector<std::string>> cells;
    for (const RankSet& a : sets) {
        const PolyRow& row = table.row(a);
        std::vector<std::string> line;
        for (const RankSet& b : sets) {
            auto it = row.entries.find(b);
            line.push_back(it == row.entries.end() ? "" : std::to_string(it->second));
        }
        cells.push_back(std::move(line));
    }
    return grid_text(labels, labels, cells);
}

}  // namespace brauerdm
