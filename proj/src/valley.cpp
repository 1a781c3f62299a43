#include "brauerdm/valley.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

namespace brauerdm {

namespace {

std::optional<int> env_prefix() {
    static std::optional<int> cached = []() -> std::optional<int> {
        const char* s = std::getenv("BRAUERDM_PREFIX_LEN");
        if (!s || !*s) return std::nullopt;
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (*end != '\0' || v < 1) return std::nullopt;
        return static_cast<int>(v);
    }();
    return cached;
}

struct RegularData {
    std::vector<RegEntry> entries;
    std::vector<long long> mags_asc;  // magnitudes of the surviving entries
    bool has_zero = false;
};

RegularData regular_data(const WeightSeq& seq) {
    RegularData out;
    out.entries = regularize(seq);
    for (const RegEntry& e : out.entries) {
        out.mags_asc.push_back(std::llabs(e.doubled));
        if (e.doubled == 0) out.has_zero = true;
    }
    std::sort(out.mags_asc.begin(), out.mags_asc.end());
    return out;
}

int rank_of(const std::vector<long long>& mags_asc, long long mag) {
    auto it = std::lower_bound(mags_asc.begin(), mags_asc.end(), mag);
    if (it == mags_asc.end() || *it != mag) throw InternalError("magnitude not present");
    return static_cast<int>(it - mags_asc.begin()) + 1;
}

// the truncation is long enough iff every unseen entry is more negative than
// any magnitude we rank against
void check_rank_coverage(const WeightSeq& seq, const RegularData& data) {
    long long maxpos = 0;
    for (const RegEntry& e : data.entries) maxpos = std::max(maxpos, e.doubled);
    if (maxpos == 0) return;
    long long last = seq.doubled.back();
    if (last >= 0 || -last <= maxpos) throw PrefixTooShort("truncation cannot rank all entries");
}

RankSet rank_set_impl(const WeightSeq& seq, int zero_sign) {
    RegularData data = regular_data(seq);
    check_rank_coverage(seq, data);
    std::vector<int> ranks;
    for (const RegEntry& e : data.entries) {
        if (e.doubled > 0) ranks.push_back(rank_of(data.mags_asc, e.doubled));
        if (e.doubled == 0 && zero_sign > 0) ranks.push_back(rank_of(data.mags_asc, 0));
    }
    RankSet s{std::move(ranks)};
    if (s.size() % 2 != 0) s = s.toggled(1);
    return s;
}

}  // namespace

int default_prefix(int delta, const Partition& lam) {
    if (auto e = env_prefix()) return std::max(*e, lam.length() + 2);
    return lam.length() + lam.part(1) + std::abs(delta) + 4;
}

WeightSeq weight_seq(int delta, const Partition& lam, int prefix) {
    int n = prefix > 0 ? prefix : default_prefix(delta, lam);
    if (n < lam.length() + 2) throw PrefixTooShort("truncation must cover the partition");
    WeightSeq seq;
    seq.delta = delta;
    seq.lam_len = lam.length();
    seq.doubled.reserve(n);
    for (int i = 1; i <= n; ++i)
        seq.doubled.push_back(2LL * lam.part(i) - delta - 2LL * (i - 1));
    return seq;
}

std::string WeightSeq::to_string(int max_terms) const {
    std::string out = "(";
    int shown = std::min<int>(max_terms, prefix());
    for (int i = 0; i < shown; ++i) {
        if (i) out += ", ";
        long long d = doubled[i];
        if (d % 2 == 0)
            out += std::to_string(d / 2);
        else
            out += std::to_string(d) + "/2";
    }
    if (shown < prefix()) out += ", ...";
    return out + ")";
}

std::vector<std::pair<int, int>> singular_pairs(const WeightSeq& seq) {
    std::map<long long, int> at;  // value -> 1-based index
    for (int i = 0; i < seq.prefix(); ++i) at[seq.doubled[i]] = i + 1;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < seq.prefix(); ++i) {
        long long v = seq.doubled[i];
        if (v <= 0) continue;
        auto it = at.find(-v);
        if (it != at.end()) out.push_back({i + 1, it->second});
    }
    return out;
}

int singularity_degree(int delta, const Partition& lam) {
    return static_cast<int>(singular_pairs(weight_seq(delta, lam)).size());
}

std::vector<RegEntry> regularize(const WeightSeq& seq) {
    std::vector<bool> drop(seq.prefix(), false);
    for (auto [i, j] : singular_pairs(seq)) drop[i - 1] = drop[j - 1] = true;
    std::vector<RegEntry> out;
    for (int i = 0; i < seq.prefix(); ++i)
        if (!drop[i]) out.push_back({seq.doubled[i], i + 1});
    return out;
}

RankSet rank_set(int delta, const Partition& lam, int prefix) {
    return rank_set_impl(weight_seq(delta, lam, prefix), 0);
}

RankSet rank_set_zero_convention(int delta, const Partition& lam, bool zero_positive,
                                 int prefix) {
    return rank_set_impl(weight_seq(delta, lam, prefix), zero_positive ? 1 : -1);
}

Partition rank_set_inverse(int delta, const Partition& anchor, const RankSet& b, int prefix) {
    if (b.size() % 2 != 0) throw NotInImage("rank sets of partitions have even order");
    int n = prefix > 0 ? prefix : default_prefix(delta, anchor);
    WeightSeq seq;
    RegularData data;
    for (int attempt = 0;; ++attempt) {
        seq = weight_seq(delta, anchor, n);
        data = regular_data(seq);
        if (static_cast<int>(data.mags_asc.size()) >= b.max() + 2) break;
        if (attempt > 4) throw InternalError("rank set inverse failed to grow its truncation");
        n += b.max() + 2 - static_cast<int>(data.mags_asc.size()) + 4;
    }
    std::vector<long long> doubleton;  // positive member of each singular pair
    for (auto [i, j] : singular_pairs(seq)) doubleton.push_back(seq.doubled[i - 1]);

    std::vector<Partition> found;
    for (const RankSet& cand : {b, b.toggled(1)}) {
        std::vector<long long> values;
        for (long long x : doubleton) {
            values.push_back(x);
            values.push_back(-x);
        }
        for (size_t k = 0; k < data.mags_asc.size(); ++k) {
            long long m = data.mags_asc[k];
            values.push_back(cand.contains(static_cast<int>(k) + 1) ? m : -m);
        }
        std::sort(values.rbegin(), values.rend());
        std::vector<int> parts;
        bool ok = true;
        for (size_t i = 0; i < values.size(); ++i) {
            long long num = values[i] + delta + 2LL * i;
            if (num % 2 != 0) throw InternalError("weight entry with wrong parity");
            long long p = num / 2;
            if (p < 0 || (i > 0 && p > parts.back())) {
                ok = false;
                break;
            }
            parts.push_back(static_cast<int>(p));
        }
        if (!ok || parts.size() < 2 || parts[parts.size() - 1] != 0 || parts[parts.size() - 2] != 0)
            continue;
        Partition p{std::move(parts)};
        if (!same_block(delta, anchor, p)) continue;
        if (std::find(found.begin(), found.end(), p) == found.end()) found.push_back(p);
    }
    if (found.empty()) throw NotInImage("no partition in the block has the requested rank set");
    if (found.size() > 1) throw InternalError("rank set inverse is ambiguous");
    return found.front();
}

bool same_block(int delta, const Partition& lam, const Partition& mu) {
    int n = std::max(default_prefix(delta, lam), default_prefix(delta, mu));
    WeightSeq a = weight_seq(delta, lam, n);
    WeightSeq b = weight_seq(delta, mu, n);
    std::vector<long long> ma, mb;
    bool zero = false;
    int pa = 0, pb = 0;
    for (long long v : a.doubled) {
        ma.push_back(std::llabs(v));
        if (v == 0) zero = true;
        if (v > 0) ++pa;
    }
    for (long long v : b.doubled) {
        mb.push_back(std::llabs(v));
        if (v > 0) ++pb;
    }
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
    return zero || (pa % 2 == pb % 2);
}

bool is_minimal_balanced(int delta, const Partition& lam, const Partition& mu) {
    if (lam == mu || !lam.contains(mu)) return false;
    if (!same_block(delta, lam, mu)) return false;
    return even_graph_edge_between(rank_set(delta, mu), rank_set(delta, lam)).has_value();
}

std::optional<BalancedWitness> minimal_balanced_witness(int delta, const Partition& lam,
                                                        const Partition& mu) {
    if (lam == mu || !lam.contains(mu)) return std::nullopt;
    std::vector<Box> skew = skew_boxes(lam, mu);
    size_t sz = skew.size();
    if (sz == 0 || sz % 2 != 0) return std::nullopt;

    std::set<std::pair<int, int>> boxes;
    for (const Box& b : skew) boxes.insert({b.row, b.col});

    // candidate centers: midpoints of opposite-charge box pairs, stored with
    // doubled coordinates; such midpoints automatically satisfy
    // 2*(p_col - p_row) = delta - 1
    std::set<std::pair<int, int>> centers;
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = i; j < sz; ++j)
            if (charge(delta, skew[i]) + charge(delta, skew[j]) == 0)
                centers.insert({skew[i].row + skew[j].row, skew[i].col + skew[j].col});

    for (auto [r2, c2] : centers) {
        if (r2 % 2 == 0) {
            bool meets = false;
            for (const Box& b : skew) meets |= (b.row == r2 / 2);
            if (meets) continue;  // the half-turn would fix this row
        }
        bool valid = true;
        std::vector<std::pair<Box, Box>> orbit;  // one entry per two-element orbit
        std::set<std::pair<int, int>> seen;
        for (const Box& b : skew) {
            Box img{r2 - b.row, c2 - b.col};
            if (img == b || !boxes.count({img.row, img.col})) {
                valid = false;
                break;
            }
            if (!seen.count({b.row, b.col})) {
                orbit.push_back({b, img});
                seen.insert({b.row, b.col});
                seen.insert({img.row, img.col});
            }
        }
        if (!valid) continue;

        // pick one box per orbit so the picks form a rim
        size_t k = orbit.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            std::vector<Box> rim, image;
            for (size_t t = 0; t < k; ++t) {
                const auto& [b, img] = orbit[t];
                if (mask & (size_t{1} << t)) {
                    rim.push_back(b);
                    image.push_back(img);
                } else {
                    rim.push_back(img);
                    image.push_back(b);
                }
            }
            if (is_rim(rim)) {
                std::sort(rim.begin(), rim.end());
                std::sort(image.begin(), image.end());
                return BalancedWitness{r2, c2, std::move(rim), std::move(image)};
            }
        }
    }
    return std::nullopt;
}

bool is_minimal_balanced_geometric(int delta, const Partition& lam, const Partition& mu) {
    return minimal_balanced_witness(delta, lam, mu).has_value();
}

std::vector<Partition> block_down_neighbors(int delta, const Partition& lam) {
    RankSet a = rank_set(delta, lam);
    std::vector<Partition> out;
    for (const EvenEdge& e : even_graph_neighbors(a))
        if (e.upper == a) out.push_back(rank_set_inverse(delta, lam, e.lower));
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return x.before(y);
    });
    return out;
}

std::vector<Partition> block_members(int delta, const Partition& lam, int n) {
    std::vector<Partition> out;
    for (const Partition& p : cell_labels(n))
        if (same_block(delta, lam, p)) out.push_back(p);
    return out;
}

std::vector<std::pair<Partition, int>> block_ball(int delta, const Partition& lam, int radius) {
    RankSet start = rank_set(delta, lam);
    std::map<RankSet, int> dist;
    dist[start] = 0;
    std::queue<RankSet> todo;
    todo.push(start);
    while (!todo.empty()) {
        RankSet cur = todo.front();
        todo.pop();
        int d = dist[cur];
        if (d == radius) continue;
        for (const EvenEdge& e : even_graph_neighbors(cur)) {
            const RankSet& next = (e.upper == cur) ? e.lower : e.upper;
            if (!dist.count(next)) {
                dist[next] = d + 1;
                todo.push(next);
            }
        }
    }
    std::vector<std::pair<Partition, int>> out;
    for (const auto& [set, d] : dist) out.push_back({rank_set_inverse(delta, lam, set), d});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second < y.second;
        return x.first.before(y.first);
    });
    return out;
}

Partition transport_block(int delta, const Partition& lam, int row, const Partition& mu) {
    Partition target = lam.remove_from_row(row);
    if (singularity_degree(delta, lam) != singularity_degree(delta, target))
        throw SingularityMismatch("box removal changes the singularity degree");
    if (!same_block(delta, lam, mu)) throw NotInImage("mu is not in the block of lam");
    return rank_set_inverse(delta, target, rank_set(delta, mu));
}

}  // namespace brauerdm
