#include "brauerdm/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace brauerdm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw ParseError("parts must be weakly decreasing and positive");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, '.')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw ParseError("bad partition part: " + piece);
        }
        if (used != piece.size() || v <= 0) throw ParseError("bad partition part: " + piece);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw InternalError("part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0], 0);
    for (int c = 0; c < parts_[0]; ++c)
        for (int p : parts_) t[c] += (p > c) ? 1 : 0;
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Box> Partition::removable_boxes() const {
    std::vector<Box> out;
    for (int r = 1; r <= length(); ++r)
        if (part(r) > part(r + 1)) out.push_back({r, part(r)});
    return out;
}

std::vector<Box> Partition::addable_boxes() const {
    std::vector<Box> out;
    out.push_back({1, part(1) + 1});
    for (int r = 2; r <= length() + 1; ++r)
        if (part(r) < part(r - 1)) out.push_back({r, part(r) + 1});
    return out;
}

Partition Partition::remove_from_row(int row) const {
    if (row < 1 || row > length()) throw InternalError("no such row");
    std::vector<int> p = parts_;
    p[row - 1] -= 1;
    if (row < length() && p[row - 1] < p[row])
        throw ParseError("removal leaves a non-partition");
    return Partition(std::move(p));
}

bool Partition::before(const Partition& other) const {
    if (sum() != other.sum()) return sum() > other.sum();
    return parts_ > other.parts_;
}

size_t PartitionHash::operator()(const Partition& p) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.parts()) h = h * 1000003u + static_cast<size_t>(v) + 1;
    return h;
}

std::vector<Box> skew_boxes(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) throw NotContained("inner shape not contained in outer");
    std::vector<Box> out;
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.push_back({r, c});
    return out;
}

bool is_rim(std::span<const Box> boxes) {
    size_t n = boxes.size();
    if (n <= 1) return true;
    // dual graph: vertices are boxes, edges join boxes sharing a side
    std::vector<int> deg(n, 0);
    int edges = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int dr = std::abs(boxes[i].row - boxes[j].row);
            int dc = std::abs(boxes[i].col - boxes[j].col);
            if (dr + dc == 1) {
                ++deg[i];
                ++deg[j];
                ++edges;
            }
        }
    if (edges != static_cast<int>(n) - 1) return false;
    for (int d : deg)
        if (d > 2 || d == 0) return false;
    // connectivity: n-1 edges + connected + max degree 2 = simple path
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int dr = std::abs(boxes[i].row - boxes[j].row);
            int dc = std::abs(boxes[i].col - boxes[j].col);
            if (dr + dc == 1) uf[find(i)] = find(j);
        }
    for (size_t i = 0; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<Partition> cell_labels(int n) {
    std::vector<Partition> out;
    for (int m = n; m >= 0; m -= 2)
        for (auto& p : partitions_of(m)) out.push_back(std::move(p));
    return out;
}

long long num_standard_tableaux(const Partition& lam) {
    if (lam.empty()) return 1;
    Partition conj = lam.conjugate();
    // f = |lam|! / prod hooks; keep exact by factoring hooks incrementally
    long long num = 1;
    std::vector<long long> hooks;
    for (const Box& b : lam.boxes())
        hooks.push_back((lam.part(b.row) - b.col) + (conj.part(b.col) - b.row) + 1);
    std::vector<long long> numer;
    for (long long k = 1; k <= lam.sum(); ++k) numer.push_back(k);
    for (long long& h : hooks) {
        for (long long& f : numer) {
            if (h == 1) break;
            long long g = std::gcd(f, h);
            f /= g;
            h /= g;
        }
        if (h != 1) throw InternalError("hook formula did not divide evenly");
    }
    for (long long f : numer) num *= f;
    return num;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long double_factorial(int m) {
    long long r = 1;
    for (int v = m; v > 1; v -= 2) r *= v;
    return r;
}

long long dim_cell(int n, const Partition& lam) {
    int l = lam.sum();
    if (l > n || (n - l) % 2 != 0) throw ParseError("label degree must be n, n-2, ...");
    return binomial(n, l) * double_factorial(n - l - 1) * num_standard_tableaux(lam);
}

}  // namespace brauerdm
