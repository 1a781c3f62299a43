#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "brauerdm/errors.hpp"

namespace brauerdm {

// Finite set of positive integers, kept sorted.  Labels vertices of the
// even-set graph and rows of polynomial tables.
class RankSet {
  public:
    RankSet() = default;
    explicit RankSet(std::vector<int> elems) : v_(std::move(elems)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        if (!v_.empty() && v_.front() < 1) throw ParseError("rank set elements are positive");
    }

    static RankSet parse(const std::string& text) {
        if (text.empty() || text == "-" || text == "{}") return RankSet{};
        std::vector<int> elems;
        size_t pos = 0;
        std::string body = text;
        if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string piece = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
            size_t used = 0;
            int val = 0;
            try {
                val = std::stoi(piece, &used);
            } catch (const std::exception&) {
                throw ParseError("bad rank set element: " + piece);
            }
            if (used != piece.size()) throw ParseError("bad rank set element: " + piece);
            elems.push_back(val);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return RankSet(std::move(elems));
    }

    const std::vector<int>& elems() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int max() const { return v_.empty() ? 0 : v_.back(); }
    bool contains(int k) const { return std::binary_search(v_.begin(), v_.end(), k); }

    RankSet with(int k) const {
        auto c = v_;
        c.insert(std::lower_bound(c.begin(), c.end(), k), k);
        return RankSet(std::move(c));
    }
    RankSet without(int k) const {
        auto c = v_;
        c.erase(std::remove(c.begin(), c.end(), k), c.end());
        RankSet r;
        r.v_ = std::move(c);
        return r;
    }
    RankSet toggled(int k) const { return contains(k) ? without(k) : with(k); }

    // "{1,3,5,6}", "{}" when empty
    std::string to_string() const {
        std::string out = "{";
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(v_[i]);
        }
        return out + "}";
    }

    // "1356" when all elements are single digits, otherwise "1.7.8.10.11";
    // the empty set renders as "-"
    std::string compact_label() const {
        if (v_.empty()) return "-";
        bool digits = v_.back() <= 9;
        std::string out;
        for (size_t i = 0; i < v_.size(); ++i) {
            if (i && !digits) out += '.';
            out += std::to_string(v_[i]);
        }
        return out;
    }

    friend bool operator==(const RankSet&, const RankSet&) = default;
    friend bool operator<(const RankSet& a, const RankSet& b) { return a.v_ < b.v_; }

  private:
    std::vector<int> v_;
};

struct RankSetHash {
    size_t operator()(const RankSet& s) const {
        size_t h = 1469598103934665603ull;
        for (int v : s.elems()) h = (h ^ static_cast<size_t>(v)) * 1099511628211ull;
        return h;
    }
};

}  // namespace brauerdm
