#include "brauerdm/specht.hpp"

#include <algorithm>

#include "brauerdm/errors.hpp"

namespace brauerdm {

int SpechtData::tabloid_index(const std::vector<int>& row_of) const {
    auto it = std::lower_bound(tabloids.begin(), tabloids.end(), row_of);
    if (it == tabloids.end() || *it != row_of)
        throw InternalError("tabloid missing from the sorted basis");
    return static_cast<int>(it - tabloids.begin());
}

namespace {

void standards_rec(const Partition& shape, int next_letter, int total,
                   std::vector<std::vector<int>>& rows,
                   std::vector<std::vector<std::vector<int>>>& out) {
    if (next_letter > total) {
        out.push_back(rows);
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // letters increase along rows by construction; a new letter may enter
        // row i only while the row above is strictly longer
        if (static_cast<int>(rows[i].size()) >= shape.parts()[i]) continue;
        if (i > 0 && rows[i - 1].size() <= rows[i].size()) continue;
        rows[i].push_back(next_letter);
        standards_rec(shape, next_letter + 1, total, rows, out);
        rows[i].pop_back();
    }
}

// sum over the column stabilizer of the filling, with signs; columns are
// treated one at a time, permuting the letters within each column; since
// parts weakly decrease, the rows meeting column col are a prefix, so a
// letter's position within the column equals its row
void polytabloid_rec(const std::vector<std::vector<int>>& filling, int col,
                     std::vector<int>& row_of, int sign, const SpechtData& sd,
                     std::vector<long long>& coords) {
    if (col >= static_cast<int>(filling[0].size())) {
        coords[sd.tabloid_index(row_of)] += sign;
        return;
    }
    std::vector<int> letters;
    for (const auto& row : filling)
        if (col < static_cast<int>(row.size())) letters.push_back(row[col]);
    std::vector<int> perm(letters.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
        int s = 1;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) s = -s;
        for (std::size_t k = 0; k < letters.size(); ++k)
            row_of[letters[perm[k]] - 1] = static_cast<int>(k);
        polytabloid_rec(filling, col + 1, row_of, sign * s, sd, coords);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t k = 0; k < letters.size(); ++k)
        row_of[letters[k] - 1] = static_cast<int>(k);
}

}  // namespace

SpechtData specht(const Partition& shape) {
    SpechtData sd;
    sd.shape = shape;
    sd.size = shape.sum();

    std::vector<int> base;
    for (std::size_t i = 0; i < shape.parts().size(); ++i)
        base.insert(base.end(), shape.parts()[i], static_cast<int>(i));
    std::sort(base.begin(), base.end());
    do {
        sd.tabloids.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(sd.tabloids.begin(), sd.tabloids.end());

    std::vector<std::vector<int>> rows(shape.parts().size());
    if (shape.empty()) {
        sd.standards.push_back({});
    } else {
        standards_rec(shape, 1, sd.size, rows, sd.standards);
    }

    for (const auto& filling : sd.standards) {
        std::vector<long long> coords(sd.tabloids.size(), 0);
        std::vector<int> row_of(sd.size, 0);
        for (std::size_t i = 0; i < filling.size(); ++i)
            for (int e : filling[i]) row_of[e - 1] = static_cast<int>(i);
        if (filling.empty()) {
            coords[sd.tabloid_index(row_of)] += 1;
        } else {
            polytabloid_rec(filling, 0, row_of, 1, sd, coords);
        }
        sd.polytabloids.push_back(std::move(coords));
    }
    if (sd.polytabloids.size() != static_cast<std::size_t>(num_standard_tableaux(shape)))
        throw InternalError("standard filling count mismatch");
    return sd;
}

std::vector<int> tabloid_permutation(const SpechtData& sd, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != sd.size)
        throw PreconditionViolated("permutation size mismatch");
    std::vector<int> out(sd.tabloids.size());
    std::vector<int> image(sd.size);
    for (std::size_t i = 0; i < sd.tabloids.size(); ++i) {
        for (int e = 1; e <= sd.size; ++e) image[pi[e - 1] - 1] = sd.tabloids[i][e - 1];
        out[i] = sd.tabloid_index(image);
    }
    return out;
}

int permutation_sign(const std::vector<int>& pi) {
    int s = 1;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) s = -s;
    return s;
}

}  // namespace brauerdm
