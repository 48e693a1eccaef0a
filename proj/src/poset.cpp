#include "arrcalc/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "arrcalc/error.hpp"

namespace arrcalc {

namespace {

using Row = std::vector<Rat>;  // n coefficients then the offset

// Reduce `row` against the pivots of an RREF system. Returns the pivot
// column of what remains, n for "0 = const", or -1 for the zero row.
int reduce_row(Row& row, const std::vector<Row>& rref, int n) {
    for (const auto& p : rref) {
        int pc = 0;
        while (pc < n && p[pc] == 0) ++pc;
        if (row[pc] != 0) {
            Rat f = row[pc];
            for (int c = pc; c <= n; ++c) row[c] -= f * p[c];
        }
    }
    for (int c = 0; c < n; ++c)
        if (row[c] != 0) return c;
    return row[n] != 0 ? n : -1;
}

// Insert a reduced row with pivot `pc` into an RREF system, keeping full
// reduction and pivot-sorted row order.
void insert_row(std::vector<Row>& rref, Row row, int pc, int n) {
    Rat lead = row[pc];
    for (int c = 0; c <= n; ++c) row[c] /= lead;
    for (auto& p : rref) {
        if (p[pc] == 0) continue;
        Rat f = p[pc];
        for (int c = 0; c <= n; ++c) p[c] -= f * row[c];
    }
    auto pos = std::find_if(rref.begin(), rref.end(), [&](const Row& p) {
        int c = 0;
        while (c < n && p[c] == 0) ++c;
        return c > pc;
    });
    rref.insert(pos, std::move(row));
}

std::string rref_key(const std::vector<Row>& rref) {
    std::string key;
    for (const auto& row : rref) {
        for (const auto& v : row) {
            key += v.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

// true if every point of the flat satisfies the hyperplane equation
bool flat_inside(const std::vector<Row>& rref, const Row& hyp, int n) {
    Row r = hyp;
    return reduce_row(r, rref, n) == -1;
}

std::vector<Row> distinct_rows(const Arrangement& arr) {
    std::map<std::pair<std::vector<long>, Rat>, bool> seen;
    std::vector<Row> rows;
    for (const auto& h : arr.hyperplanes) {
        CanonicalHyperplane c = canonical_form(h);
        auto key = std::make_pair(c.normal, c.offset);
        if (seen.emplace(std::move(key), true).second) {
            Row row(arr.dim + 1);
            for (int i = 0; i < arr.dim; ++i) row[i] = Rat(c.normal[i]);
            row[arr.dim] = c.offset;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

IntersectionPoset intersection_poset(const Arrangement& arr) {
    const int n = arr.dim;
    std::vector<Row> hyps = distinct_rows(arr);
    require(hyps.size() <= 64, errc::guard_refused,
            "intersection-poset oracle limited to 64 distinct hyperplanes, got " +
                std::to_string(hyps.size()));
    require(n <= 4, errc::guard_refused,
            "intersection-poset oracle limited to dimension 4");

    IntersectionPoset poset;
    poset.dim = n;
    poset.hyperplane_count = hyps.size();

    std::vector<std::vector<Row>> systems;  // parallel to poset.flats
    std::map<std::string, size_t> index;
    systems.push_back({});
    poset.flats.push_back(Flat{{}, n, {}});
    index[rref_key(systems[0])] = 0;

    for (const auto& hyp : hyps) {
        size_t existing = systems.size();
        for (size_t f = 0; f < existing; ++f) {
            Row row = hyp;
            int pc = reduce_row(row, systems[f], n);
            if (pc == -1) continue;  // flat already inside the hyperplane
            if (pc == n) continue;   // empty intersection
            std::vector<Row> sys = systems[f];
            insert_row(sys, std::move(row), pc, n);
            std::string key = rref_key(sys);
            if (index.emplace(key, systems.size()).second) {
                Flat flat;
                flat.dim = n - static_cast<int>(sys.size());
                poset.flats.push_back(std::move(flat));
                systems.push_back(std::move(sys));
            }
        }
    }

    // membership masks over the distinct hyperplanes
    size_t words = (hyps.size() + 63) / 64;
    for (size_t f = 0; f < poset.flats.size(); ++f) {
        poset.flats[f].rref = systems[f];
        poset.flats[f].above.assign(std::max<size_t>(words, 1), 0);
        for (size_t h = 0; h < hyps.size(); ++h)
            if (flat_inside(systems[f], hyps[h], n))
                poset.flats[f].above[h / 64] |= std::uint64_t(1) << (h % 64);
    }
    return poset;
}

std::vector<Int> mobius_values(const IntersectionPoset& poset) {
    const size_t m = poset.flats.size();
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return poset.flats[a].dim > poset.flats[b].dim;
    });

    auto contains = [&](size_t y, size_t x) {  // flat y contains flat x
        const auto& my = poset.flats[y].above;
        const auto& mx = poset.flats[x].above;
        for (size_t w = 0; w < my.size(); ++w)
            if (my[w] & ~mx[w]) return false;
        return true;
    };

    std::vector<Int> mu(m, 0);
    for (size_t i = 0; i < m; ++i) {
        size_t x = order[i];
        Int acc = 0;
        for (size_t j = 0; j < i; ++j) {
            size_t y = order[j];
            if (contains(y, x)) acc += mu[y];
        }
        mu[x] = (i == 0) ? Int(1) : -acc;
    }
    return mu;
}

IntPoly chi_mobius(const Arrangement& arr) {
    IntersectionPoset poset = intersection_poset(arr);
    std::vector<Int> mu = mobius_values(poset);
    std::vector<Int> coeffs(arr.dim + 1, Int(0));
    for (size_t f = 0; f < poset.flats.size(); ++f) coeffs[poset.flats[f].dim] += mu[f];
    return IntPoly(std::move(coeffs));
}

}  // namespace arrcalc
