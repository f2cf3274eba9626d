#include "block/linalg.hpp"

#include <algorithm>

namespace block::linalg {

namespace {

// a*x - b*y over sorted sparse rows.
IntRow combine(const mpz_class &a, const IntRow &x, const mpz_class &b, const IntRow &y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    auto ix = x.begin(), iy = y.begin();
    while (ix != x.end() || iy != y.end()) {
        if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else if (ix == x.end() || iy->first < ix->first) {
            out.emplace_back(iy->first, -b * iy->second);
            ++iy;
        } else {
            mpz_class v = a * ix->second - b * iy->second;
            if (v != 0)
                out.emplace_back(ix->first, std::move(v));
            ++ix;
            ++iy;
        }
    }
    return out;
}

// Eliminates entry `col` of `row` using `pivot` (whose entry at `col` is nonzero).
void eliminate(IntRow &row, std::size_t col, const IntRow &pivot, const mpz_class &row_entry) {
    const auto &pv = std::lower_bound(pivot.begin(), pivot.end(), col,
                                      [](const auto &e, std::size_t c) { return e.first < c; })
                         ->second;
    mpz_class g = gcd(pv, row_entry);
    row = combine(pv / g, row, row_entry / g, pivot);
    make_primitive(row);
}

} // namespace

void make_primitive(IntRow &row) {
    if (row.empty())
        return;
    mpz_class g = 0;
    for (const auto &[c, v] : row) {
        g = gcd(g, v);
        if (g == 1)
            break;
    }
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto &[c, v] : row)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const RatRow &row) {
    mpz_class l = 1;
    for (const auto &[c, v] : row)
        l = lcm(l, v.denominator());
    IntRow out;
    out.reserve(row.size());
    for (const auto &[c, v] : row)
        if (!v.is_zero())
            out.emplace_back(c, v.numerator() * (l / v.denominator()));
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    make_primitive(out);
    return out;
}

IntRow EchelonBasis::reduce(IntRow row) const {
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end())
            break;
        const mpz_class lead = row.front().second;
        eliminate(row, row.front().first, it->second, lead);
    }
    return row;
}

bool EchelonBasis::insert(IntRow row) {
    make_primitive(row);
    row = reduce(std::move(row));
    if (row.empty())
        return false;
    const auto lead = row.front().first;
    rows_.emplace(lead, std::move(row));
    return true;
}

std::vector<RatRow> EchelonBasis::nullspace(std::size_t columns) const {
    // Back-substitute into reduced row echelon form, highest pivot first.
    std::map<std::size_t, IntRow> rref = rows_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        IntRow &row = it->second;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 1; k < row.size(); ++k) {
                const auto col = row[k].first;
                auto p = rref.find(col);
                if (p == rref.end())
                    continue;
                const mpz_class entry = row[k].second;
                eliminate(row, col, p->second, entry);
                changed = true;
                break;
            }
        }
    }

    // Each pivot row now reads lead * x_pivot + sum_free v_f x_f = 0.
    std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> by_free;
    for (const auto &[pivot, row] : rref) {
        const mpz_class &lead = row.front().second;
        for (std::size_t k = 1; k < row.size(); ++k)
            by_free[row[k].first].emplace_back(pivot, Scalar(mpz_class(-row[k].second), lead));
    }

    std::vector<RatRow> out;
    for (std::size_t f = 0; f < columns; ++f) {
        if (rref.count(f))
            continue;
        RatRow v;
        if (auto it = by_free.find(f); it != by_free.end())
            v = it->second;
        v.emplace_back(f, Scalar(1));
        std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

bool in_span(const std::vector<RatRow> &generators, const RatRow &target) {
    EchelonBasis basis;
    for (const auto &g : generators)
        basis.insert(g);
    return basis.contains(target);
}

std::size_t rank_of(const std::vector<RatRow> &vectors) {
    EchelonBasis basis;
    for (const auto &v : vectors)
        basis.insert(v);
    return basis.rank();
}

} // namespace block::linalg
