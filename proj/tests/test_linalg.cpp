#include "block/linalg.hpp"
#include "block/sampling.hpp"

#include <doctest.h>

using namespace block;
using namespace block::linalg;

namespace {

// Dense Gauss-Jordan rank over Q, used as an independent oracle.
std::size_t dense_rank(std::vector<std::vector<Scalar>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c].is_zero())
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero())
                continue;
            const Scalar f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

Scalar dot(const IntRow &row, const RatRow &v) {
    Scalar s;
    for (const auto &[c, a] : row)
        for (const auto &[d, b] : v)
            if (c == d)
                s += Scalar(mpq_class(a)) * b;
    return s;
}

} // namespace

TEST_CASE("nullspace of trivial systems") {
    EchelonBasis empty;
    CHECK(empty.nullspace(4).size() == 4);

    EchelonBasis one;
    one.insert(IntRow{{0, 1}, {1, -1}});
    const auto ns = one.nullspace(2);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == RatRow{{0, Scalar(1)}, {1, Scalar(1)}});
}

TEST_CASE("echelon basis membership") {
    EchelonBasis b;
    CHECK(b.insert(RatRow{{0, Scalar(1, 2)}, {2, Scalar(3)}}));
    CHECK(b.insert(RatRow{{1, Scalar(1)}}));
    CHECK_FALSE(b.insert(RatRow{{0, Scalar(1)}, {1, Scalar(-4)}, {2, Scalar(6)}}));
    CHECK(b.rank() == 2);
    CHECK(b.contains(RatRow{{0, Scalar(-1, 3)}, {2, Scalar(-2)}}));
    CHECK_FALSE(b.contains(RatRow{{2, Scalar(1)}}));
    CHECK(in_span({RatRow{{0, Scalar(2)}}, RatRow{{1, Scalar(3)}}}, RatRow{{0, Scalar(1)}, {1, Scalar(1)}}));
    CHECK_FALSE(in_span({RatRow{{0, Scalar(2)}}}, RatRow{{1, Scalar(1)}}));
}

TEST_CASE("sparse fraction-free elimination agrees with dense elimination") {
    Sampler rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 10));
        std::vector<std::vector<Scalar>> dense(rows, std::vector<Scalar>(cols));
        EchelonBasis basis;
        std::vector<IntRow> sparse;
        for (auto &row : dense) {
            IntRow r;
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.uniform(0, 2) == 0) {
                    const auto v = rng.uniform(-5, 5);
                    row[c] = Scalar(v);
                    if (v != 0)
                        r.emplace_back(c, v);
                }
            sparse.push_back(r);
            basis.insert(r);
        }
        // Duplicate a combination to force dependent rows.
        if (rows > 1) {
            IntRow combo;
            RatRow a, b;
            for (const auto &[c, v] : sparse[0])
                a.emplace_back(c, Scalar(mpq_class(v)) * Scalar(3));
            for (const auto &[c, v] : sparse[1])
                b.emplace_back(c, Scalar(mpq_class(v)) * Scalar(-2));
            std::map<std::size_t, Scalar> sum;
            for (const auto &[c, v] : a)
                sum[c] += v;
            for (const auto &[c, v] : b)
                sum[c] += v;
            RatRow s;
            for (const auto &[c, v] : sum)
                if (!v.is_zero())
                    s.emplace_back(c, v);
            CHECK_FALSE(basis.insert(s));
        }
        const auto r = dense_rank(dense);
        CHECK(basis.rank() == r);
        const auto ns = basis.nullspace(cols);
        CHECK(ns.size() == cols - r);
        for (const auto &v : ns)
            for (const auto &row : sparse)
                CHECK(dot(row, v).is_zero());
        CHECK(rank_of(ns) == ns.size());
    }
}
