#include <catch2/catch_amalgamated.hpp>

#include "hodgeprobe/lattice.hpp"
#include "support/oracles.hpp"

using namespace hodgeprobe;

namespace {

IMat imat(std::initializer_list<std::initializer_list<long>> rows) {
    IMat m;
    for (auto& r : rows) {
        IVec row;
        for (long v : r) row.push_back(Integer(v));
        m.push_back(std::move(row));
    }
    return m;
}

/// gcd of all k x k minors of a k x m integer matrix; 1 iff the rows span
/// a saturated lattice. Independent saturation certificate.
Integer minor_gcd(const IMat& m, size_t cols) {
    size_t k = m.size();
    Integer g = 0;
    ExactMatrix em = to_matrix(m, cols);
    for (uint64_t sel : subset_masks(static_cast<int>(cols), static_cast<int>(k))) {
        std::vector<size_t> cs;
        for (int p : positions_of(sel)) cs.push_back(p);
        std::vector<size_t> rs(k);
        for (size_t i = 0; i < k; ++i) rs[i] = i;
        Scalar d = det(em.submatrix(rs, cs));
        g = gcd(g, d.integer_value());
    }
    return g;
}

bool same_rational_span(const IMat& a, const IMat& b, size_t cols) {
    ExactMatrix ea = to_matrix(a, cols), eb = to_matrix(b, cols);
    std::vector<Vec> all;
    for (size_t i = 0; i < ea.rows(); ++i) all.push_back(ea.row(i));
    size_t ra = rank(from_rows(all, cols));
    for (size_t i = 0; i < eb.rows(); ++i) all.push_back(eb.row(i));
    return ra == b.size() && rank(from_rows(all, cols)) == ra;
}

} // namespace

TEST_CASE("saturate simple lattices") {
    auto s1 = saturate({imat({{2, 0}})}, 2);
    REQUIRE(s1.vectors.size() == 1);
    CHECK(s1.vectors[0] == IVec({1, 0}));

    auto s2 = saturate({imat({{2, 4}})}, 2);
    REQUIRE(s2.vectors.size() == 1);
    CHECK(s2.vectors[0] == IVec({1, 2}));
}

TEST_CASE("saturate {(1,1,0),(0,2,2)} against the normal-form oracle") {
    IMat in = imat({{1, 1, 0}, {0, 2, 2}});
    auto s = saturate({in}, 3);
    REQUIRE(s.vectors.size() == 2);
    CHECK(minor_gcd(s.vectors, 3) == 1);
    CHECK(same_rational_span(in, s.vectors, 3));
    // the saturation contains (0,1,1)
    ExactMatrix em = to_matrix(s.vectors, 3);
    std::vector<Vec> rows = {em.row(0), em.row(1), {Scalar(0), Scalar(1), Scalar(1)}};
    CHECK(rank(from_rows(rows, 3)) == 2);
}

TEST_CASE("saturate is idempotent and saturated (random lattices)") {
    oracles::Rng rng(23);
    std::uniform_int_distribution<long> entry(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        size_t m = 4 + trial % 3, k = 1 + trial % 3;
        IMat in;
        for (size_t i = 0; i < k; ++i) {
            IVec row(m);
            for (auto& v : row) v = Integer(entry(rng.gen));
            in.push_back(row);
        }
        if (rank(to_matrix(in, m)) != k) continue;
        auto s = saturate({in}, m);
        REQUIRE(s.vectors.size() == k);
        CHECK(minor_gcd(s.vectors, m) == 1);
        CHECK(same_rational_span(in, s.vectors, m));
        auto s2 = saturate(s, m);
        CHECK(s2.vectors == s.vectors);
    }
}

TEST_CASE("skew_normal_form canonical cases") {
    // standard symplectic 4x4 is already in form [[0,I],[-I,0]]
    IMat std4 = imat({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
    auto nf = skew_normal_form(std4);
    CHECK(nf.divisors == std::vector<Integer>({1, 1}));

    auto nf2 = skew_normal_form(imat({{0, 2}, {-2, 0}}));
    CHECK(nf2.divisors == std::vector<Integer>({2}));
}

TEST_CASE("skew_normal_form with pfaffian 2 gives divisors (1,2)") {
    // alternating 4x4 with Pf = e01*e23 - e02*e13 + e03*e12 = 1 - 1 + 2 = 2
    IMat e = imat({{0, 1, 1, 1}, {-1, 0, 2, 1}, {-1, -2, 0, 1}, {-1, -1, -1, 0}});
    Scalar pf = pfaffian(to_matrix(e, 4));
    REQUIRE(pf.integer_value() == 2);
    auto nf = skew_normal_form(e);
    CHECK(nf.divisors == std::vector<Integer>({1, 2}));
}

TEST_CASE("skew_normal_form properties on random alternating matrices") {
    oracles::Rng rng(31);
    std::uniform_int_distribution<long> entry(-5, 5);
    int done = 0;
    for (int trial = 0; done < 25 && trial < 200; ++trial) {
        size_t n = (trial % 2 == 0) ? 4 : 6;
        IMat e(n, IVec(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                e[i][j] = Integer(entry(rng.gen));
                e[j][i] = -e[i][j];
            }
        if (det(to_matrix(e, n)).is_zero()) continue;
        ++done;
        auto nf = skew_normal_form(e);
        // |det U| = 1
        Scalar du = det(to_matrix(nf.u, n));
        CHECK((du == Scalar(1) || du == Scalar(-1)));
        // U^T E U = [[0, D], [-D, 0]] exactly
        ExactMatrix u = to_matrix(nf.u, n);
        ExactMatrix canon = u.transpose() * to_matrix(e, n) * u;
        size_t g = n / 2;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Scalar expect(0);
                if (j == i + g) expect = Scalar(Integer(nf.divisors[i]));
                if (i == j + g) expect = -Scalar(Integer(nf.divisors[j]));
                CHECK(canon(i, j) == expect);
            }
        // divisibility chain, positive divisors
        for (size_t k = 0; k < g; ++k) {
            CHECK(nf.divisors[k] > 0);
            if (k + 1 < g) CHECK(nf.divisors[k + 1] % nf.divisors[k] == 0);
        }
    }
    REQUIRE(done == 25);
}

TEST_CASE("skew_normal_form rejects degenerate input") {
    CHECK_THROWS_AS(skew_normal_form(imat({{0, 0}, {0, 0}})), Degenerate);
}

TEST_CASE("pfaffian elimination matches brute-force expansion") {
    oracles::Rng rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 2 + 2 * (trial % 3); // 2, 4, 6
        ExactMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                m(i, j) = rng.scalar(-4, 4);
                m(j, i) = -m(i, j);
            }
        CHECK(pfaffian(m) == oracles::pfaffian_brute(m));
    }
    // Pf^2 = det
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m(6, 6);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = i + 1; j < 6; ++j) {
                m(i, j) = rng.scalar(-3, 3);
                m(j, i) = -m(i, j);
            }
        Scalar pf = pfaffian(m);
        CHECK(pf * pf == det(m));
    }
}

TEST_CASE("integer_kernel yields a saturated basis of the null lattice") {
    IMat a = imat({{2, 4, 6}, {1, 2, 3}});
    IMat k = integer_kernel(a, 3);
    REQUIRE(k.size() == 2);
    for (const IVec& v : k)
        for (size_t r = 0; r < a.size(); ++r) {
            Integer dot = 0;
            for (size_t j = 0; j < 3; ++j) dot += a[r][j] * v[j];
            CHECK(dot == 0);
        }
    CHECK(minor_gcd(k, 3) == 1);
}
