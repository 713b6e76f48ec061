#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "core/bigraded.hpp"
#include "core/graded_map.hpp"

using namespace dainfty;

namespace {

// Independent parity oracle: only the mod-2 classes of the components matter.
int pairing_oracle(const Bidegree& a, const Bidegree& b) {
    int ah = ((a.h % 2) + 2) % 2, av = ((a.v % 2) + 2) % 2;
    int bh = ((b.h % 2) + 2) % 2, bv = ((b.v % 2) + 2) % 2;
    return (ah * bh + av * bv) % 2;
}

LinComb single(const TensorWord& w, const Ring& ring, const BigInt& c = 1) {
    LinComb out;
    out.add(w, c, ring);
    return out;
}

}  // namespace

TEST_CASE("koszul pairing and sign") {
    CHECK(koszul_pairing({0, 0}, {5, -3}) == 0);
    CHECK(koszul_sign({0, 0}, {5, -3}) == 1);
    // (1,1) past (1,1): 1*1 + 1*1 = 2, even
    CHECK(koszul_sign({1, 1}, {1, 1}) == 1);
    // (-1,0) past (0,0) and (0,1): horizontal component never pairs
    CHECK(koszul_sign({-1, 0}, {0, 0}) == 1);
    CHECK(koszul_sign({-1, 0}, {0, 1}) == 1);
    // ... but past (-1,0) the pairing is odd
    CHECK(koszul_sign({-1, 0}, {-1, 0}) == -1);

    for (long ah = -3; ah <= 3; ++ah)
        for (long av = -3; av <= 3; ++av)
            for (long bh = -2; bh <= 2; ++bh)
                for (long bv = -2; bv <= 2; ++bv) {
                    Bidegree a{ah, av}, b{bh, bv};
                    CHECK(koszul_pairing(a, b) == pairing_oracle(a, b));
                }
}

TEST_CASE("basis bookkeeping") {
    BigradedBasis basis;
    CHECK(basis.add("u", {0, 0}) == 0);
    CHECK(basis.add("w", {0, 1}) == 1);
    CHECK(basis.size() == 2);
    CHECK(basis.index_of("w") == 1);
    CHECK(basis.index_of("nope") == -1);
    CHECK(basis.degree(1) == Bidegree{0, 1});
    CHECK(basis.name(0) == "u");
    CHECK_THROWS_AS(basis.add("u", {1, 1}), std::invalid_argument);
}

TEST_CASE("linear combination canonical form") {
    Ring z = Ring::integers();
    LinComb c;
    c.add({0}, 2, z);
    c.add({0}, -2, z);
    CHECK(c.is_zero());

    Ring f5 = Ring::mod_p(5);
    LinComb m;
    m.add({1}, -1, f5);
    CHECK(m.terms().at({1}) == 4);
    m.add({1}, 1, f5);
    CHECK(m.is_zero());

    LinComb a = single({0}, z, 3);
    LinComb b = single({0}, z, 2);
    a.add_scaled(b, -1, z);
    CHECK(a == single({0}, z, 1));
    a.scale(-7, z);
    CHECK(a == single({0}, z, -7));

    CHECK_THROWS_AS(Ring::mod_p(1), std::invalid_argument);
    CHECK_THROWS_AS(Ring::mod_p(4), std::invalid_argument);
    CHECK_NOTHROW(Ring::mod_p(2));
    CHECK_NOTHROW(Ring::mod_p(1000003));
}

TEST_CASE("word enumeration is lexicographic") {
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {0, 1});
    auto words = all_words(basis, 3);
    REQUIRE(words.size() == 8);
    CHECK(words.front() == TensorWord{0, 0, 0});
    CHECK(words[1] == TensorWord{0, 0, 1});
    CHECK(words.back() == TensorWord{1, 1, 1});
    CHECK(all_words(basis, 0).empty());
}

TEST_CASE("suspension shifts degrees and round-trips") {
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {2, -1});

    auto same = suspend_basis(basis, SuspensionDirection::vertical, 0);
    CHECK(same == basis);

    auto sv = suspend_basis(basis, SuspensionDirection::vertical, 1);
    CHECK(sv.degree(0) == Bidegree{0, -1});
    CHECK(sv.degree(1) == Bidegree{2, -2});

    auto sh = suspend_basis(basis, SuspensionDirection::horizontal, 1);
    CHECK(sh.degree(0) == Bidegree{-1, 0});

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        BigradedBasis rb;
        rb.add("x", {d(rng), d(rng)});
        rb.add("y", {d(rng), d(rng)});
        auto round = suspend_basis(
            suspend_basis(rb, SuspensionDirection::vertical, 2),
            SuspensionDirection::vertical, -2);
        CHECK(round == rb);
    }
}

TEST_CASE("homogeneity validation") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {0, 1});

    GradedMap good;
    good.arity = 1;
    good.degree = {0, 1};
    good.set({0}, single({1}, z));
    CHECK_NOTHROW(validate_homogeneous(good, basis));

    GradedMap bad = good;
    bad.set({1}, single({0}, z));  // (0,1) + (0,1) != (0,0)
    CHECK_THROWS_AS(validate_homogeneous(bad, basis), std::invalid_argument);

    GradedMap empty_arity;
    empty_arity.arity = 0;
    CHECK_THROWS_AS(validate_homogeneous(empty_arity, basis),
                    std::invalid_argument);
}

TEST_CASE("apply_at basics") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {0, 0});

    GradedMap f;  // degree (0,0): never a sign
    f.arity = 1;
    f.degree = {0, 0};
    f.set({0}, single({1}, z));

    CHECK(apply_at(f, {0, 0}, 2, basis, z) == single({0, 1}, z));
    CHECK(apply_at(f, {0, 0}, 1, basis, z) == single({1, 0}, z));
    CHECK(apply_at(f, {1, 0}, 1, basis, z).is_zero());
    CHECK_THROWS_AS(apply_at(f, {0}, 2, basis, z), std::invalid_argument);
}

TEST_CASE("apply_at picks up the Koszul sign past odd factors") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("e0", {0, 0});
    basis.add("e1", {0, 1});

    GradedMap f;  // odd map e0 -> e1
    f.arity = 1;
    f.degree = {0, 1};
    f.set({0}, single({1}, z));

    // Independent two-factor expansion: sign is the pairing against the
    // first letter only.
    for (int first = 0; first < 2; ++first) {
        for (int second = 0; second < 2; ++second) {
            LinComb got = apply_at(f, {first, second}, 2, basis, z);
            LinComb expect;
            if (second == 0) {
                int sign = pairing_oracle(f.degree, basis.degree(first)) ? -1 : 1;
                expect.add({first, 1}, sign, z);
            }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("rank-3 style evaluation: m11 at position 1") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("u", {0, 0});
    basis.add("v", {-1, 0});
    basis.add("w", {0, 1});

    GradedMap m11;
    m11.arity = 1;
    m11.degree = {-1, 0};
    m11.set({0}, single({1}, z));  // m11(u) = v

    CHECK(apply_at(m11, {0, 2}, 1, basis, z) == single({1, 2}, z));
}

TEST_CASE("Koszul coherence for disjoint positions") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {0, 1});
    basis.add("c", {1, 1});
    basis.add("d", {1, 2});

    GradedMap f;  // arity 1, degree (0,1)
    f.arity = 1;
    f.degree = {0, 1};
    f.set({0}, single({1}, z));
    f.set({2}, single({3}, z));

    GradedMap g;  // arity 2, degree (1,1)
    g.arity = 2;
    g.degree = {1, 1};
    g.set({0, 0}, single({2}, z));
    g.set({0, 1}, single({3}, z));
    g.set({1, 0}, single({3}, z));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, 3);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int len = 4 + static_cast<int>(trial % 2);
        TensorWord w(len);
        for (auto& l : w) l = letter(rng);
        for (int pos_f = 1; pos_f + 1 <= len; ++pos_f) {
            for (int pos_g = pos_f + 1; pos_g + 1 <= len; ++pos_g) {
                // g first (f's position unaffected), then f
                LinComb gw = apply_at(g, w, pos_g, basis, z);
                LinComb first_g = apply_at(f, gw, pos_f, basis, z);
                // f first (arity 1 keeps positions), then g
                LinComb fw = apply_at(f, w, pos_f, basis, z);
                LinComb first_f = apply_at(g, fw, pos_g, basis, z);
                // swapping the disjoint applications costs <|f|,|g|>
                first_f.scale(koszul_sign(f.degree, g.degree), z);
                CHECK(first_g == first_f);
                if (!first_g.is_zero()) ++nontrivial;
            }
        }
    }
    CHECK(nontrivial > 50);  // the property was exercised on nonzero values
}

TEST_CASE("morphism differential") {
    Ring z = Ring::integers();
    BigradedBasis basis;
    basis.add("a", {0, 0});
    basis.add("b", {0, 1});

    GradedMap d;  // d(a) = b
    d.arity = 1;
    d.degree = {0, 1};
    d.set({0}, single({1}, z));

    GradedMap zero;
    zero.arity = 1;
    zero.degree = {0, 0};
    CHECK(mor_differential(zero, d, d, basis, z).is_zero());

    GradedMap id;
    id.arity = 1;
    id.degree = {0, 0};
    id.set({0}, single({0}, z));
    id.set({1}, single({1}, z));

    GradedMap no_d;
    no_d.arity = 1;
    no_d.degree = {0, 1};
    CHECK(mor_differential(id, no_d, no_d, basis, z).is_zero());

    // the identity is a chain map
    CHECK(mor_differential(id, d, d, basis, z).is_zero());

    // projection killing b is not: (del f)(a) = d(a) - f(d a) = b
    GradedMap proj;
    proj.arity = 1;
    proj.degree = {0, 0};
    proj.set({0}, single({0}, z));
    GradedMap del = mor_differential(proj, d, d, basis, z);
    CHECK(del.apply({0}) == single({1}, z));
}
