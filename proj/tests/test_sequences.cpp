#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "supercong/sequences.hpp"

using namespace supercong;

TEST_CASE("defining sums at small index") {
    auto d = sequence_exact(SeqTag::domb, SeqFormula::definition, 3);
    CHECK(d == std::vector<Int>{1, 4, 28, 256});
    auto b = sequence_exact(SeqTag::az, SeqFormula::definition, 3);
    CHECK(b == std::vector<Int>{1, -3, 9, -3});
    auto w = sequence_exact(SeqTag::w, SeqFormula::definition, 3);
    CHECK(w == std::vector<Int>{1, -3, 9, -21});
    CHECK_THROWS_AS(sequence_exact(SeqTag::domb, SeqFormula::reduced_alt, 3), DomainError);
}

TEST_CASE("dual formulas agree as exact integers to n = 40") {
    auto d1 = sequence_exact(SeqTag::domb, SeqFormula::definition, 40);
    auto d2 = sequence_exact(SeqTag::domb, SeqFormula::reduced, 40);
    CHECK(d1 == d2);
    auto b1 = sequence_exact(SeqTag::az, SeqFormula::definition, 40);
    auto b2 = sequence_exact(SeqTag::az, SeqFormula::reduced, 40);
    auto b3 = sequence_exact(SeqTag::az, SeqFormula::reduced_alt, 40);
    CHECK(b1 == b2);
    CHECK(b1 == b3);
}

TEST_CASE("signs at small index") {
    auto d = sequence_exact(SeqTag::domb, SeqFormula::definition, 25);
    for (const auto& v : d) CHECK(v > 0);
    auto b = sequence_exact(SeqTag::az, SeqFormula::definition, 3);
    for (size_t i = 0; i < b.size(); ++i) CHECK((i % 2 == 0 ? b[i] > 0 : b[i] < 0));
}

TEST_CASE("modular path matches exact values reduced") {
    auto exact = sequence_exact(SeqTag::domb, SeqFormula::definition, 25);
    auto mod = sequence_mod(SeqTag::domb, 25, 7, 2);
    REQUIRE(exact.size() == mod.size());
    for (size_t i = 0; i < exact.size(); ++i) {
        Int r = exact[i] % 49;
        if (r < 0) r += 49;
        CHECK(mod[i] == r);
    }
    auto mod13 = sequence_mod(SeqTag::domb, 3, 13, 2);
    CHECK(mod13 == std::vector<Int>{1, 4, 28, 87});
    CHECK(sequence_mod(SeqTag::az, 0, 11, 2) == std::vector<Int>{1});

    for (auto tag : {SeqTag::az, SeqTag::w}) {
        auto ex = sequence_exact(tag, SeqFormula::definition, 30);
        auto md = sequence_mod(tag, 30, 11, 3);
        for (size_t i = 0; i < ex.size(); ++i) {
            Int r = ex[i] % pow_p(11, 3);
            if (r < 0) r += pow_p(11, 3);
            CHECK(md[i] == r);
        }
    }
}

TEST_CASE("modular path beyond the exact range (n >= p)") {
    // cross-check a prime-length slice against the independent oracle
    const long p = 31;
    auto md = sequence_mod(SeqTag::az, p - 1, p, 2);
    auto ex = oracle::az(p - 1);
    for (size_t i = 0; i < md.size(); ++i) {
        Int r = ex[i] % pow_p(p, 2);
        if (r < 0) r += pow_p(p, 2);
        CHECK(md[i] == r);
    }
}

TEST_CASE("Domb sum congruence of Theorem 5.1 over a small sweep") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        FactTable f(p, 2);
        auto d = sequence_mod(SeqTag::domb, p - 1, f);
        const Int& pm = pow_p(p, 2);
        Int i16 = mod_inverse(Int(16), pm), i4 = mod_inverse(Int(4), pm);
        Int s16 = 0, s4 = 0, w16 = 1, w4 = 1;
        for (const auto& v : d) {
            s16 = (s16 + v * w16) % pm;
            s4 = (s4 + v * w4) % pm;
            w16 = w16 * i16 % pm;
            w4 = w4 * i4 % pm;
        }
        CHECK(s16 == s4);
    }
}
