#include <doctest.h>

#include <random>

#include "quasimap/config.hpp"
#include "quasimap/errors.hpp"
#include "oracles.hpp"

using namespace qm;

namespace {

Presentation fixture(const std::string& name) {
    return load_presentation(std::string(QM_FIXTURES) + "/" + name + ".json");
}

RatClass rc(const std::string& s) { return ratvec_from_string(s); }

TruncationSpec box_spec(const Presentation& p, long lo, long hi,
                        const Rational& degree_max) {
    TruncationSpec t;
    t.degree_max = degree_max;
    t.box.assign(p.rank, {Rational(lo), Rational(hi)});
    return t;
}

}  // namespace

TEST_CASE("coset membership in C_A") {
    Presentation bs3 = fixture("bs3");
    // (1/2,0) pairs to (-1/2, 0, 1/2, 1) on the four columns: integral and
    // nonnegative exactly on columns 2 and 4.
    CHECK(in_c_a(rc("1/2,0"), {1, 3}, bs3));
    CHECK(!in_c_a(rc("1/2,0"), {1, 2}, bs3));
    CHECK(!in_c_a(rc("1/2,0"), {0, 2}, bs3));
    CHECK(in_c_a(rc("0,0"), {0, 1, 2, 3}, bs3));
}

TEST_CASE("support sets") {
    Presentation bs3 = fixture("bs3");
    SupportSets s = support_sets(rc("1/2,0"), bs3);
    CHECK(s.integral == IndexSet{1, 3});
    CHECK(s.nonnegative == IndexSet{1, 3});
    CHECK(s.x_support == s.nonnegative);

    SupportSets all = support_sets(rc("0,0"), bs3);
    CHECK(all.integral == IndexSet{0, 1, 2, 3});
    CHECK(all.nonnegative == IndexSet{0, 1, 2, 3});

    // A negative integral pairing lands in S but not S^{>=0}.
    SupportSets neg = support_sets(rc("-1,0"), bs3);
    CHECK(neg.integral == IndexSet{0, 1, 2, 3});
    CHECK(neg.nonnegative == IndexSet{0, 1});
}

TEST_CASE("inertia and effectiveness predicates") {
    Presentation bs3 = fixture("bs3");
    CHECK(inertia_nonempty(rc("1/2,0"), bs3));
    CHECK(!inertia_nonempty(rc("1/5,0"), bs3));
    CHECK(inertia_nonempty(rc("0,0"), bs3));

    CHECK(is_i_effective(rc("1/2,0"), bs3));
    CHECK(is_i_effective(rc("0,1/2"), bs3));
    // In the inertia set K but not I-effective: S^{>=0} lacks an anticone.
    CHECK(inertia_nonempty(rc("-1,2"), bs3));
    CHECK(!is_i_effective(rc("-1,2"), bs3));
    // Everything negative: S^{>=0} is empty.
    CHECK(!is_i_effective(rc("-1,-1"), bs3));
}

TEST_CASE("degree") {
    Presentation dp = fixture("delpezzo");
    CHECK(degree(rc("1,0,0"), dp) == 1);   // xi - eps = (1,1,1)
    CHECK(degree(rc("0,0,0"), dp) == 0);
    Presentation wgr_ext = fixture("wgr_ext");
    CHECK(degree(rc("-1,-1,3"), wgr_ext) == -3);
    Presentation bs3 = fixture("bs3");
    CHECK(degree(rc("1/2,0"), bs3) == 1);  // deg q^beta = 2 beta
}

TEST_CASE("ci effectiveness on the del Pezzo data") {
    Presentation dp = fixture("delpezzo");
    CHECK(ci_effective(rc("-1/3,-1/3,1"), dp));
    CHECK(ci_effective(rc("1,0,0"), dp));
    CHECK(ci_effective(rc("-1,-1,3"), dp));
    // mu_2 classes (beta_1 + beta_2 = 1/2) never touch Y.
    CHECK(!ci_effective(rc("1/2,0,0"), dp));
    CHECK(!ci_effective(rc("0,1/2,1"), dp));
    Presentation wgr = fixture("wgr");
    CHECK_THROWS_AS(ci_effective(rc("0,0"), wgr), MissingCIDataError);
    // Descriptor "all" falls back to I-effectiveness.
    wgr.ci_effective = CiEffectiveAll{};
    CHECK(ci_effective(rc("1/2,0"), wgr) == is_i_effective(rc("1/2,0"), wgr));
}

TEST_CASE("ages of the del Pezzo stabilizer classes") {
    Presentation dp = fixture("delpezzo");
    CHECK(age(rc("0,0,0"), dp) == 0);
    CHECK(age(rc("-1/3,-1/3,0"), dp) == Rational(2, 3));
    CHECK(age(rc("-2/3,-2/3,0"), dp) == Rational(4, 3));
    // age depends only on the sector label.
    CHECK(age(rc("2/3,-1/3,0"), dp) == age_of_label(sector_label(rc("2/3,-1/3,0")), dp));
    CHECK(age_of_label(ratvec_from_string("1/3,1/3,0"), dp) == Rational(2, 3));
}

TEST_CASE("sector labels name g_beta^{-1}") {
    CHECK(sector_label(rc("1/2,0")) == rc("1/2,0"));
    CHECK(sector_label(rc("-1/3,-1/3,1")) == rc("1/3,1/3,0"));
    CHECK(sector_label(rc("2/3,-1/3,0")) == rc("1/3,1/3,0"));
    CHECK(sector_label_to_string(rc("1/3,1/3,0")) == "1/3,1/3,0");
}

TEST_CASE("BS3 enumeration around small degrees") {
    Presentation bs3 = fixture("bs3");
    // deg q^beta = 2 beta, so the beta <= 1 slice needs a degree cap of 2.
    TruncationSpec t = box_spec(bs3, -3, 3, Rational(2));
    auto classes = enumerate_classes(bs3, t);
    // beta = 1/2 slice.
    std::vector<RatClass> half;
    for (const auto& b : classes)
        if (restrict_class(b, bs3)[0] == Rational(1, 2)) half.push_back(b);
    CHECK(half == std::vector<RatClass>{rc("0,1/2"), rc("1/2,0")});
    // beta = 1 slice: the four summands of the paper's I_1.
    std::vector<RatClass> one;
    for (const auto& b : classes)
        if (restrict_class(b, bs3)[0] == Rational(1)) one.push_back(b);
    CHECK(one == std::vector<RatClass>{rc("0,1"), rc("1/3,2/3"), rc("2/3,1/3"),
                                       rc("1,0")});
    // Degenerate cap keeps only the zero class.
    auto only_zero = enumerate_classes(bs3, box_spec(bs3, -3, 3, Rational(0)));
    CHECK(only_zero == std::vector<RatClass>{rc("0,0")});
}

TEST_CASE("enumeration equals the brute-force oracle on every fixture") {
    struct Case {
        const char* name;
        long lo, hi;
        Rational degree_max;
    };
    for (const Case& c : {Case{"p1", 0, 4, Rational(8)},
                          Case{"bs3", -4, 4, Rational(4)},
                          Case{"wgr", -2, 2, Rational(9)},
                          Case{"wgr_ext", -2, 2, Rational(2)},
                          Case{"wfl", -2, 2, Rational(12)},
                          Case{"wfl_ext", -1, 1, Rational(2)},
                          Case{"wbun", -2, 2, Rational(6)},
                          Case{"delpezzo", -2, 2, Rational(1)}}) {
        CAPTURE(c.name);
        Presentation p = fixture(c.name);
        TruncationSpec t = box_spec(p, c.lo, c.hi, c.degree_max);
        auto got = enumerate_classes(p, t);
        auto want = testing::enumerate_oracle(p, t);
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    }
}

TEST_CASE("restriction images of the BS3 effective set") {
    Presentation bs3 = fixture("bs3");
    TruncationSpec t = box_spec(bs3, -4, 4, Rational(4));
    std::set<Rational> images;
    for (const auto& b : enumerate_classes(bs3, t))
        images.insert(restrict_class(b, bs3)[0]);
    // (1/2) Z_{>=0} up to the degree bound deg = 2 beta <= 4.
    std::set<Rational> want;
    for (int k = 0; k <= 4; ++k) want.insert(make_rational(k, 2));
    CHECK(images == want);
}

TEST_CASE("effectiveness and degree are Weyl equivariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den_pick(0, 3);
    const long dens[4] = {1, 2, 3, 6};
    for (const char* name : {"bs3", "wgr", "wfl", "delpezzo"}) {
        Presentation p = fixture(name);
        auto gens = weyl_closure(p);
        for (int trial = 0; trial < 120; ++trial) {
            RatClass beta(p.rank);
            for (int i = 0; i < p.rank; ++i)
                beta[i] = make_rational(num(rng), dens[den_pick(rng)]);
            for (const auto& w : gens) {
                RatClass moved = dual_weyl_action(w, beta);
                CHECK(is_i_effective(moved, p) == is_i_effective(beta, p));
                CHECK(inertia_nonempty(moved, p) == inertia_nonempty(beta, p));
                CHECK(degree(moved, p) == degree(beta, p));
                CHECK(restrict_class(moved, p) == restrict_class(beta, p));
            }
        }
    }
}

TEST_CASE("i-effective implies nonempty inertia") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-6, 6);
    Presentation p = fixture("wgr");
    for (int trial = 0; trial < 200; ++trial) {
        RatClass beta{make_rational(num(rng), 6), make_rational(num(rng), 6)};
        if (is_i_effective(beta, p)) CHECK(inertia_nonempty(beta, p));
    }
}
