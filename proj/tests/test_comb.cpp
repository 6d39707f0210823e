// Permutations, pairings, partitions: cycle counts, the annular non-crossing
// test, spoke enumeration, Moebius inversion and signed-domain machinery.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orthowg/pairing.hpp>
#include <orthowg/perm.hpp>
#include <orthowg/setpart.hpp>
#include <orthowg/signedperm.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace orthowg;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i + 1;
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("cycle counts") {
    CHECK(Permutation::identity(4).cycle_count() == 4);
    // disc permutation from the non-crossing figure
    auto p = Permutation::from_cycles(7, {{1, 2, 4}, {5, 7}});
    CHECK(p.cycle_count() == 4);
    // product of the two pairings in the loop figure
    auto pq = Permutation::from_cycles(8, {{1, 7, 5}, {2, 3, 6}});
    CHECK(pq.cycle_count() == 4);
}

TEST_CASE("composition is right-to-left") {
    auto a = Permutation::from_cycles(3, {{1, 2}});
    auto b = Permutation::from_cycles(3, {{2, 3}});
    CHECK((a * b).apply(2) == 3);  // a(b(2)) = a(3) = 3
    CHECK((b * a).apply(2) == 1);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.power(-1) == a.inverse());
    CHECK(Permutation::from_cycles(4, {{1, 2, 3, 4}}).power(4).is_identity());
}

TEST_CASE("partition join") {
    SetPartition a(3, {{1, 2}, {3}});
    SetPartition b(3, {{1}, {2, 3}});
    CHECK(join(a, b) == SetPartition::one_block(3));
    SetPartition c(3, {{1, 3}, {2}});
    CHECK(join(c, SetPartition::singletons(3)) == c);
}

TEST_CASE("pairing product against the loop figure") {
    auto p = Pairing::from_pairs(8, {{1, 2}, {3, 5}, {4, 8}, {6, 7}});
    auto q = Pairing::from_pairs(8, {{1, 6}, {2, 5}, {3, 7}, {4, 8}});
    auto pq = pairing_product(p, q);
    CHECK(pq == Permutation::from_cycles(8, {{1, 7, 5}, {2, 3, 6}}));
    auto j = join(SetPartition::from_pairing(p), SetPartition::from_pairing(q));
    CHECK(j == SetPartition(8, {{1, 2, 3, 5, 6, 7}, {4, 8}}));
    CHECK(2 * j.block_count() == pq.cycle_count());

    auto p2 = Pairing::from_pairs(2, {{1, 2}});
    CHECK(pairing_product(p2, p2).is_identity());
}

TEST_CASE("2 #(p v q) = #(pq) for all pairings up to n = 10") {
    for (int n = 2; n <= 10; n += 2) {
        auto ps = all_pairings(n);
        for (const auto& p : ps) {
            auto sp = SetPartition::from_pairing(p);
            for (const auto& q : ps) {
                CHECK(2 * join(sp, SetPartition::from_pairing(q)).block_count() ==
                      pairing_product(p, q).cycle_count());
            }
        }
    }
}

TEST_CASE("#(pq) = #(p delta q) on the signed domain, n <= 10") {
    for (int n = 2; n <= 10; n += 2) {
        auto ps = all_pairings(n);
        auto delta = SignedPermutation::delta(n);
        for (const auto& p : ps)
            for (const auto& q : ps) {
                auto pdq = SignedPermutation::embed(p.as_permutation()) * delta *
                           SignedPermutation::embed(q.as_permutation());
                CHECK(pairing_product(p, q).cycle_count() == pdq.cycle_count());
            }
    }
}

TEST_CASE("annular non-crossing test") {
    CHECK(is_annular_noncrossing(Permutation::from_cycles(4, {{1, 3}, {2, 4}}), 2, 2));
    CHECK_THROWS_WITH_AS(
        is_annular_noncrossing(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), 2, 2),
        "disconnected", std::invalid_argument);
    for (int m = 1; m <= 5; ++m) {
        for (bool rev : {false, true}) {
            for (const auto& s : enumerate_spokes(m, rev))
                CHECK(is_annular_noncrossing(s.as_permutation(), m, m, rev));
        }
    }
}

TEST_CASE("genus defect") {
    auto c4 = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    CHECK(genus_defect(c4, c4) == 0);
    CHECK(genus_defect(Permutation::identity(4), c4) == 0);
    CHECK(genus_defect(Permutation::from_cycles(4, {{1, 3}, {2, 4}}), c4) == 2);
}

TEST_CASE("genus defect nonnegative on random pairs") {
    std::mt19937 rng(12345);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            auto pi = random_permutation(n, rng);
            auto gamma = random_permutation(n, rng);
            CHECK(genus_defect(pi, gamma) >= 0);
        }
    }
}

TEST_CASE("zero defect plus transitivity implies annular non-crossing, m+n <= 8") {
    for (int total = 2; total <= 8; ++total) {
        for (int m = 1; m < total; ++m) {
            int n = total - m;
            auto gamma = annulus_gamma(m, n);
            // iterate all permutations of [total]
            std::vector<int> base(static_cast<size_t>(total));
            for (int i = 0; i < total; ++i) base[static_cast<size_t>(i)] = i + 1;
            int checked = 0;
            do {
                Permutation pi(base);
                if (orbit_count(pi, gamma) != 1) continue;
                if (genus_defect(pi, gamma) == 0) {
                    CHECK(is_annular_noncrossing(pi, m, n));
                    ++checked;
                }
            } while (std::next_permutation(base.begin(), base.end()));
            CHECK(checked > 0);
        }
    }
}

TEST_CASE("pairing enumeration counts and canonical order") {
    CHECK(all_pairings(0).size() == 1);  // the empty pairing, (-1)!! = 1
    CHECK(all_pairings(2).size() == 1);
    auto p4 = all_pairings(4);
    REQUIRE(p4.size() == 3);
    CHECK(p4[0] == Pairing::from_pairs(4, {{1, 2}, {3, 4}}));
    CHECK(p4[1] == Pairing::from_pairs(4, {{1, 3}, {2, 4}}));
    CHECK(p4[2] == Pairing::from_pairs(4, {{1, 4}, {2, 3}}));
    CHECK(all_pairings(8).size() == 105);
    std::set<Pairing> distinct;
    for (const auto& p : all_pairings(8)) distinct.insert(p);
    CHECK(distinct.size() == 105);
}

TEST_CASE("spoke enumeration") {
    auto s1 = enumerate_spokes(1, false);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Pairing::from_pairs(2, {{1, 2}}));

    auto r2 = enumerate_spokes(2, true);
    REQUIRE(r2.size() == 2);
    CHECK(std::count(r2.begin(), r2.end(), Pairing::from_pairs(4, {{1, 4}, {2, 3}})) == 1);
    CHECK(std::count(r2.begin(), r2.end(), Pairing::from_pairs(4, {{1, 3}, {2, 4}})) == 1);

    for (int m = 1; m <= 6; ++m) {
        auto std_spokes = enumerate_spokes(m, false);
        auto rev_spokes = enumerate_spokes(m, true);
        CHECK(std_spokes.size() == static_cast<size_t>(m));
        CHECK(rev_spokes.size() == static_cast<size_t>(m));
        // all pairs connect the two circles
        for (const auto& list : {std_spokes, rev_spokes})
            for (const auto& s : list)
                for (auto [r, x] : s.pairs()) CHECK(((r <= m) != (x <= m)));
        if (m >= 3) {
            std::set<Pairing> a(std_spokes.begin(), std_spokes.end());
            for (const auto& s : rev_spokes) CHECK(a.count(s) == 0);
        }
    }
}

TEST_CASE("moebius values") {
    CHECK(mobius(SetPartition::one_block(3), SetPartition::one_block(3)) == 1);
    CHECK(mobius(SetPartition::singletons(2), SetPartition::one_block(2)) == -1);
    CHECK(mobius(SetPartition::singletons(3), SetPartition::one_block(3)) == 2);
    CHECK_THROWS_AS(mobius(SetPartition::one_block(3), SetPartition::singletons(3)),
                    std::invalid_argument);
}

TEST_CASE("moebius sum identity on [4]") {
    // sum_{V <= W <= U} mu(W, U) = [V = U]
    auto parts = all_partitions(4);
    for (const auto& V : parts)
        for (const auto& U : parts) {
            if (!V.refines(U)) continue;
            Int sum(0);
            for (const auto& W : parts)
                if (V.refines(W) && W.refines(U)) sum += mobius(W, U);
            CHECK(sum == (V == U ? 1 : 0));
        }
}

TEST_CASE("joint cumulants") {
    // k_1 = E(X)
    auto m1 = [](const SetPartition&) { return Rat(7, 3); };
    CHECK(joint_cumulant<Rat>(m1, SetPartition::one_block(1)) == Rat(7, 3));

    // second cumulant = E(X1 X2) - E(X1) E(X2)
    Rat e1(2), e2(3), e12(11);
    auto m2 = [&](const SetPartition& V) {
        return V.block_count() == 1 ? e12 : e1 * e2;
    };
    CHECK(joint_cumulant<Rat>(m2, SetPartition::one_block(2)) == e12 - e1 * e2);

    // third cumulant of independent variables vanishes: moments factor
    Rat a(2), b(-3), c(5, 7);
    auto m3 = [&](const SetPartition& V) {
        Rat prod(1);
        for (const auto& blk : V.blocks()) {
            Rat f(1);
            for (int k : blk) f *= (k == 1 ? a : k == 2 ? b : c);
            prod *= f;
        }
        return prod;
    };
    CHECK(joint_cumulant<Rat>(m3, SetPartition::one_block(3)) == Rat(0));
}

TEST_CASE("moebius inversion round trip on random moments") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int n = 1; n <= 6; ++n) {
        auto parts = all_partitions(n);
        // random multiplicative-over-blocks moment assignment per subset profile
        std::map<std::vector<int>, Rat> block_moment;
        auto block_value = [&](const std::vector<int>& blk) {
            auto it = block_moment.find(blk);
            if (it == block_moment.end())
                it = block_moment.emplace(blk, Rat(num(rng), 7)).first;
            return it->second;
        };
        auto moments = [&](const SetPartition& V) {
            Rat prod(1);
            for (const auto& blk : V.blocks()) prod *= block_value(blk);
            return prod;
        };
        // sum over all V <= U of k_V reproduces E_U
        for (const auto& U : parts) {
            Rat sum(0);
            for (const auto& V : parts) {
                if (!V.refines(U)) continue;
                // k_V = prod over blocks of joint cumulant of that block; use the
                // lattice formula directly on the restricted ground set
                Rat prod(1);
                for (const auto& blk : V.blocks()) {
                    auto sub_moments = [&](const SetPartition& W) {
                        Rat p(1);
                        for (const auto& wb : W.blocks()) {
                            std::vector<int> lifted;
                            for (int k : wb) lifted.push_back(blk[static_cast<size_t>(k) - 1]);
                            p *= block_value(lifted);
                        }
                        return p;
                    };
                    prod *= joint_cumulant<Rat>(sub_moments,
                                                SetPartition::one_block(static_cast<int>(blk.size())));
                }
                sum += prod;
            }
            CHECK(sum == moments(U));
        }
    }
}

TEST_CASE("signed permutation operations") {
    CHECK((SignedPermutation::delta(3) * SignedPermutation::delta(3)).is_identity());
    CHECK(SignedPermutation::delta_epsilon({1, 1, 1}).is_identity());

    // (gamma delta)(1) = -1 and (gamma delta)(-1) = 2 for gamma = (1,2)
    auto gamma = SignedPermutation::embed(Permutation::from_cycles(2, {{1, 2}}));
    auto gd = gamma * SignedPermutation::delta(2);
    CHECK(gd.apply(1) == -1);
    CHECK(gd.apply(-1) == 2);

    auto ge = SignedPermutation::delta_epsilon({1, -1});
    CHECK(ge.apply(2) == -2);
    CHECK(ge.apply(-2) == 2);
    CHECK(ge.apply(1) == 1);
    CHECK((ge * ge).is_identity());

    auto inv = gd.inverse();
    CHECK((inv * gd).is_identity());
    CHECK(SignedPermutation::delta(2).is_pairing());
}
