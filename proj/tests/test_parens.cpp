#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc_kneser/parens.hpp"

using namespace assockg;

namespace {

ParenTree L() { return paren_leaf(); }
ParenTree N(ParenTree a, ParenTree b) { return paren_node(std::move(a), std::move(b)); }

}  // namespace

TEST_CASE("bijection on the square") {
    Triangulation t13(4, std::vector<Diagonal>{{1, 3}});
    Triangulation t24(4, std::vector<Diagonal>{{2, 4}});
    // {1,3}: triangle {1,2,3} multiplies s1*s2, then {1,3,4} appends s3.
    CHECK(paren_equal(to_parenthesization(t13), N(N(L(), L()), L())));
    CHECK(paren_equal(to_parenthesization(t24), N(L(), N(L(), L()))));
    CHECK(paren_to_string(to_parenthesization(t13)) == "((s1 s2) s3)");
}

TEST_CASE("round trips both directions") {
    for (int n : {4, 5, 6, 7, 8, 9}) {
        for (const Triangulation& t : enumerate_triangulations(n))
            CHECK(from_parenthesization(to_parenthesization(t), n) == t);
        for (const ParenTree& tree : all_parenthesizations(n - 1))
            CHECK(paren_equal(to_parenthesization(from_parenthesization(tree, n)), tree));
    }
    CHECK_THROWS(from_parenthesization(L(), 4));  // leaf-count mismatch
}

TEST_CASE("all_parenthesizations counts are Catalan") {
    CHECK(all_parenthesizations(1).size() == 1);
    CHECK(all_parenthesizations(4).size() == 5);
    CHECK(all_parenthesizations(7).size() == catalan_number(6));
}

TEST_CASE("k-parenthesization shapes") {
    CHECK(is_k_parenthesization(L(), 0));
    CHECK(is_k_parenthesization(L(), 1));
    CHECK(is_k_parenthesization(L(), 7));

    ParenTree left_comb = N(N(L(), L()), L());  // ((s1 s2) s3)
    CHECK_FALSE(is_k_parenthesization(left_comb, 1));
    CHECK(is_k_parenthesization(left_comb, 2));

    // Brute-force the k-class over all 5 trees on 3 leaves: exactly the
    // right-combs are 1-parenthesizations.
    int one_class = 0, two_class = 0;
    for (const ParenTree& tr : all_parenthesizations(3)) {
        one_class += is_k_parenthesization(tr, 1);
        two_class += is_k_parenthesization(tr, 2);
    }
    CHECK(one_class == 1);
    CHECK(two_class == 2);
}

TEST_CASE("the 20-gon example tree is a 3-parenthesization") {
    // tau1 = (s1 (s2 s3)) s4, tau2 = s5,
    // tau3 = (((s6 s7)(s8 s9)) (s10 (s11 (s12 (s13 s14))))) s15,
    // tau4 = s16 (s17 s18); whole = tau1 (tau2 (tau3 (tau4 s19))).
    ParenTree tau1 = N(N(L(), N(L(), L())), L());
    ParenTree tau2 = L();
    ParenTree tau3 =
        N(N(N(N(L(), L()), N(L(), L())), N(L(), N(L(), N(L(), N(L(), L()))))), L());
    ParenTree tau4 = N(L(), N(L(), L()));
    ParenTree whole = N(tau1, N(tau2, N(tau3, N(tau4, L()))));
    REQUIRE(leaf_count(whole) == 19);
    CHECK(is_k_parenthesization(tau1, 2));
    CHECK(is_k_parenthesization(tau3, 2));
    CHECK(is_k_parenthesization(tau4, 2));
    CHECK(is_k_parenthesization(whole, 3));
    CHECK_FALSE(is_k_parenthesization(whole, 2));
}

TEST_CASE("constructive k-parenthesization generation matches the predicate") {
    for (int k : {1, 2, 3, 4})
        for (int m = 1; m <= 8; ++m) {
            auto generated = enumerate_k_parenthesizations(m, k);
            int filtered = 0;
            for (const ParenTree& tr : all_parenthesizations(m))
                filtered += is_k_parenthesization(tr, k);
            CHECK(static_cast<int>(generated.size()) == filtered);
            for (const ParenTree& tr : generated) CHECK(is_k_parenthesization(tr, k));
        }
}
