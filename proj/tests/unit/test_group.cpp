#include "doctest.h"
#include "glab/group.hpp"

using namespace glab;

TEST_CASE("group construction and order") {
    CHECK(make_group({}).order() == 1);
    CHECK(make_group({4}).order() == 4);
    CHECK(make_group({2, 3}).order() == 6);
    CHECK_THROWS_AS(make_group({0}), DomainError);
    CHECK_THROWS_AS(make_group({-3}), DomainError);
}

TEST_CASE("arithmetic") {
    Group z5 = cyclic(5), z23 = make_group({2, 3});
    CHECK(add(z5, {3}, {4}) == Elem{2});
    CHECK(neg(z23, {1, 2}) == Elem{1, 1});
    CHECK(sub(z5, {1}, {3}) == Elem{3});
    CHECK(mul(z5, {2}, 7) == Elem{4});
    CHECK(mul(z5, {2}, -1) == Elem{3});
    CHECK(make_elem(z23, {-1, 7}) == Elem{1, 1});
    for (auto& a : elements(z23)) {
        CHECK(add(z23, a, zero(z23)) == a);
        CHECK(is_zero(add(z23, a, neg(z23, a))));
    }
    CHECK_THROWS_AS(check_elem(z5, {5}), DomainError);
    CHECK_THROWS_AS(check_elem(z5, {1, 1}), DomainError);
}

TEST_CASE("element order and involutions") {
    CHECK(element_order(cyclic(4), {2}) == 2);
    CHECK(element_order(cyclic(5), {1}) == 5);
    CHECK(element_order(make_group({2, 3}), {1, 0}) == 2);
    CHECK(element_order(make_group({2, 3}), {1, 1}) == 6);
    CHECK_FALSE(has_involution(cyclic(3)));
    CHECK(has_involution(cyclic(6)));
    CHECK(involutions(cyclic(6)) == std::vector<Elem>{{3}});
    CHECK_FALSE(has_involution(make_group({})));
    CHECK(involutions(make_group({2, 2})).size() == 3);
}

TEST_CASE("cyclic subgroups") {
    CHECK(cyclic_subgroup(cyclic(9), {3}) == std::vector<Elem>{{0}, {3}, {6}});
    CHECK(cyclic_subgroup(cyclic(9), {0}) == std::vector<Elem>{{0}});
    // subgroup <p> of Z/p^a has p^(a-1) elements
    for (int p : {2, 3, 5})
        for (int a = 1; a <= 3; a++) {
            int m = 1;
            for (int i = 0; i < a; i++) m *= p;
            CHECK((int)cyclic_subgroup(cyclic(m), {p % m}).size() == m / p);
        }
}

TEST_CASE("quotient map") {
    auto q = quotient_map(cyclic(9), 3);
    CHECK(q.a == 2);
    CHECK(q({4}) == Elem{1});
    auto q3 = quotient_map(cyclic(3), 3);
    CHECK(q3.a == 1);
    CHECK(q3({2}) == Elem{2});
    int kernel = 0;
    auto q27 = quotient_map(cyclic(27), 3);
    for (auto& x : elements(cyclic(27))) kernel += is_zero(q27(x));
    CHECK(kernel == 9);
    CHECK_THROWS_AS(quotient_map(cyclic(12), 3), DomainError);
    // homomorphism
    for (auto& x : elements(cyclic(25)))
        for (auto& y : elements(cyclic(25))) {
            auto q5 = quotient_map(cyclic(25), 5);
            CHECK(q5(add(cyclic(25), x, y)) == add(cyclic(5), q5(x), q5(y)));
        }
}

TEST_CASE("prime powers") {
    int a = 0;
    CHECK(is_prime_power_of(27, 3, a));
    CHECK(a == 3);
    CHECK_FALSE(is_prime_power_of(12, 2, a));
    CHECK_FALSE(is_prime_power_of(9, 4, a));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
}
