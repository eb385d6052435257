#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scho/module.hpp"
#include "scho/weyl.hpp"

#include <random>

using namespace scho;

TEST_CASE("weyl multiplication") {
    Rational zd = rat(3);
    WeylElement p = WeylElement::monomial(zd, 0, 1, 1);
    WeylElement q = WeylElement::monomial(zd, 1, 0, 1);
    // p q = q p + zdot
    WeylElement pq = weyl_multiply(p, q);
    WeylElement expect = WeylElement::monomial(zd, 1, 1, 1);
    expect.add_term(0, 0, zd);
    CHECK(pq == expect);
    // q p is already ordered
    CHECK(weyl_multiply(q, p) == WeylElement::monomial(zd, 1, 1, 1));
    // p^2 q = q p^2 + 2 zdot p
    WeylElement p2 = weyl_multiply(p, p);
    WeylElement lhs = weyl_multiply(p2, q);
    WeylElement rhs = WeylElement::monomial(zd, 1, 2, 1);
    rhs.add_term(0, 1, 2 * zd);
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(weyl_multiply(p, WeylElement::monomial(rat(1), 0, 1, 1)),
                    std::invalid_argument);
}

TEST_CASE("weyl multiplication agrees with a word rewriter") {
    // oracle: normalize words in p, q by leftmost swaps p q -> q p + zdot
    Rational zd = rat(2, 3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> word(6);
        for (auto& x : word) x = bit(rng);  // 0 = q, 1 = p
        // oracle
        std::map<std::vector<int>, Rational> pend;
        pend[word] = 1;
        WeylElement oracle = WeylElement::zero(zd);
        while (!pend.empty()) {
            auto it = pend.begin();
            auto w = it->first;
            Rational c = it->second;
            pend.erase(it);
            std::size_t bad = w.size();
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == 1 && w[i + 1] == 0) {
                    bad = i;
                    break;
                }
            if (bad == w.size()) {
                int m = 0, n = 0;
                for (int x : w) (x == 0 ? m : n)++;
                oracle.add_term(m, n, c);
                continue;
            }
            auto sw = w;
            std::swap(sw[bad], sw[bad + 1]);
            pend[sw] += c;
            if (pend[sw] == 0) pend.erase(sw);
            std::vector<int> red(w.begin(), w.begin() + bad);
            red.insert(red.end(), w.begin() + bad + 2, w.end());
            pend[red] += c * zd;
            if (pend[red] == 0) pend.erase(red);
        }
        WeylElement prod = WeylElement::one(zd);
        for (int x : word)
            prod = weyl_multiply(prod, WeylElement::monomial(zd, x == 0 ? 1 : 0,
                                                             x == 0 ? 0 : 1, 1));
        CHECK(prod == oracle);
    }
}

TEST_CASE("phi on generators") {
    Rational zd = rat(5, 2);
    WeylElement h = phi_generator(Gen::h, zd);
    WeylElement expect = WeylElement::monomial(zd, 1, 1, Rational(-1) / zd);
    expect.add_term(0, 0, rat(-1, 2));
    CHECK(h == expect);
    CHECK(phi_generator(Gen::z, zd) == WeylElement::monomial(zd, 0, 0, zd));
    // [phi(e), phi(f)] = phi(h)
    WeylElement e = phi_generator(Gen::e, zd), f = phi_generator(Gen::f, zd);
    CHECK(weyl_bracket(e, f) == h);
    CHECK_THROWS_AS(phi_generator(Gen::e, rat(0)), std::invalid_argument);
}

TEST_CASE("phi preserves every defining bracket") {
    for (Rational zd : {rat(1), rat(-2), rat(7, 3)}) {
        for (int x = 0; x < kGenCount; ++x)
            for (int y = 0; y < kGenCount; ++y) {
                Gen gx = static_cast<Gen>(x), gy = static_cast<Gen>(y);
                WeylElement lhs =
                    weyl_bracket(phi_generator(gx, zd), phi_generator(gy, zd));
                WeylElement rhs = phi(commutator_table(gx, gy), zd);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("phi is multiplicative on elements") {
    Rational zd = rat(2);
    AlgebraElement u = multiply(AlgebraElement::generator(Gen::e),
                                AlgebraElement::generator(Gen::f));
    CHECK(phi(u, zd) ==
          weyl_multiply(phi_generator(Gen::e, zd), phi_generator(Gen::f, zd)));
}

TEST_CASE("the module M") {
    Rational zd = rat(3, 2);
    TruncatedModule M = weyl_module_m(zd, 10);
    CHECK(M.highest.h_val == rat(-1, 2));
    std::string msg;
    CHECK_MESSAGE(verify_module_relations(M, &msg), msg);
    // no singular vectors below the top
    for (int i = 1; i <= 10; ++i) CHECK(singular_vectors(M, i).cols() == 0);
}

TEST_CASE("tensor with the sl2 Verma realizes the U-Verma") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    std::string msg;
    for (int trial = 0; trial < 10; ++trial) {
        Rational a = rat(num(rng), den(rng));
        Rational zd = rat(num(rng), den(rng));
        if (zd == 0) zd = rat(1, 2);
        TruncatedModule T = tensor_with_m(a, 12, zd);
        CHECK_MESSAGE(verify_module_relations(T, &msg), msg);
        CHECK(T.highest.h_val == a - rat(1, 2));
        TruncatedModule V = verma(T.highest, 12);
        CHECK(T.dims == V.dims);
        CHECK(module_hom(V, T).dim >= 1);
    }
    // h-eigenvalue of q^3 (x) v_a is a - 7/2 (depth 3 of the tensor)
    Rational a = rat(2);
    TruncatedModule T = tensor_with_m(a, 5, rat(1));
    auto H = T.action(Gen::h, 3);
    REQUIRE(H.has_value());
    CHECK(H->at(0, 0) == a - rat(7, 2));  // column 0 at depth 3 is k=0, n=3
    // a = 0, depth 0: highest weight -1/2
    CHECK(tensor_with_m(rat(0), 0, rat(1)).highest.h_val == rat(-1, 2));
}
