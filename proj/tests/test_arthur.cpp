#include <doctest.h>

#include <random>

#include "orbitkit/arthur.hpp"
#include "orbitkit/duality.hpp"

using namespace orbitkit;

namespace {

Summand term(int dim, int a, int b = 1, Rational twist = Rational(0), bool paired = false,
             std::optional<int> s = std::nullopt) {
    Summand out;
    out.rho = Irrep{"rho", dim, s};
    out.deligne = a;
    out.arthur = b;
    out.twist = twist;
    out.paired = paired;
    return out;
}

} // namespace

TEST_CASE("rational text form") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-7, 2)) == "-7/2");
    CHECK(to_string(Rational(2, 4)) == "1/2");
    std::size_t pos = 0;
    CHECK(parse_rational("3/2", pos) == Rational(3, 2));
    pos = 0;
    CHECK(parse_rational("-1", pos) == Rational(-1));
    pos = 0;
    CHECK_THROWS_AS(parse_rational("1/0", pos), SyntaxError);
}

TEST_CASE("parameter construction and invariants") {
    Parameter phi(ParamContext::LParameter, {term(1, 5), term(1, 3), term(1, 1),
                                             term(1, 1, 1, Rational(3), true)});
    CHECK(phi.ambient_dim() == 11);
    CHECK(phi.summands().size() == 4);

    CHECK_THROWS_AS(Parameter(ParamContext::LParameter, {term(1, 2, 2)}), ContextMismatch);
    CHECK_THROWS_AS(Parameter(ParamContext::Arthur, {term(1, 1, 1, Rational(1), false)}),
                    Error);

    SUBCASE("paired twists are stored with the positive representative") {
        Parameter a(ParamContext::Arthur, {term(1, 2, 3, Rational(-1, 2), true)});
        Parameter b(ParamContext::Arthur, {term(1, 2, 3, Rational(1, 2), true)});
        CHECK(a == b);
    }
    SUBCASE("equality is multiset equality, order-insensitive") {
        Parameter a(ParamContext::LParameter, {term(1, 3), term(2, 1)});
        Parameter b(ParamContext::LParameter, {term(2, 1), term(1, 3)});
        CHECK(a == b);
    }
}

TEST_CASE("parameter parsing") {
    Parameter psi1 = parse_parameter("rho(1)@0 S7 S1 + rho(1)@0 S2 S2");
    CHECK(psi1.context() == ParamContext::Arthur);
    CHECK(psi1.ambient_dim() == 11);
    CHECK(psi1 == Parameter(ParamContext::Arthur, {term(1, 7, 1), term(1, 2, 2)}));

    CHECK(parse_parameter("") == Parameter());
    CHECK(parse_parameter("").ambient_dim() == 0);

    Parameter phi = parse_parameter("2*rho(1)@3 S1 + rho(1) S1 + rho(1) S3 + rho(1) S5");
    CHECK(phi.context() == ParamContext::LParameter);
    CHECK(phi.ambient_dim() == 11);

    CHECK(parse_parameter("2*rho(2,s=2)@1/2 S4").summands().front().rho.s_value == 2);

    CHECK_THROWS_AS(parse_parameter("S7 rho"), SyntaxError);
    CHECK_THROWS_AS(parse_parameter("rho(1) S1 + rho(1) S1 S1"), SyntaxError);
    CHECK_THROWS_AS(parse_parameter("rho(1)@1 S1"), SyntaxError); // unpaired nonzero twist
    CHECK_THROWS_AS(parse_parameter("rho(1) S1 +"), SyntaxError);
    CHECK_THROWS_AS(parse_parameter("rho(1) S1", 5), DimensionMismatch);
    CHECK(parse_parameter("rho(1) S1", 1).ambient_dim() == 1);

    SUBCASE("syntax errors carry a position") {
        try {
            parse_parameter("rho(1) S1 + bogus");
            FAIL("expected SyntaxError");
        } catch (const SyntaxError& e) {
            CHECK(e.position == 12);
        }
    }
}

TEST_CASE("printing is canonical and parse round-trips") {
    Parameter phi = parse_parameter("rho(1) S5 + 2*rho(1)@3 S1 + rho(1) S1 + rho(1) S3");
    CHECK(to_string(phi) == "2*rho(1)@3 S1 + rho(1) S1 + rho(1) S3 + rho(1) S5");
    CHECK(parse_parameter(to_string(phi)) == phi);

    Parameter psi = parse_parameter("rho(1) S2 S2 + rho(1) S7 S1");
    CHECK(to_string(psi) == "rho(1) S2 S2 + rho(1) S7 S1");
    CHECK(parse_parameter(to_string(psi)) == psi);

    Parameter with_s = parse_parameter("rho(2,s=1) S2 + rho(1,s=2) S2");
    CHECK(parse_parameter(to_string(with_s)) == with_s);
}

TEST_CASE("p_of_phi") {
    Parameter phi(ParamContext::LParameter, {term(1, 1, 1, Rational(3), true), term(1, 1),
                                             term(1, 3), term(1, 5)});
    CHECK(p_of_phi(phi) == Partition{5, 3, 1, 1, 1});
    CHECK(p_of_phi(Parameter(ParamContext::LParameter, {term(1, 4)})) == Partition{4});
    // dim-2 paired twist block contributes [1^4]
    Parameter mixed(ParamContext::LParameter, {term(1, 2), term(2, 1, 1, Rational(1), true)});
    CHECK(p_of_phi(mixed) == Partition{2, 1, 1, 1, 1});
    CHECK_THROWS_AS(p_of_phi(Parameter(ParamContext::Arthur, {term(1, 1, 2)})),
                    ContextMismatch);
}

TEST_CASE("p_of_psi") {
    Parameter psi1(ParamContext::Arthur, {term(1, 7, 1), term(1, 2, 2)});
    CHECK(p_of_psi(psi1) == (rectangle(2, 2) | rectangle(1, 7)));
    Parameter psi3(ParamContext::Arthur, {term(1, 7, 1), term(1, 3, 1), term(1, 1, 1)});
    CHECK(p_of_psi(psi3) == rectangle(1, 11));
    // all b = 1 gives [1^ambient]
    Parameter generic(ParamContext::Arthur, {term(2, 3, 1), term(1, 2, 1, Rational(1, 3), true)});
    CHECK(p_of_psi(generic) == rectangle(1, generic.ambient_dim()));
    CHECK_THROWS_AS(p_of_psi(Parameter(ParamContext::LParameter, {term(1, 1)})),
                    ContextMismatch);
}

TEST_CASE("hat swaps the two SL2 factors") {
    Parameter psi(ParamContext::Arthur, {term(1, 7, 1), term(1, 2, 2), term(2, 3, 4)});
    Parameter swapped = hat(psi);
    CHECK(swapped == Parameter(ParamContext::Arthur, {term(1, 1, 7), term(1, 2, 2), term(2, 4, 3)}));
    CHECK(hat(swapped) == psi);
    CHECK(swapped.ambient_dim() == psi.ambient_dim());
    CHECK_THROWS_AS(hat(Parameter(ParamContext::LParameter, {term(1, 1)})), ContextMismatch);
}

TEST_CASE("phi_of_psi") {
    SUBCASE("generic parameters restrict to themselves") {
        Parameter psi(ParamContext::Arthur, {term(1, 4, 1)});
        CHECK(phi_of_psi(psi) ==
              Parameter(ParamContext::LParameter, {term(1, 4)}));
    }
    SUBCASE("S3 Arthur factor spreads into twists 1, 0, -1") {
        Parameter psi(ParamContext::Arthur, {term(1, 1, 3)});
        Parameter expected(ParamContext::LParameter,
                           {term(1, 1, 1, Rational(1), true), term(1, 1)});
        CHECK(phi_of_psi(psi) == expected);
    }
    SUBCASE("S2 Arthur factor gives half-integer twists") {
        Parameter psi(ParamContext::Arthur, {term(1, 2, 2)});
        Parameter expected(ParamContext::LParameter,
                           {term(1, 2, 1, Rational(1, 2), true)});
        CHECK(phi_of_psi(psi) == expected);
    }
    SUBCASE("paired summands expand with shifted twists") {
        Parameter psi(ParamContext::Arthur, {term(1, 1, 2, Rational(1, 2), true)});
        Parameter expected(ParamContext::LParameter,
                           {term(1, 1, 1, Rational(1), true), term(1, 1, 1, Rational(0), true)});
        CHECK(phi_of_psi(psi) == expected);
    }
    SUBCASE("ambient dimension is preserved") {
        Parameter psi(ParamContext::Arthur,
                      {term(2, 3, 4), term(1, 1, 5), term(1, 2, 2, Rational(1, 4), true)});
        CHECK(phi_of_psi(psi).ambient_dim() == psi.ambient_dim());
    }
}

TEST_CASE("p(psi) equals p(phi of psi-hat), randomized") {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> dim_gen(1, 3);
    std::uniform_int_distribution<int> sl2_gen(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> num(-2, 2);

    int produced = 0;
    while (produced < 2000) {
        std::vector<Summand> summands;
        int ambient = 0;
        while (true) {
            Summand s = term(dim_gen(rng), sl2_gen(rng), sl2_gen(rng));
            s.paired = coin(rng) == 1;
            if (s.paired)
                s.twist = Rational(num(rng), 2);
            if (ambient + s.gl_dim() > 12)
                break;
            ambient += s.gl_dim();
            summands.push_back(s);
            if (coin(rng) == 1)
                break;
        }
        if (summands.empty())
            continue;
        ++produced;
        Parameter psi(ParamContext::Arthur, summands);
        CHECK(p_of_psi(psi) == p_of_phi(phi_of_psi(hat(psi))));
        CHECK(hat(hat(psi)) == psi);
    }
}

TEST_CASE("p_A_of_phi") {
    Parameter phi_pi(ParamContext::LParameter,
                     {term(1, 2, 1, Rational(0), false, 2), term(2, 2, 1, Rational(0), false, 1)});
    CHECK(p_of_phi(phi_pi) == Partition{2, 2, 2});
    CHECK(p_A_of_phi(phi_pi, 2) == Partition{4, 2});

    Parameter phi_dual(ParamContext::LParameter,
                       {term(1, 2, 1, Rational(0), false, 2), term(2, 1, 1, Rational(1), true, 1)});
    CHECK(p_of_phi(phi_dual) == Partition{2, 1, 1, 1, 1});
    CHECK(p_A_of_phi(phi_dual, 2) == Partition{2, 2, 2});

    SUBCASE("d_A = 1 collapses to p_of_phi") {
        Parameter phi(ParamContext::LParameter,
                      {term(2, 3, 1, Rational(0), false, 1), term(1, 2, 1, Rational(0), false, 1)});
        CHECK(p_A_of_phi(phi, 1) == p_of_phi(phi));
    }
    SUBCASE("dominance refinement: p(phi) <= p_A(phi)") {
        Parameter phi(ParamContext::LParameter,
                      {term(1, 4, 1, Rational(0), false, 2),
                       term(2, 2, 1, Rational(0), false, 1)});
        CHECK(p_of_phi(phi) == Partition{4, 2, 2});
        CHECK(p_A_of_phi(phi, 2) == Partition{4, 4});
        CHECK(dominates(p_A_of_phi(phi, 2), p_of_phi(phi)));
    }
    SUBCASE("the refinement dominates for every small valid parameter") {
        for (int d_A : {1, 2, 3, 4}) {
            // enumerate admissible single summands, then all pairs
            std::vector<Summand> atoms;
            for (int s = 1; s <= d_A; ++s) {
                if (d_A % s != 0)
                    continue;
                for (int t = 1; t <= 2; ++t)
                    for (int a_prime = 1; a_prime <= 2; ++a_prime)
                        for (bool paired : {false, true})
                            atoms.push_back(term(t * d_A / s, a_prime * s, 1, Rational(0),
                                                 paired, s));
            }
            for (const Summand& lhs : atoms)
                for (const Summand& rhs : atoms) {
                    Parameter phi(ParamContext::LParameter, {lhs, rhs});
                    CHECK(dominates(p_A_of_phi(phi, d_A), p_of_phi(phi)));
                }
        }
    }
    SUBCASE("errors") {
        Parameter missing(ParamContext::LParameter, {term(1, 2)});
        CHECK_THROWS_AS(p_A_of_phi(missing, 2), MissingDivisionData);
        Parameter bad_s(ParamContext::LParameter, {term(1, 3, 1, Rational(0), false, 3)});
        CHECK_THROWS_AS(p_A_of_phi(bad_s, 2), DivisibilityError);
        Parameter bad_a(ParamContext::LParameter, {term(1, 3, 1, Rational(0), false, 2)});
        CHECK_THROWS_AS(p_A_of_phi(bad_a, 2), DivisibilityError);
        Parameter bad_dim(ParamContext::LParameter, {term(1, 2, 1, Rational(0), false, 1)});
        CHECK_THROWS_AS(p_A_of_phi(bad_dim, 2), DivisibilityError);
        CHECK_THROWS_AS(p_A_of_phi(Parameter(ParamContext::Arthur, {term(1, 1, 1)}), 2),
                        ContextMismatch);
    }
}

TEST_CASE("gl_wavefront") {
    CHECK(gl_wavefront({{3, 2, Rational(0)}}, 2) == rectangle(3, 4));
    CHECK(gl_wavefront({{1, 2, Rational(0)}, {2, 1, Rational(1, 2)}}, 2) ==
          Partition{3, 3, 1, 1});
    CHECK(gl_wavefront({}, 3) == Partition());

    SUBCASE("matches the dual of p_A computed through the parameter model") {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> small(1, 4);
        std::uniform_int_distribution<int> d_gen(1, 3);
        for (int trial = 0; trial < 1000; ++trial) {
            int d_A = d_gen(rng);
            std::vector<StandardFactor> module;
            std::vector<Summand> summands;
            int factors = small(rng);
            for (int i = 0; i < factors; ++i) {
                StandardFactor f{small(rng), small(rng), Rational(0)};
                module.push_back(f);
                // JL transfer of St(rho', n): pick any s | d_A, then
                // dim(rho) = m d_A / s and the Deligne factor is S_{n s}
                std::vector<int> divisors;
                for (int cand = 1; cand <= d_A; ++cand)
                    if (d_A % cand == 0)
                        divisors.push_back(cand);
                int s = divisors[static_cast<std::size_t>(small(rng)) % divisors.size()];
                summands.push_back(term(f.m * d_A / s, f.n * s, 1, Rational(0), false, s));
            }
            Parameter phi(ParamContext::LParameter, summands);
            CHECK(gl_wavefront(module, d_A) == dbv(p_A_of_phi(phi, d_A), ClassicalType::A));
        }
    }
}
