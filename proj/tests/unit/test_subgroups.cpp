#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <map>

#include "maxclass/subgroups.hpp"
#include "maxclass/textio.hpp"
#include "support/naive_gf2.hpp"
#include "support/testutil.hpp"

using namespace maxclass;

namespace {

// Every parameterized spec with a closed-form order at this n.
std::vector<SubgroupSpec> closed_form_specs(const CyclicContext& ctx) {
    std::vector<SubgroupSpec> specs = {SubgroupSpec::full_v(), SubgroupSpec::lower_layer()};
    for (unsigned i = 0; i < ctx.dim(); ++i) specs.push_back(SubgroupSpec::stabilizer(i));
    for (Involution s : {Involution::Star, Involution::Circledast}) {
        if (s == Involution::Circledast && ctx.n() < 3) continue;
        specs.push_back(SubgroupSpec::symmetric(s));
        specs.push_back(SubgroupSpec::unitary(s));
        specs.push_back(SubgroupSpec::phi_image(s));
        specs.push_back(SubgroupSpec::psi_even(s));
        for (unsigned i = 0; i < ctx.dim(); ++i) {
            specs.push_back(SubgroupSpec::h(s, i));
            specs.push_back(SubgroupSpec::l(s, i));
        }
    }
    return specs;
}

// Frattini subgroup computed independently: the index-2 subgroups are the
// kernels of the nonzero homomorphisms N -> F2, found by solving
// f(x) + f(y) + f(xy) = 0 over all pairs; Frattini = common kernel.
std::vector<std::uint64_t> frattini_by_duality(const EnumeratedSubgroup& N) {
    const auto& elems = N.elements();
    const std::size_t k = elems.size();
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < k; ++i) index[elems[i]] = i;

    testsupport::Mat constraints;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const auto prod = mul(make_elem(N.ctx(), elems[i]), make_elem(N.ctx(), elems[j]));
            testsupport::Row row(k, 0);
            row[i] ^= 1;
            row[j] ^= 1;
            row[index.at(prod.bits)] ^= 1;
            constraints.push_back(std::move(row));
        }

    const auto homs = testsupport::solve_naive(constraints, testsupport::Row(constraints.size(), 0));
    REQUIRE(homs.consistent);

    std::vector<std::uint64_t> frattini;
    for (std::size_t i = 0; i < k; ++i) {
        bool in_all_kernels = true;
        for (const auto& f : homs.kernel) in_all_kernels = in_all_kernels && f[i] == 0;
        if (in_all_kernels) frattini.push_back(elems[i]);
    }
    return frattini;
}

}  // namespace

TEST_CASE("enumerate: documented orders at n = 3") {
    const auto ctx = make_context(3);
    CHECK(enumerate(ctx, SubgroupSpec::stabilizer(3)).order() == 8);
    CHECK(enumerate(ctx, SubgroupSpec::unitary(Involution::Star)).order() == 32);
    CHECK(enumerate(ctx, SubgroupSpec::unitary(Involution::Circledast)).order() == 16);
    CHECK(enumerate(ctx, SubgroupSpec::h(Involution::Star, 0)).order() == 64);
    CHECK(enumerate(ctx, SubgroupSpec::h(Involution::Star, 1)).empty());
    CHECK(enumerate(ctx, SubgroupSpec::l(Involution::Star, 0)).order() == 8);

    const auto j = enumerate(ctx, SubgroupSpec::psi_even(Involution::Circledast));
    CHECK(j.order() == 4);
    // J(circledast) = <a^4> x S_circledast(C)^2 with |S^2| = 2
    const auto s2 =
        enumerate(ctx, SubgroupSpec::squares_of(SubgroupSpec::symmetric(Involution::Circledast)));
    CHECK(s2.order() == 2);
    for (std::uint64_t e : s2.elements()) {
        CHECK(j.contains_bits(e));
        CHECK(j.contains_bits(detail::rotl_bits(e, 4, ctx.dim(), ctx.mask())));
    }
}

TEST_CASE("enumerate guards") {
    const auto c5 = make_context(5);
    CHECK_THROWS_AS(enumerate(c5, SubgroupSpec::full_v()), std::invalid_argument);

    const auto c2 = make_context(2);
    CHECK_THROWS_AS(enumerate(c2, SubgroupSpec::symmetric(Involution::Circledast)),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate(c2, SubgroupSpec::stabilizer(4)), std::invalid_argument);
    // M_z needs a non-invertible z
    CHECK_THROWS_AS(enumerate(c2, SubgroupSpec::m(Involution::Star, one_elem(c2))),
                    std::invalid_argument);
}

TEST_CASE("order_formula: documented values and guards") {
    CHECK(order_formula(SubgroupSpec::h(Involution::Star, 2), 3) == 128);
    CHECK(order_formula(SubgroupSpec::l(Involution::Star, 2), 3) == 16);
    CHECK(order_formula(SubgroupSpec::stabilizer(5), 3) == 32);
    CHECK(order_formula(SubgroupSpec::h(Involution::Star, 3), 3) == 0);
    CHECK(order_formula(SubgroupSpec::lower_layer(), 3) == 16);
    CHECK_THROWS_AS(order_formula(SubgroupSpec::m(Involution::Star, AlgElem{}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(order_formula(SubgroupSpec::symmetric(Involution::Circledast), 2),
                    std::invalid_argument);
}

TEST_CASE("enumerated orders match the closed forms at n = 3, 4") {
    for (int n : {3, 4}) {
        const auto ctx = make_context(n);
        for (const auto& spec : closed_form_specs(ctx)) {
            CAPTURE(to_string(spec));
            REQUIRE(BigInt(enumerate(ctx, spec).order()) == order_formula(spec, n));
        }
    }
}

TEST_CASE("linear-path orders: enumeration is the oracle at n = 3, 4") {
    for (int n : {3, 4}) {
        const auto ctx = make_context(n);
        std::vector<SubgroupSpec> linear = {SubgroupSpec::full_v(), SubgroupSpec::lower_layer()};
        for (unsigned i = 0; i < ctx.dim(); i += 3) linear.push_back(SubgroupSpec::stabilizer(i));
        for (Involution s : {Involution::Star, Involution::Circledast}) {
            linear.push_back(SubgroupSpec::symmetric(s));
            for (unsigned i = 0; i < ctx.dim(); i += 2) linear.push_back(SubgroupSpec::l(s, i));
            linear.push_back(SubgroupSpec::m(s, make_elem(ctx, 0b11)));
            linear.push_back(SubgroupSpec::m(s, zero_elem(ctx)));
        }
        for (const auto& spec : linear) {
            CAPTURE(to_string(spec));
            REQUIRE(order_via_linear(ctx, spec) == BigInt(enumerate(ctx, spec).order()));
        }
    }
    // beyond the enumeration cap the linear path still matches the formulas
    for (int n : {5, 6}) {
        const auto ctx = make_context(n);
        CHECK(order_via_linear(ctx, SubgroupSpec::full_v()) ==
              order_formula(SubgroupSpec::full_v(), n));
        CHECK(order_via_linear(ctx, SubgroupSpec::lower_layer()) ==
              order_formula(SubgroupSpec::lower_layer(), n));
        CHECK(order_via_linear(ctx, SubgroupSpec::stabilizer(7)) ==
              order_formula(SubgroupSpec::stabilizer(7), n));
        CHECK(order_via_linear(ctx, SubgroupSpec::symmetric(Involution::Circledast)) ==
              order_formula(SubgroupSpec::symmetric(Involution::Circledast), n));
        CHECK(order_via_linear(ctx, SubgroupSpec::l(Involution::Star, 2)) ==
              order_formula(SubgroupSpec::l(Involution::Star, 2), n));
    }
    CHECK_THROWS_AS(order_via_linear(make_context(5), SubgroupSpec::h(Involution::Star, 0)),
                    std::invalid_argument);
}

TEST_CASE("every enumerated collection is closed and contains 1") {
    const auto c3 = make_context(3);
    for (const auto& spec : closed_form_specs(c3)) {
        CAPTURE(to_string(spec));
        REQUIRE(enumerate(c3, spec).verify_closure());
    }
    for (Involution s : {Involution::Star, Involution::Circledast}) {
        REQUIRE(enumerate(c3, SubgroupSpec::m(s, make_elem(c3, 0b101))).verify_closure());
        REQUIRE(enumerate(c3, SubgroupSpec::squares_of(SubgroupSpec::unitary(s))).verify_closure());
        REQUIRE(enumerate(c3, SubgroupSpec::frattini_of(SubgroupSpec::full_v())).verify_closure());
    }

    const auto c4 = make_context(4);
    for (const auto& spec : closed_form_specs(c4)) {
        CAPTURE(to_string(spec));
        const auto sub = enumerate(c4, spec);
        if (sub.order() <= 1024)
            REQUIRE(sub.verify_closure());
        else
            REQUIRE(sub.verify_closure_sampled(100000, 42));
    }
}

TEST_CASE("square roots in an enumerated subgroup (coset-of-the-lower-layer law)") {
    const auto ctx = make_context(2);
    const auto v = enumerate(ctx, SubgroupSpec::full_v());

    const auto roots_of_1 = square_roots_in(v, one_elem(ctx));
    CHECK(roots_of_1.size() == 4);
    for (const auto& h : roots_of_1) CHECK(square(h) == one_elem(ctx));

    const auto roots = square_roots_in(v, parse_elem("a^2", ctx));
    CHECK(roots.size() == 4);
    for (const auto& h : roots) {
        CHECK(square(h) == parse_elem("a^2", ctx));
        CHECK(((h.bits >> 0) & 1u) == ((h.bits >> 2) & 1u));  // alpha_0 = alpha_2
        CHECK(((h.bits >> 1) & 1u) != ((h.bits >> 3) & 1u));  // alpha_1 != alpha_3
    }

    CHECK(square_roots_in(v, parse_elem("a", ctx)).empty());
    CHECK_THROWS_AS(square_roots_in(v, parse_elem("1+a", ctx)), std::domain_error);

    // |roots| is 0 or |N[2]| for every g, over several ambient subgroups
    for (int n : {2, 3}) {
        const auto c = make_context(n);
        for (const auto& spec :
             {SubgroupSpec::full_v(), SubgroupSpec::h(Involution::Star, 0),
              SubgroupSpec::unitary(Involution::Star)}) {
            const auto sub = enumerate(c, spec);
            const std::size_t layer = square_roots_in(sub, one_elem(c)).size();
            for (std::uint64_t gbits : sub.elements()) {
                const auto cnt = square_roots_in(sub, make_elem(c, gbits)).size();
                REQUIRE((cnt == 0 || cnt == layer));
            }
        }
    }
}

TEST_CASE("M_z subgroups") {
    const auto ctx = make_context(3);
    // z = 0 annihilates nothing: M_0 = V
    CHECK(enumerate(ctx, SubgroupSpec::m(Involution::Star, zero_elem(ctx))).order() == 128);
    // symmetric units always belong
    for (Involution s : {Involution::Star, Involution::Circledast}) {
        const auto m = enumerate(ctx, SubgroupSpec::m(s, parse_elem("1+a^2", ctx)));
        const auto sym = enumerate(ctx, SubgroupSpec::symmetric(s));
        for (std::uint64_t e : sym.elements()) REQUIRE(m.contains_bits(e));
        REQUIRE(m.verify_closure());
    }
}

TEST_CASE("verify_chain: H and L") {
    const auto c3 = make_context(3);

    const auto h = verify_chain(c3, Involution::Star, ChainFamily::H);
    CHECK(h.ok());
    REQUIRE(h.steps.size() == 2);
    CHECK(h.steps[0].order == 64);
    CHECK(h.steps[1].order == 128);

    const auto l = verify_chain(c3, Involution::Star, ChainFamily::L);
    CHECK(l.ok());
    REQUIRE(l.steps.size() == 2);
    CHECK(l.steps[0].order == 8);
    CHECK(l.steps[1].order == 16);

    const auto c4 = make_context(4);
    const auto h4 = verify_chain(c4, Involution::Circledast, ChainFamily::H);
    CHECK(h4.ok());
    REQUIRE(h4.steps.size() == 4);
    CHECK(h4.steps[0].order == (1u << 12));
    CHECK(h4.steps[1].order == (1u << 13));
    CHECK(h4.steps[2].order == (1u << 14));
    CHECK(h4.steps[3].order == (1u << 15));

    // n = 2 chains are the degenerate single step
    const auto c2 = make_context(2);
    CHECK(verify_chain(c2, Involution::Star, ChainFamily::H).ok());
    CHECK(verify_chain(c2, Involution::Star, ChainFamily::L).ok());
}

TEST_CASE("H and L saturate beyond 2^(n-1)") {
    const auto ctx = make_context(3);
    const auto v = enumerate(ctx, SubgroupSpec::full_v());
    const auto v2 = enumerate(ctx, SubgroupSpec::lower_layer());
    for (unsigned i = ctx.dim() / 2; i < ctx.dim(); ++i) {
        REQUIRE(enumerate(ctx, SubgroupSpec::h(Involution::Star, i)) == v);
        REQUIRE(enumerate(ctx, SubgroupSpec::l(Involution::Star, i)) == v2);
    }
}

TEST_CASE("Frattini subgroups equal the squares, against the dual-group oracle") {
    const auto ctx = make_context(3);
    std::vector<SubgroupSpec> specs = {
        SubgroupSpec::full_v(),
        SubgroupSpec::lower_layer(),
        SubgroupSpec::stabilizer(3),
        SubgroupSpec::symmetric(Involution::Star),
        SubgroupSpec::symmetric(Involution::Circledast),
        SubgroupSpec::unitary(Involution::Star),
        SubgroupSpec::unitary(Involution::Circledast),
        SubgroupSpec::phi_image(Involution::Circledast),
        SubgroupSpec::psi_even(Involution::Star),
        SubgroupSpec::h(Involution::Star, 0),
        SubgroupSpec::h(Involution::Circledast, 2),
        SubgroupSpec::l(Involution::Star, 0),
        SubgroupSpec::m(Involution::Star, parse_elem("a+a^3", ctx)),
    };
    for (const auto& spec : specs) {
        CAPTURE(to_string(spec));
        const auto sub = enumerate(ctx, spec);
        const auto frat = enumerate(ctx, SubgroupSpec::frattini_of(spec));
        const auto squares = enumerate(ctx, SubgroupSpec::squares_of(spec));
        REQUIRE(frat == squares);
        REQUIRE(frat.elements() == frattini_by_duality(sub));
    }
}

TEST_CASE("spec display names") {
    const auto ctx = make_context(3);
    CHECK(to_string(SubgroupSpec::full_v()) == "V");
    CHECK(to_string(SubgroupSpec::lower_layer()) == "V[2]");
    CHECK(to_string(SubgroupSpec::h(Involution::Star, 2)) == "H(star,2)");
    CHECK(to_string(SubgroupSpec::squares_of(SubgroupSpec::unitary(Involution::Circledast))) ==
          "Squares(V_uni(circledast))");
}
