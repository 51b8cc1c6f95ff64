#include "doctest.h"
#include "sparsecc/census.hpp"
#include "sparsecc/errors.hpp"
#include "sparsecc/oracle.hpp"

using namespace sparsecc;
using namespace sparsecc::census;

TEST_SUITE("constants") {
  TEST_CASE("first values") {
    const auto tab = wright_constants(2);
    CHECK(tab.b[1] == rat(5, 24));
    CHECK(tab.b[2] == rat(5, 16));
    CHECK(tab.c[1] == rat(19, 24));
    CHECK(tab.c[2] == rat(65, 48));
    CHECK(tab.cprime[1] == rat(25, 24));
    CHECK(tab.cprime[2] == rat(5, 3));
    CHECK(tab.cprime[2] == tab.c[2] + rat(3, 2) * tab.b[1]);
  }

  TEST_CASE("leading coefficients of W_k match b_k and c_k") {
    const auto ws = compute_wk(6);
    const auto tab = wright_constants(6);
    for (int k = 1; k <= 6; ++k) {
      const auto [lead, next] = leading_coefficients(ws[k - 1], k);
      CHECK(lead == tab.b[k]);
      CHECK(next == -tab.c[k]);
    }
  }

  TEST_CASE("triangle-free second coefficients match c'_k") {
    const auto tab = wright_constants(3);
    for (int k = 1; k <= 3; ++k) {
      const auto [lead, next] = leading_coefficients(forbidden_family(k, {3}).free, k);
      CHECK(lead == tab.b[k]);
      CHECK(next == -tab.cprime[k]);
    }
  }

  TEST_CASE("second coefficient with r polygons forbidden") {
    for (int r = 1; r <= 3; ++r) {
      std::vector<int> polys;
      for (int i = 0; i < r; ++i) polys.push_back(3 + i);
      const auto [lead, next] = leading_coefficients(forbidden_family(1, polys).free, 1);
      CHECK(lead == rat(5, 24));
      CHECK(next == -(rat(19, 24) + rat(r, 4)));
      CHECK(-next == wright_constants(1, r).cprime_xi[1]);
    }
    const auto tab = wright_constants(2, 2);
    CHECK(leading_coefficients(forbidden_family(2, {3, 4}).free, 2).second == -tab.cprime_xi[2]);
  }

  TEST_CASE("symmetric convolution identity") {
    const auto tab = wright_constants(20);
    for (int k = 2; k <= 20; ++k) {
      Rational weighted = 0, plain = 0;
      for (int t = 1; t < k; ++t) {
        weighted += Rational(t) * tab.b[t] * tab.b[k - t];
        plain += tab.b[t] * tab.b[k - t];
      }
      CHECK(weighted == Rational(k, 2) * plain);
    }
  }

  TEST_CASE("dual routes agree up to k = 20") {
    for (int r = 0; r <= 3; ++r) CHECK_NOTHROW(wright_constants(20, r));
  }
}

TEST_SUITE("catalogue") {
  TEST_CASE("closed forms count nonnegative integers") {
    for (const auto& name : closed_form_names()) {
      if (name.find("multi") != std::string::npos) continue;
      const Series s = xexpr_eval(closed_form(name, {3, 5}), 25);
      for (int n = 0; n <= 25; ++n) {
        const Rational v = s.labelled_count(n);
        CHECK_MESSAGE(v >= 0, name);
        CHECK_MESSAGE(v.get_den() == 1, name);
      }
    }
  }

  TEST_CASE("small triangle-free values") {
    const Series w0 = xexpr_eval(closed_form("W0_C3"), 6);
    CHECK(w0.labelled_count(3) == 0);
    CHECK(w0.labelled_count(4) == 3);
    CHECK(xexpr_eval(closed_form("W1_C3"), 6).labelled_count(5) == 10);
  }

  TEST_CASE("catalogue against brute force, n <= 7") {
    struct Row {
      const char* name;
      int excess;
      const char* pred;
    };
    const Row rows[] = {
        {"W0_C3", 0, "connected&c3free"},     {"W1_C3", 1, "connected&c3free"},
        {"W2_C3", 2, "connected&c3free"},     {"S1_C3", 1, "connected&onecopy:c3"},
        {"S2_C3", 2, "connected&onecopy:c3"}, {"J1_C3", 1, "connected&juxta:c3"},
        {"J2_C3", 2, "connected&juxta:c3"},   {"W0", 0, "connected"},
        {"W1", 1, "connected"},
    };
    for (const auto& row : rows) {
      const Series s = xexpr_eval(closed_form(row.name), 7);
      const auto pred = oracle::parse_predicate(row.pred);
      for (int n = 1; n <= 7; ++n) {
        const int m = n + row.excess;
        if (m > n * (n - 1) / 2) {
          CHECK(s.labelled_count(n) == 0);
          continue;
        }
        CHECK_MESSAGE(s.labelled_count(n) == oracle::brute_census(n, m, pred),
                      row.name << " n=" << n);
      }
    }
  }

  TEST_CASE("single and forbidden polygon families") {
    CHECK(closed_form("W0_xi", {3}) == closed_form("W0_C3"));
    const Series s = xexpr_eval(closed_form("W0_xi", {3, 4}), 8);
    for (int n = 3; n <= 8; ++n)
      CHECK(s.labelled_count(n) ==
            oracle::brute_census(n, n, oracle::parse_predicate("connected&cpfree:3,4")));
    CHECK(unicyclic(Model::graph) == closed_form("W0"));
    CHECK(unicyclic(Model::multigraph) == closed_form("W0_multi"));
    CHECK(unicyclic(Model::graph, {3}) == closed_form("W0_C3"));
    CHECK_THROWS_AS(closed_form("W7"), invalid_input);
    CHECK_THROWS_AS(closed_form("W0_xi", {3, 3}), invalid_input);
    CHECK_THROWS_AS(closed_form("W0_xi", {2}), invalid_input);
  }

  TEST_CASE("tree-polynomial decomposition of the triangle-free bicyclic family") {
    const XExpr w = closed_form("W1_C3");
    const std::vector<std::pair<long, Rational>> expected{
        {3, rat(5, 24)},   {2, rat(-25, 24)}, {1, rat(47, 24)}, {0, rat(-35, 24)},
        {-1, rat(-5, 24)}, {-2, rat(25, 24)}, {-3, rat(-5, 8)}, {-4, rat(1, 8)}};
    CHECK(w.laurent().size() == expected.size());
    for (const auto& [t, c] : expected) CHECK(w.coeff(t) == c);
  }

  TEST_CASE("leading pairs") {
    CHECK(leading_coefficients(closed_form("W1"), 1) == std::pair{rat(5, 24), rat(-19, 24)});
    CHECK(leading_coefficients(closed_form("W2_C3"), 2) == std::pair{rat(5, 16), rat(-5, 3)});
    CHECK_THROWS(leading_coefficients(closed_form("W2_C3"), 1));
  }
}

TEST_SUITE("contractible family") {
  TEST_CASE("K4 family against brute force") {
    const XExpr fam = contractible_family(named_graph("k4"));
    CHECK(fam.excess() == 2);
    CHECK(fam.top() == 6);
    CHECK(fam.coeff(6) == rat(1, 24));
    const Series s = xexpr_eval(fam, 7);
    const auto all = oracle::parse_predicate("connected");
    const auto other = oracle::parse_predicate("connected&nokernel:k4");
    for (int n = 4; n <= 7; ++n)
      CHECK(s.labelled_count(n) ==
            oracle::brute_census(n, n + 2, all) - oracle::brute_census(n, n + 2, other));
    CHECK(s.labelled_count(4) == 1);
  }

  TEST_CASE("prism family against brute force") {
    const Series s = xexpr_eval(contractible_family(named_graph("prism")), 7);
    const auto all = oracle::parse_predicate("connected");
    const auto other = oracle::parse_predicate("connected&nokernel:prism");
    for (int n = 6; n <= 7; ++n)
      CHECK(s.labelled_count(n) ==
            oracle::brute_census(n, n + 3, all) - oracle::brute_census(n, n + 3, other));
  }

  TEST_CASE("rejects kernels with a vertex of degree below 3") {
    CHECK_THROWS_AS(contractible_family(named_graph("c4")), invalid_input);
  }
}

TEST_SUITE("partitions") {
  TEST_CASE("generating functions against direct counts") {
    for (int parts = 1; parts <= 5; ++parts)
      for (bool distinct : {false, true}) {
        const Series s = partition_gf(parts, distinct, 30);
        for (int n = 0; n <= 30; ++n)
          CHECK(s[n] == Rational(count_partitions(n, parts, distinct)));
      }
    CHECK(count_partitions(10, 3, false) == 8);
    CHECK(count_partitions(10, 3, true) == 4);
  }

  TEST_CASE("smooth bicyclic graphs") {
    const Series s = smooth_bicyclic_partition(40);
    CHECK(s[3] == 0);
    CHECK(s[4] == rat(1, 4));
    CHECK(s.labelled_count(4) == 6);
    const Series w1 = xexpr_eval(closed_form("W1"), 20);
    CHECK(substitute_tree(s.truncated(20), 20) == w1);
  }
}

TEST_SUITE("recurrence") {
  TEST_CASE("plain residuals vanish") {
    for (int k = 0; k <= 3; ++k) {
      CHECK(recurrence_residual(k, {}, Model::graph, 20).is_zero());
      CHECK(recurrence_residual(k, {}, Model::multigraph, 20).is_zero());
    }
  }

  TEST_CASE("triangle residuals vanish") {
    CHECK(recurrence_residual(0, {3}, Model::graph, 25).is_zero());
    CHECK(recurrence_residual(1, {3}, Model::graph, 25).is_zero());
  }

  TEST_CASE("two polygons, first step") {
    CHECK(recurrence_residual(0, {3, 4}, Model::graph, 20).is_zero());
  }

  TEST_CASE("multigraph residuals take no polygons") {
    CHECK_THROWS(recurrence_residual(0, {3}, Model::multigraph, 10));
  }

  TEST_CASE("recurrence pins reject a corrupted oracle value") {
    const XExpr rhs = delta_apply(1, closed_form("W1"));
    CHECK_NOTHROW(delta_invert(1, rhs, {{4, 6}, {5, 205}}));
    CHECK_THROWS_AS(delta_invert(1, rhs, {{4, 7}, {5, 205}}), consistency_failure);
  }
}

TEST_SUITE("inequalities") {
  TEST_CASE("coefficient bounds, triangle-free") {
    for (int k = 1; k <= 2; ++k) {
      const auto rep = inequality_check(Inequality::wright, k, 40);
      CHECK(rep.holds);
      CHECK(rep.checked > 0);
    }
  }

  TEST_CASE("coefficient bounds, plain graphs") {
    InequalityParams p;
    p.polygons = {};
    for (int k = 1; k <= 4; ++k) CHECK(inequality_check(Inequality::wright, k, 40, p).holds);
  }

  TEST_CASE("single-copy and juxtaposition bounds") {
    CHECK(inequality_check(Inequality::sbound, 1, 40).holds);
    CHECK(inequality_check(Inequality::jbound, 2, 40).holds);
    const auto rep = inequality_check(Inequality::sbound, 1, 40);
    REQUIRE(rep.minimal_epsilon.has_value());
    CHECK(*rep.minimal_epsilon <= rat(1, 2));
    InequalityParams tight;
    tight.epsilon = *rep.minimal_epsilon;
    CHECK(inequality_check(Inequality::sbound, 1, 40, tight).holds);
  }

  TEST_CASE("constants band") {
    for (int r = 0; r <= 3; ++r) {
      InequalityParams p;
      p.r = r;
      CHECK(inequality_check(Inequality::constants, 12, 0, p).holds);
    }
  }

  TEST_CASE("vanishing below the smallest vertex count") {
    for (int k = 1; k <= 6; ++k) CHECK(inequality_check(Inequality::vanishing, k, 12).holds);
  }

  TEST_CASE("names") {
    CHECK(parse_inequality("jbound") == Inequality::jbound);
    CHECK(to_string(Inequality::sbound) == "sbound");
    CHECK_THROWS_AS(parse_inequality("other"), invalid_input);
  }
}
