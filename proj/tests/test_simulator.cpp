#include <cmath>

#include "brute_helpers.hpp"
#include "doctest.h"
#include "sparsecc/errors.hpp"
#include "sparsecc/simulator.hpp"

using namespace sparsecc;
using namespace sparsecc::simulator;

namespace {

ComponentClass classify(int n, const std::vector<Edge>& e, const ForbiddenSet& f) {
  return classify_component(n, e, f);
}

}  // namespace

TEST_SUITE("classification") {
  TEST_CASE("triangle, tree and K_{2,3}") {
    const ForbiddenSet f{{3, 4}, {}};
    const auto tri = classify(3, {{0, 1}, {1, 2}, {2, 0}}, f);
    CHECK(tri.excess == 0);
    CHECK(tri.cycle_length == 3);
    CHECK(tri.polygon_hit == std::vector<char>{1, 0});

    const auto tree = classify(4, {{0, 1}, {1, 2}, {1, 3}}, f);
    CHECK(tree.excess == -1);
    CHECK(tree.polygon_hit == std::vector<char>{0, 0});

    const auto k23 = classify(5, named_graph("k23").edges, f);
    CHECK(k23.excess == 1);
    CHECK(k23.polygon_hit == std::vector<char>{0, 1});
  }

  TEST_CASE("pendant trees do not hide cycles") {
    const ForbiddenSet f{{5}, {"k4"}};
    std::vector<Edge> e = named_graph("k4").edges;
    e.push_back({3, 4});
    e.push_back({4, 5});
    const auto c = classify(6, e, f);
    CHECK(c.excess == 2);
    CHECK(c.polygon_hit == std::vector<char>{0});
    CHECK(c.other_hit == std::vector<char>{1});
  }

  TEST_CASE("loops and repeated edges count toward the excess") {
    const auto loop = classify(1, {{0, 0}}, {});
    CHECK(loop.excess == 0);
    CHECK(loop.cycle_length == 1);
    const auto dbl = classify(2, {{0, 1}, {0, 1}}, {});
    CHECK(dbl.excess == 0);
    CHECK(dbl.cycle_length == 2);
    const auto mixed = classify(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}, ForbiddenSet{{3}, {}});
    CHECK(mixed.excess == 1);
    CHECK(mixed.polygon_hit == std::vector<char>{1});
  }
}

TEST_SUITE("events") {
  TEST_CASE("parsing") {
    const auto e = parse_event("maxexcess:1&c3free&cpfree:4,5&free:k4");
    CHECK(e.max_excess == 1);
    CHECK(e.polygons_free == std::vector<int>{3, 4, 5});
    CHECK(e.others_free == std::vector<std::string>{"k4"});
    CHECK(parse_event("profile:1,0").profile == std::vector<int>{1, 0});
    CHECK_THROWS_AS(parse_event("maxexcess"), invalid_input);
    CHECK_THROWS_AS(parse_event("cpfree:2"), invalid_input);
    CHECK_THROWS_AS(parse_event("sometimes"), invalid_input);
    CHECK_THROWS_AS(parse_process_model("poisson"), invalid_input);
    CHECK(parse_process_model("multigraph") == ProcessModel::uniform);
    CHECK(parse_process_model("graph") == ProcessModel::permutation);
  }
}

TEST_SUITE("process") {
  TEST_CASE("one vertex, one edge is a loop") {
    ProcessConfig c;
    c.n = 1;
    c.m = 1;
    c.trials = 50;
    const auto est = run_trials(c, {parse_event("maxexcess:0"), parse_event("maxexcess:-1")});
    CHECK(est[0].p_hat == 1.0);
    CHECK(est[1].p_hat == 0.0);
  }

  TEST_CASE("same seed, same estimate, for any worker count") {
    ProcessConfig c;
    c.n = 2000;
    c.m = 1000;
    c.trials = 300;
    c.seed = 99;
    const std::vector<Event> ev{parse_event("maxexcess:0"), parse_event("maxexcess:1&c3free")};
    const auto a = run_trials(c, ev);
    c.workers = 3;
    const auto b = run_trials(c, ev);
    for (std::size_t i = 0; i < ev.size(); ++i) {
      CHECK(a[i].hits == b[i].hits);
      CHECK(a[i].p_hat == b[i].p_hat);
      CHECK(a[i].stderr_ == doctest::Approx(std::sqrt(a[i].p_hat * (1 - a[i].p_hat) / a[i].trials)));
    }
    c.seed = 100;
    CHECK(run_trials(c, ev)[0].hits != a[0].hits);
  }

  TEST_CASE("per-trial outcomes are consistent") {
    for (auto model : {ProcessModel::uniform, ProcessModel::permutation}) {
      ProcessConfig c;
      c.n = 60;
      c.m = 45;
      c.model = model;
      c.seed = 5;
      const ForbiddenSet pats{{3}, {}};
      for (long i = 0; i < 200; ++i) {
        const auto out = run_trial(c, pats, i);
        long complex = 0;
        for (const auto& [k, count] : out.complex_counts) {
          CHECK(k >= 1);
          complex += count;
          CHECK(out.max_excess >= k);
        }
        if (out.max_excess <= 0) CHECK(complex == 0);
        CHECK(out.polygon_hit.size() == 1);
      }
    }
  }

  TEST_CASE("permutation model matches exact enumeration at n = 7") {
    // P(no component of excess >= 1 and no triangle) over all 7-vertex, 7-edge graphs.
    const int n = 7, m = 7;
    long good = 0, total = 0;
    testing_brute::each_graph(n, m, [&](const testing_brute::EdgeList& e) {
      ++total;
      if (testing_brute::triangles(n, e) > 0) return;
      // Excess <= 0 everywhere: no component has more edges than vertices.
      std::vector<int> comp(n, -1);
      int parts = 0;
      for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = parts;
        while (!stack.empty()) {
          const int v = stack.back();
          stack.pop_back();
          for (auto [a, b] : e) {
            const int w = a == v ? b : b == v ? a : -1;
            if (w >= 0 && comp[w] < 0) {
              comp[w] = parts;
              stack.push_back(w);
            }
          }
        }
        ++parts;
      }
      std::vector<int> verts(parts, 0), edges(parts, 0);
      for (int v = 0; v < n; ++v) ++verts[comp[v]];
      for (auto [a, b] : e) ++edges[comp[a]];
      for (int i = 0; i < parts; ++i)
        if (edges[i] > verts[i]) return;
      ++good;
    });
    const double exact = static_cast<double>(good) / total;
    ProcessConfig c;
    c.n = n;
    c.m = m;
    c.model = ProcessModel::permutation;
    c.trials = 40000;
    c.seed = 2024;
    const auto est = run_trials(c, {parse_event("maxexcess:0&c3free")}).front();
    CHECK(std::fabs(est.p_hat - exact) <= 4 * est.stderr_);
  }

  TEST_CASE("uniform model matches exact enumeration of pair sequences") {
    // n = 3, m = 2: 3^4 = 81 equally likely ordered-pair sequences.
    long all_small = 0;
    for (int s = 0; s < 81; ++s) {
      const int p[4] = {s % 3, (s / 3) % 3, (s / 9) % 3, (s / 27) % 3};
      // The only excess-1 outcome is two loops at one vertex.
      const bool two_loops_same = p[0] == p[1] && p[2] == p[3] && p[0] == p[2];
      all_small += !two_loops_same;
    }
    ProcessConfig c;
    c.n = 3;
    c.m = 2;
    c.trials = 40000;
    c.seed = 8;
    const auto est = run_trials(c, {parse_event("maxexcess:0")}).front();
    CHECK(std::fabs(est.p_hat - all_small / 81.0) <= 4 * est.stderr_ + 1e-12);
  }

  TEST_CASE("input validation") {
    ProcessConfig c;
    c.n = 10;
    c.m = 46;
    c.model = ProcessModel::permutation;
    CHECK_THROWS_AS(run_trials(c, {parse_event("any")}), invalid_input);
    c.m = 5;
    c.n = 100000;
    c.trials = 1000000;
    CHECK_THROWS_AS(run_trials(c, {parse_event("any")}), resource_limit);
  }
}
