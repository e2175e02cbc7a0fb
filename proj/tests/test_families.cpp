#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "symbreak/autsearch.hpp"
#include "symbreak/cayley.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/error.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/johnson.hpp"
#include "symbreak/union_theta.hpp"

using namespace symbreak;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kInvalidParams;
}

}  // namespace

TEST_CASE("standard families") {
  const Graph k5 = complete_graph(5);
  for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
  CHECK(theta(k5).theta == 5);
  CHECK(theta(complete_bipartite(2, 3)).theta == 5);
  CHECK(isomorphic(cycle_graph(3), complete_graph(3)));
  CHECK(complete_bipartite(2, 3).adjacent(0, 2));
  CHECK_FALSE(complete_bipartite(2, 3).adjacent(0, 1));
  CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { path_graph(0); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { complete_bipartite(0, 3); }) == ErrorKind::kInvalidParams);
  const int too_many[] = {3, 4};
  CHECK(kind_of([&] { standard_family(FamilyKind::kPath, too_many); }) == ErrorKind::kInvalidParams);
}

TEST_CASE("circulant") {
  const int c6[] = {1, 5};
  CHECK(circulant(6, c6) == cycle_graph(6));
  const int all[] = {1, 2, 3, 4, 5, 6};
  CHECK(circulant(7, all) == complete_graph(7));
  const int bad[] = {1, 2};
  CHECK(kind_of([&] { circulant(6, bad); }) == ErrorKind::kNotSymmetric);
  const int zero[] = {0, 1, 5};
  CHECK(kind_of([&] { circulant(6, zero); }) == ErrorKind::kInvalidConnectionSet);

  // Odd order: v -> -v is an automorphism and the dihedral group sits inside.
  const int sets[][4] = {{1, 8, 0, 0}, {2, 7, 3, 6}, {1, 8, 4, 5}};
  for (const auto& s : sets) {
    std::vector<int> conn;
    for (int x : s)
      if (x != 0) conn.push_back(x);
    const Graph g = circulant(9, conn);
    std::vector<std::uint8_t> neg(9);
    for (int v = 0; v < 9; ++v) neg[v] = static_cast<std::uint8_t>((9 - v) % 9);
    CHECK(is_automorphism(g, neg));
    CHECK(automorphism_group(g).order() % 18 == 0);
  }
}

TEST_CASE("cayley") {
  const GroupTable z6 = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(z6.label(z6.identity()) == "(0,0)");
  const Graph g6 = named_fixture("g6");
  CHECK(g6.order() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g6.degree(v) == 3);
  CHECK(theta(g6).theta == 5);

  const int s[] = {1, 4};
  CHECK(isomorphic(cayley(cyclic_group(5), s), cycle_graph(5)));
  const int with_id[] = {0, 1, 4};
  CHECK(kind_of([&] { cayley(cyclic_group(5), with_id); }) == ErrorKind::kInvalidConnectionSet);
  const int one_sided[] = {1};
  CHECK(kind_of([&] { cayley(cyclic_group(5), one_sided); }) == ErrorKind::kNotSymmetric);

  const GroupTable s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(s4.label(s4.identity()) == "()");
  const int t12 = s4.index_of("(1 2)"), t23 = s4.index_of("(2 3)");
  CHECK(s4.label(s4.multiply(t12, t23)) == "(1 2 3)");

  for (const char* name : {"g24", "g24path"}) {
    const Graph g = named_fixture(name);
    CHECK(g.order() == 24);
    CHECK(is_connected(g));
    for (int v = 0; v < 24; ++v) CHECK(g.degree(v) == 3);
    CHECK(automorphism_group(g).order() % 24 == 0);
    std::vector<int> side(24, -1);
    side[0] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (const Edge& e : g.edges()) {
        if (side[e.u] >= 0 && side[e.v] < 0) side[e.v] = 1 - side[e.u], changed = true;
        if (side[e.v] >= 0 && side[e.u] < 0) side[e.u] = 1 - side[e.v], changed = true;
      }
    }
    for (const Edge& e : g.edges()) CHECK(side[e.u] != side[e.v]);
  }
  CHECK(automorphism_group(named_fixture("g24")).order() == 144);
  CHECK(automorphism_group(named_fixture("g24path")).order() == 48);
  CHECK(theta(named_fixture("g24path")).theta == 17);
}

TEST_CASE("group tables reject non-groups") {
  std::vector<std::vector<int>> not_group{{0, 1}, {1, 1}};
  CHECK(kind_of([&] { GroupTable t(not_group); }) == ErrorKind::kInvalidParams);
}

TEST_CASE("k-subsets in colex order") {
  const auto subs = k_subsets_colex(5, 2);
  CHECK(subs.size() == 10);
  CHECK(subset_to_string(subs[0]) == "{1,2}");
  CHECK(subset_to_string(subs[1]) == "{1,3}");
  CHECK(subset_to_string(subs[2]) == "{2,3}");
  CHECK(subset_to_string(subs[3]) == "{1,4}");
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(colex_rank(subs[i]) == static_cast<int>(i));
  // shared prefix across n
  const auto bigger = k_subsets_colex(7, 2);
  for (std::size_t i = 0; i < subs.size(); ++i) CHECK(bigger[i] == subs[i]);
}

TEST_CASE("generalized Johnson graphs") {
  CHECK(isomorphic(generalized_johnson({5, 2, 2}), parse_graph6("IheA@GUAo")));
  const Graph j422 = generalized_johnson({4, 2, 2});
  CHECK(components(j422).size() == 3);
  CHECK(isomorphic(j422, disjoint_union(std::vector<Graph>(3, complete_graph(2)))));
  CHECK(generalized_johnson({2, 1, 1}) == complete_graph(2));
  CHECK(isomorphic(generalized_johnson({6, 1, 1}), complete_graph(6)));
  CHECK(kind_of([] { generalized_johnson({5, 3, 1}); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { generalized_johnson({5, 2, 3}); }) == ErrorKind::kInvalidParams);
  CHECK(kind_of([] { generalized_johnson({9, 4, 1}); }) == ErrorKind::kOutOfRange);

  // Degree C(k,k-i) C(n-k,i), by counting neighbours on raw subsets up to 70
  // vertices and on built graphs where they fit.
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const BigInt count = binomial(n, k);
      if (count > 70) continue;
      const auto subs = k_subsets_colex(n, k);
      for (int i = 1; i <= k; ++i) {
        const BigInt want = binomial(k, k - i) * binomial(n - k, i);
        for (Subset a : subs) {
          int deg = 0;
          for (Subset b : subs) deg += a != b && std::popcount(a & b) == k - i;
          CHECK(BigInt(deg) == want);
        }
        if (count <= Graph::kMaxVertices) {
          const Graph g = generalized_johnson({n, k, i});
          for (int v = 0; v < g.order(); ++v) CHECK(BigInt(g.degree(v)) == want);
        }
      }
    }
  }
}

TEST_CASE("Johnson closed forms") {
  CHECK(johnson_theta({5, 2, 2}) == 8);
  CHECK(johnson_theta({4, 2, 1}) == 6);
  CHECK(johnson_theta({7, 3, 2}) == 26);
  CHECK(johnson_theta({6, 3, 1}) == 15);
  CHECK(johnson_theta({6, 3, 3}) == 20);
  CHECK(johnson_theta({6, 1, 1}) == 6);

  CHECK(johnson_D({5, 2, 1}) == 3);
  CHECK(johnson_D({5, 2, 2}) == 3);
  CHECK(johnson_D({6, 3, 3}) == 5);
  CHECK(johnson_D({4, 2, 2}) == 3);
  CHECK(distinguishing_number(generalized_johnson({4, 2, 2})) == 3);
  CHECK(johnson_D({4, 2, 1}) == 3);
  CHECK(johnson_D({7, 3, 2}) == 2);
  CHECK(johnson_D({8, 4, 1}) == 2);

  // e-formula against a floating evaluation where doubles are exact enough
  for (int n = 4; n <= 40; n += 2) {
    const JohnsonParams p{n, n / 2, n / 2};
    const BigInt e = binomial(n, n / 2) / 2;
    const BigInt d = johnson_D(p);
    CHECK(d * (d - 1) >= 2 * e);
    CHECK((d - 1) * (d - 2) < 2 * e);
  }

  CHECK(johnson_aut_order({5, 2, 2}) == 120);
  CHECK(johnson_aut_order({7, 3, 2}) == 40320);
  CHECK(johnson_aut_order({4, 2, 1}) == 48);
  CHECK(johnson_aut_order({4, 2, 2}) == 48);
  CHECK(johnson_aut_order({6, 3, 1}) == 1440);
  CHECK(johnson_aut_order({6, 3, 3}) == BigInt(1024) * factorial(10));
  CHECK(johnson_aut_order({8, 4, 2}) == boost::multiprecision::pow(BigInt(2), 35) * factorial(8));
  CHECK(aut_order_case({7, 3, 1}) == 'b');
  CHECK(aut_order_case({9, 2, 1}) == 'a');
  CHECK(kind_of([] { johnson_theta({3, 2, 1}); }) == ErrorKind::kInvalidParams);
}

TEST_CASE("Sym(n+1) action") {
  const JohnsonParams p{7, 3, 2};
  // (1 2 inf)(3 4 5)(6 7) with element e at point e-1 and inf at point 7
  const Permutation sigma = Permutation::from_cycles(8, {{0, 1, 7}, {2, 3, 4}, {5, 6}});
  CHECK(sym_np1_image(sigma, make_subset({1, 2, 3}), p) == make_subset({1, 2, 4}));
  CHECK(sym_np1_image(sigma, make_subset({3, 4, 5}), p) == make_subset({2, 6, 7}));
  const Permutation swap12 = Permutation::from_cycles(8, {{0, 1}});
  CHECK(sym_np1_image(swap12, make_subset({1, 3, 4}), p) == make_subset({2, 3, 4}));

  const Graph g = generalized_johnson(p);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> img(8);
    for (int v = 0; v < 8; ++v) img[v] = v;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation m = sym_np1_automorphism(Permutation(std::span<const int>(img)), p);
    CHECK(oracle::preserves(g, std::vector<int>(m.images().begin(), m.images().end())));
  }
  CHECK(kind_of([&] { sym_np1_image(sigma, make_subset({1, 2}), {5, 2, 2}); }) == ErrorKind::kNotApplicable);
}

TEST_CASE("union theta") {
  const Graph k2 = complete_graph(2);
  UnionSpec three;
  for (int i = 0; i < 3; ++i) three.components.push_back({k2, std::nullopt, std::nullopt});
  CHECK(union_theta(three) == 6);
  CHECK(johnson_theta({4, 2, 2}) == 6);

  const Graph a6 = named_fixture("asym6");
  UnionSpec twins{{{a6, std::nullopt, std::nullopt}, {a6, std::nullopt, std::nullopt}}};
  const UnionTheta tw = union_theta_detailed(twins);
  CHECK(tw.theta == 7);
  CHECK(tw.which == UnionCase::kAllAsymmetric);

  UnionSpec mixed{{{complete_graph(3), std::nullopt, std::nullopt}, {a6, std::nullopt, std::nullopt}}};
  const UnionTheta mx = union_theta_detailed(mixed);
  CHECK(mx.theta == 9);
  CHECK(mx.which == UnionCase::kMixed);
  CHECK(theta(disjoint_union(std::vector<Graph>{complete_graph(3), a6})).theta == 9);

  UnionSpec with_point{{{path_graph(3), std::nullopt, std::nullopt}, {complete_graph(1), std::nullopt, std::nullopt}}};
  const UnionTheta wp = union_theta_detailed(with_point);
  CHECK(wp.theta == 4);
  CHECK(wp.which == UnionCase::kMixedAsymmetricRest);
  CHECK(theta(disjoint_union(std::vector<Graph>{path_graph(3), complete_graph(1)})).theta == 4);

  // precomputed data is trusted
  UnionSpec priced{{{k2, 2, false}, {k2, 2, false}}};
  CHECK(union_theta(priced) == 4);

  CHECK(nu(std::vector<Graph>{a6, complete_graph(1), complete_graph(1), a6}) == 1);
  CHECK(nu(std::vector<Graph>{a6, complete_graph(1)}) == 7);

  UnionSpec broken{{{disjoint_union(std::vector<Graph>{k2, k2}), std::nullopt, std::nullopt}}};
  CHECK(kind_of([&] { union_theta(broken); }) == ErrorKind::kInvalidComponent);
  CHECK(kind_of([] { union_theta(UnionSpec{}); }) == ErrorKind::kEmptyUnion);
}

TEST_CASE("closed-form counts") {
  CHECK(path_Phi_closed_form(3, 2) == 2);
  CHECK(complete_Phi_closed_form(3, 4) == 4);
  CHECK(kind_of([] { path_Phi_closed_form(1, 3); }) == ErrorKind::kFormulaInapplicable);
}

TEST_CASE("fixtures") {
  for (const auto& name : fixture_names()) CHECK(named_fixture(name).name() == name);
  CHECK(named_fixture("g1").order() == 9);
  CHECK(named_fixture("g2").order() == 16);
  CHECK(automorphism_group(named_fixture("g1")).order() == 3);
  CHECK(automorphism_group(named_fixture("g2")).order() == 5);
  CHECK(kind_of([] { named_fixture("nope"); }) == ErrorKind::kInvalidParams);
}
