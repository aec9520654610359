#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>

#include "doctest.h"
#include "interlink/errors.hpp"
#include "interlink/greechie.hpp"
#include "support.hpp"

using namespace interlink;
namespace t = interlink::testing;

namespace {

std::vector<Atom> named_atoms(std::size_t n) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back({"x" + std::to_string(i), std::nullopt});
  return atoms;
}

GreechieDiagram fig1() { return diagram_from_contexts({ks_context({1, 2, 3}), ks_context_prime({4, 5, 6})}); }

GreechieDiagram fig2() {
  const auto p = four_dim_contexts({1, 2, 3, 4});
  return diagram_from_contexts({p.c, p.c_prime});
}

// Signature up to relabeling: sorted block-membership counts and link count.
std::pair<std::vector<std::size_t>, std::size_t> shape(const GreechieDiagram& g) {
  std::vector<std::size_t> degree(g.atom_count(), 0);
  for (const auto& b : g.blocks())
    for (std::size_t a : b) ++degree[a];
  std::sort(degree.begin(), degree.end());
  return {degree, link_atoms(g).size()};
}

}  // namespace

TEST_CASE("two tripods with a common leg") {
  const auto g = fig1();
  CHECK(g.atom_count() == 5);
  CHECK(g.blocks().size() == 2);
  CHECK(g.block_size() == 3);
  const auto links = link_atoms(g);
  REQUIRE(links.size() == 1);
  CHECK(t::ray_distance(*g.atoms()[links[0]].ray, ComplexVector{0.0, 1.0, 0.0}) < 1e-12);
  CHECK(g.warnings().empty());
}

TEST_CASE("two four-dimensional contexts joined by two links") {
  const auto g = fig2();
  CHECK(g.atom_count() == 6);
  CHECK(g.blocks().size() == 2);
  const auto links = link_atoms(g);
  REQUIRE(links.size() == 2);
  CHECK(t::ray_distance(*g.atoms()[links[0]].ray, ComplexVector::basis(4, 2)) < 1e-12);
  CHECK(t::ray_distance(*g.atoms()[links[1]].ray, ComplexVector::basis(4, 3)) < 1e-12);
}

TEST_CASE("the same context twice merges fully") {
  const auto g = diagram_from_contexts({ks_context({1, 2, 3}), ks_context({7, 8, 9})});
  CHECK(g.atom_count() == 3);
  CHECK(g.blocks()[0] == g.blocks()[1]);
  CHECK(two_valued_states(g).size() == 3);
}

TEST_CASE("diagram construction rejects mixed dimensions") {
  CHECK_THROWS_AS(diagram_from_contexts({ks_context({1, 2, 3}), four_dim_contexts({1, 2, 3, 4}).c}),
                  DimensionMismatch);
}

TEST_CASE("atoms are numbered by first appearance") {
  const auto g = fig1();
  CHECK(g.blocks()[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(g.blocks()[1] == std::vector<std::size_t>{0, 3, 4});
  CHECK(g.atoms()[3].id == "a3");
}

TEST_CASE("rebuilding and rephasing leave the diagram unchanged up to relabeling") {
  const auto base = shape(fig2());
  CHECK(shape(fig2()) == base);
  for (int rep = 0; rep < 20; ++rep) {
    const auto p = four_dim_contexts({1, 2, 3, 4});
    std::vector<ContextOperator> rephased;
    for (const auto* ctx : {&p.c, &p.c_prime}) {
      std::vector<ComplexVector> basis;
      for (const auto& v : ctx->basis()) basis.push_back(t::random_phase() * v);
      rephased.push_back(context_from_basis(basis, ctx->spectrum()));
    }
    CHECK(shape(diagram_from_contexts(rephased)) == base);
  }
}

TEST_CASE("two-valued states of the interlinked diagrams") {
  const auto g1 = fig1();
  const auto s1 = two_valued_states(g1);
  CHECK(s1.size() == 5);
  CHECK(s1.size() == t::brute_force_state_count(g1.atom_count(), g1.blocks()));
  CHECK(std::count_if(s1.begin(), s1.end(), [](const TwoValuedState& s) { return s.assignment[0] == 1; }) == 1);

  const auto g2 = fig2();
  const auto s2 = two_valued_states(g2);
  CHECK(s2.size() == 6);
  CHECK(s2.size() == t::brute_force_state_count(g2.atom_count(), g2.blocks()));

  for (const auto& s : s1) CHECK(satisfies_blocks(s, g1));
  for (const auto& s : s2) CHECK(satisfies_blocks(s, g2));
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = two_valued_states(fig1());
  const auto b = two_valued_states(fig1());
  CHECK(a == b);
  // 0 is tried before 1 for each atom in index order, so the link-true state comes last.
  CHECK(a.back().assignment == std::vector<std::uint8_t>{1, 0, 0, 0, 0});
  CHECK(a.front().assignment == std::vector<std::uint8_t>{0, 0, 1, 0, 1});
}

TEST_CASE("single block of n atoms has n states") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::size_t> block(n);
    std::iota(block.begin(), block.end(), 0);
    const GreechieDiagram g(named_atoms(n), {block});
    CHECK(two_valued_states(g).size() == n);
  }
}

TEST_CASE("enumeration matches brute force on random small diagrams") {
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t k = 2 + rep % 3;                  // block size 2..4
    const std::size_t nblocks = 1 + rep % 5;            // 1..5 blocks
    const std::size_t atoms = std::min<std::size_t>(16, k + (nblocks - 1) * (k - 1) + rep % 3);
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<bool> used(atoms, false);
    for (std::size_t b = 0; b < nblocks; ++b) {
      std::vector<std::size_t> pool(atoms);
      std::iota(pool.begin(), pool.end(), 0);
      std::shuffle(pool.begin(), pool.end(), t::rng());
      pool.resize(k);
      std::sort(pool.begin(), pool.end());
      for (auto a : pool) used[a] = true;
      blocks.push_back(pool);
    }
    // Atoms that never got picked get their own block-mate arrangement: drop them.
    std::vector<std::size_t> remap(atoms, 0);
    std::size_t live = 0;
    for (std::size_t a = 0; a < atoms; ++a)
      if (used[a]) remap[a] = live++;
    for (auto& b : blocks)
      for (auto& a : b) a = remap[a];

    const GreechieDiagram g(named_atoms(live), blocks);
    const auto states = two_valued_states(g);
    CHECK(states.size() == t::brute_force_state_count(live, g.blocks()));
    for (const auto& s : states) CHECK(satisfies_blocks(s, g));
    CHECK(is_separating(states, g).separating == t::brute_force_separating(live, states));
  }
}

TEST_CASE("separating sets") {
  const auto g1 = fig1();
  CHECK(is_separating(two_valued_states(g1), g1).separating);
  CHECK(t::brute_force_separating(g1.atom_count(), two_valued_states(g1)));
  const auto g2 = fig2();
  CHECK(is_separating(two_valued_states(g2), g2).separating);

  const auto empty = is_separating({}, g1);
  CHECK_FALSE(empty.separating);
  REQUIRE(empty.inseparable.has_value());
  CHECK(*empty.inseparable == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("link atoms of disjoint blocks") {
  const GreechieDiagram g(named_atoms(6), {{0, 1, 2}, {3, 4, 5}});
  CHECK(link_atoms(g).empty());
  CHECK(two_valued_states(g).size() == 9);
}

TEST_CASE("block size two is accepted with a warning") {
  const GreechieDiagram g(named_atoms(4), {{0, 1}, {2, 3}});
  CHECK(g.warnings().size() == 1);
  CHECK(two_valued_states(g).size() == 4);
}

TEST_CASE("malformed diagrams are rejected") {
  CHECK_THROWS_AS(GreechieDiagram(named_atoms(3), {}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram(named_atoms(4), {{0, 1, 2}, {0, 3}}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram(named_atoms(3), {{0, 1, 1}}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram(named_atoms(3), {{0, 1, 5}}), InvalidDiagram);
  CHECK_THROWS_AS(GreechieDiagram(named_atoms(4), {{0, 1, 2}}), InvalidDiagram);
  auto dup = named_atoms(2);
  dup[1].id = dup[0].id;
  CHECK_THROWS_AS(GreechieDiagram(dup, {{0, 1}}), InvalidDiagram);
}

TEST_CASE("exchange format round trip") {
  const auto g = fig1();
  const auto back = diagram_from_json(diagram_to_json(g));
  CHECK(back.blocks() == g.blocks());
  CHECK(back.atom_count() == g.atom_count());
  for (std::size_t a = 0; a < g.atom_count(); ++a) {
    CHECK(back.atoms()[a].id == g.atoms()[a].id);
    CHECK(max_abs_diff(*back.atoms()[a].ray, *g.atoms()[a].ray) == 0.0);
  }

  const auto plain = diagram_from_json(R"({"atoms":[{"id":"p"},{"id":"q"},{"id":"r"}],"blocks":[["p","q","r"]]})");
  CHECK(two_valued_states(plain).size() == 3);
  CHECK_FALSE(plain.atoms()[0].ray.has_value());

  CHECK_THROWS_AS(diagram_from_json("{"), InvalidDiagram);
  CHECK_THROWS_AS(diagram_from_json(R"({"atoms":[{"id":"p"}],"blocks":[["p","z"]]})"), InvalidDiagram);
  CHECK_THROWS_AS(diagram_from_json(R"({"atoms":[{"id":"p"}]})"), InvalidDiagram);
  CHECK_THROWS_AS(diagram_from_json(R"({"block_size":2,"atoms":[{"id":"p"}],"blocks":[["p"]]})"), InvalidDiagram);
}

TEST_CASE("diagram file with three blocks through one atom") {
  std::ifstream in(std::string(INTERLINK_TEST_DATA_DIR) + "/linked_triangles.json");
  REQUIRE(in.good());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto g = diagram_from_json(text);
  CHECK(g.atom_count() == 7);
  CHECK(link_atoms(g) == std::vector<std::size_t>{0});
  const auto states = two_valued_states(g);
  // l true (1) or l false with one of two in each block (2^3).
  CHECK(states.size() == 9);
  CHECK(states.size() == t::brute_force_state_count(g.atom_count(), g.blocks()));
  CHECK(is_separating(states, g).separating);
  CHECK(t::brute_force_separating(g.atom_count(), states));
}
