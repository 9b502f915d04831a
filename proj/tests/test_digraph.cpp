#include <gtest/gtest.h>

#include <random>

#include "alphaspec/digraph.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/error.hpp"

using namespace alphaspec;

TEST(Digraph, FromArcsValidates) {
  const auto d = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_THROW(Digraph::from_arcs(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Digraph::from_arcs(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Digraph::from_arcs(3, {{0, 1}, {0, 1}}), InvalidArgument);
}

TEST(Digraph, DegreeSumsMatchArcCount) {
  const AllDigraphs all(4);
  for (std::uint64_t c = 0; c < all.size(); c += 7) {
    const auto d = all.at(c);
    std::size_t out = 0, in = 0;
    for (auto x : d.out_degrees()) out += x;
    for (auto x : d.in_degrees()) in += x;
    EXPECT_EQ(out, d.arc_count());
    EXPECT_EQ(in, d.arc_count());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_FALSE(d.has_arc(i, i));
  }
}

TEST(ParseDigraph, Examples) {
  const auto p2 = parse_digraph("2 1\n0 1");
  EXPECT_EQ(p2, Digraph::from_arcs(2, {{0, 1}}));
  const auto c3 = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(c3, make_family(DirectedCycle{3}));
}

TEST(ParseDigraph, CommentsAndCrlf) {
  const auto d = parse_digraph("# header\r\n2 1\r\n# arc\r\n1 0\r\n");
  EXPECT_TRUE(d.has_arc(1, 0));
}

namespace {
std::size_t error_line(const std::string& text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST(ParseDigraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("3 3\n0 1\n1 2\n1 2"), 4u);   // duplicate
  EXPECT_EQ(error_line("3 1\n1 1"), 2u);             // loop
  EXPECT_EQ(error_line("3 1\n0 3"), 2u);             // out of range
  EXPECT_EQ(error_line("3 1\n0  1"), 2u);            // double space
  EXPECT_EQ(error_line("3 x"), 1u);                  // header
  EXPECT_EQ(error_line("2 3\n0 1"), 1u);             // too many arcs for n
  EXPECT_NE(error_line("3 2\n0 1"), 0u);             // arcs missing
  EXPECT_EQ(error_line("3 1\n0 1\n1 2"), 3u);        // too many lines
}

TEST(EmitDigraph, RoundTrip) {
  const AllDigraphs all(3);
  for (const auto& d : all) {
    EXPECT_EQ(parse_digraph(emit_digraph(d)), d);
    EXPECT_EQ(decode(encode(d)), d);
  }
}

TEST(Families, Definitions) {
  const auto c3 = make_family(DirectedCycle{3});
  EXPECT_EQ(c3, Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
  const auto k23 = make_family(OrientedCompleteBipartite{2, 3});
  EXPECT_EQ(k23.arc_count(), 6u);
  EXPECT_EQ(k23.out_degrees(), (std::vector<std::size_t>{3, 3, 0, 0, 0}));
  const auto p4 = make_family(DirectedPath{4});
  EXPECT_EQ(p4.arcs(), (std::vector<Digraph::Arc>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(make_family(SymmetricComplete{4}).arc_count(), 12u);
  EXPECT_EQ(make_family(Discrete{5}).arc_count(), 0u);
  EXPECT_THROW(make_family(DirectedCycle{1}), InvalidArgument);
  EXPECT_THROW(make_family(OrientedCompleteBipartite{0, 2}), InvalidArgument);
  EXPECT_THROW(make_family(DirectedPath{0}), InvalidArgument);
}

TEST(Families, ShrikhandeIsSrg16622) {
  const auto s = make_family(Shrikhande{});
  ASSERT_EQ(s.order(), 16u);
  EXPECT_EQ(s.arc_count(), 96u);
  const auto f = classify_structure(s);
  EXPECT_TRUE(f.is_symmetric);
  EXPECT_EQ(f.regular_degree, std::optional<std::size_t>(6));
  for (std::size_t u = 0; u < 16; ++u)
    for (std::size_t v = u + 1; v < 16; ++v) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < 16; ++w) common += s.has_arc(u, w) && s.has_arc(v, w);
      EXPECT_EQ(common, 2u) << u << "," << v;
    }
}

TEST(Families, SymmetricFromGraph) {
  const auto d = make_family(SymmetricFromGraph{3, {{0, 1}, {1, 2}}});
  EXPECT_EQ(d.arc_count(), 4u);
  EXPECT_TRUE(classify_structure(d).is_symmetric);
  EXPECT_THROW(make_family(SymmetricFromGraph{3, {{0, 0}}}), InvalidArgument);
}

TEST(FamilySpec, ParseAndRoundTrip) {
  for (const char* s : {"path:5", "cycle:2", "kbip:2,3", "symk:4", "shrikhande", "discrete:3", "graph:4:0-1,2-3"}) {
    const auto spec = parse_family_spec(s);
    EXPECT_EQ(to_string(spec), s);
    EXPECT_EQ(to_string(parse_family_spec(to_string(spec))), s);
  }
  EXPECT_TRUE(std::holds_alternative<DirectedCycle>(parse_family_spec("cycle:5")));
  for (const char* bad : {"cycle:1", "cycle:x", "kbip:2", "nope:3", "path:", "kbip:0,1", "graph:3:0-5"})
    EXPECT_THROW(parse_family_spec(bad), InvalidArgument) << bad;
}

TEST(Structure, Flags) {
  const auto disc = classify_structure(make_family(Discrete{4}));
  EXPECT_TRUE(disc.is_discrete);
  EXPECT_EQ(disc.regular_degree, std::optional<std::size_t>(0));

  const auto perm = classify_structure(direct_sum({make_family(DirectedCycle{5}), make_family(DirectedCycle{2})}));
  EXPECT_TRUE(perm.is_permutation_digraph);
  EXPECT_EQ(perm.regular_degree, std::optional<std::size_t>(1));

  const auto ocb = classify_structure(direct_sum({make_family(OrientedCompleteBipartite{2, 3}), make_family(Discrete{1})}));
  ASSERT_TRUE(ocb.ocb_plus_isolated);
  EXPECT_EQ(*ocb.ocb_plus_isolated, (StructureFlags::OcbPart{2, 3, 1}));

  EXPECT_FALSE(classify_structure(make_family(DirectedPath{3})).ocb_plus_isolated);
  EXPECT_TRUE(classify_structure(make_family(DirectedPath{4})).is_oriented_tree);
  EXPECT_FALSE(classify_structure(make_family(DirectedCycle{3})).is_oriented_tree);
  EXPECT_FALSE(classify_structure(make_family(SymmetricComplete{2})).is_oriented_tree);
}

TEST(Structure, CyclesArePermutationDigraphs) {
  for (std::size_t n = 2; n <= 64; ++n)
    EXPECT_TRUE(classify_structure(make_family(DirectedCycle{n})).is_permutation_digraph) << n;
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(make_family(DirectedPath{2})), Digraph::from_arcs(2, {{1, 0}}));
  const auto rc3 = transpose(make_family(DirectedCycle{3}));
  EXPECT_TRUE(classify_structure(rc3).is_permutation_digraph);
  EXPECT_TRUE(rc3.has_arc(0, 2));
  // K(2,3) transposed, relabelled so the sources come first, is K(3,2)
  const auto t = transpose(make_family(OrientedCompleteBipartite{2, 3}));
  const auto relabeled = relabel(t, {3, 4, 0, 1, 2});
  EXPECT_EQ(relabeled, make_family(OrientedCompleteBipartite{3, 2}));
  EXPECT_EQ(*classify_structure(t).ocb_plus_isolated, (StructureFlags::OcbPart{3, 2, 0}));
}

TEST(Transpose, Involution) {
  for (const auto& d : AllDigraphs(3)) EXPECT_EQ(transpose(transpose(d)), d);
}

TEST(DirectSum, Examples) {
  const auto p2 = make_family(DirectedPath{2});
  EXPECT_EQ(direct_sum({p2, p2}), Digraph::from_arcs(4, {{0, 1}, {2, 3}}));
  const auto s = direct_sum({make_family(DirectedCycle{3}), make_family(DirectedCycle{4})});
  EXPECT_EQ(s.order(), 7u);
  EXPECT_TRUE(classify_structure(s).is_permutation_digraph);
  EXPECT_EQ(direct_sum({p2}), p2);
  EXPECT_THROW(direct_sum({}), InvalidArgument);
}

TEST(DirectSum, OrdersAndArcsAdd) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n1 = 1 + rng() % 4, n2 = 1 + rng() % 4;
    const auto a = AllDigraphs(n1).at(rng() % AllDigraphs(n1).size());
    const auto b = AllDigraphs(n2).at(rng() % AllDigraphs(n2).size());
    const auto s = direct_sum({a, b});
    EXPECT_EQ(s.order(), n1 + n2);
    EXPECT_EQ(s.arc_count(), a.arc_count() + b.arc_count());
  }
}

TEST(Relabel, RejectsNonPermutation) {
  const auto d = make_family(DirectedPath{3});
  EXPECT_THROW(relabel(d, {0, 0, 1}), InvalidArgument);
  EXPECT_THROW(relabel(d, {0, 1}), InvalidArgument);
}
