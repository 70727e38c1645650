#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "lamis/errors.hpp"
#include "lamis/instance.hpp"
#include "lamis/io.hpp"

using namespace lamis;

namespace {

const std::string kData = std::string(LAMIS_SOURCE_DIR) + "/tests/data/";

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_instance(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

}  // namespace

TEST(InstanceIo, RoundTripGenerated) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = gen_planted_gnp(200, 0.3, 0.05, seed, true);
    std::stringstream buf;
    write_instance(buf, inst);
    const auto back = read_instance(buf);
    EXPECT_EQ(back.graph, inst.graph);
    EXPECT_EQ(back.planted, inst.planted);
    EXPECT_EQ(back.params, inst.params);
  }
  const auto bounded = gen_planted_bounded_degree(300, 0.5, 5, 9);
  std::stringstream buf;
  write_instance(buf, bounded);
  EXPECT_EQ(read_instance(buf).params, bounded.params);
}

TEST(InstanceIo, FixtureFile) {
  const auto inst = read_instance(kData + "five_vertex.txt");
  ASSERT_EQ(inst.graph.num_vertices(), 5u);
  EXPECT_EQ(inst.graph.num_edges(), 5u);
  const std::vector<std::vector<Vertex>> expected{{1}, {0, 2, 4}, {1, 3}, {2, 4}, {1, 3}};
  for (Vertex v = 0; v < 5; ++v) {
    const auto nb = inst.graph.neighbors(v);
    EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), expected[v]) << "vertex " << v;
  }
  EXPECT_EQ(inst.planted, VertexSet(5, {0, 2}));
  EXPECT_DOUBLE_EQ(inst.params.alpha, 0.4);
}

TEST(InstanceIo, MissingPlantedSection) {
  std::istringstream in("3 1\n0 1\n");
  EXPECT_THROW(read_instance(in), ParseError);
}

TEST(InstanceIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 x\nplanted: 0\n"), 3u);
  EXPECT_EQ(parse_error_line("# c\n3 1\n0 5\nplanted: 0\n"), 3u);
  EXPECT_EQ(parse_error_line("3 1\n0 1\nplanted: 2\n1 2\n"), 4u);
  EXPECT_EQ(parse_error_line("3 1\n0 1\nplanted: 0\nplanted: 2\n"), 4u);
  EXPECT_EQ(parse_error_line("3 1\n0 1 2\nplanted: 0\n"), 2u);
  EXPECT_EQ(parse_error_line("3 1\n0 1\nplanted: 7\n"), 3u);
  EXPECT_EQ(parse_error_line("# params: {bad\n3 0\nplanted: 0\n"), 1u);
}

TEST(InstanceIo, StructuralErrors) {
  std::istringstream dependent("3 1\n0 1\nplanted: 0 1\n");
  EXPECT_THROW(read_instance(dependent), ParseError);
  std::istringstream count_mismatch("3 2\n0 1\nplanted: 0\n");
  EXPECT_THROW(read_instance(count_mismatch), ParseError);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(read_instance(empty), ParseError);
  EXPECT_THROW(read_instance(kData + "does_not_exist.txt"), ParseError);
}

TEST(EdgeList, ToleratesDuplicatesAndSelfLoops) {
  std::istringstream in("# c\n4 4\n0 1\n1 0\n2 2\n2 3\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.num_edges(), 2u);
  std::stringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "4 2\n0 1\n2 3\n");
}

TEST(InstanceIo, NoParamsLineFallsBack) {
  std::istringstream in("4 1\n0 1\nplanted: 0 2\n");
  const auto inst = read_instance(in);
  EXPECT_EQ(inst.params.model, GraphModel::external);
  EXPECT_DOUBLE_EQ(inst.params.alpha, 0.5);
}

TEST(VertexIds, RoundTripAndErrors) {
  const VertexSet s(10, {1, 4, 9});
  std::stringstream buf;
  write_vertex_ids(buf, s);
  EXPECT_EQ(buf.str(), "1 4 9\n");
  EXPECT_EQ(read_vertex_ids(buf, 10), s);
  std::istringstream comment("# ids\n3 2\n\n5 # tail\n");
  EXPECT_EQ(read_vertex_ids(comment, 6), VertexSet(6, {2, 3, 5}));
  std::istringstream too_big("1\n12\n");
  try {
    read_vertex_ids(too_big, 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
