#include "hrg/io.hpp"

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "hrg/cosetgeom.hpp"
#include "hrg/errors.hpp"
#include "hrg/lattice.hpp"
#include "hrg/multipartite.hpp"

namespace {

std::string dump(const hrg::PartiteGraph& g, std::string_view manifest = {}) {
  std::ostringstream out;
  hrg::write_graph(g, out, manifest);
  return out.str();
}

hrg::PartiteGraph parse(const std::string& text) {
  std::istringstream in(text);
  return hrg::read_graph(in);
}

TEST(GraphFile, RoundTripsLabeledComplex) {
  const auto x = hrg::affine_quotient_complex(3, 2);
  const std::string text = dump(x.host);
  EXPECT_EQ(text.substr(0, 8), "#hrg v1\n");
  const auto back = parse(text);
  EXPECT_TRUE(back == x.host);
  // Canonical form: a second export is byte-identical.
  EXPECT_EQ(dump(back), text);
}

TEST(GraphFile, RoundTripsUnlabeledLattice) {
  const auto g = hrg::stair_graph(3, 2);
  const auto back = parse(dump(g));
  EXPECT_TRUE(back == g);
  EXPECT_EQ(back.num_vertices(), 108);
  EXPECT_EQ(back.num_edges(), g.num_edges());
}

TEST(GraphFile, EmbedsManifestWithoutAffectingTheGraph) {
  const auto g = hrg::stair_graph(3, 1);
  const std::string with = dump(g, R"({"command":"build","seed":24301})");
  EXPECT_NE(with.find("#manifest {\"command\":\"build\""), std::string::npos);
  EXPECT_TRUE(parse(with) == g);
  // The manifest line is the only difference against a bare export.
  std::string bare = dump(g);
  std::string stripped = with;
  const auto pos = stripped.find("#manifest");
  stripped.erase(pos, stripped.find('\n', pos) - pos + 1);
  EXPECT_EQ(stripped, bare);
  EXPECT_THROW(dump(g, "two\nlines"), hrg::InvalidParamsError);
}

TEST(GraphFile, LinksAreWrittenWithFreshDenseIds) {
  const auto x = hrg::affine_quotient_complex(3, 2);
  const auto v = x.host.part(0).front();
  const auto lk = hrg::link(x.host, {v});
  ASSERT_FALSE(lk.dense_ids());
  const auto back = parse(dump(lk));
  EXPECT_TRUE(back.dense_ids());
  EXPECT_EQ(back.nparts(), lk.nparts());
  EXPECT_EQ(back.num_vertices(), lk.num_vertices());
  EXPECT_EQ(back.num_edges(), lk.num_edges());
  // Labels carry vertex identity across the renumbering.
  EXPECT_TRUE(back.equal_by_labels(lk));
}

TEST(GraphFile, RejectsMalformedInput) {
  EXPECT_THROW(parse(""), hrg::IoError);
  EXPECT_THROW(parse("#hrg v2\n#part 0 1\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n"), hrg::IoError);                   // no parts
  EXPECT_THROW(parse("#hrg v1\n#part 1 2\n"), hrg::IoError);        // gap
  EXPECT_THROW(parse("#hrg v1\n#part 0 -1\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#part 1 2\n0 1 2\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#part 1 2\n2 0\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#part 1 2\n0 4\n"), hrg::IoError);
  // Same-part edge, duplicate edge, label collisions.
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#part 1 2\n0 1\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#part 1 2\n0 2\n0 2\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#label 0 a\n#label 0 b\n"),
               hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#label 5 a\n"), hrg::IoError);
  EXPECT_THROW(parse("#hrg v1\n#part 0 2\n#label 0\n"), hrg::IoError);
}

TEST(GraphFile, ToleratesCommentsBlanksAndCarriageReturns) {
  const auto g =
      parse("#hrg v1\r\n#note anything\n\n#part 0 1\r\n#part 1 1\n0 1\r\n");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(GraphFile, SaveAndLoadThroughFiles) {
  const auto g = hrg::stair_graph(3, 1);
  const std::string path = testing::TempDir() + "roundtrip.graph";
  hrg::save_graph(g, path, "{}");
  EXPECT_TRUE(hrg::load_graph(path) == g);
  EXPECT_THROW(hrg::load_graph(testing::TempDir() + "missing.graph"),
               hrg::IoError);
  EXPECT_THROW(hrg::save_graph(g, testing::TempDir()), hrg::IoError);
}

TEST(DotExport, WritesSmallGraphsOnly) {
  const auto x = hrg::affine_quotient_complex(3, 2);
  std::ostringstream out;
  hrg::write_dot(x.host, out);
  const std::string dot = out.str();
  EXPECT_EQ(dot.substr(0, 8), "graph {\n");
  EXPECT_NE(dot.find("[part=0"), std::string::npos);
  EXPECT_NE(dot.find(" -- "), std::string::npos);
  EXPECT_NE(dot.find("label=\""), std::string::npos);

  std::ostringstream sink;
  EXPECT_THROW(hrg::write_dot(hrg::stair_graph(3, 9), sink),
               hrg::CapacityError);  // 3*27^2 = 2187 vertices
}

}  // namespace
