#include <gtest/gtest.h>

#include <functional>

#include "cocycle_forge/error.hpp"
#include "cocycle_forge/io.hpp"
#include "support.hpp"

using namespace cocycle_forge;
using namespace cocycle_forge::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST(Io, GroupFileRoundTrip) {
  const auto g = parse_group(data("d3_group.txt"));
  EXPECT_EQ(*g, *make_dihedral(3));
  EXPECT_EQ(g->name(4), "ab");
  const auto again = parse_group(emit_group(*g));
  EXPECT_EQ(*again, *g);
  EXPECT_EQ(again->names(), g->names());
  EXPECT_EQ(*parse_group(emit_group(*make_cyclic(5))), *make_cyclic(5));
}

TEST(Io, TableRoundTrip) {
  const auto g = make_cyclic(9);
  const std::string text = data("z9_table.txt");
  EXPECT_EQ(emit_table(parse_table(g, text)), text);
}

TEST(Io, MalformedRowReportsLine) {
  const auto g = make_cyclic(3);
  try {
    parse_table(g, "111\n1x0\n100\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([&] { parse_table(g, "111\n10\n100\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([&] { parse_table(g, "111\n100\n"); }), ErrorCode::parse_error);
}

TEST(Io, CommentsAreSkipped) {
  const auto g = make_cyclic(2);
  EXPECT_EQ(emit_table(parse_table(g, "# header\n11\n# middle\n10\n")), "11\n10\n");
}

TEST(Io, RFileRoundTrip) {
  const auto g = make_cyclic(9);
  const auto r = parse_r(g, data("z9_r.txt"));
  EXPECT_EQ(r.values(), z9_r().values());
  EXPECT_EQ(emit_r(r), data("z9_r.txt"));
  const std::string tuples = "(0,0)\n(1,0)\n(1,1)\n";
  const auto t = parse_r(make_cyclic(3), tuples);
  EXPECT_EQ(t.monoid()->describe(), "Lex(N,N)");
  EXPECT_EQ(emit_r(t), tuples);
  EXPECT_EQ(code_of([&] { parse_r(make_cyclic(3), "0\n(1,0)\n1\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([&] { parse_r(make_cyclic(3), "0\n1\n5\n"); }), ErrorCode::invalid_r);
}

TEST(Io, IndexSets) {
  EXPECT_EQ(parse_index_set("{1,2}"), (ElementSet{1, 2}));
  EXPECT_EQ(parse_index_set("3 4"), (ElementSet{3, 4}));
  EXPECT_EQ(parse_index_set("{}"), ElementSet{});
  EXPECT_EQ(code_of([] { parse_index_set("{1,"); }), ErrorCode::parse_error);
}

TEST(Io, ChainFiles) {
  const auto ctx = z9_context();
  const auto c = parse_chain(ctx, "1 2 3 4 5 6 7 8\n6 7\n\n");
  ASSERT_EQ(c.length(), 3u);
  EXPECT_TRUE(c[2].empty());
  EXPECT_EQ(parse_chain(ctx, emit_chain(c)), c);
  EXPECT_EQ(code_of([&] { parse_chain(ctx, "6 7\n3 4 8\n"); }), ErrorCode::invalid_chain);
  EXPECT_EQ(code_of([&] { parse_chain(ctx, "7 6\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([&] { parse_chain(ctx, "5\n\n"); }), ErrorCode::invalid_ideal);
}

TEST(Io, ArtifactFormats) {
  const auto ctx = z9_context();
  const Cocycle f = ctx->cocycle();
  EXPECT_EQ(emit_artifact(f, Format::table), data("z9_table.txt"));
  EXPECT_EQ(emit_artifact(z9_r(), Format::rfile), data("z9_r.txt"));
  EXPECT_EQ(code_of([&] { emit_artifact(f, Format::dot); }), ErrorCode::format_error);
  EXPECT_EQ(code_of([&] { emit_artifact(z9_r(), Format::table); }), ErrorCode::format_error);
  EXPECT_EQ(format_from_string("dot"), Format::dot);
  EXPECT_EQ(code_of([] { format_from_string("png"); }), ErrorCode::parse_error);
  EXPECT_EQ(emit_artifact(decompose_by_classes(ctx), Format::report), decompose_by_classes(ctx).to_text());
}

TEST(Io, MissingFileIsParseError) {
  EXPECT_EQ(code_of([] { read_file("/nonexistent/file"); }), ErrorCode::parse_error);
}
