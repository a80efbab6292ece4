#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <regex>
#include <vector>

#include "oracle.hpp"
#include "rnafold/bounds.hpp"
#include "rnafold/enumerate.hpp"
#include "rnafold/render.hpp"

using namespace rnafold;

namespace {

// Tag-balance check: every element opens and closes in order, attributes are quoted.
bool well_formed_xml(const std::string& doc) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  bool root_seen = false;
  while ((pos = doc.find('<', pos)) != std::string::npos) {
    const std::size_t end = doc.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = doc.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" /"));
    if (stack.empty()) {
      if (root_seen) return false;
      root_seen = true;
    }
    if (!self_closing) stack.push_back(name);
  }
  return root_seen && stack.empty();
}

std::size_t count_of(const std::string& s, char c) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), c));
}

}  // namespace

TEST(Ascii, F4HasTwoRowsAndThreeBonds) {
  const std::string pic = render_ascii(make_Sn(4), make_Fn(4));
  EXPECT_EQ(pic, "C-C-C-C\n: : : |\nG-G-G-G\n");
  EXPECT_EQ(count_of(pic, ':'), 3u);
}

TEST(Ascii, SingleNode) {
  EXPECT_EQ(render_ascii(parse_chain("A"), straight_folding(1)), "A\n");
}

TEST(Ascii, BondMarksEqualWitnessSize) {
  std::mt19937_64 rng(4);
  const auto walks = all_foldings(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Chain c = parse_chain(oracle::random_string(rng, "AUGC", 9));
    const Folding& f = walks[rng() % walks.size()];
    const std::string pic = render_ascii(c, f);
    EXPECT_EQ(count_of(pic, ':') + count_of(pic, '.'), score(c, f).size);
    EXPECT_EQ(count_of(pic, '-') + count_of(pic, '|'), 8u);
  }
}

TEST(Svg, WellFormedWithLegendGlyphs) {
  const Chain c = parse_chain("GCAUX");
  const Folding f = folding_from_moves("RULL");
  const std::string svg = render_svg(c, f);
  EXPECT_TRUE(well_formed_xml(svg));
  const std::regex circle("<circle");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), circle),
                          std::sregex_iterator()),
            4);
  EXPECT_NE(svg.find("fill=\"black\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("<path"), std::string::npos);
}

TEST(Svg, BondLinesEqualWitnessSize) {
  const std::string svg = render(make_Sn(6), make_Fn(6), {RenderFormat::Svg});
  EXPECT_TRUE(well_formed_xml(svg));
  const auto bonds = svg.substr(svg.find("class=\"bonds\""));
  const auto group = bonds.substr(0, bonds.find("</g>"));
  std::size_t lines = 0;
  for (std::size_t p = 0; (p = group.find("<line", p)) != std::string::npos; ++p) ++lines;
  EXPECT_EQ(lines, 5u);
}

TEST(Svg, CheckerRejectsBrokenDocuments) {
  EXPECT_FALSE(well_formed_xml("<svg><g></svg>"));
  EXPECT_FALSE(well_formed_xml("<svg a=\"1></svg>"));
  EXPECT_TRUE(well_formed_xml("<svg><g/></svg>"));
}
