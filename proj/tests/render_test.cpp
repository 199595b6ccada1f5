#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "diagmon/chip_literal.hpp"
#include "diagmon/render.hpp"

using namespace diagmon;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("ascii identity chip is straight lines") {
  const std::string out = render_ascii(identity_chip(2));
  const auto lines = lines_of(out);
  REQUIRE(lines.size() == 3);  // two wire rows plus the annotation
  CHECK(lines[0].find("─") != std::string::npos);
  CHECK(lines[1] == lines[0]);
  CHECK(lines[2] == "circles: 0");
  CHECK(count_substr(out, "o") == 0);
}

TEST_CASE("ascii circle chip annotates its circle") {
  const std::string out = render_ascii(circle(3));
  const auto lines = lines_of(out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[3].rfind("circles: 1", 0) == 0);
  CHECK(count_substr(out, "o") == 1);
}

TEST_CASE("ascii hook has arcs on both sides") {
  const std::string out = render_ascii(hook(3, 1));
  const auto lines = lines_of(out);
  REQUIRE(lines.size() == 4);
  CHECK(out.find("┐") != std::string::npos);
  CHECK(out.find("┘") != std::string::npos);
  CHECK(out.find("┌") != std::string::npos);
  CHECK(out.find("└") != std::string::npos);
}

TEST_CASE("ascii render of the degree-9 example chip") {
  const Chip fig = parse_chip("W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3");
  const std::string out = render_ascii(fig);
  const auto lines = lines_of(out);
  REQUIRE(lines.size() == 10);  // 9 pin rows plus the annotation
  CHECK(lines[9].rfind("circles: 3", 0) == 0);
  CHECK(count_substr(out, "o") == 3);
}

TEST_CASE("svg render carries pins, wires and circles") {
  const Chip fig = parse_chip("W9:1-5',2-4,3-5,6-9',7-9,8-8',1'-2',3'-4',6'-7';3");
  const std::string svg = render_svg(fig);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_substr(svg, "<circle") == 3);
  CHECK(count_substr(svg, "<path") == 9);
  CHECK(count_substr(svg, "<line") == 18);  // one tick per pin
  CHECK(count_substr(svg, "<rect") == 1);

  const std::string id_svg = render_svg(identity_chip(2));
  CHECK(count_substr(id_svg, "<circle") == 0);
  CHECK(count_substr(id_svg, "<path") == 2);
}
