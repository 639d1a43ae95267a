#include "pcw/matrix_io.hpp"

#include <cctype>
#include <sstream>

#include "doctest.h"
#include "pcw/report.hpp"
#include "test_util.hpp"

using namespace pcw;

namespace {

ParityCheckMatrix parse(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_text(in);
}

std::string message_of(const std::string& text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("matrix parsing accepts the documented format") {
  const auto H = parse("3 1 3\n1 1 1\n");
  CHECK(H.n == 3);
  CHECK(H.m == 1);
  CHECK(H.q == 3);
  CHECK(H.entries == std::vector<Symbol>{1, 1, 1});
}

TEST_CASE("matrix parsing tolerates comments and loose whitespace") {
  const auto H = parse(
      "# single ternary check\n"
      "  3 1 3   # header\n"
      "\n"
      " 1\t1  1 # entries\n");
  CHECK(H.entries == std::vector<Symbol>{1, 1, 1});

  // entries may wrap across lines
  const auto H2 = parse("2 2 2\n1 0\n0\n1\n");
  CHECK(H2.entries == std::vector<Symbol>{1, 0, 0, 1});
}

TEST_CASE("matrix parsing errors carry line numbers") {
  CHECK(message_of("3 1\n").find("header") != std::string::npos);
  CHECK(message_of("3 1 4\n1 1 5\n").find("line 2") != std::string::npos);
  CHECK(message_of("3 1 4\n1 1 5\n").find("[0, 4)") != std::string::npos);
  CHECK(message_of("2 2 2\n1 1\n").find("found only 2") != std::string::npos);
  CHECK(message_of("2 1 2\n1 1\n1 0\n").find("trailing") != std::string::npos);
  CHECK(message_of("2 1 2\n1 x\n").find("not an integer") != std::string::npos);
  CHECK(message_of("2 1 1\n0 0\n").find("q must be >= 2") != std::string::npos);
}

TEST_CASE("matrix text round-trips") {
  const auto H = testutil::k4_cycle_code(5);
  const auto back = parse(matrix_to_text(H));
  CHECK(back.n == H.n);
  CHECK(back.m == H.m);
  CHECK(back.q == H.q);
  CHECK(back.entries == H.entries);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/matrix.txt"), InputError);
}

TEST_CASE("report serialization round-trips byte for byte") {
  Report doc;
  doc["alpha"] = report_number(6.0);
  doc["beta"] = {{"n", 3}, {"values", {1.5, 0.25, -2.0e-7}}};
  doc["gamma"] = Report::array({"text", true, nullptr, 42});
  doc["delta"] = report_number(std::numeric_limits<double>::infinity());
  doc["empty_list"] = Report::array();
  doc["empty_map"] = Report::object();

  const std::string text = serialize_report(doc);
  const Report parsed = parse_report(text);
  CHECK(serialize_report(parsed) == text);
  CHECK(parsed["alpha"].get<double>() == 6.0);
  CHECK(parsed["delta"].get<std::string>() == "infinite");
}

TEST_CASE("report doubles carry at least 12 significant digits") {
  Report doc;
  doc["x"] = 6.0;
  doc["y"] = 0.1234567890123456789;
  doc["z"] = -3.5e-11;
  const std::string text = serialize_report(doc);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string value = line.substr(colon + 1);
    if (!value.empty() && value.back() == ',') value.pop_back();
    std::size_t digits = 0;
    for (const char ch : value) {
      if (ch == 'e') break;
      if (std::isdigit(static_cast<unsigned char>(ch))) ++digits;
    }
    CHECK(digits >= 12);
  }
}

TEST_CASE("report parsing rejects malformed text") {
  CHECK_THROWS_AS(parse_report("{\"a\": }"), InputError);
}
