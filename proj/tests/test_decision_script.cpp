#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "lpbsa/assets.hpp"
#include "lpbsa/decision_script.hpp"
#include "lpbsa/rng.hpp"

using namespace lpbsa;

TEST_CASE("bundled script matches the data file") {
  std::ifstream in(LPBSA_DATA_DIR "/case_study.script", std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == assets::case_study_script());
}

TEST_CASE("bundled script parses into the expected record mix") {
  const auto s = DecisionScript::parse(assets::case_study_script());
  std::map<std::string, int> counts;
  for (const auto& r : s.records) ++counts[std::string(script::keyword(r))];
  CHECK(counts["INIT"] == 16);
  CHECK(counts["SUBPOP"] == 2);
  CHECK(counts["PAIR"] == 8);
  CHECK(counts["MUTBIT"] == 32);
  CHECK(counts["ACCEPT"] + counts["REJECT"] == 16);
  CHECK(counts["REJECT"] == 4);
  CHECK(counts["FORCE"] == 7);
}

TEST_CASE("records format in their canonical text") {
  using namespace script;
  CHECK(format_record(Subpop{{"B3", "B8", "B11", "B1", "B5", "B12", "B15", "B6"}}) ==
        "SUBPOP B3 B8 B11 B1 B5 B12 B15 B6");
  CHECK(format_record(Pair{"B13", "K1"}) == "PAIR B13 K1");
  CHECK(format_record(MutBit{"C1", 0, 1}) == "MUTBIT C1 X1 1");
  CHECK(format_record(MutBit{"C1", 1, std::nullopt}) == "MUTBIT C1 X2 -");
  CHECK(format_record(Verdict{"C1", true}) == "ACCEPT C1");
  CHECK(format_record(Verdict{"C7", false}) == "REJECT C7");
  CHECK(format_record(Init{"B1", {4320, 3120}}) == "INIT B1 4320 3120");
  CHECK(format_record(Force{"C8", 0, 1028}) == "FORCE C8 X1 1028");
  CHECK(format_record(Thresh{"C2", 0.25}) == "THRESH C2 0.25");
}

TEST_CASE("parse and serialize round trip bit-exactly") {
  const auto s = DecisionScript::parse(assets::case_study_script());
  const auto text = s.serialize();
  CHECK(DecisionScript::parse(text) == s);
  CHECK(DecisionScript::parse(text).serialize() == text);
}

TEST_CASE("random scripts round trip, including awkward thresholds") {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    DecisionScript s;
    for (int k = 0; k < 20; ++k) {
      const auto id = "C" + std::to_string(1 + rng.below(40));
      switch (rng.below(6)) {
        case 0: s.records.push_back(script::Thresh{id, rng.uniform()}); break;
        case 1: s.records.push_back(script::Verdict{id, rng.below(2) == 0}); break;
        case 2: s.records.push_back(script::MutBit{id, rng.below(3), rng.below(2) ? std::optional<std::size_t>(rng.below(30)) : std::nullopt}); break;
        case 3: s.records.push_back(script::Pair{"B" + std::to_string(rng.below(99)), "K" + std::to_string(1 + rng.below(9))}); break;
        case 4: s.records.push_back(script::Force{id, rng.below(3), rng.integer(0, 1 << 30)}); break;
        default: s.records.push_back(script::Init{"B" + std::to_string(k), {rng.integer(0, 9000), rng.integer(0, 9000)}}); break;
      }
    }
    REQUIRE(DecisionScript::parse(s.serialize()) == s);
  }
}

TEST_CASE("format_double is the shortest exact text") {
  CHECK(format_double(0.6) == "0.6");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform();
    REQUIRE(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      DecisionScript::parse(text);
    } catch (const ScriptParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("# c\n\nPAIR B1 K1\nBOGUS 1\n") == 4);
  CHECK(line_of("MUTBIT C1 Y1 1\n") == 1);
  CHECK(line_of("MUTBIT C1 X1 x\n") == 1);
  CHECK(line_of("PAIR B1\n") == 1);
  CHECK(line_of("SUBPOP\n") == 1);
  CHECK(line_of("INIT B1\n") == 1);
  CHECK(line_of("INIT B1 3 x\n") == 1);
  CHECK(line_of("THRESH C1 1.5\n") == 1);
  CHECK(line_of("ACCEPT C1 C2\n") == 1);
  CHECK(line_of("SUBPOP B1 B2\nPAIR B1 K1\n") == 0);
}

TEST_CASE("cursor reports the first divergent record") {
  const auto s = DecisionScript::parse("SUBPOP B1 B2\nPAIR B1 K1\n");
  ScriptCursor c(s);
  CHECK(c.next_is<script::Subpop>());
  c.take<script::Subpop>("SUBPOP");
  CHECK(c.take_if<script::Verdict>() == nullptr);
  try {
    c.take<script::MutBit>("MUTBIT C1 X1");
    FAIL("expected desync");
  } catch (const ReplayDesync& e) {
    CHECK(e.record_index() == 1);
    CHECK(std::string(e.what()).find("MUTBIT C1 X1") != std::string::npos);
  }
  CHECK_THROWS_AS(c.expect_end(), ReplayDesync);
  c.take<script::Pair>("PAIR");
  CHECK_NOTHROW(c.expect_end());
}
