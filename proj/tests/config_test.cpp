#include <doctest.h>

#include <string>

#include "rcsim/config.hpp"
#include "rcsim/errors.hpp"

using rcsim::RunConfig;

namespace {

const char* kMinimal = R"({
  "rumorGraph": {"model": "named", "index": 1},
  "truthGraph": {"model": "named", "index": 1},
  "beta1": 0.7, "beta2": 0.1, "delta": 0.1,
  "horizon": 35, "budget": 10, "c1": 8, "c2": 3
})";

}  // namespace

TEST_CASE("minimal config parses with explicit defaults in the echo") {
    const RunConfig cfg = rcsim::parse_config(kMinimal);
    CHECK(cfg.beta1 == 0.7);
    CHECK(cfg.gridPoints == 101);
    CHECK(cfg.dt == 0.0);  // unresolved in the struct

    const std::string echo = rcsim::config_json(cfg);
    // every solver default resolved and visible
    CHECK(echo.find("\"dt\":0.01") != std::string::npos);
    CHECK(echo.find("\"gridPoints\":101") != std::string::npos);
    CHECK(echo.find("\"refineTol\":1.2499999999999999e-06") != std::string::npos);
    CHECK(echo.find("\"seed\":1") != std::string::npos);
    CHECK(echo.find("\"threads\":") != std::string::npos);
    CHECK(echo.find("\"init\":0.1") != std::string::npos);
}

TEST_CASE("round trip: parse, serialize, parse") {
    const RunConfig cfg = rcsim::parse_config(kMinimal);
    const std::string echo = rcsim::config_json(cfg);
    const RunConfig again = rcsim::parse_config(echo);
    CHECK(rcsim::config_json(again) == echo);

    const rcsim::RCInstance a = rcsim::build_instance(cfg);
    const rcsim::RCInstance b = rcsim::build_instance(again);
    CHECK(a.gR == b.gR);
    CHECK(a.gT == b.gT);
    CHECK(a.beta1 == b.beta1);
    CHECK(a.horizon == b.horizon);
    CHECK(a.init.R == b.init.R);
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS(rcsim::parse_config(R"({"bogus": 1})"), rcsim::ParseError);
    CHECK_THROWS_AS(rcsim::parse_config(
                        R"({"rumorGraph": {"model":"named","index":1,"oops":2},
                            "truthGraph": {"model":"named","index":1},
                            "beta1":0.1,"beta2":0.1,"delta":0.1,
                            "horizon":1,"budget":1,"c1":1,"c2":1})"),
                    rcsim::ParseError);
    CHECK_THROWS_AS(rcsim::parse_config(
                        R"({"rumorGraph": {"model":"named","index":1},
                            "truthGraph": {"model":"named","index":1},
                            "beta1":0.1,"beta2":0.1,"delta":0.1,
                            "horizon":1,"budget":1,"c1":1,"c2":1,
                            "init": {"R":[0.1],"T":[0.1],"U":[0.8]}})"),
                    rcsim::ParseError);
}

TEST_CASE("config errors carry the source name") {
    CHECK_THROWS_WITH_AS(rcsim::parse_config("{ not json", "bad.json"),
                         doctest::Contains("bad.json"), rcsim::ParseError);
    CHECK_THROWS_AS(rcsim::parse_config(R"({"rumorGraph": {"model":"warp"}})"),
                    rcsim::ParseError);
    CHECK_THROWS_AS(rcsim::load_config("/nonexistent/config.json"), rcsim::ParseError);
}

TEST_CASE("vector initial state") {
    const std::string text = R"({
      "rumorGraph": {"model": "named", "index": 1},
      "truthGraph": {"model": "named", "index": 1},
      "beta1": 0.1, "beta2": 0.1, "delta": 0.1,
      "horizon": 5, "budget": 2, "c1": 1, "c2": 1,
      "init": {"R": [0.2, 0.3], "T": [0.1, 0.0]}
    })";
    const RunConfig cfg = rcsim::parse_config(text);
    const rcsim::RCInstance inst = rcsim::build_instance(cfg);
    CHECK(inst.init.R == std::vector<double>{0.2, 0.3});
    CHECK(inst.init.T == std::vector<double>{0.1, 0.0});

    const RunConfig again = rcsim::parse_config(rcsim::config_json(cfg));
    CHECK(again.initR == cfg.initR);
    CHECK(again.initT == cfg.initT);
}

TEST_CASE("graph specs build the right networks") {
    const std::string text = R"({
      "rumorGraph": {"model": "ws", "n": 50, "k": 4, "p": 0.1, "seed": 7},
      "truthGraph": {"model": "ba", "n": 50, "m": 2},
      "beta1": 0.1, "beta2": 0.1, "delta": 0.1,
      "horizon": 5, "budget": 2, "c1": 1, "c2": 1,
      "seed": 9
    })";
    const RunConfig cfg = rcsim::parse_config(text);
    const rcsim::RCInstance inst = rcsim::build_instance(cfg);
    CHECK(inst.gR == rcsim::watts_strogatz(50, 4, 0.1, 7));
    // truth graph inherits the config-level seed
    CHECK(inst.gT == rcsim::barabasi_albert(50, 2, 9));

    const std::string echo = rcsim::config_json(cfg);
    CHECK(echo.find("\"seed\":7") != std::string::npos);  // explicit ws seed
    CHECK(echo.find("\"seed\":9") != std::string::npos);  // inherited ba seed
}

TEST_CASE("solve settings mapping") {
    RunConfig cfg = rcsim::parse_config(kMinimal);
    cfg.gridPoints = 51;
    cfg.dt = 0.02;
    cfg.refineTol = 1e-5;
    cfg.threads = 3;
    const rcsim::SolveSettings s = rcsim::solve_settings(cfg);
    CHECK(s.gridPoints == 51);
    CHECK(s.dt == 0.02);
    CHECK(s.refineTol == 1e-5);
    CHECK(s.threads == 3);
}

TEST_CASE("output metadata") {
    const RunConfig cfg = rcsim::parse_config(kMinimal);
    const auto lines = rcsim::run_metadata_lines(cfg);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("rcsim") != std::string::npos);
    CHECK(lines[1].find("\"horizon\":35") != std::string::npos);

    rcsim::StrategyResult res;
    res.best = {0.5, 2.0};
    res.eTotal = 1.0;
    const std::string j = rcsim::result_json_with_meta(res, cfg);
    CHECK(j.find("\"meta\"") != std::string::npos);
    CHECK(j.find("\"version\"") != std::string::npos);
    CHECK(j.find("\"config\"") != std::string::npos);
    CHECK(j == rcsim::result_json_with_meta(res, cfg));  // deterministic
}
