#include <doctest.h>

#include "qclose/config.hpp"

using namespace qclose;

TEST_CASE("parse a full config") {
  const char* text = R"(# experiment 7
lambda = 0:45, 2:55, 4:45
  mu1=1
mu2 = 0.2
beta = 2
p = 0.5
n = 50
x1_0 = 40
x2_0 = 0

horizon = 20
)";
  const ModelSpec spec = parse_model_spec(text);
  CHECK(spec.lambda(3.0) == 55);
  CHECK(spec.lambda(5.0) == 45);
  CHECK(spec.mu2(0) == 0.2);
  CHECK(spec.n(10) == 50);
  CHECK(spec.x0.x1 == 40);
  CHECK(spec.horizon == 20);
}

TEST_CASE("defaults for optional keys") {
  const ModelSpec spec = parse_model_spec("lambda=1\nmu1=1\nn=3\nhorizon=5\n");
  CHECK(spec.beta(0) == 0);
  CHECK(spec.mu2(0) == 0);
  CHECK(spec.x0.x2 == 0);
}

TEST_CASE("errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_model_spec(text, "cfg");
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("lambda = 1\nmu1 = abc\n") == 2);
  CHECK(line_of("lambda = 1\n\nbogus = 3\n") == 3);
  CHECK(line_of("lambda = 0:1, 2\n") == 1);
  CHECK(line_of("lambda = 1, 2:3\n") == 1);
  CHECK(line_of("lambda = 1:1, 2:3\n") == 1);  // must start at 0
  CHECK(line_of("lambda = 1\nlambda = 2\n") == 2);
  CHECK(line_of("lambda 1\n") == 1);
  CHECK(line_of("lambda = 1\nmu1 = 1\nn = 2.5\nhorizon = 1\n") > 0);

  try {
    parse_model_spec("x = 1\n", "model.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("model.cfg:1:", 0) == 0);
  }
}

TEST_CASE("missing file") { CHECK_THROWS_AS(load_model_spec("/nonexistent/missing.cfg"), std::runtime_error); }

TEST_CASE("format and parse agree") {
  ModelSpec spec;
  spec.lambda = TimeProfile({0, 1.5, 3}, {0.1, 1.0 / 3.0, 7});
  spec.mu1 = TimeProfile(1.25);
  spec.mu2 = TimeProfile(0.2);
  spec.beta = TimeProfile(2);
  spec.p = TimeProfile(0.7);
  spec.n = TimeProfile({0, 2}, {10, 12});
  spec.x0 = {8, 3};
  spec.horizon = 4.5;
  const ModelSpec back = parse_model_spec(format_model_spec(spec));
  CHECK(format_model_spec(back) == format_model_spec(spec));
  CHECK(back.lambda(2.0) == 1.0 / 3.0);
}
