#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mvlab/cli.hpp"

using namespace mvlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tensor of chains") {
  Run r = run({"tensor", "chain(2)", "chain(3)"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["result"] == "chain(6)");
}

TEST_CASE("is-domain exit codes and witness") {
  Run bad = run({"is-domain", "pmv(prod(boolean, boolean))"});
  CHECK(bad.code == 1);
  Json j = bad.json();
  CHECK(j["verdict"] == "fail");
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["x"] == Json::array({"1", "0"}));
  CHECK(j["witness"]["y"] == Json::array({"0", "1"}));

  Run good = run({"is-domain", "pmv(localized(6))"});
  CHECK(good.code == 0);
  CHECK(good.json()["verdict"] == "pass");
  CHECK(run({"is-pmv-plus", "pmv(prod(boolean, boolean))"}).code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
  Run unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());
  CHECK(run({}).code == 2);

  Run syntax = run({"check-axioms", "chain(6"});
  CHECK(syntax.code == 2);
  Json s = syntax.json();
  CHECK(s["verdict"] == "error");
  CHECK(s["error"] == "syntax");
  CHECK(s["position"] == 7);

  Run elab = run({"is-domain", "pmv(chain(2))"});
  CHECK(elab.code == 2);
  CHECK(elab.json()["error"] == "elaboration");
  CHECK(elab.json()["message"].get<std::string>().find("1/4") != std::string::npos);

  CHECK(run({"radical", "interval_q"}).code == 2);
  CHECK(run({"--order", "0", "check-axioms", "chain(2)"}).code == 2);
}

TEST_CASE("help exits with 0") {
  Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("adjoint-check") != std::string::npos);
}

TEST_CASE("check-axioms on the three kinds of input") {
  Run a = run({"check-axioms", "interval_q"});
  CHECK(a.code == 0);
  Json j = a.json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["exhaustive"] == false);
  CHECK(j["laws"].size() > 0);
  CHECK(j["counterexamples"].empty());

  Run c = run({"check-axioms", "chain(6)"});
  CHECK(c.code == 0);
  CHECK(c.json()["exhaustive"] == true);

  CHECK(run({"check-axioms", "pmv(localized(2))"}).code == 0);
  CHECK(run({"check-axioms", "module(scalars=pmv(localized(2)), group=localized(2), unit=2)"}).code == 0);
}

TEST_CASE("module-check accepts the zero-divisor control") {
  Run r = run({"module-check", "module(scalars=pmv(prod(boolean, boolean)), carrier=prod(boolean, boolean))"});
  CHECK(r.code == 0);
  Run d = run({"module-check", "module(scalars=pmv(localized(2)), group=localized(2), unit=1)"});
  CHECK(d.code == 0);
}

TEST_CASE("radical, embed-unit, lift and lift-hom") {
  Run r = run({"radical", "prod(chain(2), chain(3))"});
  CHECK(r.code == 0);
  Run e = run({"embed-unit", "module(scalars=pmv(localized(2)), group=localized(2), unit=2)"});
  CHECK(e.code == 0);
  Run l = run({"lift", "chain(2)"});
  CHECK(l.code == 0);
  CHECK(l.out.find("interval_q") != std::string::npos);
  Run h = run({"lift-hom", "hom(source=chain(2), target=prod(chain(2), chain(2)))"});
  CHECK(h.code == 0);
  Run bad = run({"embed-unit", "module(scalars=pmv(prod(boolean, boolean)), carrier=prod(boolean, boolean))"});
  CHECK(bad.code == 2);
  CHECK(bad.json()["error"] == "hypothesis-not-met");
}

TEST_CASE("witness-nonequivalence") {
  Run r = run({"witness-nonequivalence"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not_isomorphic") != std::string::npos);
  CHECK(r.out.find("interval_q") != std::string::npos);
}

TEST_CASE("adjoint-check on a family file") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "mvlab_test_family.json";
  {
    std::ofstream f(path);
    f << R"json({"instances": [
      {"label": "inc", "module": "chain(2)", "space": [1], "routing": [0], "scalars": ["1"]},
      {"label": "bad", "module": "chain(2)", "space": [1], "routing": [0], "scalars": ["1/2"]}
    ], "homs": ["hom(source=chain(2), target=chain(4))"]})json";
  }
  Run r = run({"adjoint-check", "--family", path.string()});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["verdict"] == "pass");
  Run missing = run({"adjoint-check", "--family", (fs::temp_directory_path() / "mvlab_no_such_family.json").string()});
  CHECK(missing.code == 2);
  fs::remove(path);
}

TEST_CASE("rationals are serialized in lowest terms") {
  CHECK(to_json(Rational(3, 6)) == "1/2");
  CHECK(to_json(Rational(-4, 2)) == "-2");
  CHECK(to_json(MvElement{Rational(2, 4)}) == "1/2");
  CHECK(to_json(MvElement{Rational(1), Rational(0)}) == Json::array({"1", "0"}));
}

TEST_CASE("seed comes from the flag or the environment") {
  Run flag = run({"--seed", "17", "check-axioms", "interval_q"});
  CHECK(flag.json()["seed"] == 17);
  ::setenv("MVLAB_SEED", "23", 1);
  Run env = run({"check-axioms", "interval_q"});
  ::unsetenv("MVLAB_SEED");
  CHECK(env.json()["seed"] == 23);
  CHECK(run({"check-axioms", "interval_q"}).json()["seed"] == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check-axioms", "interval_q"}, {"tensor", "chain(4)", "gamma(localized(2), 1)"},
        {"is-domain", "pmv(prod(boolean, boolean))"}, {"witness-nonequivalence"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("one-line summary without JSON") {
  Run r = run({"--no-json", "tensor", "chain(2)", "chain(3)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("pass tensor", 0) == 0);
}
