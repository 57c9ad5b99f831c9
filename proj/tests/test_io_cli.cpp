#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "galegap/cli.hpp"
#include "galegap/io.hpp"
#include "support/generators.hpp"

using namespace galegap;

namespace {

const std::string kFixtures = GALEGAP_FIXTURE_DIR;

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::vector<const char*> argv{"galegap"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("instance files round-trip through the loader") {
  const Instance inst = load_instance_file(kFixtures + "/gale.instance");
  CHECK(inst.cost.u == Ratio(0));
  CHECK(inst.cost.beta.eval(BigInt(0)) == Ratio(1));
  CHECK(inst.rhs.b1 == Ratio(1));
  CHECK(inst.rhs.b2 == Ratio(0));

  std::istringstream spaced(
      "u = -1/2\nv=3\n beta.prefix = [1, 0, 7/2] # inline comment\n"
      "beta.tail = (0, 1/3, 0)\nb1 = 10\nb2 = 2\n");
  const Instance p = load_instance(spaced);
  CHECK(p.cost.u == Ratio(-1, 2));
  CHECK(p.cost.beta.prefix_size() == 3);
  CHECK(p.cost.beta.eval(BigInt(2)) == Ratio(7, 2));
  CHECK(p.cost.beta.eval(BigInt(9)) == Ratio(1, 3));
}

TEST_CASE("loader rejects malformed instances with line information") {
  auto load_text = [](const std::string& text) {
    std::istringstream in(text);
    return load_instance(in);
  };
  const std::string base =
      "u = 0\nv = 0\nbeta.prefix = [1]\nbeta.tail = (0,0,0)\nb1 = 1\nb2 = 0\n";

  CHECK_THROWS_AS(load_text("u = 0\nu = 1\n" + base.substr(6)), ParseError);
  CHECK_THROWS_AS(load_text("mystery = 1\n" + base), ParseError);
  CHECK_THROWS_AS(load_text("u = 0\nv = 0\nb1 = 1\nb2 = 0\n"), ParseError);
  CHECK_THROWS_AS(load_text("u 0\n" + base.substr(6)), ParseError);

  try {
    load_text("u = 0\nv = zz\nbeta.prefix = [1]\nbeta.tail = (0,0,0)\nb1 = 1\nb2 = 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  // nonnegativity is a contract, not a parse issue
  std::istringstream neg("u = 0\nv = 0\nbeta.prefix = [-1]\nbeta.tail = (0,0,0)\nb1 = 1\nb2 = 0\n");
  CHECK_THROWS_AS(load_instance(neg), ContractError);
}

TEST_CASE("gap report rendering is fixed-order and exact") {
  const Instance inst = load_instance_file(kFixtures + "/gale.instance");
  const GapReport report = gap_report(inst.cost, inst.rhs);

  const std::string csv = render_gap_report(report, Format::csv);
  CHECK(csv ==
        "phi,psi,gap,gap_defined,beta_bar,u_bar,attainment,witness_y1,witness_y2,"
        "rhs_case,psi_lo,psi_hi\n"
        "1,0,1,true,0,0,attained,0,0,axis,none,none\n");

  const std::string pretty = render_gap_report(report, Format::pretty);
  CHECK(pretty.find("phi") != std::string::npos);
  CHECK(pretty.find("= 1") != std::string::npos);

  const std::string json = render_gap_report(report, Format::json);
  CHECK(json.find("\"phi\": \"1\"") != std::string::npos);
  CHECK(json.find("\"attainment\": \"attained\"") != std::string::npos);

  // every rational printed re-parses to an equal value
  CHECK(XReal::parse("1") == report.phi);
  CHECK(XReal::parse("0") == report.psi);
}

TEST_CASE("cli gap command") {
  const auto r = run({"gap", kFixtures + "/gale.instance", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1,0,1,true") != std::string::npos);
  CHECK(r.err.empty());

  const auto again = run({"gap", kFixtures + "/gale.instance", "--format", "csv"});
  CHECK(again.out == r.out);  // byte-deterministic

  const auto pretty = run({"gap", kFixtures + "/gale_interior.instance"});
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.out.find("rhs_case") != std::string::npos);
  CHECK(pretty.out.find("interior") != std::string::npos);

  const auto na = run({"gap", kFixtures + "/notattained.instance", "--format", "csv"});
  CHECK(na.exit_code == 0);
  CHECK(na.out.find("not-attained") != std::string::npos);
}

TEST_CASE("cli reports parse and contract failures distinctly") {
  CHECK(run({"gap", kFixtures + "/no_such_file.instance"}).exit_code == 2);
  const auto bad = run({"gap", kFixtures + "/bad_token.instance"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(bad.err.find("line 1") != std::string::npos);

  const auto neg = run({"gap", kFixtures + "/negative_beta.instance"});
  CHECK(neg.exit_code == 3);
  CHECK(neg.err.find("contract violation") != std::string::npos);

  CHECK(run({"gap", kFixtures + "/gale.instance", "--no-such-flag"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"gap", kFixtures + "/gale.instance", "--format", "yaml"}).exit_code == 2);
  CHECK(run({"sweep", kFixtures + "/gale.instance", "--ns", "5,3"}).exit_code == 3);
}

TEST_CASE("cli dual-check command") {
  const auto ok = run({"dual-check", kFixtures + "/gale.instance", "--y1", "0", "--y2",
                       "0", "--format", "csv"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("true") != std::string::npos);
  CHECK(ok.out.find("optimal") != std::string::npos);

  const auto infeas = run({"dual-check", kFixtures + "/gale.instance", "--y1", "1/2",
                           "--y2", "-1", "--format", "csv"});
  CHECK(infeas.exit_code == 0);
  CHECK(infeas.out.find("infeasible") != std::string::npos);

  const auto sub = run({"dual-check", kFixtures + "/gale.instance", "--y1", "-1",
                        "--y2", "0", "--format", "csv"});
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("suboptimal") != std::string::npos);
}

TEST_CASE("cli sweep command") {
  const auto r = run({"sweep", kFixtures + "/gale.instance", "--ns", "1,10,100"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "N,primal,dual\n1,1,1\n10,1,1\n100,1,1\n");

  const auto json = run({"sweep", kFixtures + "/gale.instance", "--ns", "1,2",
                         "--format", "json"});
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"primal\": \"1\"") != std::string::npos);
}

TEST_CASE("cli excone and vsw grids") {
  const auto ex = run({"excone", "--grid", "-1:1"});
  CHECK(ex.exit_code == 0);
  CHECK(ex.out.substr(0, 23) == "y1,y2,y3,phi,psi,gap\n-1");
  CHECK(ex.out.find("0,1,0,1,0,1") != std::string::npos);  // the positive-gap point

  const auto vs = run({"vsw", "--grid", "-1:1:1/2"});
  CHECK(vs.exit_code == 0);
  CHECK(vs.out.rfind("eta,y1,y2,in_C0,in_C1,in_Cprime,in_clCprime\n", 0) == 0);
  CHECK(vs.out.find("1,0,0,1,0,1,1") != std::string::npos);  // (1,0,0) in C0 and cl C'

  CHECK(run({"excone", "--grid", "3:1"}).exit_code == 2);
  CHECK(run({"excone", "--grid", "0:1:0"}).exit_code == 2);
}

TEST_CASE("cli selftest passes and reports fixtures") {
  const auto r = run({"selftest"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok - classic gap values") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all fixtures match") != std::string::npos);
}

TEST_CASE("report directory copies") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "galegap_report_test";
  fs::create_directories(dir);
  ::setenv("GALEGAP_REPORT_DIR", dir.c_str(), 1);
  const auto r = run({"gap", kFixtures + "/gale.instance", "--format", "csv"});
  ::unsetenv("GALEGAP_REPORT_DIR");
  CHECK(r.exit_code == 0);
  std::ifstream copy(dir / "gap.csv");
  REQUIRE(copy.good());
  std::stringstream content;
  content << copy.rdbuf();
  CHECK(content.str() == r.out);
  fs::remove_all(dir);
}
