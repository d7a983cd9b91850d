#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "relcirc/cli.hpp"

using relcirc::cli::run;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/relcirc_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct Outcome {
    int code;
    std::string text;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream os;
    int code = run(args, os);
    return {code, os.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("eq on the series-resistor law") {
    TempFile a("a.ckt", "R(2) ; R(3)");
    TempFile b("b.ckt", "R(5)");
    Outcome out = invoke({"eq", a.path, b.path});
    CHECK(out.code == 0);
    CHECK(out.text == "equal\n");

    TempFile c("c.ckt", "R(4)");
    Outcome neq = invoke({"eq", a.path, c.path});
    CHECK(neq.code == 1);
    CHECK(neq.text == "not equal\n");
}

TEST_CASE("leq reflects the ordered structure") {
    TempFile z("z.ckt", "zero");
    TempFile cd("cd.ckt", "codiscard");
    CHECK(invoke({"leq", z.path, cd.path}).code == 0);
    CHECK(invoke({"leq", cd.path, z.path}).code == 1);
}

TEST_CASE("denote prints the relation") {
    TempFile a("d.ckt", "V(5) ; R(2)");
    Outcome human = invoke({"denote", a.path});
    CHECK(human.code == 0);
    CHECK(human.text.find("dom_width: 2") != std::string::npos);
    Outcome json = invoke({"--json", "denote", a.path});
    CHECK(json.code == 0);
    CHECK(json.text ==
          "{\"dom_width\":2,\"cod_width\":2,\"empty\":false,"
          "\"offset\":[\"0\",\"0\",\"5\",\"0\"],"
          "\"basis\":[[\"1\",\"0\",\"1\",\"0\"],[\"0\",\"1\",\"2\",\"1\"]]}\n");
}

TEST_CASE("thevenin json output") {
    TempFile a("t.ckt", "V(10) ; R(5)");
    Outcome out = invoke({"--json", "thevenin", a.path});
    CHECK(out.code == 0);
    CHECK(out.text == "{\"case\":\"series_vr\",\"V0\":\"10\",\"R\":\"5\"}\n");

    // precondition violation: an inductor is not allowed
    TempFile bad("t2.ckt", "V(10) ; L(5)");
    Outcome violation = invoke({"thevenin", bad.path});
    CHECK(violation.code == 3);
}

TEST_CASE("measure the worked netlist example") {
    TempFile net("loop.net", "V b 1 0 10\nR r 1 2 5\nAM a 0 2\n");
    Outcome out = invoke({"--json", "measure", net.path});
    CHECK(out.code == 0);
    CHECK(out.text.find("\"classification\":\"unique_point\",\"values\":[\"2\"]") !=
          std::string::npos);
}

TEST_CASE("check subcommand verdicts") {
    TempFile net("chk.net", "V b 1 0 10\nR r 1 2 5\nAM a 0 2\n");
    Outcome indep = invoke({"check", net.path, "--independent-measurement"});
    CHECK(indep.code == 0);

    TempFile strict("strict.net", "V b 1 0 0\nAM a1 1 2\nAM a2 2 1\n");
    Outcome s = invoke({"check", strict.path, "--independent-measurement"});
    CHECK(s.code == 1);
    CHECK(s.text.find("strict inclusion") != std::string::npos);

    TempFile rloop("inv.ckt", "V(3) ; R(2)");
    CHECK(invoke({"check", rloop.path, "--invariants"}).code == 0);
}

TEST_CASE("netlist compilation output") {
    TempFile net("c.net", "PORT p 1 0\nR r 1 0 4\n");
    Outcome term = invoke({"netlist", net.path, "--to-term"});
    CHECK(term.code == 0);
    Outcome direct = invoke({"--json", "netlist", net.path, "--denote"});
    TempFile r4("r4.ckt", "R(4)");
    Outcome expect = invoke({"--json", "denote", r4.path});
    CHECK(direct.text == expect.text);
}

TEST_CASE("axioms suite via the cli") {
    Outcome out = invoke({"axioms"});
    CHECK(out.code == 0);
    CHECK(out.text.find("FAIL") == std::string::npos);
    CHECK(out.text.find("pass  affine (dup): one;copy") != std::string::npos);
}

TEST_CASE("error exit codes") {
    TempFile bad("bad.ckt", "R(2) ;; R(3)");
    CHECK(invoke({"denote", bad.path}).code == 2);

    TempFile sort_bad("sort.ckt", "copy ; R(1)");
    CHECK(invoke({"denote", sort_bad.path}).code == 2);

    CHECK(invoke({"denote", "/nonexistent/file.ckt"}).code == 2);

    TempFile meas("m.ckt", "R(1)");
    CHECK(invoke({"measure", meas.path}).code == 3);
}

TEST_CASE("global flags may precede or follow the subcommand") {
    TempFile net("flags.net", "V b 1 0 10\nR r 1 2 5\nAM a 0 2\n");
    Outcome lead = invoke({"--json", "measure", net.path});
    Outcome trail = invoke({"measure", net.path, "--json"});
    CHECK(lead.code == 0);
    CHECK(lead.text == trail.text);
}

TEST_CASE("byte-identical output across invocations") {
    TempFile net("det.net", "V b 1 0 10\nR r 1 2 5\nAM a 0 2\n");
    Outcome first = invoke({"--json", "measure", net.path});
    Outcome second = invoke({"--json", "measure", net.path});
    CHECK(first.text == second.text);
    CHECK(first.code == second.code);
}

} // TEST_SUITE
