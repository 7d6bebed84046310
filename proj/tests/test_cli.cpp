#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "freearr/cli.hpp"
#include "support.hpp"

using namespace freearr;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// scratch file that cleans up after itself
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("cli_scratch_") + name;
        if (!content.empty()) {
            std::ofstream f(path);
            f << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string slurp() const {
        std::ifstream f(path);
        std::stringstream buf;
        buf << f.rdbuf();
        return buf.str();
    }
};

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("charpoly prints factored and expanded forms") {
    CliRun r = cli({"charpoly", "weyl:A2"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "chi = (t-1)(t-2)\n"));
    CHECK(contains(r.out, "chi expanded = t^2 - 3*t + 2\n"));
    CHECK(contains(r.out, "pi = 2*t^2 + 3*t + 1\n"));
    CHECK(contains(r.out, "mu = 2"));

    SECTION("--quiet drops the mobius table") {
        CliRun q = cli({"--quiet", "charpoly", "weyl:A2"});
        REQUIRE(q.code == 0);
        CHECK_FALSE(contains(q.out, "mobius"));
        CHECK(contains(q.out, "chi = (t-1)(t-2)\n"));
    }

    SECTION("empty arrangement from a file") {
        TempFile f("empty.txt", "dim 3\n");
        CliRun e = cli({"charpoly", f.path});
        REQUIRE(e.code == 0);
        CHECK(contains(e.out, "chi = t^3\n"));
        CHECK(contains(e.out, "pi = 1\n"));
    }

    SECTION("a non-splitting chi is printed expanded only") {
        // four planes in general position, chi = (t-1)(t^2-3t+3)
        TempFile f("generic.txt", "dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
        CliRun g = cli({"charpoly", f.path});
        REQUIRE(g.code == 0);
        CHECK(contains(g.out, "does not split"));
        CHECK_FALSE(contains(g.out, "chi = ("));
    }
}

TEST_CASE("solve reports freeness with a basis") {
    CliRun r = cli({"solve", "cat:A1:k=1"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "FREE exp=(1,3)\n"));
    CHECK(contains(r.out, "theta1 = "));
    CHECK(contains(r.out, "theta2 = "));

    SECTION("--quiet keeps the verdict line only") {
        CliRun q = cli({"--quiet", "solve", "cat:A1:k=1"});
        REQUIRE(q.code == 0);
        CHECK(q.out == "FREE exp=(1,3)\n");
    }

    SECTION("an exhausted degree bound exits 3") {
        CliRun u = cli({"solve", "weyl:A2", "--bound", "0"});
        CHECK(u.code == 3);
        CHECK(contains(u.out, "UNKNOWN"));
    }

    SECTION("a chi obstruction reports NOT FREE with exit 0") {
        TempFile f("generic.txt", "dim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
        CliRun n = cli({"solve", f.path});
        CHECK(n.code == 0);
        CHECK(contains(n.out, "NOT FREE"));
    }
}

TEST_CASE("certify-catalan writes a certificate that replays") {
    TempFile cert("a2.json");
    CliRun r = cli({"certify-catalan", "A2", "--k", "1", "--out", cert.path});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "seed shi:A2:k=1"));
    CHECK(contains(r.out, "stage 2"));
    CHECK(contains(r.out, "exp=(1,4,5)"));

    Certificate parsed = certificate_from_string(cert.slurp());
    REQUIRE(parsed.steps.size() == 2);
    ReplayReport rep =
        replay_certificate(build_lattice(family_arrangement("cat:A2:k=1")), parsed);
    CHECK(rep.accepted);

    SECTION("the replay verb accepts it too") {
        CliRun ok = cli({"replay", "cat:A2:k=1", cert.path});
        CHECK(ok.code == 0);
        CHECK(contains(ok.out, "ACCEPTED"));
    }

    SECTION("tampering turns replay into exit 5") {
        ojson doc = ojson::parse(cert.slurp());
        doc["steps"][1]["after"][2] = 6;
        TempFile bad("a2_tampered.json", doc.dump(2) + "\n");
        CliRun no = cli({"replay", "cat:A2:k=1", bad.path});
        CHECK(no.code == 5);
        CHECK(contains(no.out, "REJECTED"));
    }

    SECTION("the wrong target is rejected") {
        CliRun no = cli({"replay", "shi:A2:k=1", cert.path});
        CHECK(no.code == 5);
        CHECK(contains(no.out, "not isomorphic"));
    }

    SECTION("junk JSON exits 2") {
        TempFile junk("junk.json", "{ not json");
        CliRun j = cli({"replay", "cat:A2:k=1", junk.path});
        CHECK(j.code == 2);
    }

    SECTION("schema violations exit 2") {
        ojson doc = ojson::parse(cert.slurp());
        doc["steps"][0].erase("kind");
        TempFile bad("a2_schema.json", doc.dump(2) + "\n");
        CliRun s = cli({"replay", "cat:A2:k=1", bad.path});
        CHECK(s.code == 2);
    }
}

TEST_CASE("unsupported families exit 4") {
    CHECK(cli({"certify-catalan", "E8", "--k", "1"}).code == 4);
    CHECK(cli({"certify-catalan", "A2", "--k", "0"}).code == 4);
    CHECK(cli({"family", "cat:E8:k=1"}).code == 4);
    CHECK(cli({"charpoly", "weyl:H3"}).code == 4);
}

TEST_CASE("family emits the text format round trip") {
    CliRun r = cli({"family", "shi:B2:k=1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    Arrangement a = parse_arrangement(in);
    CHECK(a == family_arrangement("shi:B2:k=1"));
    std::ostringstream again;
    write_arrangement(again, a);
    CHECK(again.str() == r.out);

    SECTION("--out writes the same bytes to a file") {
        TempFile f("b2.txt");
        CliRun w = cli({"--quiet", "family", "shi:B2:k=1", "--out", f.path});
        REQUIRE(w.code == 0);
        CHECK(w.out.empty());
        CHECK(f.slurp() == r.out);
    }
}

TEST_CASE("malformed inputs exit 2 with a line number") {
    TempFile f("bad.txt", "dim 2\n1 0\nbad line\n");
    CliRun r = cli({"charpoly", f.path});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 3"));

    CHECK(cli({"charpoly", "no_such_file.txt"}).code == 2);
    CHECK(cli({"charpoly", "shi:A2"}).code == 2);           // missing level field
    CHECK(cli({"bogus"}).code == 2);                        // unknown verb
    CHECK(cli({"solve"}).code == 2);                        // missing input
    CHECK(cli({"check", "mat", "weyl:A2", "--exp", "1,2"}).code == 2);  // missing --add
    CHECK(cli({"check", "mat", "weyl:A2", "--exp", "1,x", "--add", "1,1"}).code == 2);
    CHECK(cli({"check", "mat", "weyl:A2", "--exp", "1,2", "--add", "1,1,1"}).code == 2);
}

TEST_CASE("check verbs map verdicts onto exit codes") {
    SECTION("mat2 accepts the Shi to Catalan step") {
        CliRun r = cli({"check", "mat2", "shi:A1:k=1", "--exp", "1,2", "--add", "1,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "ACCEPTED exp=(1,3)\n"));
    }
    SECTION("mat2 rejects a wrong exponent tuple") {
        CliRun r = cli({"check", "mat2", "shi:A1:k=1", "--exp", "1,1", "--add", "1,1"});
        CHECK(r.code == 5);
        CHECK(contains(r.out, "REJECTED (condition 1 failed)"));
    }
    SECTION("mdt undoes the step") {
        CliRun r = cli({"check", "mdt", "cat:A1:k=1", "--exp", "1,3", "--delete", "1,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "ACCEPTED exp=(1,2)\n"));
    }
    SECTION("mat needs the family to meet in the right codimension") {
        CliRun r = cli({"check", "mat", "shi:A1:k=1", "--exp", "1,2", "--add", "1,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "ACCEPTED exp=(1,3)\n"));
    }
    SECTION("mrt counts a flat restriction") {
        TempFile f("bool3.txt", "dim 3\n1 0 0\n0 1 0\n0 0 1\n");
        CliRun ok = cli({"check", "mrt", f.path, "--exp", "1,1,1", "--form", "0,0,1"});
        CHECK(ok.code == 0);
        CHECK(contains(ok.out, "ACCEPTED exp=(1,1)\n"));

        CliRun no = cli({"check", "mrt", f.path, "--exp", "1,1,1", "--form", "1,1,1"});
        CHECK(no.code == 5);
        CHECK(contains(no.out, "not a flat"));
    }
    SECTION("mdt with an explicit subset undoes a staged addition") {
        CliRun r = cli({"check", "mdt", "shiplus:A2:k=1:ideal=a1,a2", "--exp", "1,4,4",
                        "--delete", "1,0,1", "--delete", "0,1,1", "--subset", "0,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "ACCEPTED exp=(1,3,3)\n"));
    }
    SECTION("addition-deletion infers the missing tuple") {
        CliRun r = cli({"check", "addition-deletion", "weyl:A2", "--plane", "1,1", "--full",
                        "1,2", "--deleted", "1,1"});
        CHECK(r.code == 0);
        CHECK(contains(r.out, "ACCEPTED exp=(1)\n"));

        CliRun no = cli({"check", "addition-deletion", "weyl:A2", "--plane", "1,1", "--full",
                         "1,2"});
        CHECK(no.code == 5);
    }
}
