#include <catch2/catch_amalgamated.hpp>

#include <blockcount/cli.hpp>

#include <sstream>

using blockcount::cli::run;

namespace
{

struct Invocation
{
    int code;
    std::string out, err;
};

Invocation invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("verlinde subcommand")
{
    auto r = invoke({"verlinde", "D4", "--level", "1", "--genus", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "16\n");
    auto both = invoke({"verlinde", "D4", "--level", "1", "--genus", "2",
                        "--method", "both"});
    CHECK(both.code == 0);
    CHECK(both.out == "16\n");
    auto pts = invoke({"verlinde", "A1", "--level", "1", "--genus", "0",
                       "--insertions", "1;1"});
    CHECK(pts.code == 0);
    CHECK(pts.out == "1\n");
}

TEST_CASE("conformal-check subcommand")
{
    auto r = invoke({"conformal-check", "ad", "A2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("true with witness 4 = 4") != std::string::npos);
    auto neg = invoke({"conformal-check", "ad-sl", "A2"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("false") != std::string::npos);
}

TEST_CASE("alcove subcommand")
{
    auto r = invoke({"alcove", "A1", "--level", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 weights") != std::string::npos);
    CHECK(r.out.find("[0]") != std::string::npos);
    CHECK(r.out.find("[1]") != std::string::npos);
    CHECK(r.out.find("[2]") != std::string::npos);
}

TEST_CASE("json output shape")
{
    auto r = invoke({"--json", "index", "sl3", "--weight", "1,0"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "1");
    CHECK(doc["query"]["subcommand"] == "index");
    CHECK(doc["query"]["algebra"] == "A2");
    CHECK(doc["result"] == "1/2");
    CHECK(doc["exact"] == true);
    CHECK(doc["provenance"].is_string());

    auto c = invoke({"--json", "charge", "A1", "--level", "1"});
    auto cdoc = nlohmann::json::parse(c.out);
    CHECK(cdoc["result"] == "1");
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"alcove", "H3", "--level", "1"}).code == 2);
    CHECK(invoke({"index", "A2", "--weight", "1"}).code == 2);
    CHECK(invoke({"fuse", "A1", "--level", "1", "--left", "2", "--right", "0"}).code == 3);
    CHECK(invoke({"character", "A1", "--level", "1", "--weight", "1",
                  "--method", "nonsense"}).code == 2);
    CHECK(invoke({"nosuchcommand"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("deterministic output")
{
    std::vector<std::string> args = {"--json", "character", "A2", "--level", "1",
                                     "--weight", "1,0", "--depth", "2"};
    auto a = invoke(args);
    auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["result"].size() == 3);
    CHECK(doc["result"][0]["dim"] == "3");
}

TEST_CASE("center and theta subcommands")
{
    auto r = invoke({"center", "D4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("|Z| = 4") != std::string::npos);
    auto t = invoke({"--json", "theta", "--genus", "3"});
    auto doc = nlohmann::json::parse(t.out);
    CHECK(doc["result"]["even"] == "36");
    CHECK(doc["result"]["odd"] == "28");
}
