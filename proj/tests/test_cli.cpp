#include "support.h"

#include <catoms/cli.h>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <sstream>

using namespace catoms;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string program(const std::string& name) { return std::string(CATOMS_PROGRAMS_DIR) + "/" + name; }

} // namespace

TEST_CASE("answersets") {
    auto r = run({"answersets", program("p3.cat"), "--mode", "both"});
    CHECK(r.code == 0);
    CHECK(r.out == "reduct:\n{p}\n{q}\ncomplement:\n{p}\n{q}\n");
    r = run({"answersets", program("p6.cat"), "--mode", "both"});
    CHECK(r.out == "reduct:\n{a,b,c}\ncomplement:\n(none)\n");
    r = run({"answersets", program("p9.cat"), "--mode", "reduct"});
    CHECK(r.out == "{a}\n{b,c}\n{a,b,c}\n");
}

TEST_CASE("check") {
    auto r = run({"check", program("p9.cat"), "--model", "a,c", "--mode", "reduct"});
    CHECK(r.code == 0);
    CHECK(r.out == "reject\n");
    r = run({"check", program("p6.cat"), "--model", "a,b,c"});
    CHECK(r.out == "reduct: accept\ncomplement: reject\n");
    r = run({"check", program("p6.cat"), "--model", "a,z"});
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown atom 'z'") != std::string::npos);
}

TEST_CASE("parse and models") {
    auto r = run({"parse", "-"}, "q :- count{p(a)} >= 1.\np(a).");
    CHECK(r.code == 0);
    CHECK(r.out == "q :- p(a).\np(a).\n");
    r = run({"parse", "-"}, "a :- .");
    CHECK(r.code == 1);
    CHECK(r.err.rfind("-:1:6: error:", 0) == 0);
    r = run({"parse", "-"}, "({a},{{b}}).");
    CHECK(r.code == 1);
    r = run({"models", program("p3.cat")});
    CHECK(r.out == "{p}\n{q}\n{p,q}\n");
    r = run({"models", program("p3.cat"), "--minimal"});
    CHECK(r.out == "{p}\n{q}\n");
    r = run({"models", "-"}, ":- .");
    CHECK(r.code == 1);
    r = run({"models", "-"}, "bot.");
    CHECK(r.out == "(none)\n");
}

TEST_CASE("wellsupported") {
    auto r = run({"wellsupported", program("p6.cat"), "--model", "a,b,c", "--kind", "weak"});
    CHECK(r.out == "well-supported\na=2\nb=3\nc=1\n");
    r = run({"wellsupported", program("p6.cat"), "--model", "a,b,c", "--kind", "strong"});
    CHECK(r.out == "not well-supported\n");
    r = run({"wellsupported", program("p8.cat"), "--model", "a"});
    CHECK(r.code == 2);
}

TEST_CASE("unfold") {
    auto r = run({"unfold", program("p3.cat")});
    CHECK(r.out == "p :- not q.\nq :- not p.\n");
    r = run({"unfold", program("p5.cat")});
    CHECK(r.out == "a.\nc :- not a, not b.\nc :- a, not b.\nc :- b, not a.\n");
    r = run({"unfold", program("p6.cat"), "--solve"});
    CHECK(r.out == "(none)\n");
    r = run({"unfold", program("p6.cat"), "--solve", "--mode", "reduct"});
    CHECK(r.out == "{a,b,c}\n");
    r = run({"unfold", program("p6.cat"), "--mode", "reduct"});
    CHECK(r.code == 1);
    r = run({"unfold", program("p6.cat"), "--mode", "reduct", "--model", "a,b,c"});
    CHECK(r.out == "a :- c.\nb :- a.\nc.\n");
    r = run({"unfold", program("p9.cat"), "--model", "a,b,c"});
    CHECK(r.out == "a.\nb.\nc :- b.\n");
}

TEST_CASE("altsem") {
    auto r = run({"altsem", program("p4.cat"), "--semantics", "mr"});
    CHECK(r.out == "{c}\n{a,c}\n");
    r = run({"altsem", program("p3.cat"), "--semantics", "mt"});
    CHECK(r.code == 2);
    r = run({"altsem", program("p3.cat"), "--semantics", "mt", "--exhaustive", "--model", "p"});
    CHECK(r.out == "reject\n");
    r = run({"altsem", program("ex21.cat"), "--semantics", "flp"});
    CHECK(r.out == "{p(-1),p(1)}\n");
    r = run({"altsem", program("p8.cat"), "--semantics", "flp"});
    CHECK(r.code == 2);
    r = run({"altsem", program("p8.cat"), "--semantics", "bogus"});
    CHECK(r.code == 1);
}

TEST_CASE("compare") {
    auto r = run({"compare", program("p4.cat")});
    CHECK(r.out ==
          "flp:\n{c}\nmr:\n{c}\n{a,c}\nmt: unsupported (program is not monotone)\nours-complement:\n{c}\n"
          "ours-reduct:\n{c}\nfindings:\n(none)\n");
}

TEST_CASE("json envelope") {
    auto r = run({"--json", "answersets", program("p3.cat")});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "answersets");
    CHECK(j["results"]["reduct"] == nlohmann::json::parse(R"([["p"],["q"]])"));
    CHECK(j["limits"]["candidate_budget"] == 1 << 20);
    CHECK(j["program_hash"].get<std::string>().size() == 16);
    auto again = run({"answersets", program("p3.cat"), "--json"});
    CHECK(again.out == r.out);
}

TEST_CASE("caps and usage errors") {
    CHECK(run({"answersets", program("p1.cat"), "--cap", "4"}).code == 3);
    CHECK(run({"answersets", program("p1.cat"), "--cap", "16"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"answersets"}).code == 1);
    CHECK(run({"answersets", program("missing.cat")}).code == 1);
    CHECK(run({"answersets", program("p1.cat"), "--mode", "sideways"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fuzz output is reproducible") {
    std::vector<std::string> args{"fuzz", "--atoms", "5", "--rules", "6", "--count", "40", "--seed", "11", "--naf"};
    auto one = run(args);
    CHECK(one.code == 0);
    CHECK(one.out == "programs 40, findings 0\n");
    auto json_args = args;
    json_args.push_back("--json");
    auto a = run(json_args);
    json_args.insert(json_args.end(), {"--jobs", "4"});
    auto b = run(json_args);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["results"]["records"].size() == 40);
    CHECK(j["results"]["records"][0]["seed"] == 11);

    std::string path = "catoms_cli_test_corpus.jsonl";
    std::remove(path.c_str());
    args.insert(args.end(), {"--corpus", path});
    run(args);
    run(args);
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        CHECK(nlohmann::json::parse(line).contains("verdicts"));
        ++lines;
    }
    CHECK(lines == 80);
    std::remove(path.c_str());
}
