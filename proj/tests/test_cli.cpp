#include "commands.hpp"
#include "helpers.hpp"
#include "weight_syntax.hpp"

#include "doctest.h"

using namespace affcone;
using namespace affcone::cli;
using testutil::affine;

TEST_CASE("weight grammar")
{
    const auto d = affine("A1~");
    const AffineWeight l0 = d->fundamental_weight(0), l1 = d->fundamental_weight(1), del = d->delta();
    CHECK(parse_weight(*d, "L0") == l0);
    CHECK(parse_weight(*d, "2*L0 + L1 - 3*delta") == l0 * 2 + l1 - del * 3);
    CHECK(parse_weight(*d, " 1/2*L0+1/2 * L1 -d ") == (l0 + l1) * Rational(1, 2) - del);
    CHECK(parse_weight(*d, "-L1 + L1 + L0") == l0);
    CHECK(parse_weight(*d, "0") == d->zero_weight());
    CHECK(parse_weight(*d, "4/2*delta") == del * 2);

    for (const char* bad : {"", "L2", "3", "2 L0", "L0 L1", "1/0*L0", "Lx", "L0 +", "delta2", "*L0", "2**L0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_weight(*d, bad), std::invalid_argument);
    }

    for (const char* text : {"L0", "2*L0 + L1 - 3*delta", "-1/2*L1", "0", "L0 + delta"}) {
        CAPTURE(text);
        CHECK(format_weight(*d, parse_weight(*d, text)) == text);
    }

    const auto c2 = affine("C2~");
    CHECK(parse_weight(*c2, "L2").level == c2->comarks()[2]);
}

namespace {

RunConfig config(const char* command)
{
    RunConfig c;
    c.command = command;
    return c;
}

}  // namespace

TEST_CASE("inequalities command")
{
    RunConfig c = config("inequalities");
    c.max_len = 4;
    const auto out = run_command(c);
    CHECK(out.exit_code == kOk);
    CHECK(out.doc["config"]["max_len"] == 4);
    CHECK(out.doc["count"] == 18);
    const auto& first = out.doc["inequalities"][0];
    CHECK(first["node"] == 0);
    CHECK(first["v"]["word"].empty());
    CHECK(run_command(c).doc.dump() == out.doc.dump());

    c.max_len = 0;
    CHECK(run_command(c).doc["count"] == 2);
    c.max_len = -2;
    CHECK(run_command(c).exit_code == kInvalidInput);
    c.max_len = -1;
    const auto dflt = run_command(c);
    CHECK(dflt.doc["config"]["max_len"] == "default");
    CHECK(dflt.doc["max_len_used"] == 8);
    c.max_len = 2;
    c.type = "Z9~";
    CHECK(run_command(c).exit_code == kInvalidInput);
}

TEST_CASE("member command")
{
    RunConfig c = config("member");
    c.lambda1 = "L0";
    c.lambda2 = "L0";
    c.mu = "2*L0";
    auto out = run_command(c);
    REQUIRE(out.exit_code == kOk);
    CHECK(out.doc["max_len_used"] == 19);
    CHECK(out.doc["results"][0]["verdict"] == "boundary");
    CHECK(out.doc["results"][0]["tight"][0]["v"]["word"].empty());

    c.mu = "2*L0 + delta";
    out = run_command(c);
    CHECK(out.doc["results"][0]["verdict"] == "not_member");

    c.lambda1.clear();
    c.lambda2.clear();
    c.mu.clear();
    c.triples = {"L0 ; L0 ; 2*L0 - delta", "L0 ; L1 ; L0 + L1"};
    c.jobs = 2;
    out = run_command(c);
    CHECK(out.doc["results"][0]["verdict"] == "member");
    CHECK(out.doc["results"][1]["verdict"] == "boundary");

    c.triples = {"0 ; L0 ; L0"};
    out = run_command(c);
    CHECK(out.exit_code == kInvalidInput);
    CHECK(out.doc["error"]["message"].get<std::string>().find("positive levels") != std::string::npos);

    c.triples = {"L0 ; L0 ; 2*L0"};
    c.type = "A2~";
    out = run_command(c);
    CHECK(out.exit_code == kUndecided);
    CHECK(out.doc["error"]["message"].get<std::string>().find("automatic limit") != std::string::npos);
    c.max_len = 3;
    out = run_command(c);
    CHECK(out.exit_code == kUndecided);
    CHECK(out.doc["error"]["message"].get<std::string>().find("table too small: need max_len >= ") == 0);
}

TEST_CASE("multiplicity, b0 and saturate commands")
{
    RunConfig c = config("multiplicity");
    c.lambda1 = "L0";
    c.lambda2 = "L0";
    c.mu = "2*L0";
    auto out = run_command(c);
    CHECK(out.exit_code == kOk);
    CHECK(out.doc["multiplicity"]["value"] == "1");
    CHECK(out.doc["config"]["depth"] == 6);

    c.mu = "2*L0 - 9*delta";
    c.depth = 2;
    out = run_command(c);
    CHECK(out.exit_code == kUndecided);
    CHECK(out.doc["multiplicity"]["value"] == "undecided");

    c = config("b0");
    c.lambda1 = "L0";
    c.lambda2 = "L1";
    c.mu = "L0 + L1";
    out = run_command(c);
    CHECK(out.exit_code == kOk);
    CHECK(out.doc["result"]["b0"] == 0);
    CHECK(out.doc["result"]["shape"] == "interval");

    c = config("saturate");
    c.lambda1 = "L0";
    c.lambda2 = "L0";
    c.mu = "2*L0";
    out = run_command(c);
    CHECK(out.exit_code == kOk);
    CHECK(out.doc["result"]["confirmed"] == true);
    CHECK(out.doc["result"]["mu"]["text"] == "4*L0");
    c.mode = "delta-shift";
    out = run_command(c);
    CHECK(out.doc["result"]["mu"]["text"] == "2*L0 - 2*delta");
    c.mode = "sideways";
    CHECK(run_command(c).exit_code == kInvalidInput);
}

TEST_CASE("structure-constants and selfcheck commands")
{
    RunConfig c = config("structure-constants");
    c.max_len = 3;
    c.node = 0;
    auto out = run_command(c);
    CHECK(out.exit_code == kOk);
    bool found_two = false;
    for (const auto& p : out.doc["products"])
        if (p["u1"].size() == 1 && p["u2"].size() == 1) {
            CHECK(p["n"] == "2");
            CHECK(p["deformed"] == "0");
            found_two = true;
        }
    CHECK(found_two);

    c = config("selfcheck");
    c.jobs = 2;
    out = run_command(c);
    CHECK(out.exit_code == kOk);
    CHECK(out.doc["passed"] == true);

    CHECK(run_command(config("nonsense")).exit_code == kInvalidInput);
}
