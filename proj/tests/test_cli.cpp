#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = superrsk::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTop = "1 1 2 2 3 3 4 4";
const std::string kBottom = "3 2 1 2 4 3 1 2";
const std::string kEvens = "1:1,2:0,3:1,4:0";
const std::string kOdds = "1:0,2:1,3:0,4:1";

}  // namespace

TEST(Cli, RskSecondExample) {
  auto r = call({"rsk", "-a", kEvens, "-b", kOdds, kTop, kBottom});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "T:\n1 1 2\n2 3\n2 4\n3\nQ:\n1 2 3\n1 3\n2 4\n4\n");
}

TEST(Cli, RskEmpty) {
  auto r = call({"rsk"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "T:\nQ:\n");
}

TEST(Cli, RskJsonAndInverse) {
  auto r = call({"rsk", "--json", "-a", kEvens, "-b", kOdds, kTop, kBottom});
  ASSERT_EQ(r.code, 0);
  auto j = superrsk::json::parse(r.out);
  EXPECT_EQ(j["recording"]["rows"][0], superrsk::json({"1", "2", "3"}));

  auto inv = call({"rsk-inverse", "-a", kEvens, "-b", kOdds, "1 1 2/2 3/2 4/3", "1 2 3/1 3/2 4/4"});
  EXPECT_EQ(inv.code, 0) << inv.err;
  EXPECT_EQ(inv.out, kTop + "\n" + kBottom + "\n");

  auto dual = call({"rsk-dual", "-a", kEvens, "-b", kOdds, kTop, kBottom});
  EXPECT_EQ(dual.out, call({"rsk", "-a", kEvens, "-b", kOdds, kTop, kBottom}).out);
}

TEST(Cli, JsonInput) {
  std::string doc = R"({"top_alphabet":")" + kEvens + R"(","bottom_alphabet":")" + kOdds +
                    R"(","top":["1","1","2","2","3","3","4","4"],"bottom":["3","2","1","2","4","3","1","2"]})";
  auto r = call({"rsk", "--input-json", doc});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, call({"rsk", "-a", kEvens, "-b", kOdds, kTop, kBottom}).out);
  auto s = call({"rsk", "--input-json", "-"}, doc);
  EXPECT_EQ(s.out, r.out);
}

TEST(Cli, ExitCodes) {
  // positional and JSON input together
  EXPECT_EQ(call({"rsk", "--input-json", "{}", "1", "1"}).code, 2);
  EXPECT_EQ(call({"rsk", "--input-json", "{not json"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nope"}).code, 2);
  EXPECT_EQ(call({"lr", "--method", "magic"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
  // unsorted array is a domain error
  auto bad = call({"rsk", "1 -1", "1 1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("column 2"), std::string::npos);
  EXPECT_EQ(call({"evacuate", "1 -1"}).code, 1);
  EXPECT_EQ(call({"rsk-inverse", "-1 -1", "-1/-1"}).code, 1);
}

TEST(Cli, InsertAndRectify) {
  auto a = "1:1,2:0,3:1,4:0";
  auto r = call({"insert", "-a", a, "-", "4 2 1 1 4 3 2 3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 2 3\n1 3\n2 4\n4\n");
  auto l = call({"insert", "--left", "-a", a, "-", "4 2 1 1 4 3 2 3"});
  EXPECT_EQ(l.out, r.out);
  auto t = call({"rectify", "--trace", "-a", a, ". . . 1 2 3/. . 1 3/. ./. 4/2/4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.substr(0, 24), "(4,1) below below -> (6,");
  EXPECT_NE(t.out.find("1 2 3\n1 3\n2 4\n4\n"), std::string::npos);
}

TEST(Cli, EvacuateAndSkewProduct) {
  auto e = call({"evacuate", "--json", "-1 -1/1"});
  ASSERT_EQ(e.code, 0) << e.err;
  auto j = superrsk::json::parse(e.out);
  EXPECT_EQ(j["tableau"]["outer"], superrsk::json({2, 1}));
  auto p = call({"skew-product", "-a", "1:1,2:0,3:1,4:0", ". 1/2", "3 4/4"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_FALSE(p.out.empty());
}

TEST(Cli, MatrixBall) {
  auto r = call({"matrix-ball", "-a", "1:0", "1 1", "1 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "        1\n1 1@0,2@0\nT:\n1 1\nQ:\n1 1\n");
}

TEST(Cli, LittlewoodRichardson) {
  auto r = call({"lr", "-a", "std:2,2", "--lambda", "3,3,1", "--mu", "4,2,1", "--nu", "5,4,3,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("skew: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("yamanouchi: 3\n"), std::string::npos);
  auto w = call({"lr", "--json", "--witnesses", "--method", "yamanouchi", "-a", "std:2,2", "--lambda", "3,3,1", "--mu",
                 "4,2,1", "--nu", "5,4,3,2"});
  auto j = superrsk::json::parse(w.out);
  EXPECT_EQ(j["results"][0]["skew_tableaux"].size(), 3u);
  auto all = call({"lr", "-a", "std:2,2", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"});
  EXPECT_EQ(all.out, "product: 2\nskew: 2\nyamanouchi: 2\n");
  EXPECT_EQ(call({"lr", "--lambda", "1"}).code, 2);
}

TEST(Cli, SchurYamanouchiVerify) {
  auto s = call({"schur-expand", "-a", "std:1,1", "2,1/1"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out, "1 S(2)\n1 S(1,1)\nfillings: 4\n");
  EXPECT_EQ(call({"yamanouchi", "-a", "std:2,2", "1 2 -2 -1 -1 -2 -2"}).out, "true\n");
  EXPECT_EQ(call({"yamanouchi", "-a", "std:2,2", "-1 1 -2 2 -1 -2 -2"}).out, "false\n");
  auto v = call({"verify", "-a", "std:1,1", "--lambda", "2,1", "--mu", "1"});
  EXPECT_EQ(v.code, 0) << v.out;
  auto rnd = call({"verify", "-a", "std:1,2", "--count", "200", "--seed", "5"});
  EXPECT_EQ(rnd.code, 0);
  EXPECT_EQ(rnd.out, "checked 200 random biwords (seed 5): 0 failures\n");
}

TEST(Cli, Rs) {
  auto r = call({"rs", "-a", "1:0,2:1,3:0,4:0,5:1,6:1", "2 4 2 1 4 5 6 3 5 6 4 3 1 5 4 1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "T:\n1 1 1 4 4\n2 3 3 5\n2 4 4\n5 6\n5 6\nQ:\n1 2 5 6 7\n3 8 9 10\n4 11 14\n12 15\n13 16\n");
}
