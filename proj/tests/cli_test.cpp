// Copyright 2026 The statdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using statdisc::cli::run;
using Json = nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

double result_value(const Json& doc, const std::string& name) {
  for (const auto& row : doc.at("results")) {
    if (row.at("name") == name) return row.at("value").get<double>();
  }
  ADD_FAILURE() << "missing result " << name;
  return -1.0;
}

}  // namespace

TEST(Fractions, SmallDenominators) {
  EXPECT_EQ(statdisc::cli::nearest_fraction(0.625), "5/8");
  EXPECT_EQ(statdisc::cli::nearest_fraction(0.90625), "29/32");
  EXPECT_EQ(statdisc::cli::nearest_fraction(1.0), "1/1");
  EXPECT_EQ(statdisc::cli::nearest_fraction(1.0 / 3.0), "1/3");
  EXPECT_FALSE(statdisc::cli::nearest_fraction(0.1234567));
  EXPECT_FALSE(statdisc::cli::nearest_fraction(1.0 / 127.0));
}

TEST(Reproduce, AllRowsMatchAndSchemaHolds) {
  const Invocation r = invoke({"reproduce"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("schema_version"), "1");
  EXPECT_EQ(doc.at("experiment"), "reproduce");
  EXPECT_EQ(doc.at("config").at("seed"), 42);
  for (const auto& row : doc.at("results")) {
    ASSERT_TRUE(row.contains("paper_value")) << row.dump();
    EXPECT_LE(row.at("abs_error").get<double>(), 1e-10) << row.dump();
    EXPECT_GE(row.at("value").get<double>(), 0.0);
    EXPECT_LE(row.at("value").get<double>(), 1.0);
  }
  EXPECT_DOUBLE_EQ(result_value(doc, "P_H(rho2,sigma2)"), 0.75);
  EXPECT_NEAR(result_value(doc, "P_BS(rho3,tau3,fermion)"), 0.75, 1e-10);
  EXPECT_DOUBLE_EQ(result_value(doc, "P_H(rhoN,tauN) N=5"), 0.90625);
}

TEST(Reproduce, ByteIdenticalAcrossRuns) {
  const Invocation a = invoke({"reproduce", "--seed", "7"});
  const Invocation b = invoke({"reproduce", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
  const Invocation c = invoke({"classical", "--n", "5", "--monte-carlo", "20000", "--seed", "9"});
  const Invocation d = invoke({"classical", "--n", "5", "--monte-carlo", "20000", "--seed", "9"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, d.out);
}

TEST(Commands, ReferenceValues) {
  EXPECT_DOUBLE_EQ(result_value(Json::parse(invoke({"detect", "--lambda", "0.5"}).out), "success_probability"), 0.625);

  const Json purified = Json::parse(invoke({"purify", "--r", "0", "--theta", "1.2", "--phi", "3"}).out);
  EXPECT_DOUBLE_EQ(result_value(purified, "success_probability"), 0.75);
  EXPECT_DOUBLE_EQ(result_value(purified, "r_out"), 0.0);

  const Json classical = Json::parse(invoke({"classical", "--n", "4", "--classical-interpretation", "standard"}).out);
  EXPECT_DOUBLE_EQ(result_value(classical, "P_classical"), 0.84375);

  const Json disc = Json::parse(invoke({"discriminate", "--pair", "rho-tau", "--n", "3"}).out);
  EXPECT_NEAR(result_value(disc, "p_bs"), 0.75, 1e-14);
  EXPECT_EQ(disc.at("config").at("statistics"), "fermion");
}

TEST(Commands, OtherFormats) {
  const Invocation csv = invoke({"detect", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("name,value,fraction,paper_value,abs_error\r\n", 0), 0U);
  EXPECT_NE(csv.out.find("success_probability,0.625,5/8,,\r\n"), std::string::npos);

  const Invocation reproduce_csv = invoke({"reproduce", "--format", "csv"});
  EXPECT_NE(reproduce_csv.out.find("\"P_H(rho2,sigma2)\",0.75,3/4,0.75,0\r\n"), std::string::npos);

  const Invocation table = invoke({"scan", "--n", "3", "--format", "table"});
  ASSERT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("p_bs(N=3,fermion)"), std::string::npos);
}

TEST(ExitCodes, UsageAndCapacity) {
  EXPECT_EQ(invoke({}).code, 64);
  EXPECT_EQ(invoke({"bogus"}).code, 64);
  EXPECT_EQ(invoke({"detect", "--lambda", "0.9"}).code, 64);
  EXPECT_EQ(invoke({"discriminate", "--statistics", "anyon"}).code, 64);
  EXPECT_EQ(invoke({"discriminate", "--pair", "rho-sigma", "--n", "3"}).code, 64);
  EXPECT_EQ(invoke({"purify", "--r", "1.5"}).code, 64);
  EXPECT_EQ(invoke({"scan", "--n", "5", "--format", "xml"}).code, 64);

  const Invocation big = invoke({"classical", "--n", "9"});
  EXPECT_EQ(big.code, 65);
  EXPECT_NE(big.err.find("--monte-carlo"), std::string::npos);
  EXPECT_EQ(invoke({"scan", "--n", "9"}).code, 65);
  EXPECT_EQ(invoke({"discriminate", "--pair", "rho-tau", "--n", "9"}).code, 65);
  EXPECT_EQ(invoke({"classical", "--n", "9", "--monte-carlo", "1000"}).code, 0);
}

TEST(ExitCodes, HelpSucceeds) {
  const Invocation help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("reproduce"), std::string::npos);
}
