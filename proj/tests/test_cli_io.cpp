#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>

#include "dlcombi/cli_io.hpp"

using namespace dlcombi;
using cli::json;

namespace {

cli::Config cfg(const std::string &text) { return cli::parse_config(cli::parse_document(text)); }

json result_of(const std::string &cmd, const std::string &sub, const std::string &text) {
  auto c = cfg(text);
  return cli::report(cmd, sub, c, cli::run(cmd, sub, c));
}

ErrorCode code_of(const std::function<void()> &f, std::string *msg = nullptr) {
  try {
    f();
  } catch (const Error &e) {
    if (msg)
      *msg = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InconsistentInput;
}

struct Proc {
  int status;
  std::string out;
};

// Runs the built CLI; skipped when ctest did not provide its path.
Proc run_cli(const std::string &args, const std::string &env = "") {
  const char *bin = std::getenv("DLCOMBI_CLI");
  std::string cmd = env + " " + bin + " " + args + " 2>/dev/null";
  Proc p{-1, {}};
  FILE *f = popen(cmd.c_str(), "r");
  if (!f)
    return p;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
    p.out.append(buf.data(), n);
  int st = pclose(f);
  p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::string configs() {
  const char *c = std::getenv("DLCOMBI_CONFIGS");
  return c ? c : "tools/configs";
}

} // namespace

TEST(ParseConfig, Examples) {
  auto a = cfg(R"({"datum":"GL2","q":3,"ell":2})");
  EXPECT_TRUE(a.has_datum);
  EXPECT_EQ(a.q, 3);
  EXPECT_EQ(*a.ell, 2);
  std::string msg;
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"GL2","q":6,"ell":2})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/q"), std::string::npos);
  auto b = cfg(R"({"datum":"A2sc","q":2,"phi":[2,1]})");
  EXPECT_EQ(b.phi, (std::vector<std::size_t>{1, 0}));
}

TEST(ParseConfig, RejectsUnknownAndMalformed) {
  std::string msg;
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"GL2","q":3,"colour":1})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/colour"), std::string::npos);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"GL2", "q":)"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { cfg(R"([1, 2])"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"Q7","q":3})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/datum"), std::string::npos);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"A2sc","q":2,"seq":[[1],[3]]})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/seq/1/0"), std::string::npos);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"A2sc","q":2,"phi":[1,1]})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"GL2","q":3,"mu":[1]})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/mu"), std::string::npos);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":"GL2","q":3,"ell":4})"); }, &msg),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { cfg(R"({"q":"three"})"); }, &msg), ErrorCode::ValidationError);
}

TEST(ParseConfig, ExplicitDatum) {
  auto a = cfg(R"({"datum":{"simple_roots":[[2]],"simple_coroots":[[1]]},"q":3})");
  EXPECT_EQ(a.datum.cartan(), (IntMatrix{{2}}));
  EXPECT_EQ(code_of([] {
              cfg(R"({"datum":{"simple_roots":[[2,0],[0,2]],"simple_coroots":[[1,-1],[0,1]]}})");
            }),
            ErrorCode::InvalidCartan);
  EXPECT_EQ(code_of([] { cfg(R"({"datum":{"simple_roots":[[2]]}})"); }),
            ErrorCode::ValidationError);
}

TEST(Run, SeriesEnumerateGL2) {
  auto r = result_of("series", "enumerate", R"({"datum":"GL2","q":3})");
  EXPECT_EQ(r["result"]["count"], 6);
  EXPECT_EQ(r["result"]["labels"].size(), 6u);
  EXPECT_EQ(r["command"], "series enumerate");
}

TEST(Run, DlDefectA1) {
  auto r = result_of("dl", "defect", R"({"datum":"A1sc","q":5,"seq":[[1],[1]],"j":2})");
  EXPECT_EQ(r["result"]["d_j"], 1);
  std::string msg;
  EXPECT_EQ(code_of([] { result_of("dl", "defect", R"({"datum":"A1sc","q":5,"seq":[[1],[1]]})"); },
                    &msg),
            ErrorCode::ValidationError);
  EXPECT_NE(msg.find("/j"), std::string::npos);
  EXPECT_EQ(code_of([] {
              result_of("dl", "defect", R"({"datum":"A1sc","q":5,"seq":[[1],[1]],"j":3})");
            }),
            ErrorCode::IndexOutOfRange);
}

TEST(Run, OracleVerifySL2) {
  auto c = cfg(R"({"group":"SL2","q":3})");
  auto o = cli::run("oracle", "verify", c);
  EXPECT_FALSE(o.verification_failed);
  EXPECT_EQ(o.result["status"], "pass");
  EXPECT_EQ(o.result["core"], 4);
  EXPECT_EQ(o.result["oracle"], 4);
}

TEST(Run, OtherCommands) {
  auto d = result_of("datum", "", R"({"datum":"B2","q":3})");
  EXPECT_EQ(d["result"]["weyl_order"], 8);
  auto t = result_of("torus", "", R"({"datum":"GL2","q":3,"w":[1]})");
  EXPECT_EQ(t["result"]["order"], 8);
  auto f = result_of("fold", "", R"({"datum":"A3sc","q":2,"auto":[3,2,1]})");
  EXPECT_EQ(f["result"]["folded"]["type"], "C2");
  EXPECT_EQ(f["result"]["folded"]["coroots"].size(), 8u);
  auto j = result_of("jordan", "", R"({"datum":"SL2","q":5,"mu":[2],"ell":3})");
  EXPECT_EQ(j["result"]["component_group"]["order"], 2);
  EXPECT_EQ(j["result"]["hypotheses_hold"], true);
  auto p = result_of("dl", "predicate-p", R"({"datum":"SL2","q":5,"seq":[[1],[1]],"j":2,"mu":[0]})");
  EXPECT_EQ(p["result"]["P"], false);
  auto tr = result_of("dl", "transitivity", R"({"datum":"A2sc","q":2,"seq":[[],[],[]],"j":3})");
  EXPECT_EQ(tr["result"]["length_conditions"], json({true, true, true, true}));
  EXPECT_EQ(tr["result"]["product_conditions"], json({true, true, true, true}));
  auto cc = result_of("dl", "condition-c",
                      R"({"datum":"A2sc","q":2,"twist":[1],"psi1":[],"psi2":[],"mu":[0,0],"w":[1]})");
  EXPECT_EQ(cc["result"]["holds"], true);
  EXPECT_EQ(code_of([] { result_of("series", "list", R"({"datum":"GL2","q":3})"); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { result_of("bake", "", R"({"datum":"GL2","q":3})"); }),
            ErrorCode::ValidationError);
}

TEST(Report, DeterministicWithHashAndVersion) {
  const std::string text = R"({"datum":"A2sc","q":2,"phi":[2,1]})";
  auto a = result_of("series", "enumerate", text).dump(2);
  auto b = result_of("series", "enumerate", text).dump(2);
  EXPECT_EQ(a, b);
  auto r = json::parse(a);
  EXPECT_EQ(r["version"], cli::kVersion);
  EXPECT_EQ(r["config_hash"].get<std::string>().size(), 16u);
  // key order in the input does not matter, the values do
  auto c = result_of("series", "enumerate", R"({"phi":[2,1],"q":2,"datum":"A2sc"})");
  EXPECT_EQ(c["config_hash"], r["config_hash"]);
  auto d = result_of("series", "enumerate", R"({"datum":"A2sc","q":4,"phi":[2,1]})");
  EXPECT_NE(d["config_hash"], r["config_hash"]);
}

TEST(Report, Fnv1aReferenceValues) {
  EXPECT_EQ(cli::fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(cli::fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(cli::fnv1a64("foobar"), 0x85944171f73967e8ull);
}

TEST(Overrides, ValueConversion) {
  EXPECT_EQ(cli::override_value("q", "3"), json(3));
  EXPECT_EQ(cli::override_value("mu", "1,2"), json({1, 2}));
  EXPECT_EQ(cli::override_value("mu", "2"), json({2}));
  EXPECT_EQ(cli::override_value("datum", "GL2"), json("GL2"));
  EXPECT_EQ(cli::override_value("seq", "[[1],[1]]"), json::parse("[[1],[1]]"));
  EXPECT_EQ(cli::override_value("w", "[]"), json::array());
}

TEST(Binary, ExitCodesAndOutput) {
  if (!std::getenv("DLCOMBI_CLI"))
    GTEST_SKIP() << "DLCOMBI_CLI not set";
  const std::string c = configs();
  auto ok = run_cli("series enumerate --config " + c + "/gl2_q3.json");
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(json::parse(ok.out)["result"]["count"], 6);
  auto bad = run_cli("datum --config " + c + "/gl2_q3.json --q 6");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("/q"), std::string::npos);
  EXPECT_EQ(run_cli("datum --config /nonexistent.json").status, 2);
  EXPECT_EQ(run_cli("datum --datum A1sc --q 2 --colour 1").status, 2);
  auto module_err = run_cli("fold --datum A1sc --q 2 --torus-part '[\"1/3\"]'");
  EXPECT_EQ(module_err.status, 3);
  EXPECT_NE(module_err.out.find("IncompatibleFrobenius"), std::string::npos);
  auto o = run_cli("oracle verify --group SL2 --q 3");
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(json::parse(o.out)["result"]["status"], "pass");
}

TEST(Binary, ByteIdenticalAcrossRunsAndThreads) {
  if (!std::getenv("DLCOMBI_CLI"))
    GTEST_SKIP() << "DLCOMBI_CLI not set";
  const std::string args = "series enumerate --config " + configs() + "/a2_flip_q2.json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  auto c = run_cli(args + " --threads 4", "DLCOMBI_THREADS=2");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  // the thread count is part of the config, so only the result is compared
  EXPECT_EQ(json::parse(a.out)["result"], json::parse(c.out)["result"]);
}
