#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "expokit/cli.hpp"
#include "expokit/io.hpp"

using namespace expokit;

namespace {

std::string fixture(const std::string& name, const std::string& text) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path);
  out << text;
  return path;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

const char* kSplit = R"({
  "doctrine": "top",
  "objects": {
    "A": {
      "doctrine": "top",
      "base": {"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]},
      "total": {"elements": ["0","2"], "leq": [["0","2"]]},
      "fibers": ["0","2"]
    }
  }
})";

const char* kFull = R"({
  "doctrine": "top",
  "objects": {
    "A": {
      "doctrine": "top",
      "base": {"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]},
      "total": {"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]},
      "fibers": ["0","1","2"]
    }
  }
})";

const char* kExpPair = R"({
  "doctrine": "pos",
  "objects": {
    "Y": {
      "doctrine": "pos",
      "base": {"elements": ["0","1"], "leq": [["0","1"]]},
      "total": {"elements": ["a","b"], "leq": [["a","b"]]},
      "fibers": ["0","1"]
    },
    "Z": {
      "doctrine": "pos",
      "base": {"elements": ["0","1"], "leq": [["0","1"]]},
      "total": {"elements": ["u","v"], "leq": [["u","v"]]},
      "fibers": ["0","0"]
    }
  }
})";

const char* kCatPair = R"({
  "doctrine": "cat",
  "objects": {
    "Y": {
      "doctrine": "cat",
      "base": {"elements": ["*"], "leq": []},
      "total": {"elements": ["a","b"], "leq": [["a","b"]]},
      "fibers": ["*","*"]
    },
    "Z": {
      "doctrine": "cat",
      "base": {"elements": ["*"], "leq": []},
      "total": {"elements": ["u","v"], "leq": [["u","v"]]},
      "fibers": ["*","*"]
    }
  }
})";

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  auto split = fixture("expokit_split.json", kSplit);
  auto full = fixture("expokit_full.json", kFull);
  std::string out;
  CHECK(run({"check", "--doctrine", "top", "--input", split, "--what", "exp"},
            &out) == 1);
  CHECK(out.find("NotPseudo(0,1,2)") != std::string::npos);
  CHECK(run({"check", "--doctrine", "top", "--input", full, "--what", "exp"}) ==
        0);
  CHECK(run({"check", "--doctrine", "top", "--input", split, "--what",
             "pseudo"}) == 1);
  CHECK(run({"check", "--doctrine", "top", "--input", full, "--what",
             "pseudo"}) == 0);
  // finite collapse: double continuity always holds
  CHECK(run({"check", "--doctrine", "top", "--input", split, "--what", "dc"}) ==
        0);
  // --json emits a parsable report
  CHECK(run({"check", "--doctrine", "top", "--input", split, "--what", "exp",
             "--json"},
            &out) == 1);
  auto j = Json::parse(out);
  CHECK(j["holds"] == false);
}

TEST_CASE("giraud-conduche through the cli") {
  auto split = fixture("expokit_split_cat.json", kSplit);
  // same instance read as a poset-shaped functor
  std::string text = kSplit;
  auto pos = text.find("top");
  while (pos != std::string::npos) {
    text.replace(pos, 3, "cat");
    pos = text.find("top", pos);
  }
  auto cat = fixture("expokit_cat.json", text);
  CHECK(run({"check", "--doctrine", "cat", "--input", cat, "--what", "gc"}) ==
        1);
  auto full = fixture("expokit_full_cat.json",
                      [] {
                        std::string t = kFull;
                        auto p = t.find("top");
                        while (p != std::string::npos) {
                          t.replace(p, 3, "cat");
                          p = t.find("top", p);
                        }
                        return t;
                      }());
  CHECK(run({"check", "--doctrine", "cat", "--input", full, "--what", "gc"}) ==
        0);
}

TEST_CASE("decompose then glue round trip") {
  auto split = fixture("expokit_rt.json", kSplit);
  std::string lax;
  CHECK(run({"decompose", "--doctrine", "top", "--input", split}, &lax) == 0);
  auto laxfile = fixture("expokit_rt_lax.json", lax);
  std::string glued;
  CHECK(run({"glue", "--doctrine", "top", "--input", laxfile}, &glued) == 0);
  auto q = parse_over(Json::parse(glued));
  auto orig = parse_over(Json::parse(kSplit)["objects"]["A"]);
  CHECK(q.same_over(orig));
}

TEST_CASE("exponentials through the cli") {
  auto pair = fixture("expokit_exp.json", kExpPair);
  std::string out;
  CHECK(run({"exp", "--doctrine", "pos", "--input", pair, "--cap", "2"},
            &out) == 0);
  auto j = Json::parse(out);
  CHECK(j["oracle"]["verdict"] == true);
  // Cat over the point: 2-chain into 2-chain is the 3-object functor
  // category
  auto cat = fixture("expokit_exp_cat.json", kCatPair);
  CHECK(run({"exp", "--doctrine", "cat", "--input", cat, "--cap", "3"},
            &out) == 0);
  auto jc = Json::parse(out);
  CHECK(jc["exponential"]["dom"]["objects"].size() == 3);
  CHECK(jc["oracle"]["verdict"] == true);
  // non-exponentiable exponent
  std::string text = R"({
    "objects": {
      "Y": {
        "doctrine": "top",
        "base": {"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]},
        "total": {"elements": ["0","2"], "leq": [["0","2"]]},
        "fibers": ["0","2"]
      },
      "Z": {
        "doctrine": "top",
        "base": {"elements": ["0","1","2"], "leq": [["0","1"],["1","2"]]},
        "total": {"elements": ["p"], "leq": []},
        "fibers": ["0"]
      }
    }
  })";
  auto bad = fixture("expokit_exp_bad.json", text);
  std::string err;
  CHECK(run({"exp", "--doctrine", "top", "--input", bad}, &out, &err) == 1);
  CHECK(err.find("NotExponentiable") != std::string::npos);
}

TEST_CASE("oracle subcommands and the exit-code contract") {
  auto split = fixture("expokit_oracle_split.json", kSplit);
  auto full = fixture("expokit_oracle_full.json", kFull);
  CHECK(run({"oracle", "--doctrine", "top", "--input", full, "--what",
             "pushout", "--cap", "3"}) == 0);
  CHECK(run({"oracle", "--doctrine", "top", "--input", split, "--what",
             "pushout", "--cap", "3"}) == 1);
  int qcode = run({"oracle", "--doctrine", "top", "--input", split, "--what",
                   "quotient", "--cap", "4"});
  CHECK((qcode == 1 || qcode == 3));
  CHECK(qcode != 0);
  CHECK(run({"oracle", "--doctrine", "top", "--input", split, "--what",
             "quotient", "--cap", "0"}) == 3);
  auto pair = fixture("expokit_oracle_adj.json", kExpPair);
  CHECK(run({"oracle", "--doctrine", "pos", "--input", pair, "--what",
             "adjunction", "--cap", "2"}) == 0);
}

TEST_CASE("invalid input exits 2") {
  std::string err;
  CHECK(run({"check", "--doctrine", "top", "--input", "/nonexistent.json"},
            nullptr, &err) == 2);
  auto cyc = fixture("expokit_cycle.json", R"({
    "objects": {
      "A": {
        "doctrine": "top",
        "base": {"elements": ["0","1"], "leq": [["0","1"],["1","0"]]},
        "total": {"elements": ["0"], "leq": []},
        "fibers": ["0"]
      }
    }
  })");
  CHECK(run({"decompose", "--doctrine", "top", "--input", cyc}, nullptr,
            &err) == 2);
  CHECK(!err.empty());
  auto split = fixture("expokit_mismatch.json", kSplit);
  CHECK(run({"check", "--doctrine", "pos", "--input", split}) == 2);
  CHECK(run({"check", "--doctrine", "nope", "--input", split}) == 2);
  CHECK(run({"frobnicate", "--doctrine", "top", "--input", split}) == 2);
}
