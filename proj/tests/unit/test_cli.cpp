#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "wqg/bialgebroid.hpp"
#include "wqg/cli.hpp"
#include "wqg/hopf.hpp"
#include "wqg/io.hpp"
#include "wqg/weak.hpp"
#include "wqg/zoo.hpp"

using namespace wqg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result wqg_run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wqg_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

const FieldSpec Q = FieldSpec::rational();

}  // namespace

TEST_CASE("generated fixtures pass check") {
  for (std::vector<std::string> gen : {std::vector<std::string>{"gen", "pair-groupoid", "--objects", "2"},
                                       {"gen", "pair-groupoid", "--objects", "3", "--field", "F_5"},
                                       {"gen", "pair-groupoid", "--objects", "2", "--function"},
                                       {"gen", "pair-groupoid", "--objects", "3", "--groupoid"},
                                       {"gen", "group", "--order", "3"},
                                       {"gen", "monoid", "--table", "0,1;1,1"},
                                       {"gen", "enveloping", "--split", "2"}}) {
    CAPTURE(gen.back());
    Result g = wqg_run(gen);
    REQUIRE(g.code == 0);
    Result c = wqg_run({"check", "-"}, g.out);
    CHECK(c.code == 0);
    CHECK(c.out.find("overall: PASS") != std::string::npos);
  }
}

TEST_CASE("generation agrees with the library") {
  Result g = wqg_run({"gen", "pair-groupoid", "--objects", "2"});
  CHECK(std::get<WeakBialgebra>(parse_structure(g.out).value).same_structure(fixtures::pg(2, Q)));
  CHECK(g.out == serialize_structure({groupoid_algebra(pair_groupoid(2), Q), {}, {}}));
  Result f = wqg_run({"gen", "pair-groupoid", "--objects", "2", "--function", "--field", "F_5"});
  CHECK(f.out == serialize_structure({groupoid_function_algebra(pair_groupoid(2), FieldSpec::prime(5)), {}, {}}));
}

TEST_CASE("conversion pipelines") {
  Result pg = wqg_run({"gen", "pair-groupoid", "--objects", "2"});
  Result l = wqg_run({"to-bialgebroid", "-"}, pg.out);
  REQUIRE(l.code == 0);
  CHECK(wqg_run({"check", "-"}, l.out).code == 0);
  Result back = wqg_run({"from-bialgebroid", "-", "--ifs", "canonical"}, l.out);
  REQUIRE(back.code == 0);
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  WeakBialgebra h = std::get<WeakBialgebra>(parse_structure(back.out).value);
  CHECK(h.algebra == pg2.algebra);
  CHECK(h.coalgebra == pg2.coalgebra);

  Result eb = wqg_run({"gen", "enveloping", "--split", "2"});
  Result w = wqg_run({"from-bialgebroid", "-", "--ifs", "canonical"}, eb.out);
  REQUIRE(w.code == 0);
  CHECK(wqg_run({"check", "-"}, w.out).code == 0);
  FsBialgebroid l2 = std::get<FsBialgebroid>(parse_structure(eb.out).value);
  CHECK(std::get<WeakBialgebra>(parse_structure(w.out).value).same_structure(bialgebroid_to_weak(l2, l2.base)));

  // an explicit IFS file equal to the stored one gives the same result
  const std::string ifs = temp_path("ifs.json");
  std::ofstream(ifs) << serialize_structure({l2.base, {}, {}});
  CHECK(wqg_run({"from-bialgebroid", "-", "--ifs", ifs}, eb.out).out == w.out);

  Result d = wqg_run({"dual", "-"}, pg.out);
  REQUIRE(d.code == 0);
  CHECK(wqg_run({"check", "-"}, d.out).code == 0);
  CHECK(std::get<WeakBialgebra>(parse_structure(d.out).value).same_structure(groupoid_function_algebra(pair_groupoid(2), Q)));
}

TEST_CASE("antipode command") {
  Result pg = wqg_run({"gen", "pair-groupoid", "--objects", "2"});
  WeakBialgebra plain = std::get<WeakBialgebra>(parse_structure(pg.out).value);
  plain.antipode.reset();
  Result a = wqg_run({"antipode", "-"}, serialize_structure({plain, {}, {}}));
  REQUIRE(a.code == 0);
  WeakBialgebra solved = std::get<WeakBialgebra>(parse_structure(a.out).value);
  REQUIRE(solved.antipode);
  CHECK(*solved.antipode == std::get<Matrix>(solve_antipode(plain)));

  Result mx = wqg_run({"gen", "monoid", "--table", "0,1;1,1"});
  Result n = wqg_run({"antipode", "-"}, mx.out);
  CHECK(n.code == 1);
  CHECK(n.out.find("\"rank\": 3") != std::string::npos);
  CHECK(n.out.find("\"codomain\": 4") != std::string::npos);
}

TEST_CASE("twist command") {
  FsBialgebroid m = fixtures::ebm2(Q);
  WeakBialgebra h = bialgebroid_to_weak(m, m.base);
  CounitalData cd = counital_data(h);
  // t = 1 is a trivial twist
  std::string t;
  for (std::size_t i = 0; i < h.dim(); ++i) t += (i ? "," : "") + h.one()[i].to_string();
  Result r = wqg_run({"twist", "-", "--t", t}, serialize_structure({h, {}, {}}));
  REQUIRE(r.code == 0);
  CHECK(std::get<WeakBialgebra>(parse_structure(r.out).value).same_structure(twist_weak(h, h.one())));
  CHECK(wqg_run({"twist", "-", "--t", "1,2"}, serialize_structure({h, {}, {}})).code == 2);
}

TEST_CASE("pair command") {
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  WeakBialgebra dual = groupoid_function_algebra(pair_groupoid(2), Q);
  const std::string a = temp_path("pg2.json"), b = temp_path("dual.json"), tau = temp_path("tau.json");
  std::ofstream(a) << serialize_structure({pg2, {}, {}});
  std::ofstream(b) << serialize_structure({variant(dual, Variant::op), {}, {}});
  std::ofstream(tau) << serialize_structure({PairingMatrix{Matrix::identity(Q, 4)}, {}, {}});
  // (H*)^op paired with H by evaluation
  CHECK(wqg_run({"pair", b, a, "--tau", tau}).code == 0);
  std::ofstream(tau) << serialize_structure({PairingMatrix{Matrix::identity(Q, 3)}, {}, {}});
  CHECK(wqg_run({"pair", b, a, "--tau", tau}).code == 2);
}

TEST_CASE("exit codes and errors") {
  CHECK(wqg_run({}).code == 2);
  CHECK(wqg_run({"frobnicate"}).code == 2);
  CHECK(wqg_run({"check"}).code == 2);
  CHECK(wqg_run({"check", "/nonexistent/file.json"}).code == 2);
  CHECK(wqg_run({"check", "-"}, "{ not json").code == 2);
  Result bad = wqg_run({"check", "-"}, R"({"format": "wqg", "version": 1, "kind": "pairing", "field": "Q", "rows": 1, "cols": 1, "tau": [[[0, 0], "1/0"]]})");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError") != std::string::npos);
  CHECK(wqg_run({"--help"}).code == 0);

  // a mutated structure fails with exit 1 and a witness
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  Tensor3 mul = pg2.algebra.mul();
  mul(1, 2, 0) = Scalar::zero(Q);
  WeakBialgebra broken(FinDimAlgebra(Q, 4, mul, pg2.one()), pg2.coalgebra);
  Result r = wqg_run({"check", "-"}, serialize_structure({broken, {}, {}}));
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("at [") != std::string::npos);
}

TEST_CASE("reports are deterministic and match the library") {
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  Tensor3 mul = pg2.algebra.mul();
  mul(1, 2, 0) = Scalar::zero(Q);
  WeakBialgebra broken(FinDimAlgebra(Q, 4, mul, pg2.one()), pg2.coalgebra);
  const std::string doc = serialize_structure({broken, {}, {}});
  const std::string p1 = temp_path("r1.json"), p2 = temp_path("r2.json");
  Result a = wqg_run({"check", "-", "--report", p1, "--all-witnesses"}, doc);
  Result b = wqg_run({"check", "-", "--report", p2, "--all-witnesses"}, doc);
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(slurp(p1) == slurp(p2));
  CheckOptions all;
  all.all_witnesses = true;
  CHECK(slurp(p1) == report_to_json(check_weak_bialgebra(broken, all)));

  Result x = wqg_run({"analyze", "-"}, serialize_structure({pg2, {}, {}}));
  Result y = wqg_run({"analyze", "-"}, serialize_structure({pg2, {}, {}}));
  REQUIRE(x.code == 0);
  CHECK(x.out == y.out);
  CHECK(x.out.find("\"bijective\": true") != std::string::npos);
}

TEST_CASE("save and load round trips byte for byte") {
  const std::string path = temp_path("rt.json");
  REQUIRE(wqg_run({"gen", "enveloping", "--split", "2", "-o", path}).code == 0);
  const std::string first = slurp(path);
  Structure s = load_structure(path);
  save_structure(s, path);
  CHECK(slurp(path) == first);
  CHECK(serialize_structure(parse_structure(first)) == first);
}

TEST_CASE("committed sample documents") {
  const std::string dir = WQG_TEST_DATA_DIR;
  CHECK(slurp(dir + "/pg2.json") == wqg_run({"gen", "pair-groupoid", "--objects", "2"}).out);
  CHECK(slurp(dir + "/mx.json") == wqg_run({"gen", "monoid", "--table", "0,1;1,1"}).out);
  CHECK(slurp(dir + "/eb2.json") == wqg_run({"gen", "enveloping", "--split", "2"}).out);
  CHECK(wqg_run({"check", dir + "/pg2.json"}).code == 0);
  Result mx = wqg_run({"antipode", dir + "/mx.json"});
  CHECK(mx.code == 1);
  CHECK(mx.err.find("rank 3 of 4") != std::string::npos);
  Result eb = wqg_run({"from-bialgebroid", dir + "/eb2.json", "--ifs", "canonical"});
  REQUIRE(eb.code == 0);
  CHECK(wqg_run({"check", "-"}, eb.out).code == 0);
}
