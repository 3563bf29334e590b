#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "hgx/canonical.hpp"
#include "hgx/cli.hpp"
#include "hgx/elimination.hpp"
#include "hgx/families.hpp"
#include "hgx/hypergraph.hpp"
#include "hgx/io.hpp"

using namespace hgx;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    return std::string(HGX_FIXTURES) + "/" + name;
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "hgx_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string put(const std::string& name, const std::string& text) {
    auto p = scratch(name);
    std::ofstream os(p);
    os << text;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> ls;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) ls.push_back(l);
    return ls;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"depth", fixture("g.hg")}).code == 2);          // --mode is required
    CHECK(run({"depth", "--mode", "xyz", fixture("g.hg")}).code == 2);
    CHECK(run({"indist", "--class", "WAT", "a", "b"}).code == 2);
    CHECK(run({"hom", "--mode", "hg", fixture("g.hg")}).code == 2);  // target missing

    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage: hgx"));
    RunResult sub = run({"depth", "--help"});
    CHECK(sub.code == 0);
    CHECK(contains(sub.out, "--mode"));
}

TEST_CASE("cli depth") {
    RunResult shd = run({"depth", "--mode", "shd", fixture("g.hg")});
    REQUIRE(shd.code == 0);
    auto ls = lines_of(shd.out);
    REQUIRE(ls.size() >= 2);
    CHECK(ls[0] == "2");
    CHECK(contains(lines_of(shd.err)[0], "# hgx depth mode=shd"));

    // everything after the first line is a witness forest for the instance
    std::string ef_text = shd.out.substr(shd.out.find('\n') + 1);
    IncidenceGraph inc = to_incidence(example_G());
    std::istringstream is(ef_text);
    EliminationForest ef = read_ef(is, inc);
    CHECK(ef.forest.height() == 2);
    CHECK(validate_strict_ef(inc, ef).ok);

    RunResult hd = run({"depth", "--mode", "hd", fixture("g.hg")});
    CHECK(hd.code == 0);
    CHECK(lines_of(hd.out)[0] == "1");

    RunResult tsv = run({"depth", "--mode", "hd", "--format", "tsv", fixture("g.hg")});
    CHECK(tsv.out == "hd\t1\n");

    RunResult json = run({"depth", "--mode", "shd", "--format", "json", fixture("g.hg")});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["schema"] == "hgx.v1");
    CHECK(j["verb"] == "depth");
    CHECK(j["depth"] == 2);
    CHECK(j["witness"] == ef_text);

    std::string wpath = scratch("g_witness.ef").string();
    RunResult wit = run({"depth", "--mode", "shd", "--witness", wpath, fixture("g.hg")});
    CHECK(wit.code == 0);
    CHECK(slurp(wpath) == ef_text);
}

TEST_CASE("cli depth failure modes") {
    RunResult budget =
        run({"depth", "--mode", "hd", "--budget-edges", "2", fixture("h.hg")});
    CHECK(budget.code == 4);
    CHECK(contains(budget.err, "error:"));

    std::string bad = put("bad.hg", "V a\nE bad\n");
    RunResult parse = run({"depth", "--mode", "hd", bad});
    CHECK(parse.code == 2);
    CHECK(contains(parse.err, "line 2"));

    CHECK(run({"depth", "--mode", "hd", scratch("absent.hg").string()}).code == 2);
}

TEST_CASE("cli hom and homvec") {
    std::string p1 = scratch("p1.hg").string();
    REQUIRE(run({"families", "emit", "--name", "pathN", "--n", "1", "--out", p1}).code == 0);

    CHECK(run({"hom", "--mode", "hg", p1, fixture("g.hg")}).out == "6\n");
    CHECK(run({"hom", "--mode", "ig", p1, fixture("g.hg")}).out == "21\n");
    CHECK(run({"hom", "--mode", "hg", "--format", "tsv", p1, fixture("g.hg")}).out ==
          "count\t6\n");

    std::vector<std::string> hv_args{"homvec", "--class", "SHD",  "--k",   "1",
                                     "--maxE", "2",       "--maxV", "4"};
    auto tsv_args = hv_args;
    tsv_args.insert(tsv_args.end(), {"--format", "tsv", fixture("g.hg")});
    RunResult tsv = run(tsv_args);
    REQUIRE(tsv.code == 0);
    auto rows = lines_of(tsv.out);
    CHECK(rows.size() == 8);
    CHECK(rows[0] == "R1 B1|0\t0");
    for (const auto& r : rows) CHECK(contains(r, "\t"));

    auto human_args = hv_args;
    human_args.push_back(fixture("g.hg"));
    RunResult human = run(human_args);
    auto hrows = lines_of(human.out);
    REQUIRE(hrows.size() == 9);
    CHECK(hrows[0] == "# class=SHD k=1 maxE=2 maxV=4 connected=no sources=8");
    for (size_t i = 0; i < rows.size(); ++i) CHECK(hrows[i + 1] == rows[i]);

    auto json_args = hv_args;
    json_args.insert(json_args.end(), {"--format", "json", fixture("g.hg")});
    auto j = nlohmann::json::parse(run(json_args).out);
    CHECK(j["schema"] == "hgx.v1");
    CHECK(j["entries"].size() == 8);

    // stdout is byte-stable across runs
    CHECK(run(tsv_args).out == tsv.out);
    CHECK(run(json_args).out == run(json_args).out);
}

TEST_CASE("cli indist") {
    RunResult eq = run({"indist", "--class", "SHD", "--k", "1", fixture("g.hg"),
                        fixture("g.hg")});
    CHECK(eq.code == 0);
    CHECK(eq.out == "equal up to (maxE=4, maxV=6)\n");

    std::string sg = scratch("skew_g.hg").string();
    std::string sh = scratch("skew_h.hg").string();
    REQUIRE(run({"families", "emit", "--name", "skew", "--k", "1", "--out", sg, "--out", sh})
                .code == 0);

    std::vector<std::string> base{"indist", "--class", "HD", "--k", "1",
                                  "--maxE", "3",       "--maxV", "6"};
    auto human_args = base;
    human_args.insert(human_args.end(), {sg, sh});
    RunResult dis = run(human_args);
    CHECK(dis.code == 3);
    auto ls = lines_of(dis.out);
    REQUIRE(ls.size() >= 2);
    CHECK(ls[0] == "distinguished by R2 B3|0,2|1,2: 4 vs 2");

    // the rest of stdout is the separating instance itself
    std::istringstream wit(dis.out.substr(dis.out.find('\n') + 1));
    Hypergraph w = read_hg(wit);
    CHECK(w.n_edges() == 3);
    CHECK(canonical_form(w) == canonical_form(skew_distinguisher(1)));

    auto tsv_args = base;
    tsv_args.insert(tsv_args.end(), {"--format", "tsv", sg, sh});
    CHECK(run(tsv_args).out == "distinguished\tR2 B3|0,2|1,2\t4\t2\n");

    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json", sg, sh});
    RunResult js = run(json_args);
    CHECK(js.code == 3);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["equal"] == false);
    CHECK(j["count_a"] == "4");
    CHECK(j["count_b"] == "2");
    CHECK(j["witness_key"] == "R2 B3|0,2|1,2");
}

TEST_CASE("cli gli") {
    RunResult rr = run({"gli", fixture("appendix_p7.gli")});
    REQUIRE(rr.code == 0);
    auto ls = lines_of(rr.out);
    REQUIRE(ls.size() == 23);  // 19 step lines plus the four summary lines
    CHECK(ls[19] == "k: 3");
    CHECK(ls[20] == "final cost: 3");
    CHECK(ls[21] == "label-free: yes");
    CHECK(ls[22] == "class: GLI_3^3");

    RunResult tsv = run({"gli", "--format", "tsv", fixture("appendix_p7.gli")});
    CHECK(lines_of(tsv.out).back() == "class\tGLI_3^3\tyes");

    CHECK(run({"gli", put("empty.gli", "")}).code == 2);
    RunResult bad = run({"gli", put("bad.gli", "t0 = FROB\n")});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "line 1"));
}

TEST_CASE("cli gck eval") {
    RunResult on_g = run({"gck", "eval", "--k", "1", "--formula", fixture("phi_g.gcl"),
                          "--model", fixture("g.hg")});
    CHECK(on_g.code == 0);
    CHECK(on_g.out == "yes\n");
    CHECK(run({"gck", "eval", "--k", "1", "--formula", fixture("phi_g.gcl"), "--model",
               fixture("h.hg")})
              .out == "no\n");

    std::string free = put("free.gcl", "existseq 1 (v2) [v1@e1, v2@e1] . v1 = v2\n");
    RunResult bound = run({"gck", "eval", "--k", "1", "--formula", free, "--model",
                           fixture("g.hg"), "--nu-v", "v1=a", "--nu-e", "e1=l"});
    CHECK(bound.code == 0);
    CHECK(bound.out == "yes\n");

    RunResult missing = run({"gck", "eval", "--k", "1", "--formula", free, "--model",
                             fixture("g.hg"), "--nu-e", "e1=l"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "unassigned variable v1"));
    CHECK(run({"gck", "eval", "--k", "1", "--formula", free, "--model", fixture("g.hg"),
               "--nu-v", "v1=zz", "--nu-e", "e1=l"})
              .code == 2);

    std::string wide = put("k2.gcl", "existsge 1 (v1) [v1@e2] . T\n");
    RunResult notwf = run({"gck", "eval", "--k", "1", "--formula", wide, "--model",
                           fixture("g.hg"), "--nu-e", "e2=l"});
    CHECK(notwf.code == 2);
    CHECK(contains(notwf.err, "not wellformed at k=1"));

    auto j = nlohmann::json::parse(run({"gck", "eval", "--k", "1", "--formula",
                                        fixture("phi_g.gcl"), "--model", fixture("g.hg"),
                                        "--format", "json"})
                                       .out);
    CHECK(j["value"] == true);
}

TEST_CASE("cli gck check") {
    RunResult ok = run({"gck", "check", "--k", "1", "--formula", fixture("phi_g.gcl")});
    CHECK(ok.code == 0);
    auto ls = lines_of(ok.out);
    CHECK(ls[0] == "wellformed: yes");
    CHECK(ls[1] == "rgc: yes");
    CHECK(ls[2] == "guard-depth: 2");
    CHECK(ls[3] == "size: 52");

    RunResult tsv =
        run({"gck", "check", "--k", "1", "--formula", fixture("phi_g.gcl"), "--format", "tsv"});
    CHECK(tsv.out == "wellformed\t1\nrgc\t1\nguard-depth\t2\nsize\t52\n");

    std::string wide = put("k2.gcl", "existsge 1 (v1) [v1@e2] . T\n");
    RunResult bad = run({"gck", "check", "--k", "1", "--formula", wide});
    CHECK(bad.code == 3);
    CHECK(contains(bad.out, "wellformed: no"));
}

TEST_CASE("cli gck pool") {
    std::vector<std::string> args{"gck", "pool", "--k", "1", "--d", "1",
                                  "--size", "25", "--seed", "424242"};
    RunResult a = run(args);
    REQUIRE(a.code == 0);
    auto ls = lines_of(a.out);
    CHECK(ls.size() == 64);
    CHECK(ls[0] == "existsge 1 (e1) [] . e1=e1");
    CHECK(run(args).out == a.out);  // deterministic

    args.back() = "7";
    CHECK(run(args).out != a.out);
}

TEST_CASE("cli families") {
    RunResult list = run({"families", "list"});
    CHECK(list.code == 0);
    CHECK(lines_of(list.out).size() == 7);
    CHECK(contains(list.out, "skewPrimeDistinguisher"));

    RunResult dash = run({"families", "emit", "--name", "pathN", "--n", "1", "--out", "-"});
    CHECK(dash.code == 0);
    CHECK(dash.out == "V 1 2\nE e1 : 1 2\n");

    RunResult mismatch =
        run({"families", "emit", "--name", "skew", "--k", "1", "--out", scratch("x.hg").string()});
    CHECK(mismatch.code == 2);
    CHECK(contains(mismatch.err, "emits 2 hypergraph(s)"));

    std::string gpath = scratch("emitted_g.hg").string();
    REQUIRE(run({"families", "emit", "--name", "exampleG", "--out", gpath}).code == 0);
    CHECK(canonical_form(read_hg_file(gpath)) == canonical_form(example_G()));
}

TEST_CASE("cli repro") {
    RunResult rr = run({"repro", "--check", "hd-paths", "--fixtures", HGX_FIXTURES});
    CHECK(rr.code == 0);
    auto ls = lines_of(rr.out);
    CHECK(ls.size() == 15);
    for (const auto& l : ls) CHECK(l.rfind("[PASS] hd-paths", 0) == 0);
    CHECK(contains(rr.err, "# 15 rows, 15 passed, 0 failed,"));

    RunResult tsv = run({"repro", "--check", "hd-paths", "--fixtures", HGX_FIXTURES,
                         "--format", "tsv"});
    auto trows = lines_of(tsv.out);
    CHECK(trows.size() == 15);
    for (const auto& r : trows) {
        CHECK(r.rfind("hd-paths\t1\tPASS\t", 0) == 0);
        CHECK(std::count(r.begin(), r.end(), '\t') == 5);
    }

    RunResult list = run({"repro", "--check", "list"});
    CHECK(list.code == 0);
    auto ids = lines_of(list.out);
    CHECK(ids.size() == 12);
    CHECK(ids.back() == "all");
    CHECK(contains(list.out, "thm-3.2"));
    CHECK(contains(list.out, "appendix-d"));

    CHECK(run({"repro", "--check", "nonesuch", "--fixtures", HGX_FIXTURES}).code == 2);
}
