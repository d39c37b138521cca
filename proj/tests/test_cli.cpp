#include "doctest.h"

#include "helpers.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

using namespace qenum;

namespace {

const std::string& work_dir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/qenum_cli_XXXXXX";
        char* d = mkdtemp(tmpl);
        if (!d) throw std::runtime_error("mkdtemp failed");
        return std::string(d);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    std::string path = work_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path;
}

std::string code_file(const std::string& name) {
    return write_file(name + ".code", corpus_entry(name).text);
}

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("QENUM_CLI_PATH");
    if (!cli) throw std::runtime_error("QENUM_CLI_PATH is not set");
    static int counter = 0;
    std::string err_path = work_dir() + "/stderr." + std::to_string(counter++);
    std::string cmd = std::string(cli) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t nread;
    while ((nread = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, nread);
    int status = pclose(pipe);
    std::ifstream ein(err_path, std::ios::binary);
    std::ostringstream ess;
    ess << ein.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ess.str()};
}

bool contains(const std::string& s, const std::string& sub) {
    return s.find(sub) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("cli rejects malformed invocations with exit 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("enumerate").code == 2);
    CHECK(run_cli("enumerate --code " + code_file("bell2") + " --kind Q").code == 2);
    RunResult missing = run_cli("enumerate --code " + work_dir() + "/does-not-exist");
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot read"));
}

TEST_CASE("cli reports parse positions for bad code files") {
    std::string path = write_file("bad.code", "q 2\nn 1\ngen 2 | 0\n");
    RunResult r = run_cli("enumerate --code " + path);
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error:"));
    CHECK(contains(r.err, "line"));
}

TEST_CASE("enumerate prints a single distribution or all six") {
    std::string bell = code_file("bell2");
    RunResult b = run_cli("enumerate --code " + bell + " --kind B");
    CHECK(b.code == 0);
    CHECK(b.out == "1/2*x^2 + 3/2*y^2\n");
    CHECK(b.err.empty());

    RunResult all = run_cli("enumerate --code " + bell);
    CHECK(all.code == 0);
    CHECK(contains(all.out, "B = 1/2*x^2 + 3/2*y^2\n"));
    CHECK(contains(all.out, "Bperp = "));
    CHECK(contains(all.out, "C = "));
    CHECK(contains(all.out, "Dperp = "));

    RunResult both = run_cli("enumerate --code " + code_file("trivial1-q2") +
                             " --method both --kind Bperp");
    CHECK(both.code == 0);
    CHECK(both.out == "1/2*x + 3/2*y\n");
}

TEST_CASE("check-self-dual distinguishes the corpus codes") {
    RunResult yes = run_cli("check-self-dual --code " + code_file("bell2"));
    CHECK(yes.code == 0);
    CHECK(yes.out == "formally-self-dual: true\nwitness: D = (1/K)*Dperp with K = 1\n");

    RunResult no = run_cli("check-self-dual --code " + code_file("trivial1-q2"));
    CHECK(no.code == 1);
    CHECK(contains(no.out, "formally-self-dual: false"));
    CHECK(contains(no.out, "witness: D - (1/K)*Dperp contains "));

    CHECK(run_cli("check-self-dual --code " + code_file("bell3")).code == 0);
    CHECK(run_cli("check-self-dual --code " + code_file("z5")).code == 0);
}

TEST_CASE("transform applies the three dualities") {
    std::string bperp = write_file("xx2_bperp.poly", "1/2*x^2 + x*y + 5/2*y^2");
    RunResult mac1 = run_cli("transform --kind mac1 --poly " + bperp +
                             " --q 2 --n 2 --K 2");
    CHECK(mac1.code == 0);
    CHECK(mac1.out == "1/2*x^2 + 1/2*y^2\n");

    std::string cperp = write_file(
        "rep3_cperp.poly",
        "1/2*x^3*z^3 + 3/2*x^3*z^2*w + 3/2*x^3*z*w^2 + 1/2*x^3*w^3 + "
        "1/2*y^3*z^3 + 3/2*y^3*z^2*w + 3/2*y^3*z*w^2 + 1/2*y^3*w^3");
    RunResult mac2 = run_cli("transform --kind mac2 --poly " + cperp +
                             " --q 2 --n 3 --K 2");
    CHECK(mac2.code == 0);
    CHECK(mac2.out == "1/2*x^3*z^3 + 3/2*x^3*z*w^2\n");

    EnumeratorSet es = distributions_symplectic(corpus_code("bell3"));
    std::string dperp = write_file("bell3_dperp.poly",
                                   enumerator_poly(es, Kind::Dperp).str());
    RunResult mac3 = run_cli("transform --kind mac3 --poly " + dperp +
                             " --q 3 --n 2 --K 1");
    CHECK(mac3.code == 0);
    CHECK(mac3.out == enumerator_poly(es, Kind::D).str() + "\n");

    CHECK(run_cli("transform --kind mac1 --poly " + bperp + " --q 2 --n 2 --K 0").code == 2);
    CHECK(run_cli("transform --kind mac1 --poly " + bperp + " --q 6 --n 2 --K 1").code == 2);
    CHECK(run_cli("transform --kind mac1 --poly " + bperp + " --q 2 --n 0 --K 1").code == 2);
    // wrong variable set for the requested transform
    CHECK(run_cli("transform --kind mac2 --poly " + bperp + " --q 2 --n 2 --K 2").code == 2);
}

TEST_CASE("express writes invariants in generator form") {
    std::string bell_b = write_file("bell_b.poly", "1/2*x^2 + 3/2*y^2");
    RunResult ok = run_cli("express --poly " + bell_b + " --case weight --q 2");
    CHECK(ok.code == 0);
    CHECK(ok.out == "3/8*f1^2 + 1/8*f2\n");

    std::string zero = write_file("zero.poly", "0");
    RunResult z = run_cli("express --poly " + zero + " --case weight --q 2");
    CHECK(z.code == 0);
    CHECK(z.out == "0\n");

    std::string x = write_file("x.poly", "x");
    RunResult bad = run_cli("express --poly " + x + " --case weight --q 2");
    CHECK(bad.code == 1);
    CHECK(bad.err == "error: not invariant under sigma\n");

    CHECK(run_cli("express --poly " + bell_b + " --case complete --q 5").code == 2);
    CHECK(run_cli("express --poly " + bell_b + " --case weight --q 2 --max-degree 1").code == 2);

    EnumeratorSet bell = distributions_symplectic(corpus_code("bell2"));
    std::string d2 = write_file("bell2_d.poly", enumerator_poly(bell, Kind::D).str());
    RunResult comp = run_cli("express --poly " + d2 + " --case complete --q 2");
    CHECK(comp.code == 0);
    CHECK(!comp.out.empty());
}

TEST_CASE("verify-paper reports deterministically and passes") {
    RunResult a = run_cli("verify-paper");
    CHECK(a.code == 0);
    CHECK(contains(a.out, "case weight(q=2)"));
    CHECK(contains(a.out, "case complete(q=3)"));
    CHECK(contains(a.out, "code bell2"));
    CHECK(contains(a.out, "summary: "));
    CHECK(!contains(a.out, "FAIL"));

    RunResult b = run_cli("verify-paper");
    CHECK(a.out == b.out);

    CHECK(run_cli("verify-paper --max-n 1").code == 0);
    CHECK(run_cli("verify-paper --q 5").code == 0);
    CHECK(run_cli("verify-paper --max-n 0").code == 2);
}

TEST_CASE("the --out option writes the file and keeps stdout empty") {
    std::string out_path = work_dir() + "/report.txt";
    RunResult r = run_cli("verify-paper --q 2 --out " + out_path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::string text = slurp(out_path);
    CHECK(contains(text, "summary: "));
    CHECK(!contains(text, "FAIL"));
}
