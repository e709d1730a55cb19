#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "inertia/rng.hpp"
#include "matrix_file.hpp"

using namespace inertia;
using namespace inertia::cli;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "inertia-lab-tests";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::vector<std::string>& args, std::string* stdout_text = nullptr) {
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    if (stdout_text) *stdout_text = out.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Report payload with the wall-clock field removed.
std::string stable_report(const fs::path& p) {
    auto j = nlohmann::json::parse(slurp(p));
    j.erase("wall_ms");
    return j.dump();
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(INERTIA_CLI_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("matrix files: write/read round trip is bit-exact") {
    Rng rng(77);
    const BipartiteDims dims{2, 3};
    const ComplexMatrix m = random_hermitian(6, rng);
    const MatrixFile mf = MatrixFile::from_matrix(m, dims);
    const fs::path path = temp_dir() / "roundtrip.json";
    write_matrix_file(path, mf);
    const MatrixFile back = read_matrix_file(path);
    CHECK(back.dim_a == 2);
    CHECK(back.dim_b == 3);
    CHECK(back.re == mf.re);
    CHECK(back.im == mf.im);
    CHECK(back.to_matrix() == m);
}

TEST_CASE("cli: inertia command on the identity and on the entangled projector") {
    const fs::path dir = temp_dir();
    const fs::path ident = dir / "identity9.json";
    write_matrix_file(ident, MatrixFile::from_matrix(ComplexMatrix::identity(9), {3, 3}));

    std::string text;
    CHECK(run_cli({"inertia", ident.string()}, &text) == 0);
    CHECK(text.find("In(M)   = (0,0,9)") != std::string::npos);
    CHECK(text.find("In(M^G) = (0,0,9)") != std::string::npos);

    // Maximally entangled two-qutrit projector.
    std::vector<cplx> psi(9, cplx{0.0, 0.0});
    psi[0] = psi[4] = psi[8] = 1.0 / std::sqrt(3.0);
    ComplexMatrix rho(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
    const fs::path ent = dir / "entangled.json";
    write_matrix_file(ent, MatrixFile::from_matrix(rho, {3, 3}));
    CHECK(run_cli({"inertia", ent.string()}, &text) == 0);
    CHECK(text.find("In(M^G) = (3,0,6)") != std::string::npos);
}

TEST_CASE("cli: exit codes follow the documented contract") {
    const fs::path dir = temp_dir();

    const fs::path bad = dir / "malformed.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run_cli({"inertia", bad.string()}) == 2);

    const fs::path nonherm = dir / "nonhermitian.json";
    ComplexMatrix g(6, 6);
    g(0, 1) = 5.0;
    write_matrix_file(nonherm, MatrixFile::from_matrix(g, {2, 3}));
    CHECK(run_cli({"inertia", nonherm.string()}) == 3);

    const fs::path ok = dir / "identity6.json";
    write_matrix_file(ok, MatrixFile::from_matrix(ComplexMatrix::identity(6), {2, 3}));
    CHECK(run_cli({"inertia", ok.string(), "--dims", "4x4"}) == 4);

    CHECK(run_cli({"verify", "no-such-lemma"}) == 5);
    CHECK(run_cli({"search", "--dims", "3x3", "--target", "1,1,1", "--restarts", "1"}) == 6);
}

TEST_CASE("cli: the installed binary honors the same contract") {
    const fs::path dir = temp_dir();
    const fs::path ident = dir / "identity9b.json";
    write_matrix_file(ident, MatrixFile::from_matrix(ComplexMatrix::identity(9), {3, 3}));

    CHECK(run_binary("inertia " + ident.string()) == 0);
    CHECK(run_binary("catalog --dims 3x3") == 0);
    CHECK(run_binary("verify no-such-lemma") == 5);
    const fs::path bad = dir / "malformed2.json";
    std::ofstream(bad) << "]";
    CHECK(run_binary("inertia " + bad.string()) == 2);
}

TEST_CASE("cli: reports are byte-identical modulo the wall clock") {
    const fs::path dir = temp_dir();
    const fs::path r1 = dir / "rep1.json";
    const fs::path r2 = dir / "rep2.json";

    CHECK(run_cli({"catalog", "--dims", "3x4", "--report", r1.string()}) == 0);
    CHECK(run_cli({"catalog", "--dims", "3x4", "--report", r2.string()}) == 0);
    CHECK(stable_report(r1) == stable_report(r2));

    CHECK(run_cli({"census", "--dims", "2x3", "--samples", "500", "--seed", "5", "--report",
                   r1.string(), "--out", (dir / "c1.csv").string()}) == 0);
    CHECK(run_cli({"census", "--dims", "2x3", "--samples", "500", "--seed", "5", "--report",
                   r2.string(), "--out", (dir / "c2.csv").string()}) == 0);
    CHECK(stable_report(r1) == stable_report(r2));
    CHECK(slurp(dir / "c1.csv") == slurp(dir / "c2.csv"));

    CHECK(run_cli({"verify", "cross-lem", "--trials", "50", "--seed", "3", "--report",
                   r1.string()}) == 0);
    CHECK(run_cli({"verify", "cross-lem", "--trials", "50", "--seed", "3", "--report",
                   r2.string()}) == 0);
    CHECK(stable_report(r1) == stable_report(r2));

    CHECK(run_cli({"search", "--dims", "2x3", "--target", "1,0,5", "--restarts", "4", "--seed",
                   "11", "--report", r1.string()}) == 0);
    CHECK(run_cli({"search", "--dims", "2x3", "--target", "1,0,5", "--restarts", "4", "--seed",
                   "11", "--report", r2.string()}) == 0);
    CHECK(stable_report(r1) == stable_report(r2));
}

TEST_CASE("cli: census CSV carries the pinned header") {
    const fs::path csv = temp_dir() / "census.csv";
    CHECK(run_cli({"census", "--dims", "2x3", "--samples", "200", "--seed", "1", "--out",
                   csv.string()}) == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("neg,zero,pos,count\n", 0) == 0);
}

TEST_CASE("cli: search writes a loadable witness") {
    const fs::path dir = temp_dir();
    const fs::path witness = dir / "witness.json";
    std::string text;
    CHECK(run_cli({"search", "--dims", "2x3", "--target", "1,0,5", "--restarts", "6", "--seed",
                   "3", "--out", witness.string()}, &text) == 0);
    CHECK(text.find("FOUND") != std::string::npos);
    const MatrixFile mf = read_matrix_file(witness);
    CHECK(mf.dims().product() == 6);
    CHECK(run_cli({"inertia", witness.string()}, &text) == 0);
    CHECK(text.find("In(M^G) = (1,0,5)") != std::string::npos);
}
