#include "matrix_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "inertia/errors.hpp"

namespace inertia::cli {

MatrixFile MatrixFile::from_matrix(const ComplexMatrix& m, BipartiteDims dims) {
    if (!m.square() || m.rows() != dims.product())
        throw DimensionMismatch("matrix order does not match dim_a * dim_b");
    MatrixFile mf;
    mf.dim_a = dims.dim_a;
    mf.dim_b = dims.dim_b;
    mf.re.reserve(m.entries().size());
    mf.im.reserve(m.entries().size());
    for (const cplx& v : m.entries()) {
        mf.re.push_back(v.real());
        mf.im.push_back(v.imag());
    }
    return mf;
}

ComplexMatrix MatrixFile::to_matrix() const {
    const std::size_t d = dim_a * dim_b;
    ComplexMatrix m(d, d);
    auto e = m.entries();
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = cplx{re[k], im[k]};
    return m;
}

MatrixFile parse_matrix_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid matrix JSON: ") + e.what());
    }
    MatrixFile mf;
    try {
        mf.dim_a = j.at("dim_a").get<std::size_t>();
        mf.dim_b = j.at("dim_b").get<std::size_t>();
        mf.re = j.at("re").get<std::vector<double>>();
        mf.im = j.at("im").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix JSON missing or mistyped field: ") + e.what());
    }
    if (mf.dim_a < 1 || mf.dim_b < 1) throw ParseError("matrix JSON: dims must be at least 1");
    const std::size_t want = mf.dim_a * mf.dim_b * mf.dim_a * mf.dim_b;
    if (mf.re.size() != want || mf.im.size() != want)
        throw ParseError("matrix JSON: re/im must each hold (dim_a*dim_b)^2 values");
    return mf;
}

std::string matrix_file_json(const MatrixFile& mf) {
    nlohmann::json j;
    j["dim_a"] = mf.dim_a;
    j["dim_b"] = mf.dim_b;
    j["re"] = mf.re;
    j["im"] = mf.im;
    return j.dump();
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& mf) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << matrix_file_json(mf) << '\n';
    if (!out) throw IoError("failed writing: " + path.string());
}

}  // namespace inertia::cli
