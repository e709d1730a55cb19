#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "inertia/bipartite.hpp"
#include "inertia/complex_matrix.hpp"

namespace inertia::cli {

/// On-disk matrix format: JSON object with dim_a, dim_b and split row-major
/// re/im arrays of length (dim_a*dim_b)^2. Doubles survive a write/read
/// round trip bit-exactly.
struct MatrixFile {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::vector<double> re;
    std::vector<double> im;

    static MatrixFile from_matrix(const ComplexMatrix& m, BipartiteDims dims);
    ComplexMatrix to_matrix() const;
    BipartiteDims dims() const { return BipartiteDims{dim_a, dim_b}; }
};

MatrixFile parse_matrix_json(const std::string& text);
std::string matrix_file_json(const MatrixFile& mf);
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& mf);

}  // namespace inertia::cli
