#pragma once

#include <iosfwd>
#include <string>

#include "subspace/bounds.hpp"
#include "subspace/numrange.hpp"

namespace subspace::io {

/// Matrix JSON: {"n": int, "re": [[...];n], "im": [[...];n]}.
/// Readers reject NaN/Inf entries and shape mismatches.
Matrix read_matrix_json(const std::string& path);
Matrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const Matrix& M);
void write_matrix_json(const Matrix& M, const std::string& path);

/// Split descriptor JSON:
/// {"disposition": "subordinated"|"annular",
///  "sigma_minus": [[lo,hi],...], "sigma_plus": [[lo,hi],...]}.
SpectralSplit read_split_json(const std::string& path);
SpectralSplit parse_split_json(const std::string& text);
std::string split_to_json(const SpectralSplit& split);
void write_split_json(const SpectralSplit& split, const std::string& path);

/// Flat BoundReport JSON; +inf encoded as the string "inf"; floats carry 17
/// significant digits so round-trips are exact at double precision.
std::string report_to_json(const BoundReport& report);

/// Boundary CSV with header "angle,re,im".
std::string boundary_to_csv(const NumRangeBoundary& boundary);

/// 17-significant-digit decimal rendering of a double ("inf"/"-inf"/"nan"
/// spelled out).
std::string format_double(double x);

}  // namespace subspace::io
