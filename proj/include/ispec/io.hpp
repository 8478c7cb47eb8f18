#pragma once

#include "ispec/band.hpp"
#include "ispec/interval.hpp"
#include "ispec/matrix.hpp"
#include "ispec/sym_interval.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ispec {

using json = nlohmann::json;

/// On-disk problem description: entrywise lower/upper matrices plus an
/// optional block of externally computed outer bands.
struct ProblemFile {
    enum class Kind { Symmetric, Rectangular };

    Kind kind = Kind::Symmetric;
    std::size_t rows = 0;
    std::size_t cols = 0;
    Matrix lower, upper;
    std::optional<std::vector<Band>> outer;

    SymmetricIntervalMatrix symmetric() const;
    IntervalMatrix rectangular() const;

    static ProblemFile from_json(const json& doc);
    static ProblemFile load(const std::string& path);
    json to_json() const;
    void save(const std::string& path) const;
};

/// Outer-band file: either {"outer": [[lo,hi],...]} or a bare array.
std::vector<Band> load_outer_bands(const std::string& path);
std::vector<Band> outer_bands_from_json(const json& doc);

json bands_to_json(const BandSet& bands);
BandSet bands_from_json(const json& doc);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& doc);

} // namespace ispec
